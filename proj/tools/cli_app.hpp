// Copyright 2026 The squeezekit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Exit codes: 0 success, 1 validation error,
// 2 oracle mismatch, 3 IO error.

#pragma once

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "squeezekit/squeezekit.hpp"

namespace squeezekit::cli {

enum ExitCode : int { kOk = 0, kValidation = 1, kOracleMismatch = 2, kIo = 3 };

inline constexpr const char* kOutDirEnv = "SQUEEZEKIT_OUT_DIR";

/// Resolves the destination file. Empty result means stdout.
inline std::string resolve_output(const std::string& requested, const std::string& default_name) {
  const char* env = std::getenv(kOutDirEnv);
  const std::filesystem::path dir = env && *env ? std::filesystem::path(env) : std::filesystem::path();
  if (requested.empty()) {
    return dir.empty() ? std::string() : (dir / default_name).string();
  }
  const std::filesystem::path p(requested);
  if (p.is_relative() && !dir.empty()) return (dir / p).string();
  return p.string();
}

/// Plot file for one N, next to the table output.
inline std::string plot_path(const std::string& table_path, int n) {
  std::filesystem::path base;
  if (table_path.empty()) {
    const char* env = std::getenv(kOutDirEnv);
    base = (env && *env ? std::filesystem::path(env) : std::filesystem::path(".")) / "sweep";
  } else {
    base = std::filesystem::path(table_path);
    base.replace_extension();
  }
  return base.string() + "_N" + std::to_string(n) + ".svg";
}

namespace detail {

struct Overrides {
  std::string config;
  std::vector<std::pair<std::string, std::optional<std::string>*>> fields;
  std::optional<std::string> n, k, k_max, a_grid, mode, out, format, scan_tol, tolerance, jobs;
  bool plot = false;
  bool squared = false;
};

inline void add_common(CLI::App* cmd, Overrides& o, bool sweep_options) {
  cmd->add_option("--config", o.config, "key=value config file");
  cmd->add_option("--N", o.n, "qubit counts, e.g. 20 or 4,8,16 or 4..100");
  cmd->add_option("--k", o.k, "minority multiplicities or 'all'");
  cmd->add_option("--k-max", o.k_max, "cap applied when k is 'all'");
  cmd->add_option("--out", o.out, "output file (default stdout or $SQUEEZEKIT_OUT_DIR)");
  cmd->add_option("--format", o.format, "csv or json");
  cmd->add_option("--jobs", o.jobs, "worker threads (default: logical cores)");
  o.fields = {{"N", &o.n},          {"k", &o.k},     {"k_max", &o.k_max},
              {"out", &o.out},      {"format", &o.format}, {"jobs", &o.jobs}};
  if (!sweep_options) return;
  cmd->add_option("--a-grid", o.a_grid, "start:stop:steps");
  cmd->add_option("--mode", o.mode, "closed, generic, scan or crosscheck");
  cmd->add_option("--scan-tol", o.scan_tol, "golden-section tolerance of the direction scan");
  cmd->add_option("--tolerance", o.tolerance, "crosscheck failure threshold on |xi - xi_oracle|");
  cmd->add_flag("--plot", o.plot, "write one SVG per N next to the output");
  cmd->add_flag("--squared", o.squared, "report xi^2 instead of xi");
  o.fields.insert(o.fields.end(), {{"a_grid", &o.a_grid},
                                   {"mode", &o.mode},
                                   {"scan_tol", &o.scan_tol},
                                   {"tolerance", &o.tolerance}});
}

inline SweepConfig build_config(const Overrides& o) {
  SweepConfig cfg = SweepConfig::defaults();
  if (!o.config.empty()) {
    std::ifstream in(o.config);
    if (!in) throw IoError("cannot read config file '" + o.config + "'");
    try {
      cfg = parse_config(in, cfg);
    } catch (const ConfigError& e) {
      throw ConfigError(o.config + ", " + e.where(), e.message());
    }
  }
  for (const auto& [key, value] : o.fields) {
    if (*value) apply_setting(cfg, key, **value, "command line");
  }
  if (o.plot) cfg.emit_plot = true;
  if (o.squared) cfg.squared = true;
  cfg.validate();
  return cfg;
}

template <typename Writer>
void emit(const std::string& path, std::ostream& stdout_stream, Writer&& writer) {
  if (path.empty()) {
    writer(stdout_stream);
    return;
  }
  write_file(path, writer);
}

}  // namespace detail

/// Runs the CLI with argv-style arguments (args[0] is the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  CLI::App app{"squeezekit: spin squeezing of symmetric two-spinor N-qubit states"};
  app.require_subcommand(1);

  detail::Overrides sweep_opts;
  auto* sweep = app.add_subcommand("sweep", "xi over an (N, k, a) grid");
  detail::add_common(sweep, sweep_opts, true);

  detail::Overrides thr_opts;
  auto* thresholds = app.add_subcommand("thresholds", "squeezing onset a* and min_a xi per (N, k)");
  detail::add_common(thresholds, thr_opts, false);

  int point_n = 0, point_k = 0;
  double point_a = 0.0, point_tol = 1e-9;
  auto* point = app.add_subcommand("point", "state, reduced matrix and xi for one (N, k, a) as JSON");
  point->add_option("--N", point_n, "qubit count")->required();
  point->add_option("--k", point_k, "minority multiplicity")->required();
  point->add_option("--a", point_a, "overlap parameter in [0, 1]")->required();
  point->add_option("--scan-tol", point_tol, "golden-section tolerance of the direction scan");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  }

  try {
    if (sweep->parsed()) {
      const SweepConfig cfg = detail::build_config(sweep_opts);
      const SweepTable table = run_sweep(cfg);
      const bool json = cfg.format == OutputFormat::json;
      const std::string path = resolve_output(cfg.output_path, json ? "sweep.json" : "sweep.csv");
      detail::emit(path, out, [&](std::ostream& o) {
        if (json) {
          emit_json(table, o);
        } else {
          emit_csv(table, o);
        }
      });
      if (cfg.emit_plot) {
        std::map<int, SweepTable> per_n;
        for (const auto& r : table.rows) per_n[r.n].rows.push_back(r);
        for (const auto& [n, sub] : per_n) emit_plot(sub, plot_path(path, n));
      }
      if (table.has_oracle && table.max_oracle_diff() > cfg.oracle_tolerance) {
        err << "crosscheck: max |xi - xi_oracle| = " << format_real(table.max_oracle_diff())
            << " exceeds tolerance " << format_real(cfg.oracle_tolerance) << '\n';
        return kOracleMismatch;
      }
      return kOk;
    }
    if (thresholds->parsed()) {
      const SweepConfig cfg = detail::build_config(thr_opts);
      const auto rows = threshold_table(cfg);
      const bool json = cfg.format == OutputFormat::json;
      const std::string path =
          resolve_output(cfg.output_path, json ? "thresholds.json" : "thresholds.csv");
      detail::emit(path, out, [&](std::ostream& o) {
        if (json) {
          emit_threshold_json(rows, o);
        } else {
          emit_threshold_csv(rows, o);
        }
      });
      return kOk;
    }
    if (point->parsed()) {
      const FamilyParams params(point_n, point_k, point_a);
      const DickeVector state = canonical_amplitudes(params);
      nlohmann::json j;
      j["params"] = {{"N", params.n()}, {"k", params.k()}, {"a", params.a()}};
      j["state"] = state;
      j["rho"] = reduced_closed_form(params);
      j["report"] = xi(params);
      j["closed_form"] = xi_closed_form_family(params);
      j["direction_scan"] = xi_direction_scan(state, ScanOptions{point_tol});
      out << j.dump(2) << '\n';
      return kOk;
    }
  } catch (const IoError& e) {
    err << "io error: " << e.what() << '\n';
    return kIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  }
  return kValidation;
}

}  // namespace squeezekit::cli
