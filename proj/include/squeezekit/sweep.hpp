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

// Parameter sweeps over (N, k, a) and per-(N, k) threshold tables.

#pragma once

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <istream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "squeezekit/errors.hpp"
#include "squeezekit/squeezing.hpp"
#include "squeezekit/state_family.hpp"

namespace squeezekit {

/// Invalid sweep configuration. `where()` names the line and/or field.
class ConfigError : public Error {
 public:
  ConfigError(std::string where, const std::string& what)
      : Error(where.empty() ? what : where + ": " + what), where_(std::move(where)), message_(what) {}
  [[nodiscard]] const std::string& where() const { return where_; }
  [[nodiscard]] const std::string& message() const { return message_; }

 private:
  std::string where_;
  std::string message_;
};

enum class SweepMode { closed, generic, scan, crosscheck };
enum class OutputFormat { csv, json };

struct AGrid {
  double start = 0.0;
  double stop = 1.0;
  int steps = 201;

  [[nodiscard]] double at(int i) const {
    if (i == steps - 1) return stop;
    return start + (stop - start) * static_cast<double>(i) / (steps - 1);
  }
};

struct SweepConfig {
  std::vector<int> n_list;
  std::optional<std::vector<int>> k_list;  ///< nullopt means every k in 1..N/2
  int k_max = 0;                           ///< caps an expanded "all"; 0 = no cap
  AGrid a_grid;
  SweepMode mode = SweepMode::closed;
  std::string output_path;  ///< empty: stdout or $SQUEEZEKIT_OUT_DIR
  OutputFormat format = OutputFormat::csv;
  double scan_tolerance = 1e-9;
  double oracle_tolerance = 1e-6;
  bool emit_plot = false;
  bool squared = false;
  int jobs = 0;  ///< 0 = hardware concurrency

  /// Default grid: N = 4..100, every k, 201 values of a.
  static SweepConfig defaults() {
    SweepConfig c;
    for (int n = 4; n <= 100; ++n) c.n_list.push_back(n);
    return c;
  }

  /// k values for one N after expanding "all" and applying k_max.
  [[nodiscard]] std::vector<int> ks_for(int n) const {
    std::vector<int> ks;
    if (k_list) {
      ks = *k_list;
    } else {
      const int top = k_max > 0 ? std::min(k_max, n / 2) : n / 2;
      for (int k = 1; k <= top; ++k) ks.push_back(k);
    }
    return ks;
  }

  void validate() const {
    if (n_list.empty()) throw ConfigError("field 'N'", "list is empty");
    if (k_list && k_list->empty()) throw ConfigError("field 'k'", "list is empty");
    if (!(a_grid.start >= 0.0 && a_grid.start <= a_grid.stop && a_grid.stop <= 1.0)) {
      throw ConfigError("field 'a_grid'", "need 0 <= start <= stop <= 1");
    }
    if (a_grid.steps < 2) throw ConfigError("field 'a_grid'", "steps must be at least 2");
    if (!(scan_tolerance > 0.0)) throw ConfigError("field 'scan_tol'", "must be positive");
    if (!(oracle_tolerance > 0.0)) throw ConfigError("field 'tolerance'", "must be positive");
    if (jobs < 0) throw ConfigError("field 'jobs'", "must be non-negative");
    if (k_max < 0) throw ConfigError("field 'k_max'", "must be non-negative");
    for (int n : n_list) {
      if (n < 2 || n > kMaxDickeQubits) {
        throw ConfigError("field 'N'", "N=" + std::to_string(n) + " outside [2, " +
                                           std::to_string(kMaxDickeQubits) + "]");
      }
      for (int k : ks_for(n)) {
        if (k < 1 || k > n / 2) {
          throw ConfigError("field 'k'", "k=" + std::to_string(k) + " invalid for N=" +
                                             std::to_string(n) + " (need 1 <= k <= N/2)");
        }
      }
    }
  }
};

// ---------------------------------------------------------------------------
// key=value config parsing
// ---------------------------------------------------------------------------

namespace detail {

inline std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    const auto next = s.find(sep, pos);
    out.push_back(trim(s.substr(pos, next == std::string_view::npos ? next : next - pos)));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

inline int parse_int(const std::string& s, const std::string& where) {
  int v = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end || s.empty()) {
    throw ConfigError(where, "expected an integer, got '" + s + "'");
  }
  return v;
}

inline double parse_real(const std::string& s, const std::string& where) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end || s.empty()) {
    throw ConfigError(where, "expected a real number, got '" + s + "'");
  }
  return v;
}

inline bool parse_bool(const std::string& s, const std::string& where) {
  if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
  if (s == "false" || s == "0" || s == "no" || s == "off") return false;
  throw ConfigError(where, "expected true/false, got '" + s + "'");
}

}  // namespace detail

/// "4,8,20" or "4..100" or a mix of both.
inline std::vector<int> parse_int_list(const std::string& text, const std::string& where) {
  std::vector<int> out;
  for (const auto& item : detail::split(text, ',')) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(detail::parse_int(item, where));
      continue;
    }
    const int lo = detail::parse_int(detail::trim(item.substr(0, dots)), where);
    const int hi = detail::parse_int(detail::trim(item.substr(dots + 2)), where);
    if (hi < lo) throw ConfigError(where, "empty range '" + item + "'");
    for (int v = lo; v <= hi; ++v) out.push_back(v);
  }
  return out;
}

/// "start:stop:steps".
inline AGrid parse_a_grid(const std::string& text, const std::string& where) {
  const auto parts = detail::split(text, ':');
  if (parts.size() != 3) throw ConfigError(where, "expected start:stop:steps, got '" + text + "'");
  return {detail::parse_real(parts[0], where), detail::parse_real(parts[1], where),
          detail::parse_int(parts[2], where)};
}

inline SweepMode parse_mode(const std::string& s, const std::string& where) {
  if (s == "closed") return SweepMode::closed;
  if (s == "generic") return SweepMode::generic;
  if (s == "scan") return SweepMode::scan;
  if (s == "crosscheck") return SweepMode::crosscheck;
  throw ConfigError(where, "unknown mode '" + s + "' (closed, generic, scan, crosscheck)");
}

inline OutputFormat parse_format(const std::string& s, const std::string& where) {
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  throw ConfigError(where, "unknown format '" + s + "' (csv, json)");
}

/// Applies one key=value setting. `where` prefixes diagnostics.
inline void apply_setting(SweepConfig& cfg, const std::string& key, const std::string& value,
                          const std::string& where) {
  const std::string at = (where.empty() ? "" : where + ", ") + "field '" + key + "'";
  if (key == "N") {
    cfg.n_list = parse_int_list(value, at);
  } else if (key == "k") {
    if (value == "all") {
      cfg.k_list.reset();
    } else {
      cfg.k_list = parse_int_list(value, at);
    }
  } else if (key == "k_max") {
    cfg.k_max = detail::parse_int(value, at);
  } else if (key == "a_grid") {
    cfg.a_grid = parse_a_grid(value, at);
  } else if (key == "mode") {
    cfg.mode = parse_mode(value, at);
  } else if (key == "out") {
    cfg.output_path = value;
  } else if (key == "format") {
    cfg.format = parse_format(value, at);
  } else if (key == "plot") {
    cfg.emit_plot = detail::parse_bool(value, at);
  } else if (key == "squared") {
    cfg.squared = detail::parse_bool(value, at);
  } else if (key == "scan_tol") {
    cfg.scan_tolerance = detail::parse_real(value, at);
  } else if (key == "tolerance") {
    cfg.oracle_tolerance = detail::parse_real(value, at);
  } else if (key == "jobs") {
    cfg.jobs = detail::parse_int(value, at);
  } else {
    throw ConfigError(at, "unknown key");
  }
}

/// Reads '#'-commented key=value lines on top of `base`.
inline SweepConfig parse_config(std::istream& in, SweepConfig base = SweepConfig::defaults()) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string body = detail::trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    const std::string where = "line " + std::to_string(lineno);
    if (eq == std::string::npos) throw ConfigError(where, "expected key=value, got '" + body + "'");
    apply_setting(base, detail::trim(body.substr(0, eq)), detail::trim(body.substr(eq + 1)), where);
  }
  return base;
}

// ---------------------------------------------------------------------------
// Sweeps
// ---------------------------------------------------------------------------

struct SweepRow {
  int n = 0;
  int k = 0;
  double a = 0.0;
  std::optional<double> xi;
  std::optional<double> tperp_min;
  double mean_spin_len = 0.0;
  bool squeezed = false;
  bool degenerate = false;
  std::optional<double> xi_oracle;
  std::optional<double> oracle_diff;
};

struct SweepTable {
  bool has_oracle = false;
  std::vector<SweepRow> rows;

  [[nodiscard]] double max_oracle_diff() const {
    double worst = 0.0;
    for (const auto& r : rows) {
      if (r.oracle_diff) worst = std::max(worst, *r.oracle_diff);
    }
    return worst;
  }
};

inline int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs fn(i) for i in [0, count) on up to `jobs` threads. The first
/// exception thrown by any task is rethrown after all workers stop.
template <typename Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
  const int workers = static_cast<int>(std::min<std::size_t>(std::max(1, jobs), std::max<std::size_t>(count, 1)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto body = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(count);
        return;
      }
    }
  };
  if (workers <= 1) {
    body();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(body);
  }
  if (failure) std::rethrow_exception(failure);
}

inline SweepRow evaluate_point(const SweepConfig& cfg, int n, int k, double a) {
  const FamilyParams params(n, k, a);
  SweepRow row;
  row.n = n;
  row.k = k;
  row.a = a;

  const ScanOptions scan_opts{cfg.scan_tolerance};
  SqueezingReport rep;
  switch (cfg.mode) {
    case SweepMode::closed:
    case SweepMode::crosscheck:
      rep = xi_closed_form_family(params);
      break;
    case SweepMode::generic:
      rep = xi(params);
      break;
    case SweepMode::scan:
      rep = xi_direction_scan(canonical_amplitudes(params), scan_opts);
      break;
  }
  auto shape = [&](double v) { return cfg.squared ? v * v : v; };
  row.degenerate = rep.degenerate;
  row.mean_spin_len = rep.mean_spin_len;
  row.squeezed = rep.squeezed;
  if (rep.xi) {
    row.xi = shape(*rep.xi);
    row.tperp_min = rep.tperp_min;
  }

  if (cfg.mode == SweepMode::crosscheck) {
    const SqueezingReport oracle = xi_direction_scan(canonical_amplitudes(params), scan_opts);
    if (oracle.xi) row.xi_oracle = shape(*oracle.xi);
    if (row.xi && row.xi_oracle) {
      row.oracle_diff = std::abs(*row.xi - *row.xi_oracle);
    } else if (!row.xi && !row.xi_oracle) {
      row.oracle_diff = 0.0;  // both paths agree the point is degenerate
    } else {
      row.oracle_diff = std::numeric_limits<double>::infinity();
    }
  }
  return row;
}

/// Rows ordered by N, then k, then a ascending (in list order for N and k).
inline SweepTable run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  struct Point {
    int n;
    int k;
    double a;
  };
  std::vector<Point> points;
  for (int n : cfg.n_list) {
    for (int k : cfg.ks_for(n)) {
      for (int i = 0; i < cfg.a_grid.steps; ++i) points.push_back({n, k, cfg.a_grid.at(i)});
    }
  }
  SweepTable table;
  table.has_oracle = cfg.mode == SweepMode::crosscheck;
  table.rows.resize(points.size());
  parallel_for(points.size(), resolve_jobs(cfg.jobs), [&](std::size_t i) {
    table.rows[i] = evaluate_point(cfg, points[i].n, points[i].k, points[i].a);
  });
  return table;
}

// ---------------------------------------------------------------------------
// Threshold tables
// ---------------------------------------------------------------------------

struct ThresholdRow {
  int n = 0;
  int k = 0;
  ThresholdStatus low_status = ThresholdStatus::no_root;
  std::optional<double> a_star_low;
  bool degenerate_at_zero = false;
  double min_xi = 0.0;
  double argmin_a = 0.0;
};

inline ThresholdRow threshold_row(int n, int k) {
  ThresholdRow row;
  row.n = n;
  row.k = k;
  const ThresholdResult low = squeezing_threshold(n, k, ThresholdSide::low);
  row.low_status = low.status;
  row.a_star_low = low.a_star;
  row.degenerate_at_zero = low.degenerate_at_zero;
  const FamilyMinimum fm = family_minimum(n, k);
  row.min_xi = fm.min_xi;
  row.argmin_a = fm.argmin_a;
  return row;
}

/// One row per (N, k); uses the N/k fields of cfg only.
inline std::vector<ThresholdRow> threshold_table(const SweepConfig& cfg) {
  cfg.validate();
  std::vector<std::pair<int, int>> pairs;
  for (int n : cfg.n_list) {
    for (int k : cfg.ks_for(n)) pairs.emplace_back(n, k);
  }
  std::vector<ThresholdRow> rows(pairs.size());
  parallel_for(pairs.size(), resolve_jobs(cfg.jobs),
               [&](std::size_t i) { rows[i] = threshold_row(pairs[i].first, pairs[i].second); });
  return rows;
}

inline const char* to_string(ThresholdStatus s) {
  switch (s) {
    case ThresholdStatus::found:
      return "found";
    case ThresholdStatus::boundary:
      return "boundary";
    case ThresholdStatus::no_root:
      return "no_root";
  }
  return "no_root";
}

}  // namespace squeezekit
