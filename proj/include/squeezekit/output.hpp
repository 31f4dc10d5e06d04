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

// CSV, JSON and SVG writers for sweep and threshold tables. Reals carry 12
// significant digits, booleans are true/false, lines end in LF.

#pragma once

#include <nlohmann/json.hpp>

#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "squeezekit/errors.hpp"
#include "squeezekit/sweep.hpp"

namespace squeezekit {

inline constexpr const char* kSweepHeader = "N,k,a,xi,tperp_min,mean_spin_len,squeezed,degenerate";
inline constexpr const char* kOracleColumns = ",xi_oracle,oracle_diff";
inline constexpr const char* kThresholdHeader =
    "N,k,a_star_low,low_status,min_xi,argmin_a,degenerate_at_zero";

/// General-format rendering with 12 significant digits, widened for
/// |v| >= 1 so the absolute resolution never drops below 1e-12.
inline std::string format_real(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  int digits = 12;
  if (std::abs(v) >= 1.0) digits += static_cast<int>(std::floor(std::log10(std::abs(v)))) + 1;
  std::array<char, 64> buf{};
  const auto res =
      std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, std::min(digits, 17));
  return std::string(buf.data(), res.ptr);
}

/// The value a reader of format_real(v) gets back.
inline double round_real(double v) {
  const std::string s = format_real(v);
  double out = 0.0;
  std::from_chars(s.data(), s.data() + s.size(), out);
  return out;
}

namespace detail {

inline std::string opt_real(const std::optional<double>& v) { return v ? format_real(*v) : ""; }
inline const char* boolean(bool b) { return b ? "true" : "false"; }

inline nlohmann::json opt_json(const std::optional<double>& v) {
  return v ? nlohmann::json(round_real(*v)) : nlohmann::json(nullptr);
}

}  // namespace detail

inline void emit_csv(const SweepTable& table, std::ostream& out) {
  out << kSweepHeader << (table.has_oracle ? kOracleColumns : "") << '\n';
  for (const auto& r : table.rows) {
    out << r.n << ',' << r.k << ',' << format_real(r.a) << ',' << detail::opt_real(r.xi) << ','
        << detail::opt_real(r.tperp_min) << ',' << format_real(r.mean_spin_len) << ','
        << detail::boolean(r.squeezed) << ',' << detail::boolean(r.degenerate);
    if (table.has_oracle) {
      out << ',' << detail::opt_real(r.xi_oracle) << ',' << detail::opt_real(r.oracle_diff);
    }
    out << '\n';
  }
}

inline nlohmann::json sweep_to_json(const SweepTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : table.rows) {
    nlohmann::json j;
    j["N"] = r.n;
    j["k"] = r.k;
    j["a"] = round_real(r.a);
    j["xi"] = detail::opt_json(r.xi);
    j["tperp_min"] = detail::opt_json(r.tperp_min);
    j["mean_spin_len"] = round_real(r.mean_spin_len);
    j["squeezed"] = r.squeezed;
    j["degenerate"] = r.degenerate;
    if (table.has_oracle) {
      j["xi_oracle"] = detail::opt_json(r.xi_oracle);
      j["oracle_diff"] = detail::opt_json(r.oracle_diff);
    }
    rows.push_back(std::move(j));
  }
  return rows;
}

inline void emit_json(const SweepTable& table, std::ostream& out) {
  out << sweep_to_json(table).dump(2) << '\n';
}

inline void emit_threshold_csv(const std::vector<ThresholdRow>& rows, std::ostream& out) {
  out << kThresholdHeader << '\n';
  for (const auto& r : rows) {
    out << r.n << ',' << r.k << ',' << detail::opt_real(r.a_star_low) << ','
        << to_string(r.low_status) << ',' << format_real(r.min_xi) << ','
        << format_real(r.argmin_a) << ',' << detail::boolean(r.degenerate_at_zero) << '\n';
  }
}

inline void emit_threshold_json(const std::vector<ThresholdRow>& rows, std::ostream& out) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    arr.push_back({{"N", r.n},
                   {"k", r.k},
                   {"a_star_low", detail::opt_json(r.a_star_low)},
                   {"low_status", to_string(r.low_status)},
                   {"min_xi", round_real(r.min_xi)},
                   {"argmin_a", round_real(r.argmin_a)},
                   {"degenerate_at_zero", r.degenerate_at_zero}});
  }
  out << arr.dump(2) << '\n';
}

// ---------------------------------------------------------------------------
// Reading CSV back
// ---------------------------------------------------------------------------

/// Parses the output of emit_csv.
inline SweepTable read_sweep_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw DomainError("read_sweep_csv: missing header");
  SweepTable table;
  if (line == std::string(kSweepHeader) + kOracleColumns) {
    table.has_oracle = true;
  } else if (line != kSweepHeader) {
    throw DomainError("read_sweep_csv: unexpected header '" + line + "'");
  }
  auto real = [](const std::string& s) -> std::optional<double> {
    if (s.empty()) return std::nullopt;
    if (s == "inf") return std::numeric_limits<double>::infinity();
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{}) throw DomainError("read_sweep_csv: bad number '" + s + "'");
    return v;
  };
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto f = detail::split(line, ',');
    const std::size_t expect = table.has_oracle ? 10 : 8;
    if (f.size() != expect) {
      throw DomainError("read_sweep_csv: line " + std::to_string(lineno) + " has " +
                        std::to_string(f.size()) + " fields");
    }
    SweepRow r;
    r.n = std::stoi(f[0]);
    r.k = std::stoi(f[1]);
    r.a = real(f[2]).value();
    r.xi = real(f[3]);
    r.tperp_min = real(f[4]);
    r.mean_spin_len = real(f[5]).value();
    r.squeezed = f[6] == "true";
    r.degenerate = f[7] == "true";
    if (table.has_oracle) {
      r.xi_oracle = real(f[8]);
      r.oracle_diff = real(f[9]);
    }
    table.rows.push_back(r);
  }
  return table;
}

// ---------------------------------------------------------------------------
// SVG
// ---------------------------------------------------------------------------

/// xi-vs-a plot: one polyline per k (split at degenerate rows), a dashed
/// reference line at xi = 1, axes, labels and a legend. Refuses tables that
/// mix several N.
inline void emit_plot(const SweepTable& table, std::ostream& out) {
  if (table.rows.empty()) throw DomainError("emit_plot: table is empty");
  std::set<int> ns;
  for (const auto& r : table.rows) ns.insert(r.n);
  if (ns.size() != 1) throw DomainError("emit_plot: table mixes several N; plot one N at a time");
  const int n = *ns.begin();

  constexpr double kW = 640, kH = 420, kLeft = 70, kRight = 130, kTop = 40, kBottom = 60;
  constexpr std::array<const char*, 8> kColors = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                                  "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};
  double a_lo = table.rows.front().a, a_hi = a_lo, y_hi = 1.0;
  for (const auto& r : table.rows) {
    a_lo = std::min(a_lo, r.a);
    a_hi = std::max(a_hi, r.a);
    if (r.xi) y_hi = std::max(y_hi, *r.xi);
  }
  if (a_hi - a_lo < 1e-12) {
    a_lo -= 0.05;
    a_hi += 0.05;
  }
  y_hi *= 1.05;
  const double pw = kW - kLeft - kRight;
  const double ph = kH - kTop - kBottom;
  auto px = [&](double a) { return kLeft + (a - a_lo) / (a_hi - a_lo) * pw; };
  auto py = [&](double y) { return kTop + (1.0 - y / y_hi) * ph; };
  auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return std::string(buf);
  };

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kW
      << "\" height=\"" << kH << "\" viewBox=\"0 0 " << kW << ' ' << kH << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << kLeft + pw / 2 << "\" y=\"22\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"15\">Squeezing parameter, N = " << n << "</text>\n";

  // axes and ticks
  out << "<g class=\"axes\" stroke=\"black\" stroke-width=\"1\">\n"
      << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + ph << "\" x2=\"" << kLeft + pw << "\" y2=\""
      << kTop + ph << "\"/>\n"
      << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\""
      << kTop + ph << "\"/>\n</g>\n";
  out << "<g class=\"ticks\" font-family=\"sans-serif\" font-size=\"11\">\n";
  for (int i = 0; i <= 4; ++i) {
    const double a = a_lo + (a_hi - a_lo) * i / 4.0;
    out << "<text x=\"" << num(px(a)) << "\" y=\"" << kTop + ph + 16
        << "\" text-anchor=\"middle\">" << num(a) << "</text>\n";
    const double y = y_hi * i / 4.0;
    out << "<text x=\"" << kLeft - 6 << "\" y=\"" << num(py(y) + 4) << "\" text-anchor=\"end\">"
        << num(y) << "</text>\n";
  }
  out << "</g>\n";
  out << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kH - 18
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">a</text>\n"
      << "<text x=\"18\" y=\"" << kTop + ph / 2 << "\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"13\" transform=\"rotate(-90 18 " << kTop + ph / 2
      << ")\">&#958;</text>\n";

  out << "<line class=\"reference\" x1=\"" << kLeft << "\" y1=\"" << num(py(1.0)) << "\" x2=\""
      << kLeft + pw << "\" y2=\"" << num(py(1.0))
      << "\" stroke=\"gray\" stroke-dasharray=\"6,4\"/>\n";

  std::map<int, std::vector<const SweepRow*>> by_k;
  for (const auto& r : table.rows) by_k[r.k].push_back(&r);
  int series = 0;
  for (const auto& [k, rows] : by_k) {
    const char* color = kColors[static_cast<std::size_t>(series) % kColors.size()];
    std::vector<std::vector<const SweepRow*>> segments(1);
    for (const auto* r : rows) {
      if (r->xi) {
        segments.back().push_back(r);
      } else if (!segments.back().empty()) {
        segments.emplace_back();
      }
    }
    for (const auto& seg : segments) {
      if (seg.size() == 1) {
        out << "<circle class=\"marker\" data-k=\"" << k << "\" cx=\"" << num(px(seg[0]->a))
            << "\" cy=\"" << num(py(*seg[0]->xi)) << "\" r=\"3\" fill=\"" << color << "\"/>\n";
      } else if (seg.size() > 1) {
        out << "<polyline class=\"series\" data-k=\"" << k << "\" fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < seg.size(); ++i) {
          out << (i ? " " : "") << num(px(seg[i]->a)) << ',' << num(py(*seg[i]->xi));
        }
        out << "\"/>\n";
      }
    }
    const double ly = kTop + 10 + 18.0 * series;
    out << "<g class=\"legend\"><line x1=\"" << kW - kRight + 15 << "\" y1=\"" << ly << "\" x2=\""
        << kW - kRight + 40 << "\" y2=\"" << ly << "\" stroke=\"" << color
        << "\" stroke-width=\"2\"/><text x=\"" << kW - kRight + 46 << "\" y=\"" << ly + 4
        << "\" font-family=\"sans-serif\" font-size=\"12\">k = " << k << "</text></g>\n";
    ++series;
  }
  out << "</svg>\n";
}

// ---------------------------------------------------------------------------
// File wrappers
// ---------------------------------------------------------------------------

template <typename Writer>
void write_file(const std::string& path, Writer&& writer) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  writer(file);
  file.flush();
  if (!file) throw IoError("failed writing '" + path + "'");
}

inline void emit_csv(const SweepTable& table, const std::string& path) {
  write_file(path, [&](std::ostream& o) { emit_csv(table, o); });
}
inline void emit_json(const SweepTable& table, const std::string& path) {
  write_file(path, [&](std::ostream& o) { emit_json(table, o); });
}
inline void emit_plot(const SweepTable& table, const std::string& path) {
  write_file(path, [&](std::ostream& o) { emit_plot(table, o); });
}

}  // namespace squeezekit
