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

// Acceptance suite. One PASS/FAIL line per criterion; exit status is the
// number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include "cli_app.hpp"
#include "squeezekit/squeezekit.hpp"

namespace sk = squeezekit;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

/// Records the first failure and the worst observed value.
class Check {
 public:
  void require(bool ok, const std::string& what) {
    std::lock_guard lock(mutex_);
    ++checked_;
    if (!ok && pass_) {
      pass_ = false;
      first_failure_ = what;
    }
  }
  void track(double v) {
    std::lock_guard lock(mutex_);
    worst_ = std::max(worst_, v);
  }
  Outcome done(const std::string& summary) const {
    std::ostringstream o;
    o << summary << "; " << checked_ << " checks";
    if (worst_ > 0.0) o << ", worst " << worst_;
    if (!pass_) o << "; first failure: " << first_failure_;
    return {pass_, o.str()};
  }

 private:
  std::mutex mutex_;
  bool pass_ = true;
  long checked_ = 0;
  double worst_ = 0.0;
  std::string first_failure_;
};

std::string at(int n, int k, double a) {
  std::ostringstream o;
  o << "N=" << n << " k=" << k << " a=" << a;
  return o.str();
}

std::vector<double> a_grid_21() {
  std::vector<double> as;
  for (int i = 0; i <= 20; ++i) as.push_back(i / 20.0);
  return as;
}

std::vector<std::pair<int, int>> family_pairs(int lo, int hi) {
  std::vector<std::pair<int, int>> out;
  for (int n = lo; n <= hi; ++n) {
    for (int k = 1; k <= n / 2; ++k) out.emplace_back(n, k);
  }
  return out;
}

Outcome reduction_equivalence() {
  Check c;
  for (auto [n, k] : family_pairs(2, 12)) {
    for (double a : a_grid_21()) {
      const sk::FamilyParams p(n, k, a);
      const auto closed = sk::reduced_closed_form(p);
      const auto state = sk::canonical_amplitudes(p);
      const auto traced = sk::reduced_dicke_trace(state);
      const auto brute = sk::reduced_bruteforce(sk::full_tensor(state));
      const double d = std::max({closed.max_abs_diff(traced), closed.max_abs_diff(brute),
                                 traced.max_abs_diff(brute)});
      c.track(d);
      c.require(d <= 1e-10, at(n, k, a));
    }
  }
  return c.done("closed form vs Dicke trace vs 2^N brute force, N=2..12, 21 a-values");
}

Outcome xi_equivalence() {
  std::vector<std::pair<int, int>> pairs = family_pairs(2, 12);
  for (int n : {20, 50, 100, 200}) {
    for (int k = 1; k <= n / 2; ++k) pairs.emplace_back(n, k);
  }
  Check c;
  sk::parallel_for(pairs.size(), 4, [&](std::size_t i) {
    const auto [n, k] = pairs[i];
    for (double a : a_grid_21()) {
      const sk::FamilyParams p(n, k, a);
      const auto closed = sk::xi_closed_form_family(p);
      const auto scan = sk::xi_direction_scan(sk::canonical_amplitudes(p), {1e-9});
      if (closed.degenerate || scan.degenerate) {
        c.require(closed.degenerate && scan.degenerate, "degeneracy disagrees at " + at(n, k, a));
        continue;
      }
      const double d = std::abs(*closed.xi - *scan.xi);
      c.track(d);
      c.require(d <= 1e-6, at(n, k, a));
    }
  });
  return c.done("|xi_closed - xi_scan| <= 1e-6 on N=2..12 and N=20,50,100,200");
}

Outcome pinned_values() {
  std::vector<std::pair<int, int>> pairs = family_pairs(2, 12);
  for (int n : {20, 50, 100, 200}) {
    for (int k = 1; k <= n / 2; ++k) pairs.emplace_back(n, k);
  }
  Check c;
  int degenerate_dicke = 0;
  for (auto [n, k] : pairs) {
    for (const auto& rep : {sk::xi(sk::FamilyParams(n, k, 1.0)), sk::xi_closed_form_family({n, k, 1.0})}) {
      c.require(!rep.degenerate && std::abs(*rep.xi - 1.0) <= 1e-12, "xi != 1 at " + at(n, k, 1.0));
    }
    for (const auto& rep :
         {sk::xi_closed_form_family({n, k, 0.0}), sk::xi_direction_scan(sk::DickeVector::basis(n, k))}) {
      if (rep.degenerate) {
        ++degenerate_dicke;
        continue;
      }
      c.require(*rep.xi >= 1.0 - 1e-12, "Dicke state squeezed at " + at(n, k, 0.0));
    }
    if (k == 1 && n >= 3) {
      const double want = std::sqrt((3.0 * n - 2.0) / n);
      const double got = sk::xi(sk::FamilyParams(n, 1, 0.0)).value();
      c.track(std::abs(got - want));
      c.require(std::abs(got - want) <= 1e-10, "Dicke k=1 value at N=" + std::to_string(n));
    }
  }
  const double n4 = sk::xi(sk::FamilyParams(4, 1, 0.0)).value();
  c.require(std::abs(n4 - 1.581139) < 5e-7, "N=4 k=1 a=0 value");
  std::ostringstream o;
  o << "xi(a=1)=1, xi(N,1,0)=sqrt((3N-2)/N) for N>=3 (N=4: " << n4 << "), Dicke xi>=1 (" << degenerate_dicke / 2
    << " zero-mean-spin Dicke points have no xi)";
  return c.done(o.str());
}

Outcome squeezing_existence() {
  Check c;
  double worst_min = 0.0;
  for (int n = 4; n <= 100; ++n) {
    for (int k = 1; k <= std::min(5, n / 2); ++k) {
      double best = std::numeric_limits<double>::infinity();
      for (int i = 0; i <= 200; ++i) {
        const auto rep = sk::xi_closed_form_family({n, k, i / 200.0});
        if (rep.xi) best = std::min(best, *rep.xi);
      }
      worst_min = std::max(worst_min, best);
      c.require(best < 1.0, "no squeezing at N=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  }
  std::ostringstream o;
  o << "min over 201-point a-grid of xi < 1 for 4<=N<=100, k<=min(5,N/2); largest minimum " << worst_min;
  return c.done(o.str());
}

Outcome k_trend() {
  Check c;
  std::ostringstream o;
  for (int n : {20, 100}) {
    o << "N=" << n << ":";
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= 5; ++k) {
      const double m = sk::family_minimum(n, k).min_xi;
      o << ' ' << sk::format_real(m).substr(0, 8);
      c.require(m < prev - 1e-12, "min xi not decreasing at N=" + std::to_string(n) + " k=" + std::to_string(k));
      prev = m;
    }
    o << (n == 20 ? "; " : "");
  }
  return c.done("min_a xi strictly decreasing in k=1..5 (" + o.str() + ")");
}

Outcome structural_invariants() {
  Check c;
  const auto pairs = family_pairs(2, 100);
  sk::parallel_for(pairs.size(), 4, [&](std::size_t idx) {
    const auto [n, k] = pairs[idx];
    for (int i = 0; i <= 200; ++i) {
      const double a = i / 200.0;
      const auto rho = sk::reduced_closed_form({n, k, a});
      c.require(std::abs(rho.trace() - 1.0) <= 1e-12, "trace at " + at(n, k, a));
      c.require(rho.min_eigenvalue() >= -1e-10, "PSD at " + at(n, k, a));
      const auto bc = sk::bloch_correlation(rho);
      c.require(std::abs(bc.s.y()) <= 1e-12, "s_y at " + at(n, k, a));
      if (bc.s.norm() < sk::kDegenerateSpin) continue;
      const auto t = sk::mean_spin_triad(bc);
      c.require(std::abs(t.n1.dot(bc.T * t.n2)) <= 1e-12, "n1 T n2 at " + at(n, k, a));
    }
  });
  for (int n = 2; n <= 500; ++n) {
    for (int r = 0; r <= n; ++r) {
      const auto cg = sk::cg_triple(n, r);
      const double norm = cg.c_plus * cg.c_plus + cg.c_zero * cg.c_zero + cg.c_minus * cg.c_minus;
      c.track(std::abs(norm - 1.0));
      c.require(std::abs(norm - 1.0) <= 1e-12, "CG row norm N=" + std::to_string(n) + " r=" + std::to_string(r));
    }
  }
  return c.done("trace, PSD, s_y=0, n1.T.n2=0 on N=2..100 x 201 a; CG row norms N<=500");
}

Outcome determinism() {
  Check c;
  const fs::path dir = fs::temp_directory_path() / "squeezekit_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::ostringstream sink;
  auto run = [&](std::vector<std::string> args) {
    args.insert(args.begin(), "squeezekit");
    return sk::cli::run(args, sink, sink);
  };
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  const auto first = dir / "first.csv";
  const auto second = dir / "second.csv";
  c.require(run({"sweep", "--out", first.string(), "--jobs", "1"}) == 0, "default sweep, 1 job");
  c.require(run({"sweep", "--out", second.string(), "--jobs", "4"}) == 0, "default sweep, 4 jobs");
  const std::string bytes = slurp(first);
  c.require(!bytes.empty() && bytes == slurp(second), "repeated sweeps differ");

  const auto cross = dir / "crosscheck.csv";
  const int code = run({"sweep", "--mode", "crosscheck", "--out", cross.string(), "--jobs", "4"});
  c.require(code == 0, "crosscheck exit code " + std::to_string(code) + ": " + sink.str());
  std::ifstream in(cross);
  const auto table = sk::read_sweep_csv(in);
  c.track(table.max_oracle_diff());
  std::ostringstream o;
  o << "default-grid sweep byte-identical across runs (" << bytes.size() << " bytes); crosscheck exit "
    << code << " over " << table.rows.size() << " rows";
  fs::remove_all(dir);
  return c.done(o.str());
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"reduction oracle equivalence", reduction_equivalence},
      {"xi closed form vs direction scan", xi_equivalence},
      {"pinned values", pinned_values},
      {"squeezing existence", squeezing_existence},
      {"k-trend of min xi", k_trend},
      {"structural invariants", structural_invariants},
      {"determinism and crosscheck exit code", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %zu %s: %s (%.1f s)\n", out.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                out.detail.c_str(), secs);
    std::fflush(stdout);
    if (!out.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed;
}
