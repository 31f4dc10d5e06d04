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

// Kitagawa-Ueda squeezing parameter
//
//     xi = 2 (Delta J_perp)_min / sqrt(N)
//
// evaluated three ways. For a symmetric state <(n.J)^2> = N/4 (1 + (N-1) n.T.n)
// for any n perpendicular to the mean spin, so xi^2 = 1 + (N-1) tperp_min with
// tperp_min the smallest eigenvalue of the transverse 2x2 block of the
// two-qubit correlation matrix T. The family closed form evaluates that block
// along n2 directly; the direction scan ignores T entirely and minimizes the
// collective-spin variance over the transverse circle.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "squeezekit/errors.hpp"
#include "squeezekit/optimize.hpp"
#include "squeezekit/quantum_core.hpp"
#include "squeezekit/reduction.hpp"
#include "squeezekit/state_family.hpp"

namespace squeezekit {

/// |s| below this leaves the mean spin direction undefined.
inline constexpr double kDegenerateSpin = 1e-9;
/// xi must fall this far below 1 to be called squeezed.
inline constexpr double kSqueezedTol = 1e-9;

struct BlochCorrelation {
  Eigen::Vector3d s = Eigen::Vector3d::Zero();
  Eigen::Matrix3d T = Eigen::Matrix3d::Zero();
};

/// s_i = Tr[rho (sigma_i x I)], t_ij = Tr[rho (sigma_i x sigma_j)] for the
/// symmetric template.
inline BlochCorrelation bloch_correlation(const TwoQubitDensity& rho) {
  BlochCorrelation bc;
  bc.s = {2.0 * (rho.B + rho.E), 0.0, rho.A - rho.F};
  const double txz = 2.0 * (rho.B - rho.E);
  bc.T << 2.0 * (rho.C + rho.D), 0.0, txz,  //
      0.0, 2.0 * (rho.D - rho.C), 0.0,      //
      txz, 0.0, rho.A - 2.0 * rho.D + rho.F;
  return bc;
}

/// Orthonormal (n1, n2, n0) with n0 along the mean spin; n1 x n2 = n0.
struct SpinTriad {
  Eigen::Vector3d n0;
  Eigen::Vector3d n1;
  Eigen::Vector3d n2;
};

inline SpinTriad mean_spin_triad(const BlochCorrelation& bc, double eps = kDegenerateSpin) {
  const Eigen::Vector3d& s = bc.s;
  const double len = s.norm();
  if (!(len >= eps)) {
    throw DegenerateMeanSpin("mean_spin_triad: |s| = " + std::to_string(len) +
                             " below threshold");
  }
  SpinTriad t;
  t.n0 = s / len;
  if (s.y() == 0.0) {
    t.n1 = Eigen::Vector3d::UnitY();
    t.n2 = Eigen::Vector3d(-s.z(), 0.0, s.x()) / len;
    return t;
  }
  // Project y (or x when n0 is nearly parallel to y) off n0.
  Eigen::Vector3d seed = Eigen::Vector3d::UnitY();
  if (std::abs(t.n0.y()) > 0.9) seed = Eigen::Vector3d::UnitX();
  t.n1 = (seed - seed.dot(t.n0) * t.n0).normalized();
  t.n2 = t.n0.cross(t.n1);
  return t;
}

struct TransverseMinimum {
  double value = 0.0;
  Eigen::Vector3d direction = Eigen::Vector3d::Zero();
};

/// Smallest eigenvalue of the transverse block of T in the basis (n1, n2),
/// and the unit direction in span(n1, n2) attaining it. The direction has a
/// non-negative n1 component (positive n2 component when that is zero).
inline TransverseMinimum tperp_min(const BlochCorrelation& bc, const SpinTriad& triad) {
  const double t11 = triad.n1.dot(bc.T * triad.n1);
  const double t22 = triad.n2.dot(bc.T * triad.n2);
  const double t12 = triad.n1.dot(bc.T * triad.n2);
  const double diff = t11 - t22;
  const double root = std::sqrt(diff * diff + 4.0 * t12 * t12);
  const double lambda = 0.5 * ((t11 + t22) - root);

  // Eigenvector of [[t11, t12], [t12, t22]] for lambda; take the better
  // conditioned of the two row-derived candidates.
  double u = t12;
  double v = lambda - t11;
  const double u2 = lambda - t22;
  const double v2 = t12;
  if (u2 * u2 + v2 * v2 > u * u + v * v) {
    u = u2;
    v = v2;
  }
  const double len = std::hypot(u, v);
  if (len < 1e-300 || root == 0.0) {
    // Isotropic block: every transverse direction is a minimizer.
    u = t11 <= t22 ? 1.0 : 0.0;
    v = t11 <= t22 ? 0.0 : 1.0;
  } else {
    u /= len;
    v /= len;
  }
  if (u < 0.0 || (u == 0.0 && v < 0.0)) {
    u = -u;
    v = -v;
  }
  return {lambda, u * triad.n1 + v * triad.n2};
}

struct SqueezingReport {
  std::optional<double> xi;  ///< empty when degenerate
  double tperp_min = 0.0;
  Eigen::Vector3d n_min = Eigen::Vector3d::Zero();
  double mean_spin_len = 0.0;  ///< |<J>| / (N/2)
  bool squeezed = false;
  bool degenerate = false;

  /// xi, or DegenerateMeanSpin when the mean spin vanished.
  [[nodiscard]] double value() const {
    if (!xi) throw DegenerateMeanSpin("squeezing parameter undefined: mean spin vanishes");
    return *xi;
  }
};

namespace detail {

inline double xi_from_tperp(int n_qubits, double tperp) {
  const double radicand = 1.0 + (n_qubits - 1.0) * tperp;
  if (radicand < -1e-10) {
    throw NegativeRadicand("xi: 1 + (N-1) tperp_min = " + std::to_string(radicand));
  }
  return std::sqrt(std::max(0.0, radicand));
}

inline SqueezingReport degenerate_report(double mean_spin_len) {
  SqueezingReport rep;
  rep.degenerate = true;
  rep.mean_spin_len = mean_spin_len;
  return rep;
}

inline SqueezingReport finish_report(int n_qubits, double tperp, const Eigen::Vector3d& n_min,
                                     double mean_spin_len) {
  SqueezingReport rep;
  rep.tperp_min = tperp;
  rep.n_min = n_min;
  rep.mean_spin_len = mean_spin_len;
  rep.xi = xi_from_tperp(n_qubits, tperp);
  rep.squeezed = *rep.xi < 1.0 - kSqueezedTol;
  return rep;
}

}  // namespace detail

/// Generic path: Bloch data, triad, transverse eigenvalue.
inline SqueezingReport xi_from_bloch(const BlochCorrelation& bc, int n_qubits) {
  if (n_qubits < 2) throw DomainError("xi: N must be at least 2");
  const double len = bc.s.norm();
  if (!(len >= kDegenerateSpin)) return detail::degenerate_report(len);
  const SpinTriad triad = mean_spin_triad(bc);
  const TransverseMinimum tm = tperp_min(bc, triad);
  return detail::finish_report(n_qubits, tm.value, tm.direction, len);
}

inline SqueezingReport xi(const TwoQubitDensity& rho, int n_qubits) {
  return xi_from_bloch(bloch_correlation(rho), n_qubits);
}

inline SqueezingReport xi(const FamilyParams& params) {
  return xi(reduced_closed_form(params), params.n());
}

/// n2.T.n2 written out in A..F:
///   [2(A-F)^2 (C+D) + 4(B+E)^2 (1-4D) - 8(A-F)(B^2-E^2)] / [4(B+E)^2 + (A-F)^2]
inline double family_n2_t_n2(const TwoQubitDensity& rho) {
  const double af = rho.A - rho.F;
  const double be = rho.B + rho.E;
  const double num = 2.0 * af * af * (rho.C + rho.D) + 4.0 * be * be * (1.0 - 4.0 * rho.D) -
                     8.0 * af * (rho.B * rho.B - rho.E * rho.E);
  return num / (4.0 * be * be + af * af);
}

/// Family closed form: the transverse minimum is taken along n2, valid
/// because the mean spin lies in the XZ-plane and n1.T.n2 vanishes.
inline SqueezingReport xi_closed_form_family(const FamilyParams& params) {
  const TwoQubitDensity rho = reduced_closed_form(params);
  const double sx = 2.0 * (rho.B + rho.E);
  const double sz = rho.A - rho.F;
  const double len = std::hypot(sx, sz);
  if (!(len >= kDegenerateSpin)) return detail::degenerate_report(len);
  const Eigen::Vector3d n2(-sz / len, 0.0, sx / len);
  return detail::finish_report(params.n(), family_n2_t_n2(rho), n2, len);
}

// ---------------------------------------------------------------------------
// Direction scan
// ---------------------------------------------------------------------------

struct ScanOptions {
  double tolerance = 1e-9;  ///< golden-section bracket width in theta
  int grid_points = 720;    ///< coarse grid over [0, pi)
};

/// Minimizes Var(cos(t) n1.J + sin(t) n2.J) over t in [0, pi) using the
/// collective operators on the Dicke vector. n1, n2 complete <J>/|<J>| from
/// the coordinate axis least aligned with it.
template <typename Scalar>
SqueezingReport xi_direction_scan(const BasicDickeVector<Scalar>& state, ScanOptions opts = {}) {
  const int n = state.n();
  if (n < 2) throw DomainError("xi_direction_scan: N must be at least 2");
  if (opts.grid_points < 3) throw DomainError("xi_direction_scan: grid needs at least 3 points");

  const CollectiveSpinSet spin(n);
  const Eigen::VectorXcd psi = state.to_eigen();
  const Eigen::Vector3d mean = spin.expectation(psi);
  const double half_n = 0.5 * n;
  const double mean_len = mean.norm() / half_n;
  if (!(mean.norm() >= kDegenerateSpin * half_n)) return detail::degenerate_report(mean_len);

  const Eigen::Vector3d n0 = mean.normalized();
  Eigen::Index axis = 0;
  n0.cwiseAbs().minCoeff(&axis);
  const Eigen::Vector3d seed = Eigen::Vector3d::Unit(axis);
  const Eigen::Vector3d n1 = (seed - seed.dot(n0) * n0).normalized();
  const Eigen::Vector3d n2 = n0.cross(n1);

  const Eigen::VectorXcd w1 = spin.apply(n1, psi);
  const Eigen::VectorXcd w2 = spin.apply(n2, psi);
  const double m1 = psi.dot(w1).real();
  const double m2 = psi.dot(w2).real();
  const double g11 = w1.squaredNorm();
  const double g22 = w2.squaredNorm();
  const double g12 = w1.dot(w2).real();

  auto variance = [&](double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const double mean_perp = c * m1 + s * m2;
    return c * c * g11 + s * s * g22 + 2.0 * c * s * g12 - mean_perp * mean_perp;
  };

  const double step = std::numbers::pi / opts.grid_points;
  int best_i = 0;
  double best = variance(0.0);
  for (int i = 1; i < opts.grid_points; ++i) {
    const double v = variance(i * step);
    if (v < best) {
      best = v;
      best_i = i;
    }
  }
  // The variance has period pi, so the bracket may straddle 0.
  MinimumPoint refined = golden_section_minimize(variance, (best_i - 1) * step,
                                                 (best_i + 1) * step, opts.tolerance);
  if (best < refined.fx) refined = {best_i * step, best};

  const double var_min = std::max(0.0, refined.fx);
  const double tperp = (var_min / (0.25 * n) - 1.0) / (n - 1.0);
  Eigen::Vector3d dir = std::cos(refined.x) * n1 + std::sin(refined.x) * n2;

  SqueezingReport rep;
  rep.tperp_min = tperp;
  rep.n_min = dir;
  rep.mean_spin_len = mean_len;
  rep.xi = 2.0 * std::sqrt(var_min) / std::sqrt(static_cast<double>(n));
  rep.squeezed = *rep.xi < 1.0 - kSqueezedTol;
  return rep;
}

// ---------------------------------------------------------------------------
// Minimum over a and squeezing thresholds
// ---------------------------------------------------------------------------

struct FamilyMinimum {
  double grid_min_xi = 0.0;   ///< smallest xi on the grid (non-degenerate points)
  double grid_argmin_a = 0.0;
  double min_xi = 0.0;        ///< after golden-section refinement
  double argmin_a = 0.0;
};

/// Minimum of the closed-form xi over a on a uniform grid of `steps` points in
/// [0, 1], refined by golden section around the best grid point.
inline FamilyMinimum family_minimum(int n_qubits, int k, int steps = 201, double tol = 1e-12) {
  if (steps < 2) throw DomainError("family_minimum: need at least 2 grid points");
  const FamilyParams base(n_qubits, k, 1.0);
  auto eval = [&](double a) -> std::optional<double> {
    return xi_closed_form_family(base.with_a(a)).xi;
  };

  std::vector<std::optional<double>> values(static_cast<std::size_t>(steps));
  int best = -1;
  for (int i = 0; i < steps; ++i) {
    const double a = static_cast<double>(i) / (steps - 1);
    values[i] = eval(a);
    if (values[i] && (best < 0 || *values[i] < *values[best])) best = i;
  }
  if (best < 0) throw DegenerateMeanSpin("family_minimum: every grid point is degenerate");

  FamilyMinimum out;
  out.grid_argmin_a = static_cast<double>(best) / (steps - 1);
  out.grid_min_xi = *values[best];
  out.min_xi = out.grid_min_xi;
  out.argmin_a = out.grid_argmin_a;

  const int lo_i = (best > 0 && values[best - 1]) ? best - 1 : best;
  const int hi_i = (best + 1 < steps && values[best + 1]) ? best + 1 : best;
  if (lo_i == hi_i) return out;
  auto f = [&](double a) {
    const auto v = eval(a);
    return v ? *v : std::numeric_limits<double>::infinity();
  };
  const MinimumPoint p = golden_section_minimize(f, static_cast<double>(lo_i) / (steps - 1),
                                                 static_cast<double>(hi_i) / (steps - 1), tol);
  if (p.fx < out.min_xi) {
    out.min_xi = p.fx;
    out.argmin_a = p.x;
  }
  return out;
}

enum class ThresholdSide { low, high };

enum class ThresholdStatus {
  found,     ///< interior crossing of xi = 1
  boundary,  ///< xi < 1 all the way to a = 1; the crossing is a = 1 itself
  no_root,   ///< no crossing on the searched side
};

struct ThresholdResult {
  ThresholdStatus status = ThresholdStatus::no_root;
  std::optional<double> a_star;
  bool degenerate_at_zero = false;
};

/// Root of xi(a) = 1 on one side of the family minimum, bisected to 1e-10.
inline ThresholdResult squeezing_threshold(int n_qubits, int k, ThresholdSide side,
                                           double tol = 1e-10) {
  const FamilyParams base(n_qubits, k, 1.0);
  auto xi_at = [&](double a) { return xi_closed_form_family(base.with_a(a)).xi; };
  auto degenerate = [&](double a) { return !xi_at(a).has_value(); };

  ThresholdResult res;
  res.degenerate_at_zero = degenerate(0.0);
  const FamilyMinimum fm = family_minimum(n_qubits, k);
  if (!(fm.min_xi < 1.0)) return res;

  if (side == ThresholdSide::low) {
    double left = 0.0;
    if (res.degenerate_at_zero) {
      // first a where the mean spin is resolvable
      left = bisect(degenerate, 0.0, fm.argmin_a, 1e-15).second;
    }
    const auto xl = xi_at(left);
    if (!xl || *xl < 1.0) return res;  // squeezed right up to the edge
    auto unsqueezed = [&](double a) {
      const auto v = xi_at(a);
      return v && *v >= 1.0;
    };
    const auto [lo, hi] = bisect(unsqueezed, left, fm.argmin_a, tol);
    res.status = ThresholdStatus::found;
    res.a_star = 0.5 * (lo + hi);
    return res;
  }

  // High side: look for xi climbing back to 1 before a = 1.
  constexpr int kSamples = 2000;
  double prev = fm.argmin_a;
  for (int i = 1; i < kSamples; ++i) {
    const double a = fm.argmin_a + (1.0 - fm.argmin_a) * i / kSamples;
    const auto v = xi_at(a);
    if (v && *v >= 1.0) {
      auto squeezed = [&](double x) {
        const auto w = xi_at(x);
        return w && *w < 1.0;
      };
      const auto [lo, hi] = bisect(squeezed, prev, a, tol);
      res.status = ThresholdStatus::found;
      res.a_star = 0.5 * (lo + hi);
      return res;
    }
    prev = a;
  }
  res.status = ThresholdStatus::boundary;
  res.a_star = 1.0;
  return res;
}

}  // namespace squeezekit
