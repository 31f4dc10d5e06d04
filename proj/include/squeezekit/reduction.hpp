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

// Two-qubit reduced density matrices of symmetric N-qubit states.
//
// Exchange symmetry forces the reduced matrix of any qubit pair, in the basis
// |00>, |01>, |10>, |11>, into the real template
//
//     | A B B C |
//     | B D D E |
//     | B D D E |
//     | C E E F |
//
// Three routes produce A..F: the family sums over canonical amplitudes and
// Clebsch-Gordan rows, a Dicke-basis trace valid for any real symmetric
// state, and an explicit partial trace over the 2^N vector.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <string>
#include <utility>

#include "squeezekit/errors.hpp"
#include "squeezekit/quantum_core.hpp"
#include "squeezekit/state_family.hpp"

namespace squeezekit {

struct TwoQubitDensity {
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
  double D = 0.0;
  double E = 0.0;
  double F = 0.0;

  [[nodiscard]] double trace() const { return A + 2.0 * D + F; }

  [[nodiscard]] Eigen::Matrix4d matrix() const {
    Eigen::Matrix4d m;
    m << A, B, B, C,  //
        B, D, D, E,   //
        B, D, D, E,   //
        C, E, E, F;
    return m;
  }

  [[nodiscard]] double min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> solver(matrix(), Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
  }

  [[nodiscard]] bool is_psd(double floor = -1e-10) const { return min_eigenvalue() >= floor; }

  [[nodiscard]] std::array<double, 6> elements() const { return {A, B, C, D, E, F}; }

  /// Largest element-wise difference.
  [[nodiscard]] double max_abs_diff(const TwoQubitDensity& o) const {
    const auto x = elements();
    const auto y = o.elements();
    double worst = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) worst = std::max(worst, std::abs(x[i] - y[i]));
    return worst;
  }
};

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

/// Family sums over beta_r (r <= k) and the Clebsch-Gordan rows.
inline TwoQubitDensity reduced_closed_form(const FamilyParams& params) {
  const int n = params.n();
  const int k = params.k();
  const DickeVector state = canonical_amplitudes(params);
  const auto beta = [&](int r) { return state[r]; };
  std::vector<CGTriple> c;
  c.reserve(static_cast<std::size_t>(k) + 1);
  for (int r = 0; r <= k; ++r) c.push_back(cg_triple(n, r));

  TwoQubitDensity rho;
  for (int r = 0; r <= k; ++r) {
    const double t = beta(r) * c[r].c_plus;
    rho.A += t * t;
  }
  for (int r = 0; r + 1 <= k; ++r) {
    rho.B += beta(r) * beta(r + 1) * c[r].c_plus * c[r + 1].c_zero;
    const double t = beta(r + 1) * c[r + 1].c_zero;
    rho.D += t * t;
  }
  for (int r = 0; r + 2 <= k; ++r) {
    rho.C += beta(r) * beta(r + 2) * c[r].c_plus * c[r + 2].c_minus;
    rho.E += beta(r + 1) * beta(r + 2) * c[r + 1].c_zero * c[r + 2].c_minus;
    const double t = beta(r + 2) * c[r + 2].c_minus;
    rho.F += t * t;
  }
  rho.B *= kInvSqrt2;
  rho.D *= 0.5;
  rho.E *= kInvSqrt2;
  return rho;
}

/// Explicit rational expressions for k = 1; C = E = F = 0.
inline TwoQubitDensity reduced_k1(const FamilyParams& params) {
  if (params.k() != 1) throw DomainError("reduced_k1: requires k = 1");
  const double n = params.n();
  const double a2 = params.a() * params.a();
  const double b2 = 1.0 - a2;
  const double denom = n * n * a2 + n * b2;
  TwoQubitDensity rho;
  rho.A = (n * n * a2 + (n - 2.0) * b2) / denom;
  rho.B = params.a() * std::sqrt(b2) / (1.0 + a2 * (n - 1.0));
  rho.D = b2 / denom;
  return rho;
}

/// Explicit k = 2 amplitudes and Clebsch-Gordan values.
inline TwoQubitDensity reduced_k2(const FamilyParams& params) {
  if (params.k() != 2) throw DomainError("reduced_k2: requires k = 2");
  const double n = params.n();
  const double a = params.a();
  const double b2 = 1.0 - a * a;

  double b0 = n * (n - 1.0) / 2.0 * a * a;
  double b1 = std::sqrt(n) * (n - 1.0) * a * std::sqrt(b2);
  double b2c = std::sqrt(n * (n - 1.0) / 2.0) * b2;
  const double norm = std::sqrt(b0 * b0 + b1 * b1 + b2c * b2c);
  b0 /= norm;
  b1 /= norm;
  b2c /= norm;

  const double nn1 = n * (n - 1.0);
  const double c1_1 = std::sqrt((n - 2.0) / n);
  const double c1_0 = std::sqrt(2.0 / n);
  const double c2_1 = std::sqrt((n - 3.0) * (n - 2.0) / nn1);
  const double c2_0 = 2.0 * std::sqrt((n - 2.0) / nn1);
  const double c2_m = std::sqrt(2.0 / nn1);

  TwoQubitDensity rho;
  rho.A = b0 * b0 + (b1 * c1_1) * (b1 * c1_1) + (b2c * c2_1) * (b2c * c2_1);
  rho.B = (b0 * b1 * c1_0 + b1 * b2c * c1_1 * c2_0) * kInvSqrt2;
  rho.C = b0 * b2c * c2_m;
  rho.D = ((b1 * c1_0) * (b1 * c1_0) + (b2c * c2_0) * (b2c * c2_0)) / 2.0;
  rho.E = b1 * b2c * c1_0 * c2_m * kInvSqrt2;
  rho.F = (b2c * c2_m) * (b2c * c2_m);
  return rho;
}

// ---------------------------------------------------------------------------
// Dicke-basis trace
// ---------------------------------------------------------------------------

/// Reduced matrix of an arbitrary real symmetric state.
///
/// Each Dicke ket splits as sum_{m2} c^{(r)}_{m2} |N/2-1, N/2-r-m2> |1, m2>;
/// tracing the (N-2)-qubit factor pairs r with r' = r + m2 - m2'. The triplet
/// block is then rewritten in the computational basis through
/// |1,1> = |00>, |1,0> = (|01> + |10>)/sqrt2, |1,-1> = |11>.
inline TwoQubitDensity reduced_dicke_trace(const DickeVector& state) {
  const int n = state.n();
  if (n < 2) throw DomainError("reduced_dicke_trace: N must be at least 2");
  std::vector<CGTriple> c;
  c.reserve(static_cast<std::size_t>(n) + 1);
  for (int r = 0; r <= n; ++r) c.push_back(cg_triple(n, r));

  // triplet[i][j] with i, j indexing m2 = +1, 0, -1
  std::array<std::array<double, 3>, 3> triplet{};
  constexpr std::array<int, 3> kM2 = {1, 0, -1};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double sum = 0.0;
      for (int r = 0; r <= n; ++r) {
        const int rp = r + kM2[i] - kM2[j];
        if (rp < 0 || rp > n) continue;
        sum += state[r] * state[rp] * c[r][kM2[i]] * c[rp][kM2[j]];
      }
      triplet[i][j] = sum;
    }
  }

  TwoQubitDensity rho;
  rho.A = triplet[0][0];
  rho.B = triplet[0][1] * kInvSqrt2;
  rho.C = triplet[0][2];
  rho.D = triplet[1][1] * 0.5;
  rho.E = triplet[1][2] * kInvSqrt2;
  rho.F = triplet[2][2];
  return rho;
}

// ---------------------------------------------------------------------------
// Brute-force partial trace
// ---------------------------------------------------------------------------

/// Full 4x4 partial trace keeping qubits (first, second), before any template
/// fitting. Row/column index is 2*bit(first) + bit(second).
inline Eigen::Matrix4cd partial_trace_pair(const FullState& state, int first, int second) {
  const int n = state.n();
  if (n < 2) throw DomainError("partial_trace_pair: N must be at least 2");
  if (first < 0 || second < 0 || first >= n || second >= n || first == second) {
    throw DomainError("partial_trace_pair: invalid qubit pair (" + std::to_string(first) + ", " +
                      std::to_string(second) + ")");
  }
  const std::size_t mf = state.mask(first);
  const std::size_t ms = state.mask(second);
  const std::array<std::size_t, 4> offset = {0, ms, mf, mf | ms};

  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  for (std::size_t base = 0; base < state.size(); ++base) {
    if ((base & (mf | ms)) != 0) continue;
    for (int x = 0; x < 4; ++x) {
      const std::complex<double> ax = state[base | offset[x]];
      for (int y = 0; y < 4; ++y) rho(x, y) += ax * std::conj(state[base | offset[y]]);
    }
  }
  return rho;
}

/// Literal partial trace over every qubit except the pair. Throws
/// TemplateViolation on an imaginary residue or an off-template entry above
/// 1e-12.
inline TwoQubitDensity reduced_bruteforce(const FullState& state, std::pair<int, int> pair = {0, 1}) {
  const Eigen::Matrix4cd rho = partial_trace_pair(state, pair.first, pair.second);
  const double imag = rho.imag().cwiseAbs().maxCoeff();
  if (imag > 1e-12) {
    throw TemplateViolation("reduced_bruteforce: imaginary residue " + std::to_string(imag));
  }
  const Eigen::Matrix4d re = rho.real();
  TwoQubitDensity out{re(0, 0), re(0, 1), re(0, 3), re(1, 1), re(1, 3), re(3, 3)};
  const double residual = (re - out.matrix()).cwiseAbs().maxCoeff();
  if (residual > 1e-12) {
    throw TemplateViolation("reduced_bruteforce: off-template residual " + std::to_string(residual) +
                            "; state is not exchange symmetric");
  }
  return out;
}

}  // namespace squeezekit
