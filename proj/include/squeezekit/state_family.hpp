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

// The canonical two-spinor family |D_{N-k,k}> in the Dicke basis, plus two
// independent constructions used to cross-check it: the Dicke expansion of a
// symmetrized product of two arbitrary spinors, and the explicit 2^N vector.

#pragma once

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "squeezekit/errors.hpp"
#include "squeezekit/quantum_core.hpp"

namespace squeezekit {

/// (N, k, a) labelling a canonical state of the family. b = sqrt(1 - a^2) is
/// derived on demand.
class FamilyParams {
 public:
  FamilyParams(int n_qubits, int k, double a) : n_(n_qubits), k_(k), a_(a) {
    if (n_qubits < 2 || n_qubits > kMaxDickeQubits) {
      throw DomainError("FamilyParams: N=" + std::to_string(n_qubits) + " outside [2, " +
                        std::to_string(kMaxDickeQubits) + "]");
    }
    if (k < 1 || k > n_qubits / 2) {
      throw DomainError("FamilyParams: k=" + std::to_string(k) + " outside [1, " +
                        std::to_string(n_qubits / 2) + "] for N=" + std::to_string(n_qubits));
    }
    if (!(a >= 0.0 && a <= 1.0)) {
      throw DomainError("FamilyParams: a=" + std::to_string(a) + " outside [0, 1]");
    }
  }

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] int k() const { return k_; }
  [[nodiscard]] double a() const { return a_; }
  [[nodiscard]] double b() const { return std::sqrt(std::max(0.0, 1.0 - a_ * a_)); }

  [[nodiscard]] FamilyParams with_a(double a) const { return {n_, k_, a}; }

 private:
  int n_;
  int k_;
  double a_;
};

/// a|0> + b e^{i phase}|1>.
class Spinor {
 public:
  Spinor(double amp0, double amp1, double phase = 0.0) : amp0_(amp0), amp1_(amp1), phase_(phase) {
    if (std::abs(amp0 * amp0 + amp1 * amp1 - 1.0) > 1e-12) {
      throw DomainError("Spinor: amp0^2 + amp1^2 must equal 1");
    }
  }

  static Spinor zero() { return {1.0, 0.0}; }
  static Spinor one() { return {0.0, 1.0}; }
  /// a|0> + sqrt(1 - a^2)|1>, the minority spinor of the canonical family.
  static Spinor canonical(double a) { return {a, std::sqrt(std::max(0.0, 1.0 - a * a))}; }

  [[nodiscard]] double amp0() const { return amp0_; }
  [[nodiscard]] double amp1() const { return amp1_; }
  [[nodiscard]] double phase() const { return phase_; }

  [[nodiscard]] std::complex<double> up() const { return amp0_; }
  [[nodiscard]] std::complex<double> down() const { return std::polar(amp1_, phase_); }

  [[nodiscard]] std::complex<double> overlap(const Spinor& other) const {
    return std::conj(up()) * other.up() + std::conj(down()) * other.down();
  }

 private:
  double amp0_;
  double amp1_;
  double phase_;
};

/// Normalized amplitudes over the Dicke ladder; entry r multiplies
/// |N/2, N/2 - r>.
template <typename Scalar>
class BasicDickeVector {
 public:
  using value_type = Scalar;

  BasicDickeVector(int n_qubits, std::vector<Scalar> amps) : n_(n_qubits), amps_(std::move(amps)) {
    if (n_qubits < 1) throw DomainError("DickeVector: N must be at least 1");
    if (amps_.size() != static_cast<std::size_t>(n_qubits) + 1) {
      throw DomainError("DickeVector: expected " + std::to_string(n_qubits + 1) +
                        " amplitudes, got " + std::to_string(amps_.size()));
    }
    if (std::abs(norm() - 1.0) > 1e-12) {
      throw DomainError("DickeVector: amplitudes are not normalized (norm " +
                        std::to_string(norm()) + ")");
    }
  }

  /// Rescales raw amplitudes to unit norm.
  static BasicDickeVector normalized(int n_qubits, std::vector<Scalar> raw) {
    double sq = 0.0;
    for (const auto& x : raw) sq += std::norm(x);
    if (!(sq > 0.0) || !std::isfinite(sq)) {
      throw DomainError("DickeVector: cannot normalize a zero or non-finite vector");
    }
    const double inv = 1.0 / std::sqrt(sq);
    for (auto& x : raw) x *= inv;
    return BasicDickeVector(n_qubits, std::move(raw));
  }

  /// Unit vector on Dicke index r.
  static BasicDickeVector basis(int n_qubits, int r) {
    if (r < 0 || r > n_qubits) throw DomainError("DickeVector::basis: r outside [0, N]");
    std::vector<Scalar> v(static_cast<std::size_t>(n_qubits) + 1, Scalar{0});
    v[static_cast<std::size_t>(r)] = Scalar{1};
    return BasicDickeVector(n_qubits, std::move(v));
  }

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] const std::vector<Scalar>& amps() const { return amps_; }
  [[nodiscard]] const Scalar& operator[](int r) const { return amps_[static_cast<std::size_t>(r)]; }

  [[nodiscard]] double norm() const {
    double sq = 0.0;
    for (const auto& x : amps_) sq += std::norm(x);
    return std::sqrt(sq);
  }

  [[nodiscard]] Eigen::VectorXcd to_eigen() const {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(amps_.size()));
    for (std::size_t r = 0; r < amps_.size(); ++r) v(static_cast<Eigen::Index>(r)) = amps_[r];
    return v;
  }

 private:
  int n_;
  std::vector<Scalar> amps_;
};

using DickeVector = BasicDickeVector<double>;
using ComplexDickeVector = BasicDickeVector<std::complex<double>>;

/// Drops the imaginary part, which must be below tol in every entry.
inline DickeVector real_part(const ComplexDickeVector& v, double tol = 1e-12) {
  std::vector<double> out;
  out.reserve(v.amps().size());
  for (const auto& x : v.amps()) {
    if (std::abs(x.imag()) > tol) {
      throw DomainError("real_part: imaginary residue " + std::to_string(x.imag()));
    }
    out.push_back(x.real());
  }
  return DickeVector::normalized(v.n(), std::move(out));
}

// ---------------------------------------------------------------------------
// Canonical family
// ---------------------------------------------------------------------------

/// beta_r ~ sqrt(N!(N-r)!/r!) a^{k-r} b^r / ((N-k)!(k-r)!) for r <= k, then
/// renormalized. Evaluated in log space so large N does not overflow.
inline DickeVector canonical_amplitudes(const FamilyParams& params) {
  const int n = params.n();
  const int k = params.k();
  const double a = params.a();
  const double b = params.b();
  const auto& lf = LogFactorialTable::shared();

  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  std::vector<double> logs(static_cast<std::size_t>(k) + 1, kNegInf);
  double peak = kNegInf;
  for (int r = 0; r <= k; ++r) {
    if ((k - r > 0 && a == 0.0) || (r > 0 && b == 0.0)) continue;
    double l = 0.5 * (lf(n) + lf(n - r) - lf(r)) - lf(n - k) - lf(k - r);
    if (k - r > 0) l += (k - r) * std::log(a);
    if (r > 0) l += r * std::log(b);
    logs[r] = l;
    peak = std::max(peak, l);
  }

  std::vector<double> amps(static_cast<std::size_t>(n) + 1, 0.0);
  for (int r = 0; r <= k; ++r) {
    if (logs[r] != kNegInf) amps[r] = std::exp(logs[r] - peak);
  }
  return DickeVector::normalized(n, std::move(amps));
}

enum class Coincident {
  allow,   ///< identical spinors return the product (coherent) state
  reject,  ///< identical spinors raise DegenerateSpinors
};

/// Dicke amplitudes of the normalized symmetrization of
/// eps1^{(N-k)} (x) eps2^{(k)}.
///
/// The amplitude on |N/2, N/2-r> is [t^r] (u0 + u1 t)^{N-k} (v0 + v1 t)^k
/// divided by sqrt(C(N, r)); terms are accumulated relative to the largest
/// log magnitude.
inline ComplexDickeVector two_spinor_expansion(const Spinor& eps1, const Spinor& eps2, int n_qubits,
                                               int k, Coincident policy = Coincident::allow) {
  if (n_qubits < 2 || n_qubits > kMaxDickeQubits) {
    throw DomainError("two_spinor_expansion: N=" + std::to_string(n_qubits) + " out of range");
  }
  if (k < 1 || k > n_qubits / 2) {
    throw DomainError("two_spinor_expansion: k=" + std::to_string(k) + " outside [1, N/2]");
  }
  if (policy == Coincident::reject && std::abs(eps1.overlap(eps2)) > 1.0 - 1e-12) {
    throw DegenerateSpinors("two_spinor_expansion: spinors coincide; the state is a product");
  }

  struct Factor {
    double log_mag;
    double arg;
    bool zero;
  };
  auto factor = [](std::complex<double> z) {
    const double m = std::abs(z);
    return Factor{m > 0.0 ? std::log(m) : 0.0, std::arg(z), m == 0.0};
  };
  const Factor u0 = factor(eps1.up());
  const Factor u1 = factor(eps1.down());
  const Factor v0 = factor(eps2.up());
  const Factor v1 = factor(eps2.down());
  const int n1 = n_qubits - k;

  // power p of a factor contributes p*log|z|; 0^0 = 1, 0^p = 0.
  auto pw = [](const Factor& f, int p, double& log_acc, double& arg_acc) {
    if (p == 0) return true;
    if (f.zero) return false;
    log_acc += p * f.log_mag;
    arg_acc += p * f.arg;
    return true;
  };

  struct Term {
    int r;
    double log_mag;
    double arg;
  };
  std::vector<Term> terms;
  double peak = -std::numeric_limits<double>::infinity();
  for (int r = 0; r <= n_qubits; ++r) {
    const double shift = -0.5 * log_binomial(n_qubits, r);
    // j ones drawn from the (N-k) copies of eps1, r-j from the k copies of eps2
    const int j_lo = std::max(0, r - k);
    const int j_hi = std::min(n1, r);
    for (int j = j_lo; j <= j_hi; ++j) {
      double l = log_binomial(n1, j) + log_binomial(k, r - j) + shift;
      double arg = 0.0;
      if (!pw(u0, n1 - j, l, arg) || !pw(u1, j, l, arg) || !pw(v0, k - (r - j), l, arg) ||
          !pw(v1, r - j, l, arg)) {
        continue;
      }
      terms.push_back({r, l, arg});
      peak = std::max(peak, l);
    }
  }

  std::vector<std::complex<double>> amps(static_cast<std::size_t>(n_qubits) + 1);
  for (const auto& t : terms) amps[t.r] += std::polar(std::exp(t.log_mag - peak), t.arg);
  return ComplexDickeVector::normalized(n_qubits, std::move(amps));
}

// ---------------------------------------------------------------------------
// Explicit 2^N representation
// ---------------------------------------------------------------------------

/// Pure state on N <= 14 qubits. Basis index bit (N-1-q) holds qubit q, so
/// index 0b01 for N = 2 is |0>|1>.
class FullState {
 public:
  FullState(int n_qubits, std::vector<std::complex<double>> amps)
      : n_(n_qubits), amps_(std::move(amps)) {
    if (n_qubits < 1 || n_qubits > kMaxTensorQubits) {
      throw ResourceError("FullState: N=" + std::to_string(n_qubits) + " exceeds tensor limit " +
                          std::to_string(kMaxTensorQubits));
    }
    if (amps_.size() != (std::size_t{1} << n_qubits)) {
      throw DomainError("FullState: expected 2^N amplitudes");
    }
    double sq = 0.0;
    for (const auto& x : amps_) sq += std::norm(x);
    if (std::abs(std::sqrt(sq) - 1.0) > 1e-12) throw DomainError("FullState: not normalized");
  }

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] std::size_t size() const { return amps_.size(); }
  [[nodiscard]] const std::vector<std::complex<double>>& amps() const { return amps_; }
  [[nodiscard]] std::complex<double> operator[](std::size_t i) const { return amps_[i]; }

  /// Bit mask of qubit q inside a basis index.
  [[nodiscard]] std::size_t mask(int q) const { return std::size_t{1} << (n_ - 1 - q); }

  /// Largest amplitude change under a transposition of qubits p and q.
  [[nodiscard]] double transposition_residual(int p, int q) const {
    const std::size_t mp = mask(p);
    const std::size_t mq = mask(q);
    double worst = 0.0;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
      const bool bp = (i & mp) != 0;
      const bool bq = (i & mq) != 0;
      if (bp == bq) continue;
      const std::size_t j = i ^ mp ^ mq;
      worst = std::max(worst, std::abs(amps_[i] - amps_[j]));
    }
    return worst;
  }

  [[nodiscard]] bool is_permutation_symmetric(double tol = 1e-12) const {
    for (int p = 0; p < n_; ++p) {
      for (int q = p + 1; q < n_; ++q) {
        if (transposition_residual(p, q) > tol) return false;
      }
    }
    return true;
  }

 private:
  int n_;
  std::vector<std::complex<double>> amps_;
};

/// Embeds |N/2, N/2 - r> as the normalized sum of all basis kets with r ones.
template <typename Scalar>
FullState full_tensor(const BasicDickeVector<Scalar>& state) {
  const int n = state.n();
  if (n > kMaxTensorQubits) {
    throw ResourceError("full_tensor: N=" + std::to_string(n) + " exceeds tensor limit " +
                        std::to_string(kMaxTensorQubits));
  }
  std::vector<double> inv_sqrt_binom(static_cast<std::size_t>(n) + 1);
  for (int r = 0; r <= n; ++r) inv_sqrt_binom[r] = std::exp(-0.5 * log_binomial(n, r));

  std::vector<std::complex<double>> amps(std::size_t{1} << n);
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const int r = std::popcount(i);
    amps[i] = std::complex<double>(state[r]) * inv_sqrt_binom[r];
  }
  return FullState(n, std::move(amps));
}

/// Inverse of full_tensor. Throws when the state has weight outside the
/// symmetric subspace.
inline ComplexDickeVector project_symmetric(const FullState& state, double tol = 1e-10) {
  const int n = state.n();
  std::vector<std::complex<double>> out(static_cast<std::size_t>(n) + 1);
  for (std::size_t i = 0; i < state.size(); ++i) out[std::popcount(i)] += state[i];
  double sq = 0.0;
  for (int r = 0; r <= n; ++r) {
    out[r] *= std::exp(-0.5 * log_binomial(n, r));
    sq += std::norm(out[r]);
  }
  if (std::abs(std::sqrt(sq) - 1.0) > tol) {
    throw DomainError("project_symmetric: state is not permutation symmetric");
  }
  return ComplexDickeVector::normalized(n, std::move(out));
}

}  // namespace squeezekit
