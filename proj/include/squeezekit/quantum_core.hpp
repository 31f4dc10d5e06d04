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

// Angular-momentum primitives shared by the rest of the library: the
// stretched-coupling Clebsch-Gordan rows that split a spin-N/2 Dicke ket into
// an (N-2)-qubit part and a two-qubit triplet, the collective spin operators
// in the Dicke basis, and log-space combinatorics.
//
// Dicke basis convention: index r = 0..N labels |N/2, N/2 - r>, the symmetric
// state with r qubits in |1>.

#pragma once

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "squeezekit/errors.hpp"

namespace squeezekit {

/// Largest qubit count accepted for Dicke-basis (N+1 dimensional) work.
inline constexpr int kMaxDickeQubits = 10000;
/// Largest qubit count accepted for anything that touches the 2^N space.
inline constexpr int kMaxTensorQubits = 14;
/// Largest Dicke dimension for which dense collective matrices are built.
inline constexpr int kMaxDenseDim = 2049;

inline constexpr double kInvSqrt2 = 0.5 * std::numbers::sqrt2;

// ---------------------------------------------------------------------------
// Clebsch-Gordan rows
// ---------------------------------------------------------------------------

/// C(N/2-1, 1, N/2; m-m2, m2, m) for m = N/2 - r and m2 = +1, 0, -1.
/// Entries are non-negative and the squares sum to one.
struct CGTriple {
  double c_plus = 0.0;
  double c_zero = 0.0;
  double c_minus = 0.0;

  /// Coefficient for triplet projection m2 in {+1, 0, -1}.
  [[nodiscard]] double operator[](int m2) const {
    switch (m2) {
      case 1:
        return c_plus;
      case 0:
        return c_zero;
      case -1:
        return c_minus;
      default:
        throw DomainError("CGTriple: m2 must be +1, 0 or -1");
    }
  }
};

inline CGTriple cg_triple(int n_qubits, int r) {
  if (n_qubits < 2) {
    throw DomainError("cg_triple: N must be at least 2, got " + std::to_string(n_qubits));
  }
  if (r < 0 || r > n_qubits) {
    throw DomainError("cg_triple: r=" + std::to_string(r) + " outside [0, " +
                      std::to_string(n_qubits) + "]");
  }
  const double n = n_qubits;
  const double x = r;
  const double denom = n * (n - 1.0);
  return CGTriple{std::sqrt((n - x) * (n - x - 1.0) / denom),
                  std::sqrt(2.0 * x * (n - x) / denom),
                  std::sqrt(x * (x - 1.0) / denom)};
}

// ---------------------------------------------------------------------------
// Log-space combinatorics
// ---------------------------------------------------------------------------

/// ln(n!) for n = 0..max_n.
class LogFactorialTable {
 public:
  explicit LogFactorialTable(int max_n) {
    if (max_n < 0) throw DomainError("LogFactorialTable: negative size");
    values_.resize(static_cast<std::size_t>(max_n) + 1);
    values_[0] = 0.0;
    for (int n = 1; n <= max_n; ++n) {
      values_[n] = n < 2 ? 0.0 : std::lgamma(static_cast<double>(n) + 1.0);
    }
  }

  /// Process-wide table covering n <= kMaxDickeQubits.
  static const LogFactorialTable& shared() {
    static const LogFactorialTable table(kMaxDickeQubits);
    return table;
  }

  [[nodiscard]] int max_n() const { return static_cast<int>(values_.size()) - 1; }

  [[nodiscard]] double operator()(int n) const {
    if (n < 0 || n > max_n()) {
      throw DomainError("LogFactorialTable: n=" + std::to_string(n) + " outside table");
    }
    return values_[static_cast<std::size_t>(n)];
  }

  [[nodiscard]] const std::vector<double>& values() const { return values_; }

 private:
  std::vector<double> values_;
};

/// ln C(n, k).
inline double log_binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) {
    throw DomainError("log_binomial: need 0 <= k <= n, got n=" + std::to_string(n) +
                      " k=" + std::to_string(k));
  }
  if (n > kMaxDickeQubits) {
    throw DomainError("log_binomial: n=" + std::to_string(n) + " exceeds N_max");
  }
  if (n <= 170) {
    // Multiplicative form stays well inside double range for n <= 170.
    const int kk = std::min(k, n - k);
    double c = 1.0;
    for (int i = 1; i <= kk; ++i) {
      c = c * static_cast<double>(n - kk + i) / static_cast<double>(i);
    }
    return std::log(c);
  }
  const auto& lf = LogFactorialTable::shared();
  return lf(n) - lf(k) - lf(n - k);
}

// ---------------------------------------------------------------------------
// Collective spin operators
// ---------------------------------------------------------------------------

enum class Axis { x, y, z };

/// Jx, Jy, Jz for spin j = N/2 in the Dicke basis.
///
/// Stored in banded form: Jz is diagonal and J+ has one super-diagonal, so
/// application to a vector is O(N). Dense matrices are materialized on demand.
class CollectiveSpinSet {
 public:
  using Matrix = Eigen::MatrixXcd;
  using Vector = Eigen::VectorXcd;

  explicit CollectiveSpinSet(int n_qubits, int max_qubits = kMaxDickeQubits) : n_(n_qubits) {
    if (n_qubits < 1) throw DomainError("collective_spin: N must be at least 1");
    if (n_qubits > max_qubits) {
      throw ResourceError("collective_spin: N=" + std::to_string(n_qubits) +
                          " exceeds N_max=" + std::to_string(max_qubits));
    }
    raise_.resize(static_cast<std::size_t>(n_qubits));
    for (int r = 1; r <= n_qubits; ++r) {
      raise_[r - 1] = std::sqrt(static_cast<double>(r) * static_cast<double>(n_qubits - r + 1));
    }
  }

  [[nodiscard]] int qubits() const { return n_; }
  [[nodiscard]] int dim() const { return n_ + 1; }
  [[nodiscard]] double spin() const { return 0.5 * n_; }

  /// <r-1| J+ |r> for r = 1..N, stored at index r-1.
  [[nodiscard]] const std::vector<double>& raising() const { return raise_; }

  /// Diagonal entry of Jz at Dicke index r.
  [[nodiscard]] double jz_diag(int r) const { return 0.5 * n_ - r; }

  [[nodiscard]] Matrix jx() const { return dense(Axis::x); }
  [[nodiscard]] Matrix jy() const { return dense(Axis::y); }
  [[nodiscard]] Matrix jz() const { return dense(Axis::z); }

  [[nodiscard]] Matrix dense(Axis axis) const {
    if (dim() > kMaxDenseDim) {
      throw ResourceError("CollectiveSpinSet: dense matrices limited to dimension " +
                          std::to_string(kMaxDenseDim));
    }
    Matrix m = Matrix::Zero(dim(), dim());
    const std::complex<double> i{0.0, 1.0};
    for (int r = 0; r < dim(); ++r) {
      if (axis == Axis::z) m(r, r) = jz_diag(r);
      if (r == 0) continue;
      const double c = 0.5 * raise_[r - 1];
      if (axis == Axis::x) {
        m(r - 1, r) = c;
        m(r, r - 1) = c;
      } else if (axis == Axis::y) {
        m(r - 1, r) = -i * c;
        m(r, r - 1) = i * c;
      }
    }
    return m;
  }

  /// J_axis * v without forming the matrix.
  [[nodiscard]] Vector apply(Axis axis, const Vector& v) const {
    check_dim(v);
    Vector out = Vector::Zero(dim());
    const std::complex<double> i{0.0, 1.0};
    for (int r = 0; r < dim(); ++r) {
      if (axis == Axis::z) {
        out(r) = jz_diag(r) * v(r);
        continue;
      }
      // (J+ v)_r = raise[r] v_{r+1}, (J- v)_r = raise[r-1] v_{r-1}
      const std::complex<double> up = r + 1 < dim() ? raise_[r] * v(r + 1) : 0.0;
      const std::complex<double> down = r > 0 ? raise_[r - 1] * v(r - 1) : 0.0;
      out(r) = axis == Axis::x ? 0.5 * (up + down) : -0.5 * i * (up - down);
    }
    return out;
  }

  /// n . J applied to v for a real direction n.
  [[nodiscard]] Vector apply(const Eigen::Vector3d& n, const Vector& v) const {
    return n.x() * apply(Axis::x, v) + n.y() * apply(Axis::y, v) + n.z() * apply(Axis::z, v);
  }

  /// (<Jx>, <Jy>, <Jz>) for a normalized state v.
  [[nodiscard]] Eigen::Vector3d expectation(const Vector& v) const {
    return {v.dot(apply(Axis::x, v)).real(), v.dot(apply(Axis::y, v)).real(),
            v.dot(apply(Axis::z, v)).real()};
  }

 private:
  void check_dim(const Vector& v) const {
    if (v.size() != dim()) {
      throw DomainError("CollectiveSpinSet: vector length " + std::to_string(v.size()) +
                        " does not match dimension " + std::to_string(dim()));
    }
  }

  int n_;
  std::vector<double> raise_;
};

inline CollectiveSpinSet collective_spin(int n_qubits, int max_qubits = kMaxDickeQubits) {
  return CollectiveSpinSet(n_qubits, max_qubits);
}

}  // namespace squeezekit
