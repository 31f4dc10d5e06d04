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

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "squeezekit/state_family.hpp"

namespace sk = squeezekit;

namespace {

std::vector<double> a_grid21() {
  std::vector<double> g;
  for (int i = 0; i <= 20; ++i) g.push_back(i / 20.0);
  return g;
}

}  // namespace

TEST(FamilyParams, Validation) {
  EXPECT_NO_THROW(sk::FamilyParams(2, 1, 0.5));
  EXPECT_THROW(sk::FamilyParams(1, 1, 0.5), sk::DomainError);
  EXPECT_THROW(sk::FamilyParams(4, 0, 0.5), sk::DomainError);
  EXPECT_THROW(sk::FamilyParams(4, 3, 0.5), sk::DomainError);
  EXPECT_THROW(sk::FamilyParams(4, 1, -0.01), sk::DomainError);
  EXPECT_THROW(sk::FamilyParams(4, 1, 1.01), sk::DomainError);
  EXPECT_THROW(sk::FamilyParams(4, 1, std::nan("")), sk::DomainError);
  EXPECT_NEAR(sk::FamilyParams(4, 1, 0.6).b(), 0.8, 1e-15);
}

TEST(CanonicalAmplitudes, CoherentAndDickeEndpoints) {
  for (int n : {2, 5, 12, 300}) {
    for (int k = 1; k <= std::min(n / 2, 6); ++k) {
      const auto coherent = sk::canonical_amplitudes({n, k, 1.0});
      const auto dicke = sk::canonical_amplitudes({n, k, 0.0});
      for (int r = 0; r <= n; ++r) {
        EXPECT_EQ(coherent[r], r == 0 ? 1.0 : 0.0);
        EXPECT_EQ(dicke[r], r == k ? 1.0 : 0.0);
      }
    }
  }
}

TEST(CanonicalAmplitudes, FourQubitsOneExcitation) {
  // beta0 ~ N a, beta1 ~ sqrt(N (1 - a^2)) -> (2.4, 1.6) / sqrt(8.32)
  const auto v = sk::canonical_amplitudes({4, 1, 0.6});
  EXPECT_NEAR(v[0], 2.4 / std::sqrt(8.32), 1e-15);
  EXPECT_NEAR(v[1], 1.6 / std::sqrt(8.32), 1e-15);
  EXPECT_NEAR(v[0], 0.832050294337844, 1e-12);
  EXPECT_NEAR(v[1], 0.554700196225229, 1e-12);
  for (int r = 2; r <= 4; ++r) EXPECT_EQ(v[r], 0.0);
}

TEST(CanonicalAmplitudes, KOneNormalizationFactor) {
  for (int n : {2, 3, 10, 77}) {
    for (double a : a_grid21()) {
      const double norm = 1.0 / std::sqrt(n * n * a * a + n * (1.0 - a * a));
      const auto v = sk::canonical_amplitudes({n, 1, a});
      EXPECT_NEAR(v[0], norm * n * a, 1e-13);
      EXPECT_NEAR(v[1], norm * std::sqrt(n * (1.0 - a * a)), 1e-13);
    }
  }
}

TEST(CanonicalAmplitudes, KTwoPrintedCoefficients) {
  for (int n : {4, 5, 9, 40}) {
    for (double a : a_grid21()) {
      const double b2 = 1.0 - a * a;
      double c0 = n * (n - 1) / 2.0 * a * a;
      double c1 = std::sqrt(n) * (n - 1) * a * std::sqrt(b2);
      double c2 = std::sqrt(n * (n - 1) / 2.0) * b2;
      const double norm = std::sqrt(c0 * c0 + c1 * c1 + c2 * c2);
      const auto v = sk::canonical_amplitudes({n, 2, a});
      EXPECT_NEAR(v[0], c0 / norm, 1e-13);
      EXPECT_NEAR(v[1], c1 / norm, 1e-13);
      EXPECT_NEAR(v[2], c2 / norm, 1e-13);
    }
  }
}

TEST(CanonicalAmplitudes, SupportNonNegativityAndLargeN) {
  for (auto [n, k, a] : {std::tuple{10000, 37, 0.3}, {10000, 5000, 0.999}, {5000, 1, 1e-6}}) {
    const auto v = sk::canonical_amplitudes({n, k, a});
    EXPECT_NEAR(v.norm(), 1.0, 1e-12);
    for (int r = 0; r <= n; ++r) {
      ASSERT_GE(v[r], 0.0);
      if (r > k) {
        ASSERT_EQ(v[r], 0.0);
      }
    }
  }
}

TEST(CanonicalAmplitudes, Continuity) {
  const double da = 1e-4;
  for (auto [n, k] : {std::pair{8, 2}, {30, 7}, {100, 3}}) {
    for (double a = 0.05; a <= 0.95; a += 0.05) {
      const auto v0 = sk::canonical_amplitudes({n, k, a});
      const auto v1 = sk::canonical_amplitudes({n, k, a + da});
      for (int r = 0; r <= n; ++r) ASSERT_LE(std::abs(v1[r] - v0[r]), 10.0 * da);
    }
  }
}

TEST(TwoSpinorExpansion, IdenticalSpinorsGiveProductState) {
  for (int n : {2, 6, 13}) {
    const auto v = sk::two_spinor_expansion(sk::Spinor::zero(), sk::Spinor::zero(), n, 1);
    EXPECT_NEAR(std::abs(v[0]), 1.0, 1e-15);
    for (int r = 1; r <= n; ++r) EXPECT_EQ(std::abs(v[r]), 0.0);
  }
  EXPECT_THROW(sk::two_spinor_expansion(sk::Spinor::zero(), sk::Spinor::zero(), 6, 2,
                                        sk::Coincident::reject),
               sk::DegenerateSpinors);
  EXPECT_THROW(sk::two_spinor_expansion(sk::Spinor(0.6, 0.8, 0.3), sk::Spinor(0.6, 0.8, 0.3), 6, 2,
                                        sk::Coincident::reject),
               sk::DegenerateSpinors);
}

TEST(TwoSpinorExpansion, OrthogonalSpinorsGiveDickeState) {
  const auto v = sk::two_spinor_expansion(sk::Spinor::zero(), sk::Spinor::one(), 4, 2);
  for (int r = 0; r <= 4; ++r) EXPECT_NEAR(std::abs(v[r]), r == 2 ? 1.0 : 0.0, 1e-15);
}

TEST(TwoSpinorExpansion, EqualsCanonicalAmplitudes) {
  const auto direct = sk::real_part(
      sk::two_spinor_expansion(sk::Spinor::zero(), sk::Spinor::canonical(0.6), 4, 1));
  const auto canon = sk::canonical_amplitudes({4, 1, 0.6});
  for (int r = 0; r <= 4; ++r) EXPECT_NEAR(direct[r], canon[r], 1e-12);

  for (int n = 2; n <= 30; ++n) {
    for (int k = 1; k <= n / 2; ++k) {
      for (double a : a_grid21()) {
        const auto c = sk::canonical_amplitudes({n, k, a});
        const auto e = sk::two_spinor_expansion(sk::Spinor::zero(), sk::Spinor::canonical(a), n, k);
        for (int r = 0; r <= n; ++r) {
          ASSERT_NEAR(e[r].real(), c[r], 1e-10) << n << ' ' << k << ' ' << a;
          ASSERT_NEAR(e[r].imag(), 0.0, 1e-12);
        }
      }
    }
  }
}

// Against the explicit sum over placements in 2^N, with complex phases.
TEST(TwoSpinorExpansion, MatchesBruteForceSymmetrization) {
  std::mt19937 rng(20261016);
  std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);
  for (int n = 2; n <= 9; ++n) {
    for (int k = 1; k <= n / 2; ++k) {
      const double t1 = angle(rng), t2 = angle(rng);
      const sk::Spinor e1(std::cos(t1 / 2), std::sin(t1 / 2), 2.0 * angle(rng));
      const sk::Spinor e2(std::cos(t2 / 2), std::sin(t2 / 2), 2.0 * angle(rng));
      const auto ref =
          sk::oracle::symmetrized_two_spinor({e1.up(), e1.down()}, {e2.up(), e2.down()}, n, k);
      const auto full = sk::full_tensor(sk::two_spinor_expansion(e1, e2, n, k));
      // equal up to a global phase
      const auto ov = sk::oracle::inner(ref, full.amps());
      ASSERT_NEAR(std::abs(ov), 1.0, 1e-12) << "N=" << n << " k=" << k;
    }
  }
}

TEST(TwoSpinorExpansion, LargeNStaysFinite) {
  const auto v = sk::two_spinor_expansion(sk::Spinor(0.8, 0.6, 0.2), sk::Spinor(0.1, std::sqrt(0.99), 1.0),
                                          4000, 300);
  EXPECT_NEAR(v.norm(), 1.0, 1e-12);
}

TEST(FullTensor, SmallExamples) {
  const double s2 = 1.0 / std::sqrt(2.0);
  const auto bell = sk::full_tensor(sk::DickeVector(2, {0.0, 1.0, 0.0}));
  EXPECT_NEAR(std::abs(bell[0b00]), 0.0, 1e-15);
  EXPECT_NEAR(bell[0b01].real(), s2, 1e-15);
  EXPECT_NEAR(bell[0b10].real(), s2, 1e-15);
  EXPECT_NEAR(std::abs(bell[0b11]), 0.0, 1e-15);

  const auto w = sk::full_tensor(sk::DickeVector::basis(3, 1));
  for (std::size_t i = 0; i < 8; ++i) {
    const double expect = (i == 0b001 || i == 0b010 || i == 0b100) ? 1.0 / std::sqrt(3.0) : 0.0;
    EXPECT_NEAR(w[i].real(), expect, 1e-15);
  }
}

TEST(FullTensor, RoundTripAndExchangeSymmetry) {
  std::mt19937 rng(7);
  std::normal_distribution<double> g;
  for (int n = 1; n <= 12; ++n) {
    std::vector<double> raw(n + 1);
    for (auto& x : raw) x = g(rng);
    const auto v = sk::DickeVector::normalized(n, raw);
    const auto full = sk::full_tensor(v);
    const auto back = sk::project_symmetric(full);
    for (int r = 0; r <= n; ++r) {
      ASSERT_NEAR(back[r].real(), v[r], 1e-12);
      ASSERT_NEAR(back[r].imag(), 0.0, 1e-12);
    }
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) ASSERT_LE(full.transposition_residual(p, q), 1e-12);
  }
  const auto canon = sk::full_tensor(sk::canonical_amplitudes({4, 1, 0.6}));
  EXPECT_TRUE(canon.is_permutation_symmetric());
}

TEST(FullTensor, LimitsAndValidation) {
  EXPECT_THROW(sk::full_tensor(sk::DickeVector::basis(15, 0)), sk::ResourceError);
  EXPECT_NO_THROW(sk::full_tensor(sk::DickeVector::basis(14, 3)));
  std::vector<std::complex<double>> asym(4, 0.0);
  asym[0b01] = 1.0;
  const sk::FullState s(2, asym);
  EXPECT_FALSE(s.is_permutation_symmetric());
  EXPECT_THROW(sk::project_symmetric(s), sk::DomainError);
  EXPECT_THROW(sk::FullState(2, {1.0, 1.0, 0.0, 0.0}), sk::DomainError);
}

TEST(DickeVector, Validation) {
  EXPECT_THROW(sk::DickeVector(3, {1.0, 0.0}), sk::DomainError);
  EXPECT_THROW(sk::DickeVector(1, {1.0, 1.0}), sk::DomainError);
  EXPECT_THROW(sk::DickeVector::normalized(2, {0.0, 0.0, 0.0}), sk::DomainError);
  EXPECT_THROW(sk::Spinor(0.6, 0.6), sk::DomainError);
}
