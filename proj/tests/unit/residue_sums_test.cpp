// Copyright 2026 The Totient Classes Authors
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

#include "totient/residue_sums.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "shared_tables.hpp"

namespace totient {
namespace {

using testing::million_tables;
using testing::small_tables;

// Brute-force class sum straight from the oracle phi.
std::uint64_t brute_class_sum(std::uint64_t k, std::uint64_t r, std::uint64_t n) {
  std::uint64_t s = 0;
  for (std::uint64_t m = 1; m <= n; ++m)
    if (m % k == r) s += oracle::phi(m);
  return s;
}

TEST(ResidueClass, Validation) {
  EXPECT_THROW(ResidueClass(0, 0), DomainError);
  EXPECT_THROW(ResidueClass(4, 4), DomainError);
  const ResidueClass c(6, 0);
  EXPECT_EQ(c.first(), 6u);
  EXPECT_EQ(ResidueClass(6, 5).first(), 5u);
  EXPECT_TRUE(c.contains(12));
  EXPECT_FALSE(c.contains(13));
}

TEST(ResiduePhiSum, Examples) {
  const auto& t = small_tables();
  EXPECT_EQ(brute_class_sum(2, 0, 10), 13u);
  EXPECT_EQ(residue_phi_sum(t, ResidueClass(2, 0), 10), 13);
  EXPECT_EQ(residue_phi_sum(t, ResidueClass(2, 1), 10), 19);
  EXPECT_EQ(residue_phi_sum(t, ResidueClass(1, 0), 10), 32);
  EXPECT_EQ(residue_phi_sum(t, ResidueClass(7, 3), 2), 0);
  EXPECT_THROW(residue_phi_sum(t, ResidueClass(2, 0), t.n_max() + 1), RangeError);
}

TEST(ResiduePhiSum, MatchesBruteForce) {
  const auto& t = small_tables();
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint64_t> modulus(1, 30);
  std::uniform_int_distribution<std::uint64_t> bound(1, 600);
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t k = modulus(rng);
    const std::uint64_t r = rng() % k;
    const std::uint64_t n = bound(rng);
    ASSERT_EQ(residue_phi_sum(t, ResidueClass(k, r), n), Int128(brute_class_sum(k, r, n)))
        << k << "," << r << "," << n;
  }
}

TEST(ResiduePhiSum, PartitionOfWholeLine) {
  const auto& t = small_tables();
  const auto whole = residue_prefix_sums(t, ResidueClass(1, 0), t.n_max());
  for (std::uint64_t k = 1; k <= 12; ++k) {
    std::vector<std::int64_t> total(t.n_max() + 1, 0);
    for (std::uint64_t r = 0; r < k; ++r) {
      const auto prefix = residue_prefix_sums(t, ResidueClass(k, r), t.n_max());
      for (std::uint64_t n = 0; n <= t.n_max(); ++n) total[n] += prefix[n];
    }
    ASSERT_EQ(total, whole) << "k=" << k;
  }
  for (std::uint64_t n : {1ull, 17ull, 99999ull, 100000ull})
    EXPECT_EQ(Int128(whole[n]), phi_sum_exact(t, n));
}

TEST(EvenOdd, Examples) {
  const auto& t = small_tables();
  auto s = even_odd_sums(t, 10);
  EXPECT_EQ(s.even, 13);
  EXPECT_EQ(s.odd, 19);
  s = even_odd_sums(t, 1);
  EXPECT_EQ(s.even, 0);
  EXPECT_EQ(s.odd, 1);
  s = even_odd_sums(t, 2);
  EXPECT_EQ(s.even, 1);
  EXPECT_EQ(s.odd, 1);
  for (std::uint64_t n : {3ull, 1000ull, 77777ull}) {
    s = even_odd_sums(t, n);
    EXPECT_EQ(s.even + s.odd, phi_sum_exact(t, n));
  }
}

TEST(LehmerRecursion, Examples) {
  const auto& t = million_tables();
  EXPECT_EQ(lehmer_recursion_residual(t, 10), 0);
  EXPECT_EQ(lehmer_recursion_residual(t, 1), 0);
  EXPECT_EQ(lehmer_recursion_residual(t, 1'000'000), 0);
}

TEST(MultipleClassRecursion, Examples) {
  const auto& t = small_tables();
  EXPECT_EQ(residue_phi_sum(t, ResidueClass(3, 0), 9), 10);
  EXPECT_EQ(multiple_class_recursion_residual(t, 3, 9), 0);
  EXPECT_EQ(multiple_class_recursion_residual(t, 2, 10), 0);
  for (std::uint64_t p : {2ull, 5ull, 13ull, 101ull})
    for (std::uint64_t n = 1; n < p; ++n) EXPECT_EQ(multiple_class_recursion_residual(t, p, n), 0);
  EXPECT_THROW(multiple_class_recursion_residual(t, 4, 10), DomainError);
  EXPECT_THROW(multiple_class_recursion_residual(t, 1, 10), DomainError);
  EXPECT_THROW(multiple_class_recursion_residual(t, 0, 10), DomainError);
}

TEST(Recursions, ExactForEveryN) {
  const auto& t = small_tables();
  const auto lehmer = scan_lehmer_recursion(t, t.n_max());
  EXPECT_EQ(lehmer.checked, t.n_max());
  EXPECT_EQ(lehmer.nonzero, 0u);
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    const auto scan = scan_multiple_class_recursion(t, p, t.n_max());
    EXPECT_EQ(scan.nonzero, 0u) << p;
    EXPECT_FALSE(scan.first_nonzero.has_value());
  }
  EXPECT_THROW(scan_multiple_class_recursion(t, 9, 100), DomainError);
}

TEST(Recursions, BulkScanAgreesWithPointResidual) {
  const auto& t = small_tables();
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const std::uint64_t n = 1 + rng() % t.n_max();
    EXPECT_EQ(lehmer_recursion_residual(t, n), 0);
    EXPECT_EQ(multiple_class_recursion_residual(t, 7, n), 0);
  }
}

TEST(Recursions, UnflooredReadingFailsForOddN) {
  // Phi_e(n) = Phi_o(n/2) + 2 Phi_e(n/2) with floors; check the first form too.
  const auto& t = small_tables();
  for (std::uint64_t n = 1; n <= 5000; ++n) {
    const auto whole = even_odd_sums(t, n);
    const auto half = n / 2 == 0 ? EvenOddSums{} : even_odd_sums(t, n / 2);
    ASSERT_EQ(whole.even, half.odd + 2 * half.even) << n;
  }
}

TEST(PowerOfTwoIdentities, FourMPlusTwoAndFourM) {
  const auto& t = million_tables();
  for (std::uint64_t m = 0; 4 * m + 2 <= t.n_max(); ++m) ASSERT_EQ(t.phi(4 * m + 2), t.phi(2 * m + 1)) << m;
  for (std::uint64_t m = 1; 4 * m <= t.n_max(); ++m) ASSERT_EQ(t.phi(4 * m), 2 * t.phi(2 * m)) << m;
}

TEST(Convergence, EvenOddExample) {
  const auto& t = million_tables();
  const std::vector<std::uint64_t> checkpoints = {10'000, 100'000, 1'000'000};
  const auto report = convergence_report(t, ResidueClass(2, 1), checkpoints);
  ASSERT_TRUE(report.coefficient.has_value());
  EXPECT_EQ(*report.coefficient, Rational(2));
  ASSERT_EQ(report.rows.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(report.rows[i].n, checkpoints[i]);
    EXPECT_EQ(report.rows[i].sum, residue_phi_sum(t, ResidueClass(2, 1), checkpoints[i]));
    EXPECT_NEAR(*report.rows[i].limit, 2.0 / (M_PI * M_PI), 1e-15);
    if (i > 0) {
      EXPECT_LT(*report.rows[i].rel_err, *report.rows[i - 1].rel_err);
      EXPECT_GE(report.rows[i].sum, report.rows[i - 1].sum);
    }
  }
  EXPECT_LT(*report.rows.back().rel_err, 1e-3);
}

TEST(Convergence, WholeLineAndMultiplesOfFive) {
  const auto& t = million_tables();
  const std::vector<std::uint64_t> at = {1'000'000};
  const auto whole = convergence_report(t, ResidueClass(1, 0), at);
  EXPECT_NEAR(whole.rows[0].ratio, 0.3039635509, 1e-5);
  const auto fives = convergence_report(t, ResidueClass(5, 0), at);
  EXPECT_EQ(*fives.coefficient, Rational(1, 2));
}

TEST(Convergence, UnsupportedModulusHasNoLimit) {
  const auto& t = million_tables();
  const std::vector<std::uint64_t> at = {1000, 5000};
  const auto report = convergence_report(t, ResidueClass(12, 5), at);
  EXPECT_FALSE(report.coefficient.has_value());
  ASSERT_EQ(report.rows.size(), 2u);
  EXPECT_FALSE(report.rows[0].limit.has_value());
  EXPECT_FALSE(report.rows[0].rel_err.has_value());
  EXPECT_GT(report.rows[1].ratio, 0.0);
}

TEST(Convergence, ThreadCountDoesNotChangeValues) {
  const auto& t = million_tables();
  const std::vector<std::uint64_t> checkpoints = {1000, 10'000, 100'000, 500'000, 1'000'000};
  const auto serial = convergence_report(t, ResidueClass(14, 9), checkpoints, 1);
  const auto parallel = convergence_report(t, ResidueClass(14, 9), checkpoints, 3);
  ASSERT_EQ(serial.rows.size(), parallel.rows.size());
  for (std::size_t i = 0; i < serial.rows.size(); ++i) {
    EXPECT_EQ(serial.rows[i].sum, parallel.rows[i].sum);
    EXPECT_EQ(serial.rows[i].ratio, parallel.rows[i].ratio);
    EXPECT_EQ(serial.rows[i].rel_err, parallel.rows[i].rel_err);
  }
}

TEST(Convergence, RejectsBadCheckpoints) {
  const auto& t = small_tables();
  const std::vector<std::uint64_t> unsorted = {100, 10};
  const std::vector<std::uint64_t> too_far = {t.n_max() + 1};
  const std::vector<std::uint64_t> zero = {0};
  EXPECT_THROW(convergence_report(t, ResidueClass(2, 0), unsorted), DomainError);
  EXPECT_THROW(convergence_report(t, ResidueClass(2, 0), too_far), RangeError);
  EXPECT_THROW(convergence_report(t, ResidueClass(2, 0), zero), DomainError);
}

TEST(Convergence, SymmetricClassesModTwoP) {
  const auto& t = million_tables();
  const std::vector<std::uint64_t> at = {1'000'000};
  for (std::uint64_t p : {3ull, 5ull, 7ull}) {
    const std::uint64_t k = 2 * p;
    for (std::uint64_t r = 1; r < p; ++r) {
      const double a = convergence_report(t, ResidueClass(k, r), at).rows[0].ratio;
      const double b = convergence_report(t, ResidueClass(k, k - r), at).rows[0].ratio;
      EXPECT_LT(std::fabs(a - b) / b, 1e-3) << "k=" << k << " r=" << r;
    }
  }
}

TEST(Convergence, ErrorShrinksFromTenThousandToMillion) {
  const auto& t = million_tables();
  const std::vector<std::uint64_t> at = {10'000, 1'000'000};
  for (std::uint64_t k : {1ull, 2ull, 3ull, 4ull, 5ull, 6ull, 7ull, 10ull, 14ull}) {
    for (std::uint64_t r = 0; r < k; ++r) {
      const auto report = convergence_report(t, ResidueClass(k, r), at);
      EXPECT_LT(*report.rows[1].abs_err, *report.rows[0].abs_err) << k << "," << r;
    }
  }
}

TEST(LehmerRatio, Examples) {
  const auto& t = million_tables();
  const std::vector<std::uint64_t> checkpoints = {1, 2, 1'000'000};
  const auto rows = lehmer_ratio_report(t, checkpoints);
  ASSERT_EQ(rows.size(), 2u);  // n = 1 skipped
  EXPECT_EQ(rows[0].n, 2u);
  EXPECT_DOUBLE_EQ(rows[0].ratio, 1.0);
  EXPECT_EQ(rows[0].odd_minus_twice_even, -1);
  EXPECT_NEAR(rows[1].ratio, 2.0, 1e-3);
  EXPECT_FALSE(rows[1].scaled_ratio.has_value());
}

TEST(LehmerRatio, ScaledByPrime) {
  const auto& t = million_tables();
  const std::vector<std::uint64_t> at = {100'000};
  const auto rows = lehmer_ratio_report(t, at, 3);
  ASSERT_TRUE(rows[0].scaled_ratio.has_value());
  EXPECT_NEAR(*rows[0].scaled_ratio, 2.0, 1e-2);

  const std::vector<std::uint64_t> too_far = {200'000};
  EXPECT_THROW(lehmer_ratio_report(t, too_far, 3), RangeError);
  EXPECT_THROW(lehmer_ratio_report(t, at, 6), DomainError);
}

}  // namespace
}  // namespace totient
