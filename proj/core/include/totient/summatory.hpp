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

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "totient/arith_sieves.hpp"
#include "totient/common.hpp"

namespace totient {

/// Exact prefix sum of phi over [1, n]. Requires n <= tables.n_max().
Int128 phi_sum_exact(const ArithmeticTables& tables, std::uint64_t n);

/// Phi(G) = 1/2 * sum_{n<=G} mu(n) (q^2 + q), q = floor(G/n), evaluated in
/// O(sqrt G) blocks of equal quotient using Mertens-function differences.
///
/// Mertens-function values come from `tables` when they cover G. Otherwise mu
/// is sieved to about G^(2/3) and the remaining M(G/q) values are obtained
/// from M(x) = 1 - sum_{d=2}^{x} M(x/d), which needs G <= 10^13.
Int128 phi_sum_mertens(std::uint64_t G);
Int128 phi_sum_mertens(const ArithmeticTables& tables, std::uint64_t G);

/// Phi(n) = n(n+1)/2 - sum_{d=2}^{n} Phi(n/d), memoized on the distinct
/// quotients over a private sieve of size about n^(2/3). Throws RangeError
/// for n > 10^13.
Int128 phi_sum_sublinear(std::uint64_t n);

/// Ordered (n, Phi(n)) checkpoints.
struct SummatorySeries {
  std::vector<std::pair<std::uint64_t, Int128>> checkpoints;
};

/// One pass over the table. Checkpoints must be strictly increasing.
SummatorySeries summatory_series(const ArithmeticTables& tables,
                                 std::span<const std::uint64_t> checkpoints);

/// Mertens' explicit error estimate |Phi(G) - 3G^2/pi^2| < G(ln G / 2 + gamma / 2 + 5/8) + 1.
struct MertensErrorReport {
  std::uint64_t G = 0;
  Int128 phi_sum = 0;
  long double delta = 0;
  long double bound = 0;
  bool within_bound = false;
};

long double mertens_bound(std::uint64_t G);

/// Evaluated from an exact Phi(G). Uses the table when G <= n_max, the
/// sublinear route otherwise.
MertensErrorReport mertens_error_report(const ArithmeticTables& tables, std::uint64_t G);

/// Same report for a Phi(G) the caller already holds.
MertensErrorReport mertens_error_report_from_sum(std::uint64_t G, Int128 phi_sum);

struct MertensScanSummary {
  std::uint64_t checked = 0;
  std::uint64_t within = 0;
  std::vector<MertensErrorReport> failures;  // at most kMaxRecordedFailures
  long double worst_ratio = 0;              // max |delta| / bound
  std::uint64_t worst_G = 0;

  static constexpr std::size_t kMaxRecordedFailures = 32;
};

/// Checks every G in [1, gmax] in a single pass.
MertensScanSummary mertens_error_scan(const ArithmeticTables& tables, std::uint64_t gmax);

/// sum_{d<=n} mu(d)/d^2 with compensated summation.
double zeta_mobius_partial(const ArithmeticTables& tables, std::uint64_t n);

/// Reduced fraction with positive denominator.
class Rational {
 public:
  Rational(std::int64_t num = 0, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  long double value() const { return static_cast<long double>(num_) / den_; }
  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  std::int64_t num_;
  std::int64_t den_;
};

/// Exact c with  lim_{N->inf} (sum_{m<=N, m = r mod k} phi(m)) / N^2 = c / pi^2.
///
/// Supported moduli: 1, 2, 4, an odd prime p, and 2p. For k = 2p the class
/// written Phi(2pn - j) corresponds to r = (-j) mod 2p. Any other k throws
/// UnsupportedModulus; r >= k throws DomainError.
Rational class_limit_coefficient(std::uint64_t k, std::uint64_t r);

/// True when class_limit_coefficient accepts k.
bool has_class_limit(std::uint64_t k);

}  // namespace totient
