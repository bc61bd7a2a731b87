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

#include "totient/prime_classes.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "totient/common.hpp"

namespace totient {

namespace {

void require_covered(const ArithmeticTables& tables, std::uint64_t x, const char* what) {
  if (x == 0 || x > tables.n_max())
    throw RangeError(std::string(what) + ": x = " + std::to_string(x) + " outside [1, " +
                     std::to_string(tables.n_max()) + "]");
}

void require_reduced(std::uint64_t k, std::uint64_t ell) {
  if (k == 0) throw DomainError("modulus must be at least 1");
  if (ell >= k)
    throw DomainError("residue " + std::to_string(ell) + " must lie in [0, " + std::to_string(k) + ")");
  if (std::gcd(ell, k) != 1)
    throw DomainError("class " + std::to_string(ell) + " mod " + std::to_string(k) +
                      " is not reduced (gcd > 1) and contains at most one prime");
}

std::span<const std::uint32_t> primes_upto(const ArithmeticTables& tables, std::uint64_t x) {
  const auto primes = tables.primes();
  const auto end = std::upper_bound(primes.begin(), primes.end(), x);
  return primes.first(static_cast<std::size_t>(end - primes.begin()));
}

double log_over(std::uint64_t p) {
  const double v = static_cast<double>(p);
  return std::log(v) / v;
}

}  // namespace

std::uint64_t prime_count(const ArithmeticTables& tables, std::uint64_t x) {
  require_covered(tables, x, "prime_count");
  return primes_upto(tables, x).size();
}

std::uint64_t prime_count_in_class(const ArithmeticTables& tables, std::uint64_t x, std::uint64_t k,
                                   std::uint64_t ell) {
  require_reduced(k, ell);
  require_covered(tables, x, "prime_count_in_class");
  std::uint64_t count = 0;
  for (std::uint64_t p : primes_upto(tables, x))
    if (p % k == ell) ++count;
  return count;
}

double mertens_log_sum(const ArithmeticTables& tables, std::uint64_t x) {
  require_covered(tables, x, "mertens_log_sum");
  CompensatedSum sum;
  for (std::uint64_t p : primes_upto(tables, x)) sum += log_over(p);
  return sum.value();
}

double mangoldt_log_sum(const ArithmeticTables& tables, std::uint64_t x) {
  require_covered(tables, x, "mangoldt_log_sum");
  // Lambda(p^m)/p^m summed over prime powers, without touching the other n.
  CompensatedSum sum;
  for (std::uint64_t p : primes_upto(tables, x)) {
    const double log_p = std::log(static_cast<double>(p));
    for (std::uint64_t q = p;; q *= p) {
      sum += log_p / static_cast<double>(q);
      if (q > x / p) break;
    }
  }
  return sum.value();
}

double class_log_sum(const ArithmeticTables& tables, std::uint64_t x, std::uint64_t k,
                     std::uint64_t ell) {
  require_reduced(k, ell);
  require_covered(tables, x, "class_log_sum");
  CompensatedSum sum;
  for (std::uint64_t p : primes_upto(tables, x))
    if (p % k == ell) sum += log_over(p);
  return sum.value();
}

PrimeClassReport equidistribution_report(const ArithmeticTables& tables, std::uint64_t x,
                                         std::uint64_t k) {
  if (k == 0) throw DomainError("modulus must be at least 1");
  require_covered(tables, x, "equidistribution_report");

  PrimeClassReport report;
  report.x = x;
  report.k = k;

  // Slot per residue; non-reduced residues collect the primes dividing k.
  std::vector<std::uint64_t> counts(k, 0);
  std::vector<CompensatedSum> sums(k);
  CompensatedSum global;
  CompensatedSum dividing;
  for (std::uint64_t p : primes_upto(tables, x)) {
    const double term = log_over(p);
    global += term;
    const std::uint64_t r = p % k;
    if (std::gcd(r, k) == 1) {
      ++counts[r];
      sums[r] += term;
    } else {
      ++report.primes_dividing_k;
      dividing += term;
    }
    ++report.pi_x;
  }

  const double ln_x = std::log(static_cast<double>(x));
  const double share = ln_x / static_cast<double>(euler_phi(k));
  for (std::uint64_t ell = 0; ell < k; ++ell) {
    if (std::gcd(ell, k) != 1) continue;
    const double log_sum = sums[ell].value();
    report.rows.push_back({ell, counts[ell], log_sum, log_sum - share});
  }
  report.dividing_log_sum = dividing.value();
  report.global_log_sum = global.value();
  report.global_centered = report.global_log_sum - ln_x;
  return report;
}

}  // namespace totient
