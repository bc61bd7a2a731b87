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
#include <vector>

#include "totient/arith_sieves.hpp"

namespace totient {

/// pi(x). Requires x <= n_max.
std::uint64_t prime_count(const ArithmeticTables& tables, std::uint64_t x);

/// Primes p <= x with p = ell (mod k). Requires 0 <= ell < k and gcd(ell, k) = 1;
/// a class sharing a factor with k holds at most one prime, so it is rejected
/// with DomainError.
std::uint64_t prime_count_in_class(const ArithmeticTables& tables, std::uint64_t x, std::uint64_t k,
                                   std::uint64_t ell);

/// sum_{p<=x} ln(p)/p.
double mertens_log_sum(const ArithmeticTables& tables, std::uint64_t x);

/// sum_{n<=x} Lambda(n)/n.
double mangoldt_log_sum(const ArithmeticTables& tables, std::uint64_t x);

/// sum_{p<=x, p = ell (mod k)} ln(p)/p. Same preconditions as prime_count_in_class.
double class_log_sum(const ArithmeticTables& tables, std::uint64_t x, std::uint64_t k,
                     std::uint64_t ell);

struct PrimeClassRow {
  std::uint64_t ell = 0;
  std::uint64_t pi_ell = 0;
  double log_sum = 0;
  double centered = 0;  // log_sum - ln(x)/phi(k)
};

struct PrimeClassReport {
  std::uint64_t x = 0;
  std::uint64_t k = 1;
  std::vector<PrimeClassRow> rows;  // one per reduced residue, ascending ell
  std::uint64_t pi_x = 0;
  /// Primes dividing k that are <= x; they sit outside every reduced class.
  std::uint64_t primes_dividing_k = 0;
  double dividing_log_sum = 0;
  double global_log_sum = 0;
  double global_centered = 0;  // global_log_sum - ln(x)
};

/// All classes of one modulus from a single pass over the primes <= x.
PrimeClassReport equidistribution_report(const ArithmeticTables& tables, std::uint64_t x,
                                         std::uint64_t k);

}  // namespace totient
