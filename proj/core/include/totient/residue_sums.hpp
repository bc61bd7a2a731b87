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
#include <optional>
#include <span>
#include <vector>

#include "totient/arith_sieves.hpp"
#include "totient/common.hpp"
#include "totient/summatory.hpp"

namespace totient {

/// The positive integers m with m = residue (mod modulus).
class ResidueClass {
 public:
  /// Throws DomainError unless modulus >= 1 and residue < modulus.
  ResidueClass(std::uint64_t modulus, std::uint64_t residue);

  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t residue() const { return residue_; }
  /// Smallest positive member.
  std::uint64_t first() const { return residue_ == 0 ? modulus_ : residue_; }
  bool contains(std::uint64_t m) const { return m % modulus_ == residue_; }

  friend bool operator==(const ResidueClass&, const ResidueClass&) = default;

 private:
  std::uint64_t modulus_;
  std::uint64_t residue_;
};

/// Sum of phi(m) over 1 <= m <= n in the class, by strided traversal.
Int128 residue_phi_sum(const ArithmeticTables& tables, const ResidueClass& cls, std::uint64_t n);

/// Class prefix sums P[0..upto], P[n] = residue_phi_sum(cls, n).
std::vector<std::int64_t> residue_prefix_sums(const ArithmeticTables& tables, const ResidueClass& cls,
                                              std::uint64_t upto);

struct EvenOddSums {
  Int128 even = 0;
  Int128 odd = 0;
};

EvenOddSums even_odd_sums(const ArithmeticTables& tables, std::uint64_t n);

/// Phi_e(n) - Phi(n/2) - Phi_e(n/2) with floors. Zero for every n.
Int128 lehmer_recursion_residual(const ArithmeticTables& tables, std::uint64_t n);

/// S(n) - (p-1) Phi(n/p) - S(n/p) for S the class 0 mod p, with floors.
/// Throws DomainError when p is not prime.
Int128 multiple_class_recursion_residual(const ArithmeticTables& tables, std::uint64_t p,
                                         std::uint64_t n);

/// Outcome of checking a residual for every n in [1, upto].
struct RecursionScan {
  std::uint64_t checked = 0;
  std::uint64_t nonzero = 0;
  std::optional<std::uint64_t> first_nonzero;
};

/// Bulk forms of the two residuals using prefix arrays: O(upto) per scan.
RecursionScan scan_lehmer_recursion(const ArithmeticTables& tables, std::uint64_t upto);
RecursionScan scan_multiple_class_recursion(const ArithmeticTables& tables, std::uint64_t p,
                                            std::uint64_t upto);

struct ConvergenceRow {
  std::uint64_t n = 0;
  Int128 sum = 0;
  double ratio = 0;  // sum / n^2
  std::optional<double> limit;
  std::optional<double> abs_err;
  std::optional<double> rel_err;
};

struct ConvergenceReport {
  ResidueClass cls{1, 0};
  std::optional<Rational> coefficient;  // limit = coefficient / pi^2
  std::vector<ConvergenceRow> rows;
};

/// Rows in ascending n. Checkpoints must be strictly increasing and within the
/// table. Limit fields are empty for moduli without a known class limit.
/// With threads > 1 checkpoints are summed concurrently; values are identical.
ConvergenceReport convergence_report(const ArithmeticTables& tables, const ResidueClass& cls,
                                     std::span<const std::uint64_t> checkpoints,
                                     unsigned threads = 1);

struct LehmerRatioRow {
  std::uint64_t n = 0;
  Int128 odd = 0;   // Phi_o(n)
  Int128 even = 0;  // Phi_e(n)
  double ratio = 0; // Phi_o / Phi_e
  Int128 odd_minus_twice_even = 0;
  /// sum_{m<=n} phi(p(2m-1)) / sum_{m<=n} phi(2pm), when a prime was supplied.
  std::optional<double> scaled_ratio;
};

/// Checkpoints with n < 2 (Phi_e = 0) are skipped. When `prime` is given the
/// table must reach 2 * prime * n for every checkpoint.
std::vector<LehmerRatioRow> lehmer_ratio_report(const ArithmeticTables& tables,
                                                std::span<const std::uint64_t> checkpoints,
                                                std::optional<std::uint64_t> prime = std::nullopt);

}  // namespace totient
