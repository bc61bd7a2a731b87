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

#include <cmath>
#include <future>
#include <string>

namespace totient {

namespace {

void require_covered(const ArithmeticTables& tables, std::uint64_t n, const char* what) {
  if (n > tables.n_max())
    throw RangeError(std::string(what) + ": n = " + std::to_string(n) + " exceeds table n_max " +
                     std::to_string(tables.n_max()));
}

void require_prime(const ArithmeticTables& tables, std::uint64_t p) {
  const bool prime = p >= 2 && (p <= tables.n_max() ? tables.is_prime(p) : is_prime_trial(p));
  if (!prime) throw DomainError("p = " + std::to_string(p) + " is not prime");
}

std::int64_t strided_sum(std::span<const std::uint32_t> phi, std::uint64_t first, std::uint64_t step,
                         std::uint64_t n) {
  // phi < 2^32 and at most 2^32 terms: the sum stays below 2^64, and for
  // n < 2^32 it stays below Phi(n) < 2^63.
  std::uint64_t sum = 0;
  for (std::uint64_t m = first; m <= n; m += step) sum += phi[m];
  return static_cast<std::int64_t>(sum);
}

std::vector<std::int64_t> phi_prefix(const ArithmeticTables& tables, std::uint64_t upto) {
  return residue_prefix_sums(tables, ResidueClass(1, 0), upto);
}

}  // namespace

ResidueClass::ResidueClass(std::uint64_t modulus, std::uint64_t residue)
    : modulus_(modulus), residue_(residue) {
  if (modulus == 0) throw DomainError("residue class: modulus must be at least 1");
  if (residue >= modulus)
    throw DomainError("residue class: residue " + std::to_string(residue) + " must lie in [0, " +
                      std::to_string(modulus) + ")");
}

Int128 residue_phi_sum(const ArithmeticTables& tables, const ResidueClass& cls, std::uint64_t n) {
  require_covered(tables, n, "residue_phi_sum");
  return strided_sum(tables.phi_values(), cls.first(), cls.modulus(), n);
}

std::vector<std::int64_t> residue_prefix_sums(const ArithmeticTables& tables, const ResidueClass& cls,
                                              std::uint64_t upto) {
  require_covered(tables, upto, "residue_prefix_sums");
  const auto phi = tables.phi_values();
  std::vector<std::int64_t> prefix(upto + 1, 0);
  std::uint64_t next = cls.first();
  for (std::uint64_t n = 1; n <= upto; ++n) {
    prefix[n] = prefix[n - 1];
    if (n == next) {
      prefix[n] += phi[n];
      next += cls.modulus();
    }
  }
  return prefix;
}

EvenOddSums even_odd_sums(const ArithmeticTables& tables, std::uint64_t n) {
  require_covered(tables, n, "even_odd_sums");
  const auto phi = tables.phi_values();
  return {strided_sum(phi, 2, 2, n), strided_sum(phi, 1, 2, n)};
}

Int128 lehmer_recursion_residual(const ArithmeticTables& tables, std::uint64_t n) {
  require_covered(tables, n, "lehmer_recursion_residual");
  const ResidueClass even(2, 0);
  const std::uint64_t half = n / 2;
  const Int128 whole_half = half == 0 ? 0 : phi_sum_exact(tables, half);
  return residue_phi_sum(tables, even, n) - whole_half - residue_phi_sum(tables, even, half);
}

Int128 multiple_class_recursion_residual(const ArithmeticTables& tables, std::uint64_t p,
                                         std::uint64_t n) {
  require_prime(tables, p);
  require_covered(tables, n, "multiple_class_recursion_residual");
  const ResidueClass multiples(p, 0);
  const std::uint64_t reduced = n / p;
  const Int128 whole = reduced == 0 ? 0 : phi_sum_exact(tables, reduced);
  return residue_phi_sum(tables, multiples, n) - checked_mul(p - 1, whole) -
         residue_phi_sum(tables, multiples, reduced);
}

RecursionScan scan_lehmer_recursion(const ArithmeticTables& tables, std::uint64_t upto) {
  const auto whole = phi_prefix(tables, upto);
  const auto even = residue_prefix_sums(tables, ResidueClass(2, 0), upto);
  RecursionScan scan;
  for (std::uint64_t n = 1; n <= upto; ++n) {
    ++scan.checked;
    const Int128 residual = Int128{even[n]} - whole[n / 2] - even[n / 2];
    if (residual != 0) {
      ++scan.nonzero;
      if (!scan.first_nonzero) scan.first_nonzero = n;
    }
  }
  return scan;
}

RecursionScan scan_multiple_class_recursion(const ArithmeticTables& tables, std::uint64_t p,
                                            std::uint64_t upto) {
  require_prime(tables, p);
  const auto whole = phi_prefix(tables, upto);
  const auto multiples = residue_prefix_sums(tables, ResidueClass(p, 0), upto);
  RecursionScan scan;
  for (std::uint64_t n = 1; n <= upto; ++n) {
    ++scan.checked;
    const Int128 residual =
        Int128{multiples[n]} - Int128(p - 1) * whole[n / p] - multiples[n / p];
    if (residual != 0) {
      ++scan.nonzero;
      if (!scan.first_nonzero) scan.first_nonzero = n;
    }
  }
  return scan;
}

ConvergenceReport convergence_report(const ArithmeticTables& tables, const ResidueClass& cls,
                                     std::span<const std::uint64_t> checkpoints, unsigned threads) {
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    if (checkpoints[i] == 0) throw DomainError("convergence_report: checkpoints must be positive");
    if (i > 0 && checkpoints[i] <= checkpoints[i - 1])
      throw DomainError("convergence_report: checkpoints must be strictly increasing");
  }
  if (!checkpoints.empty()) require_covered(tables, checkpoints.back(), "convergence_report");

  ConvergenceReport report;
  report.cls = cls;
  if (has_class_limit(cls.modulus())) report.coefficient = class_limit_coefficient(cls.modulus(), cls.residue());

  std::vector<Int128> sums(checkpoints.size());
  const auto phi = tables.phi_values();
  if (threads <= 1 || checkpoints.size() <= 1) {
    // Single strided pass, resuming where the previous checkpoint stopped.
    std::uint64_t m = cls.first();
    std::uint64_t running = 0;
    for (std::size_t i = 0; i < checkpoints.size(); ++i) {
      for (; m <= checkpoints[i]; m += cls.modulus()) running += phi[m];
      sums[i] = running;
    }
  } else {
    for (std::size_t start = 0; start < checkpoints.size(); start += threads) {
      std::vector<std::future<Int128>> batch;
      for (std::size_t i = start; i < std::min<std::size_t>(checkpoints.size(), start + threads); ++i)
        batch.push_back(std::async(std::launch::async, [&, i] { return residue_phi_sum(tables, cls, checkpoints[i]); }));
      for (std::size_t j = 0; j < batch.size(); ++j) sums[start + j] = batch[j].get();
    }
  }

  const long double pi2 = kPi * kPi;
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    ConvergenceRow row;
    row.n = checkpoints[i];
    row.sum = sums[i];
    const long double n = static_cast<long double>(row.n);
    const long double ratio = static_cast<long double>(row.sum) / (n * n);
    row.ratio = static_cast<double>(ratio);
    if (report.coefficient) {
      const long double limit = report.coefficient->value() / pi2;
      row.limit = static_cast<double>(limit);
      row.abs_err = static_cast<double>(std::fabs(ratio - limit));
      row.rel_err = static_cast<double>(std::fabs(ratio - limit) / limit);
    }
    report.rows.push_back(row);
  }
  return report;
}

std::vector<LehmerRatioRow> lehmer_ratio_report(const ArithmeticTables& tables,
                                                std::span<const std::uint64_t> checkpoints,
                                                std::optional<std::uint64_t> prime) {
  if (prime) require_prime(tables, *prime);
  const auto phi = tables.phi_values();
  std::vector<LehmerRatioRow> rows;
  for (std::uint64_t n : checkpoints) {
    if (n < 2) continue;
    const auto sums = even_odd_sums(tables, n);
    LehmerRatioRow row;
    row.n = n;
    row.odd = sums.odd;
    row.even = sums.even;
    row.ratio = static_cast<double>(static_cast<long double>(sums.odd) / static_cast<long double>(sums.even));
    row.odd_minus_twice_even = sums.odd - 2 * sums.even;
    if (prime) {
      const std::uint64_t p = *prime;
      if (n > tables.n_max() / (2 * p))
        throw RangeError("lehmer_ratio_report: scaled ratio at n = " + std::to_string(n) +
                         " needs tables up to 2pn = " + to_string(Int128(2 * p) * n));
      const std::int64_t odd_multiples = strided_sum(phi, p, 2 * p, 2 * p * n);
      const std::int64_t even_multiples = strided_sum(phi, 2 * p, 2 * p, 2 * p * n);
      row.scaled_ratio = static_cast<double>(odd_multiples) / static_cast<double>(even_multiples);
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace totient
