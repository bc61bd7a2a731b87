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
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

namespace totient {

/// Lambda(n) kept exact as the prime base; the log is taken only on request.
struct MangoldtValue {
  std::optional<std::uint64_t> base;
  double log_value = 0.0;
};

/// Upper bound on the bytes a table build may allocate.
struct TableBudget {
  std::uint64_t max_bytes = std::uint64_t{6} << 30;
};

/// Immutable sieved tables of phi, mu and the smallest prime factor on [1, n_max].
///
/// All three arrays come from one linear-sieve pass. After construction the
/// object is read-only, so any number of threads may query it concurrently.
/// Indices are limited to 32 bits; phi and spf are stored at that width.
class ArithmeticTables {
 public:
  static constexpr std::uint64_t kMaxIndex = 0xFFFFFFFFull;
  /// Bytes per index the tables occupy (phi + mu + spf).
  static constexpr std::uint64_t kBytesPerEntry = 4 + 1 + 4;

  /// Runs the linear sieve. Throws DomainError for n_max == 0 and RangeError
  /// when n_max exceeds the index width or the memory budget.
  static ArithmeticTables build(std::uint64_t n_max, TableBudget budget = {});

  /// Binary dump: "TOTV1", u64 LE n_max, then phi (u32 LE), mu (i8), spf (u32 LE)
  /// for indices 1..n_max.
  void save(const std::filesystem::path& path) const;
  static ArithmeticTables load(const std::filesystem::path& path);

  std::uint64_t n_max() const { return n_max_; }

  std::uint64_t phi(std::uint64_t n) const {
    check_index(n, "phi");
    return phi_[n];
  }
  int mu(std::uint64_t n) const {
    check_index(n, "mu");
    return mu_[n];
  }
  /// spf(1) is reported as 1.
  std::uint64_t spf(std::uint64_t n) const {
    check_index(n, "spf");
    return spf_[n];
  }
  bool is_prime(std::uint64_t n) const;

  MangoldtValue mangoldt(std::uint64_t n) const;

  /// Sum over d | n of (n/d) mu(d), with divisors generated from spf.
  std::int64_t phi_from_mobius(std::uint64_t n) const;

  /// All divisors of n in increasing order.
  std::vector<std::uint64_t> divisors(std::uint64_t n) const;

  /// (prime, exponent) pairs of n in increasing prime order.
  std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) const;

  /// Unchecked views; element 0 is a placeholder so that index n maps to n.
  std::span<const std::uint32_t> phi_values() const { return phi_; }
  std::span<const std::int8_t> mu_values() const { return mu_; }
  /// Primes up to n_max in increasing order.
  std::span<const std::uint32_t> primes() const { return primes_; }

 private:
  ArithmeticTables() = default;
  void check_index(std::uint64_t n, const char* what) const;

  std::uint64_t n_max_ = 0;
  std::vector<std::uint32_t> phi_;
  std::vector<std::int8_t> mu_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> primes_;
};

}  // namespace totient
