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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "totient/common.hpp"

namespace totient::detail {

/// Largest sieve the sublinear routes allocate for their base table.
inline constexpr std::uint64_t kMaxSublinearBase = 20'000'000;

/// Past this the capped base leaves too many large quotients; one call at
/// the limit takes a couple of minutes.
inline constexpr std::uint64_t kMaxSublinearN = 10'000'000'000'000;

/// Base table size for a quotient recursion at n: about n^(2/3), never more
/// than n and never more than kMaxSublinearBase. Throws RangeError above
/// kMaxSublinearN.
inline std::uint64_t sublinear_base(std::uint64_t n) {
  if (n > kMaxSublinearN)
    throw RangeError("n = " + std::to_string(n) + " exceeds the sublinear limit " + std::to_string(kMaxSublinearN));
  const double two_thirds = std::pow(static_cast<double>(n), 2.0 / 3.0);
  auto base = static_cast<std::uint64_t>(two_thirds) + 1;
  base = std::max<std::uint64_t>(base, 1024);
  base = std::min(base, kMaxSublinearBase);
  return std::min(base, n);
}

/// Values of S(x) for every x = floor(n/k), where
///
///   S(x) = head(x) - sum_{d=2}^{x} S(floor(x/d))      (x > base)
///   S(x) = base_prefix[x]                              (x <= base)
///
/// Large values are stored by their index k = floor(n/x), filled from the
/// largest k (smallest x) upward, so every lookup hits a finished entry.
class QuotientTable {
 public:
  template <class Head>
  QuotientTable(std::uint64_t n, std::vector<std::int64_t> base_prefix, Head head)
      : n_(n), base_prefix_(std::move(base_prefix)) {
    base_ = base_prefix_.size() - 1;
    const std::uint64_t count = n_ / (base_ + 1);
    large_.assign(count + 1, 0);
    for (std::uint64_t k = count; k >= 1; --k) {
      const std::uint64_t x = n_ / k;
      Int128 s = head(x);
      for (std::uint64_t d = 2; d <= x;) {
        const std::uint64_t q = x / d;
        const std::uint64_t d_end = x / q;
        s = checked_sub(s, checked_mul(static_cast<Int128>(d_end - d + 1), at(q)));
        d = d_end + 1;
      }
      large_[k] = s;
    }
  }

  /// x must be <= base or of the form floor(n/k).
  Int128 at(std::uint64_t x) const {
    if (x <= base_) return base_prefix_[x];
    return large_[n_ / x];
  }

 private:
  std::uint64_t n_;
  std::uint64_t base_;
  std::vector<std::int64_t> base_prefix_;
  std::vector<Int128> large_;
};

}  // namespace totient::detail
