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

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

namespace totient {

/// Signed 128-bit accumulator used for every summatory value.
using Int128 = __int128;

inline constexpr long double kPi = std::numbers::pi_v<long double>;
inline constexpr long double kEulerGamma = std::numbers::egamma_v<long double>;

// Error hierarchy. Each maps onto a distinct CLI exit code.

/// Argument outside the range covered by a table or an operation.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Argument violates a mathematical precondition (non-prime p, non-coprime class, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An exact accumulator would have wrapped around.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Modulus outside the family for which a closed-form class limit is known.
class UnsupportedModulus : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline Int128 checked_add(Int128 a, Int128 b) {
  Int128 out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("128-bit accumulator overflow (add)");
  return out;
}

inline Int128 checked_sub(Int128 a, Int128 b) {
  Int128 out;
  if (__builtin_sub_overflow(a, b, &out)) throw OverflowError("128-bit accumulator overflow (sub)");
  return out;
}

inline Int128 checked_mul(Int128 a, Int128 b) {
  Int128 out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("128-bit accumulator overflow (mul)");
  return out;
}

/// Decimal rendering; never uses scientific notation.
std::string to_string(Int128 value);

/// Narrowing with an overflow check.
std::int64_t to_int64(Int128 value);

/// Euler phi of a single small integer by trial division. Independent of any table.
std::uint64_t euler_phi(std::uint64_t n);

/// Primality by trial division.
bool is_prime_trial(std::uint64_t n);

/// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x))
      compensation_ += (sum_ - t) + x;
    else
      compensation_ += (x - t) + sum_;
    sum_ = t;
  }
  CompensatedSum& operator+=(double x) {
    add(x);
    return *this;
  }
  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

}  // namespace totient
