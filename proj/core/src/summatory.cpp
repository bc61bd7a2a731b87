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

#include "totient/summatory.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "quotient_recursion.hpp"

namespace totient {

namespace {

void require_covered(const ArithmeticTables& tables, std::uint64_t n, const char* what) {
  if (n > tables.n_max())
    throw RangeError(std::string(what) + ": n = " + std::to_string(n) + " exceeds table n_max " +
                     std::to_string(tables.n_max()));
}

/// Mertens-function prefix M(0..limit) from a sieved mu table.
std::vector<std::int64_t> mertens_prefix(std::span<const std::int8_t> mu, std::uint64_t limit) {
  std::vector<std::int64_t> prefix(limit + 1, 0);
  for (std::uint64_t i = 1; i <= limit; ++i) prefix[i] = prefix[i - 1] + mu[i];
  return prefix;
}

Int128 mertens_blocks(std::uint64_t G, const detail::QuotientTable& mertens) {
  Int128 acc = 0;
  Int128 previous = 0;  // M(l - 1)
  for (std::uint64_t l = 1; l <= G;) {
    const std::uint64_t q = G / l;
    const std::uint64_t r = G / q;
    const Int128 current = mertens.at(r);
    const Int128 q128 = q;
    const Int128 weight = checked_add(checked_mul(q128, q128), q128);
    acc = checked_add(acc, checked_mul(current - previous, weight));
    previous = current;
    l = r + 1;
  }
  if (acc % 2 != 0) throw std::logic_error("phi_sum_mertens: odd Mertens sum");
  return acc / 2;
}

Int128 mertens_with_mu(std::uint64_t G, std::span<const std::int8_t> mu, std::uint64_t mu_limit) {
  const std::uint64_t base = std::min(G, mu_limit);
  detail::QuotientTable mertens(G, mertens_prefix(mu, base), [](std::uint64_t) { return Int128{1}; });
  return mertens_blocks(G, mertens);
}

}  // namespace

Int128 phi_sum_exact(const ArithmeticTables& tables, std::uint64_t n) {
  require_covered(tables, n, "phi_sum_exact");
  const auto phi = tables.phi_values();
  // Each phi < 2^32, so a 64-bit partial sum absorbs 2^31 terms without overflow.
  Int128 total = 0;
  std::uint64_t block = 0;
  std::uint64_t in_block = 0;
  for (std::uint64_t m = 1; m <= n; ++m) {
    block += phi[m];
    if (++in_block == (std::uint64_t{1} << 31)) {
      total = checked_add(total, block);
      block = 0;
      in_block = 0;
    }
  }
  return checked_add(total, block);
}

Int128 phi_sum_mertens(const ArithmeticTables& tables, std::uint64_t G) {
  if (G == 0) throw DomainError("phi_sum_mertens: G must be at least 1");
  if (G <= tables.n_max()) return mertens_with_mu(G, tables.mu_values(), G);
  const std::uint64_t base = detail::sublinear_base(G);
  if (base <= tables.n_max()) return mertens_with_mu(G, tables.mu_values(), base);
  const auto sieve = ArithmeticTables::build(base);
  return mertens_with_mu(G, sieve.mu_values(), base);
}

Int128 phi_sum_mertens(std::uint64_t G) {
  if (G == 0) throw DomainError("phi_sum_mertens: G must be at least 1");
  const std::uint64_t base = std::max<std::uint64_t>(detail::sublinear_base(G), 1);
  const auto sieve = ArithmeticTables::build(base);
  return mertens_with_mu(G, sieve.mu_values(), base);
}

Int128 phi_sum_sublinear(std::uint64_t n) {
  if (n == 0) throw DomainError("phi_sum_sublinear: n must be at least 1");
  const std::uint64_t base = std::max<std::uint64_t>(detail::sublinear_base(n), 1);
  const auto sieve = ArithmeticTables::build(base);
  const auto phi = sieve.phi_values();
  std::vector<std::int64_t> prefix(base + 1, 0);
  for (std::uint64_t i = 1; i <= base; ++i) prefix[i] = prefix[i - 1] + phi[i];

  detail::QuotientTable table(n, std::move(prefix), [](std::uint64_t x) {
    const Int128 x128 = x;
    return checked_mul(x128, x128 + 1) / 2;
  });
  return table.at(n);
}

SummatorySeries summatory_series(const ArithmeticTables& tables,
                                 std::span<const std::uint64_t> checkpoints) {
  SummatorySeries series;
  if (checkpoints.empty()) return series;
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    if (checkpoints[i] == 0) throw DomainError("summatory_series: checkpoints must be positive");
    if (i > 0 && checkpoints[i] <= checkpoints[i - 1])
      throw DomainError("summatory_series: checkpoints must be strictly increasing");
  }
  require_covered(tables, checkpoints.back(), "summatory_series");
  const auto phi = tables.phi_values();
  Int128 running = 0;
  std::uint64_t m = 0;
  for (std::uint64_t target : checkpoints) {
    for (; m < target; ++m) running += phi[m + 1];
    series.checkpoints.emplace_back(target, running);
  }
  return series;
}

long double mertens_bound(std::uint64_t G) {
  const long double g = static_cast<long double>(G);
  return g * (0.5L * std::log(g) + 0.5L * kEulerGamma + 0.625L) + 1.0L;
}

namespace {

MertensErrorReport make_report(std::uint64_t G, Int128 phi_sum) {
  MertensErrorReport report;
  report.G = G;
  report.phi_sum = phi_sum;
  const long double g = static_cast<long double>(G);
  report.delta = static_cast<long double>(phi_sum) - 3.0L * g * g / (kPi * kPi);
  report.bound = mertens_bound(G);
  report.within_bound = std::fabs(report.delta) < report.bound;
  return report;
}

}  // namespace

MertensErrorReport mertens_error_report(const ArithmeticTables& tables, std::uint64_t G) {
  if (G == 0) throw DomainError("mertens_error_report: G must be at least 1");
  const Int128 sum = G <= tables.n_max() ? phi_sum_exact(tables, G) : phi_sum_sublinear(G);
  return make_report(G, sum);
}

MertensErrorReport mertens_error_report_from_sum(std::uint64_t G, Int128 phi_sum) {
  return make_report(G, phi_sum);
}

MertensScanSummary mertens_error_scan(const ArithmeticTables& tables, std::uint64_t gmax) {
  require_covered(tables, gmax, "mertens_error_scan");
  const auto phi = tables.phi_values();
  MertensScanSummary summary;
  Int128 running = 0;
  for (std::uint64_t G = 1; G <= gmax; ++G) {
    running += phi[G];
    const auto report = make_report(G, running);
    ++summary.checked;
    if (report.within_bound) {
      ++summary.within;
    } else if (summary.failures.size() < MertensScanSummary::kMaxRecordedFailures) {
      summary.failures.push_back(report);
    }
    const long double ratio = std::fabs(report.delta) / report.bound;
    if (ratio > summary.worst_ratio) {
      summary.worst_ratio = ratio;
      summary.worst_G = G;
    }
  }
  return summary;
}

double zeta_mobius_partial(const ArithmeticTables& tables, std::uint64_t n) {
  require_covered(tables, n, "zeta_mobius_partial");
  const auto mu = tables.mu_values();
  CompensatedSum sum;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (mu[d] == 0) continue;
    const double dd = static_cast<double>(d);
    sum.add(mu[d] / (dd * dd));
  }
  return sum.value();
}

// Rational

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = g == 0 ? 0 : num / g;
  den_ = g == 0 ? 1 : den / g;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  const std::int64_t g = std::gcd(a.den_, b.den_);
  const Int128 den = static_cast<Int128>(a.den_ / g) * b.den_;
  const Int128 num = static_cast<Int128>(a.num_) * (b.den_ / g) + static_cast<Int128>(b.num_) * (a.den_ / g);
  Int128 h = num < 0 ? -num : num;
  for (Int128 divisor = den; divisor != 0;) {
    const Int128 rem = h % divisor;
    h = divisor;
    divisor = rem;
  }
  return Rational(to_int64(h == 0 ? num : num / h), to_int64(h == 0 ? den : den / h));
}

Rational operator*(const Rational& a, const Rational& b) {
  const Rational left(a.num_, b.den_);
  const Rational right(b.num_, a.den_);
  return Rational(to_int64(static_cast<Int128>(left.num_) * right.num_),
                  to_int64(static_cast<Int128>(left.den_) * right.den_));
}

namespace {

constexpr std::uint64_t kMaxLimitModulus = std::uint64_t{1} << 31;

bool is_odd_prime(std::uint64_t p) { return p % 2 == 1 && is_prime_trial(p); }

}  // namespace

bool has_class_limit(std::uint64_t k) {
  if (k == 0 || k > kMaxLimitModulus) return false;
  if (k == 1 || k == 2 || k == 4) return true;
  if (is_odd_prime(k)) return true;
  return k % 2 == 0 && is_odd_prime(k / 2);
}

Rational class_limit_coefficient(std::uint64_t k, std::uint64_t r) {
  if (!has_class_limit(k))
    throw UnsupportedModulus("modulus " + std::to_string(k) +
                             " is outside the family {1, 2, 4, p, 2p} with known class limits");
  if (r >= k)
    throw DomainError("residue " + std::to_string(r) + " must lie in [0, " + std::to_string(k) + ")");

  if (k == 1) return Rational(3);
  if (k == 4) return r % 2 == 0 ? Rational(1, 2) : Rational(1);

  if (k == 2 || k % 2 == 1) {
    const auto p = static_cast<std::int64_t>(k);
    return r == 0 ? Rational(3, p + 1) : Rational(3 * p, p * p - 1);
  }

  const auto p = static_cast<std::int64_t>(k / 2);
  const auto rr = static_cast<std::int64_t>(r);
  if (rr == 0) return Rational(1, p + 1);
  if (rr == p) return Rational(2, p + 1);
  if (rr % 2 == 0) return Rational(p, p * p - 1);
  return Rational(2 * p, p * p - 1);
}

}  // namespace totient
