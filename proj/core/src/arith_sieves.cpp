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

#include "totient/arith_sieves.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <string>

#include "totient/common.hpp"

namespace totient {

namespace {

constexpr std::array<char, 5> kMagic = {'T', 'O', 'T', 'V', '1'};

void put_u64(std::ostream& os, std::uint64_t v) {
  std::array<char, 8> bytes;
  for (int i = 0; i < 8; ++i) bytes[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
  os.write(bytes.data(), bytes.size());
}

std::uint64_t get_u64(std::istream& is) {
  std::array<unsigned char, 8> bytes{};
  is.read(reinterpret_cast<char*>(bytes.data()), bytes.size());
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= std::uint64_t{bytes[i]} << (8 * i);
  return v;
}

void put_u32_array(std::ostream& os, std::span<const std::uint32_t> values) {
  if constexpr (std::endian::native == std::endian::little) {
    os.write(reinterpret_cast<const char*>(values.data()),
             static_cast<std::streamsize>(values.size_bytes()));
  } else {
    for (std::uint32_t v : values) {
      std::array<char, 4> b = {static_cast<char>(v), static_cast<char>(v >> 8),
                               static_cast<char>(v >> 16), static_cast<char>(v >> 24)};
      os.write(b.data(), 4);
    }
  }
}

void get_u32_array(std::istream& is, std::span<std::uint32_t> values) {
  is.read(reinterpret_cast<char*>(values.data()), static_cast<std::streamsize>(values.size_bytes()));
  if constexpr (std::endian::native != std::endian::little) {
    for (auto& v : values) v = __builtin_bswap32(v);
  }
}

}  // namespace

ArithmeticTables ArithmeticTables::build(std::uint64_t n_max, TableBudget budget) {
  if (n_max == 0) throw DomainError("build_tables: n_max must be at least 1");
  if (n_max > kMaxIndex)
    throw RangeError("build_tables: n_max " + std::to_string(n_max) + " exceeds 32-bit index width");
  if (n_max > budget.max_bytes / kBytesPerEntry)
    throw RangeError("build_tables: n_max " + std::to_string(n_max) + " exceeds memory budget of " +
                     std::to_string(budget.max_bytes) + " bytes");

  ArithmeticTables t;
  t.n_max_ = n_max;
  // Any bad_alloc here escapes before the object is returned.
  t.phi_.assign(n_max + 1, 0);
  t.mu_.assign(n_max + 1, 0);
  t.spf_.assign(n_max + 1, 0);
  if (n_max >= 10) {
    const double x = static_cast<double>(n_max);
    t.primes_.reserve(static_cast<std::size_t>(1.26 * x / std::log(x)) + 16);
  }

  t.phi_[1] = 1;
  t.mu_[1] = 1;
  t.spf_[1] = 1;
  for (std::uint64_t i = 2; i <= n_max; ++i) {
    if (t.spf_[i] == 0) {
      t.spf_[i] = static_cast<std::uint32_t>(i);
      t.phi_[i] = static_cast<std::uint32_t>(i - 1);
      t.mu_[i] = -1;
      t.primes_.push_back(static_cast<std::uint32_t>(i));
    }
    const std::uint32_t spf_i = t.spf_[i];
    for (std::uint32_t p : t.primes_) {
      const std::uint64_t m = i * p;
      if (p > spf_i || m > n_max) break;
      t.spf_[m] = p;
      if (p == spf_i) {
        t.phi_[m] = t.phi_[i] * p;
        t.mu_[m] = 0;
      } else {
        t.phi_[m] = t.phi_[i] * (p - 1);
        t.mu_[m] = static_cast<std::int8_t>(-t.mu_[i]);
      }
    }
  }
  return t;
}

void ArithmeticTables::check_index(std::uint64_t n, const char* what) const {
  if (n == 0 || n > n_max_)
    throw RangeError(std::string(what) + ": n = " + std::to_string(n) + " outside [1, " +
                     std::to_string(n_max_) + "]");
}

bool ArithmeticTables::is_prime(std::uint64_t n) const {
  if (n < 2 || n > n_max_)
    throw RangeError("is_prime: n = " + std::to_string(n) + " outside [2, " + std::to_string(n_max_) +
                     "]");
  return spf_[n] == n;
}

MangoldtValue ArithmeticTables::mangoldt(std::uint64_t n) const {
  check_index(n, "mangoldt");
  if (n == 1) return {};
  const std::uint64_t p = spf_[n];
  std::uint64_t rest = n;
  while (rest % p == 0) rest /= p;
  if (rest != 1) return {};
  return {p, std::log(static_cast<double>(p))};
}

std::vector<std::pair<std::uint64_t, unsigned>> ArithmeticTables::factorize(std::uint64_t n) const {
  check_index(n, "factorize");
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  while (n > 1) {
    const std::uint64_t p = spf_[n];
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  return out;
}

std::vector<std::uint64_t> ArithmeticTables::divisors(std::uint64_t n) const {
  std::vector<std::uint64_t> out{1};
  for (auto [p, e] : factorize(n)) {
    const std::size_t count = out.size();
    std::uint64_t pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < count; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t ArithmeticTables::phi_from_mobius(std::uint64_t n) const {
  check_index(n, "phi_from_mobius");
  std::int64_t sum = 0;
  for (std::uint64_t d : divisors(n)) sum += static_cast<std::int64_t>(n / d) * mu_[d];
  return sum;
}

void ArithmeticTables::save(const std::filesystem::path& path) const {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
  os.write(kMagic.data(), kMagic.size());
  put_u64(os, n_max_);
  put_u32_array(os, std::span(phi_).subspan(1));
  os.write(reinterpret_cast<const char*>(mu_.data() + 1), static_cast<std::streamsize>(n_max_));
  put_u32_array(os, std::span(spf_).subspan(1));
  if (!os) throw std::runtime_error("write failed for " + path.string());
}

ArithmeticTables ArithmeticTables::load(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open " + path.string());
  std::array<char, 5> magic{};
  is.read(magic.data(), magic.size());
  if (!is || magic != kMagic) throw std::runtime_error(path.string() + ": not a TOTV1 table dump");
  const std::uint64_t n_max = get_u64(is);
  if (!is || n_max == 0 || n_max > kMaxIndex)
    throw std::runtime_error(path.string() + ": invalid n_max in header");
  const auto expected = 5 + 8 + n_max * kBytesPerEntry;
  std::error_code ec;
  if (std::filesystem::file_size(path, ec) != expected || ec)
    throw std::runtime_error(path.string() + ": truncated or oversized table dump");

  ArithmeticTables t;
  t.n_max_ = n_max;
  t.phi_.assign(n_max + 1, 0);
  t.mu_.assign(n_max + 1, 0);
  t.spf_.assign(n_max + 1, 0);
  get_u32_array(is, std::span(t.phi_).subspan(1));
  is.read(reinterpret_cast<char*>(t.mu_.data() + 1), static_cast<std::streamsize>(n_max));
  get_u32_array(is, std::span(t.spf_).subspan(1));
  if (!is) throw std::runtime_error(path.string() + ": read failed");
  if (t.phi_[1] != 1 || t.mu_[1] != 1 || t.spf_[1] != 1)
    throw std::runtime_error(path.string() + ": corrupt table (index 1)");
  for (std::uint64_t i = 2; i <= n_max; ++i) {
    const std::uint32_t p = t.spf_[i];
    if (p < 2 || p > i || i % p != 0) throw std::runtime_error(path.string() + ": corrupt spf table");
    if (p == i) t.primes_.push_back(p);
  }
  return t;
}

}  // namespace totient
