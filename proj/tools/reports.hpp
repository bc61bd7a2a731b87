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
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace totient::cli {

enum class Command {
  kSieveDump,
  kPhiSum,
  kMertensCheck,
  kResidueSum,
  kConverge,
  kRecursionCheck,
  kPrimeClass,
  kLehmerRatio,
};

enum class Format { kCsv, kJson };

namespace exit_code {
inline constexpr int kPass = 0;
inline constexpr int kIo = 1;
inline constexpr int kUsage = 2;
inline constexpr int kRange = 3;
inline constexpr int kVerification = 4;
inline constexpr int kNoLimit = 5;
}  // namespace exit_code

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Fully resolved invocation. Produced by parse_args, consumed by run.
struct RunConfig {
  Command command = Command::kPhiSum;
  std::optional<std::uint64_t> n_max;
  std::uint64_t modulus = 1;
  std::uint64_t residue = 0;
  std::vector<std::uint64_t> primes;
  /// Sorted ascending, deduplicated.
  std::vector<std::uint64_t> checkpoints;
  /// Upper end of the exhaustive scans (mertens-check, recursion-check).
  std::uint64_t scan_limit = 0;
  Format format = Format::kCsv;
  std::optional<std::filesystem::path> output;
  std::optional<std::filesystem::path> table_path;
  unsigned threads = 1;
  double tolerance = 1e-3;
  double scaled_tolerance = 1e-2;
  double drift_tolerance = 0.1;
};

/// Integer with optional scientific suffix: "1000", "1e6", "2.5e3".
/// Malformed text throws UsageError, values past 64 bits RangeError.
std::uint64_t parse_count(const std::string& text);

/// Comma-separated list of parse_count values.
std::vector<std::uint64_t> parse_checkpoint_list(const std::string& text);

/// "start,factor,count" -> start * factor^i for i < count.
std::vector<std::uint64_t> geometric_checkpoints(std::uint64_t start, std::uint64_t factor,
                                                 std::uint64_t count);

/// Parses argv (without running). Throws UsageError on invalid input.
/// Returns nullopt when help was printed to `out`.
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out);

/// Executes one command. Report goes to `out` (or config.output); the
/// human-readable summary and FAIL lines go to `err`. Returns an exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run with every error mapped to its exit code.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace totient::cli
