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

#include "reports.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <variant>

#include "totient/totient.hpp"

namespace totient::cli {

namespace {

constexpr std::uint64_t kAutoTableLimit = 10'000'000;

// ---------------------------------------------------------------------------
// Report model shared by the CSV and JSON writers.

using Cell = std::variant<std::monostate, std::string, std::uint64_t, Int128, double, bool>;

struct Report {
  Report(std::string name, std::vector<std::string> header)
      : command(std::move(name)), columns(std::move(header)) {}

  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::string summary;
  std::vector<std::string> failures;
  bool no_limit = false;
};

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string csv_cell(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(std::uint64_t v) const { return std::to_string(v); }
    std::string operator()(Int128 v) const { return to_string(v); }
    std::string operator()(double v) const { return format_real(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
  };
  return std::visit(Visitor{}, cell);
}

nlohmann::ordered_json json_cell(const Cell& cell) {
  struct Visitor {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(const std::string& s) const { return s; }
    nlohmann::ordered_json operator()(std::uint64_t v) const { return v; }
    nlohmann::ordered_json operator()(Int128 v) const {
      if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
      return to_string(v);
    }
    // Same 12 significant digits as the CSV.
    nlohmann::ordered_json operator()(double v) const { return std::strtod(format_real(v).c_str(), nullptr); }
    nlohmann::ordered_json operator()(bool v) const { return v; }
  };
  return std::visit(Visitor{}, cell);
}

std::string status_of(const Report& r) {
  if (!r.failures.empty()) return "fail";
  if (r.no_limit) return "no-limit";
  return "pass";
}

void write_report(const Report& report, Format format, std::ostream& os) {
  if (format == Format::kCsv) {
    for (std::size_t i = 0; i < report.columns.size(); ++i) os << (i ? "," : "") << report.columns[i];
    os << '\n';
    for (const auto& row : report.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
      os << '\n';
    }
    return;
  }
  nlohmann::ordered_json doc;
  doc["command"] = report.command;
  doc["columns"] = report.columns;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[report.columns[i]] = json_cell(row[i]);
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  doc["summary"] = report.summary;
  doc["status"] = status_of(report);
  doc["failures"] = report.failures;
  os << doc.dump(2) << '\n';
}

Cell optional_real(const std::optional<double>& v) { return v ? Cell(*v) : Cell(); }

// ---------------------------------------------------------------------------
// Tables

ArithmeticTables load_or_build(std::uint64_t n_max) {
  if (const char* dir = std::getenv("TOTIENT_TABLE_CACHE"); dir && *dir) {
    const auto path = std::filesystem::path(dir) / ("totient_" + std::to_string(n_max) + ".totv1");
    if (std::filesystem::exists(path)) return ArithmeticTables::load(path);
  }
  return ArithmeticTables::build(n_max);
}

/// Explicit --n-max must cover `needed`; otherwise the tables are sized to it.
std::uint64_t table_size(const RunConfig& config, std::uint64_t needed) {
  if (config.n_max) {
    if (*config.n_max < needed)
      throw RangeError("--n-max " + std::to_string(*config.n_max) + " is below the required " +
                       std::to_string(needed));
    return *config.n_max;
  }
  return std::max<std::uint64_t>(needed, 1);
}

std::uint64_t max_checkpoint(const RunConfig& config) {
  return config.checkpoints.empty() ? 0 : config.checkpoints.back();
}

void require_checkpoints(const RunConfig& config, const char* command) {
  if (config.checkpoints.empty())
    throw UsageError(std::string(command) + ": no checkpoints (use --n, --checkpoints or --geometric)");
}

// ---------------------------------------------------------------------------
// Commands

Report sieve_dump(const RunConfig& config) {
  if (!config.n_max) throw UsageError("sieve-dump: --n-max is required");
  std::filesystem::path path;
  if (config.table_path) {
    path = *config.table_path;
  } else if (const char* dir = std::getenv("TOTIENT_TABLE_CACHE"); dir && *dir) {
    path = std::filesystem::path(dir) / ("totient_" + std::to_string(*config.n_max) + ".totv1");
  } else {
    throw UsageError("sieve-dump: give --table or set TOTIENT_TABLE_CACHE");
  }
  const auto tables = ArithmeticTables::build(*config.n_max);
  tables.save(path);
  Report r{"sieve-dump", {"n_max", "primes", "bytes", "path"}};
  r.rows.push_back({tables.n_max(), std::uint64_t{tables.primes().size()},
                    std::uint64_t{std::filesystem::file_size(path)}, path.string()});
  r.summary = "wrote " + path.string();
  return r;
}

Report phi_sum(const RunConfig& config) {
  require_checkpoints(config, "phi-sum");
  const std::uint64_t wanted = config.n_max.value_or(std::min(max_checkpoint(config), kAutoTableLimit));
  const auto tables = load_or_build(std::max<std::uint64_t>(wanted, 1));
  Report r{"phi-sum", {"n", "sum"}};
  std::uint64_t three_way = 0;
  for (std::uint64_t n : config.checkpoints) {
    const Int128 sublinear = phi_sum_sublinear(n);
    const Int128 mertens = phi_sum_mertens(tables, n);
    std::string detail = "n=" + std::to_string(n) + " mertens=" + to_string(mertens) +
                         " sublinear=" + to_string(sublinear);
    bool agree = mertens == sublinear;
    if (n <= tables.n_max()) {
      const Int128 exact = phi_sum_exact(tables, n);
      agree = agree && exact == sublinear;
      detail += " exact=" + to_string(exact);
      ++three_way;
    }
    if (!agree) r.failures.push_back("disagreement " + detail);
    r.rows.push_back({n, sublinear});
  }
  r.summary = std::to_string(config.checkpoints.size()) + " checkpoint(s), " + std::to_string(three_way) +
              " checked by all three algorithms";
  return r;
}

Report mertens_check(const RunConfig& config) {
  const std::uint64_t gmax = config.scan_limit;
  if (gmax == 0) throw UsageError("mertens-check: --gmax must be positive");
  auto checkpoints = config.checkpoints;
  if (checkpoints.empty()) {
    for (std::uint64_t g = 10; g <= gmax; g *= 10) checkpoints.push_back(g);
    if (checkpoints.empty() || checkpoints.back() != gmax) checkpoints.push_back(gmax);
  }
  const auto tables = load_or_build(table_size(config, gmax));
  const auto scan = mertens_error_scan(tables, gmax);

  Report r{"mertens-check", {"G", "phi_sum", "delta", "bound", "within_bound"}};
  for (std::uint64_t G : checkpoints) {
    const auto report = mertens_error_report(tables, G);
    r.rows.push_back({G, report.phi_sum, static_cast<double>(report.delta),
                      static_cast<double>(report.bound), report.within_bound});
    if (G > gmax && !report.within_bound) r.failures.push_back("G=" + std::to_string(G) + " outside bound");
  }
  for (const auto& f : scan.failures)
    r.failures.push_back("G=" + std::to_string(f.G) + " outside bound");
  if (scan.within != scan.checked && scan.failures.size() < scan.checked - scan.within)
    r.failures.push_back(std::to_string(scan.checked - scan.within - scan.failures.size()) +
                         " further failures not listed");
  r.summary = std::to_string(scan.within) + "/" + std::to_string(scan.checked) + " within bound";
  return r;
}

Report residue_sum(const RunConfig& config) {
  require_checkpoints(config, "residue-sum");
  const ResidueClass cls(config.modulus, config.residue);
  const auto tables = load_or_build(table_size(config, max_checkpoint(config)));
  Report r{"residue-sum", {"n", "sum"}};
  for (std::uint64_t n : config.checkpoints) r.rows.push_back({n, residue_phi_sum(tables, cls, n)});
  r.summary = "class " + std::to_string(cls.residue()) + " mod " + std::to_string(cls.modulus());
  return r;
}

Report converge(const RunConfig& config) {
  require_checkpoints(config, "converge");
  const ResidueClass cls(config.modulus, config.residue);
  const auto tables = load_or_build(table_size(config, max_checkpoint(config)));
  const auto report = convergence_report(tables, cls, config.checkpoints, config.threads);
  Report r{"converge", {"n", "sum", "ratio", "limit", "abs_err", "rel_err"}};
  for (const auto& row : report.rows)
    r.rows.push_back({row.n, row.sum, row.ratio, optional_real(row.limit), optional_real(row.abs_err),
                      optional_real(row.rel_err)});
  const std::string name = std::to_string(cls.residue()) + " mod " + std::to_string(cls.modulus());
  if (!report.coefficient) {
    r.no_limit = true;
    r.summary = "class " + name + ": no closed-form limit for this modulus; ratios only";
    return r;
  }
  const auto& last = report.rows.back();
  if (!(*last.rel_err < config.tolerance))
    r.failures.push_back("rel_err " + format_real(*last.rel_err) + " at n=" + std::to_string(last.n) +
                         " not below " + format_real(config.tolerance));
  r.summary = "class " + name + ": limit (" + report.coefficient->str() + ")/pi^2, final rel_err " +
              format_real(*last.rel_err);
  return r;
}

Report recursion_check(const RunConfig& config) {
  const std::uint64_t upto = config.scan_limit;
  if (upto == 0) throw UsageError("recursion-check: --n must be positive");
  std::vector<std::uint64_t> primes = config.primes;
  if (primes.empty()) primes = {2, 3, 5, 7, 11, 13};
  const auto tables = load_or_build(table_size(config, upto));

  Report r{"recursion-check", {"recursion", "p", "upto", "nonzero", "first_nonzero"}};
  auto add = [&](const char* name, std::uint64_t p, const RecursionScan& scan) {
    r.rows.push_back({std::string(name), p, upto, scan.nonzero,
                      scan.first_nonzero ? Cell(*scan.first_nonzero) : Cell()});
    if (scan.nonzero != 0)
      r.failures.push_back(std::string(name) + " p=" + std::to_string(p) + " nonzero at n=" +
                           std::to_string(*scan.first_nonzero));
  };
  add("lehmer", 2, scan_lehmer_recursion(tables, upto));
  for (std::uint64_t p : primes) add("multiple_class", p, scan_multiple_class_recursion(tables, p, upto));
  r.summary = std::to_string(1 + primes.size()) + " recursion(s) checked for every n <= " + std::to_string(upto);
  return r;
}

Report prime_class(const RunConfig& config) {
  require_checkpoints(config, "prime-class");
  const std::uint64_t k = config.modulus;
  if (k == 0) throw UsageError("prime-class: --modulus must be positive");
  const auto tables = load_or_build(table_size(config, max_checkpoint(config)));

  Report r{"prime-class", {"x", "k", "ell", "pi_ell", "log_sum", "centered"}};
  std::optional<PrimeClassReport> previous;
  for (std::uint64_t x : config.checkpoints) {
    const auto report = equidistribution_report(tables, x, k);
    std::uint64_t in_classes = 0;
    for (const auto& row : report.rows) {
      r.rows.push_back({x, k, std::to_string(row.ell), row.pi_ell, row.log_sum, row.centered});
      in_classes += row.pi_ell;
    }
    r.rows.push_back({x, k, std::string("dividing"), report.primes_dividing_k, report.dividing_log_sum, Cell()});
    r.rows.push_back({x, k, std::string("all"), report.pi_x, report.global_log_sum, report.global_centered});
    if (in_classes + report.primes_dividing_k != report.pi_x)
      r.failures.push_back("class counts do not reconcile at x=" + std::to_string(x));

    // Boundedness witnesses: drift between consecutive checkpoints from 10^5 on.
    if (previous && previous->x >= 100'000) {
      auto check = [&](const std::string& what, double before, double after) {
        if (std::fabs(after - before) >= config.drift_tolerance)
          r.failures.push_back(what + " drifts by " + format_real(std::fabs(after - before)) + " between x=" +
                               std::to_string(previous->x) + " and x=" + std::to_string(x));
      };
      check("global centered", previous->global_centered, report.global_centered);
      for (std::size_t i = 0; i < report.rows.size(); ++i)
        check("class " + std::to_string(report.rows[i].ell) + " centered", previous->rows[i].centered,
              report.rows[i].centered);
    }
    previous = report;
  }
  r.summary = std::to_string(euler_phi(k)) + " reduced class(es) mod " + std::to_string(k) + " at " +
              std::to_string(config.checkpoints.size()) + " checkpoint(s)";
  return r;
}

Report lehmer_ratio(const RunConfig& config) {
  require_checkpoints(config, "lehmer-ratio");
  std::optional<std::uint64_t> prime;
  if (!config.primes.empty()) prime = config.primes.front();
  std::uint64_t needed = max_checkpoint(config);
  if (prime) {
    if (!is_prime_trial(*prime)) throw DomainError("--prime " + std::to_string(*prime) + " is not prime");
    if (needed > ArithmeticTables::kMaxIndex / (2 * *prime))
      throw RangeError("scaled ratio needs a table beyond the 32-bit index");
    needed *= 2 * *prime;
  }
  const auto tables = load_or_build(table_size(config, needed));
  const auto rows = lehmer_ratio_report(tables, config.checkpoints, prime);

  Report r{"lehmer-ratio", {"n", "phi_odd", "phi_even", "ratio", "odd_minus_twice_even", "p", "scaled_ratio"}};
  for (const auto& row : rows)
    r.rows.push_back({row.n, row.odd, row.even, row.ratio, row.odd_minus_twice_even,
                      prime ? Cell(*prime) : Cell(), optional_real(row.scaled_ratio)});
  if (rows.empty()) {
    r.summary = "no checkpoint with n >= 2";
    return r;
  }
  const auto& last = rows.back();
  if (!(std::fabs(last.ratio - 2.0) < config.tolerance))
    r.failures.push_back("ratio " + format_real(last.ratio) + " at n=" + std::to_string(last.n) +
                         " not within " + format_real(config.tolerance) + " of 2");
  if (last.scaled_ratio && !(std::fabs(*last.scaled_ratio - 2.0) < config.scaled_tolerance))
    r.failures.push_back("scaled ratio " + format_real(*last.scaled_ratio) + " at n=" + std::to_string(last.n) +
                         " not within " + format_real(config.scaled_tolerance) + " of 2");
  r.summary = "Phi_o/Phi_e at n=" + std::to_string(last.n) + " is " + format_real(last.ratio);
  return r;
}

Report dispatch(const RunConfig& config) {
  switch (config.command) {
    case Command::kSieveDump: return sieve_dump(config);
    case Command::kPhiSum: return phi_sum(config);
    case Command::kMertensCheck: return mertens_check(config);
    case Command::kResidueSum: return residue_sum(config);
    case Command::kConverge: return converge(config);
    case Command::kRecursionCheck: return recursion_check(config);
    case Command::kPrimeClass: return prime_class(config);
    case Command::kLehmerRatio: return lehmer_ratio(config);
  }
  throw UsageError("unknown command");
}

}  // namespace

// ---------------------------------------------------------------------------
// Argument parsing

std::uint64_t parse_count(const std::string& text) {
  auto fail = [&] { return UsageError("not a positive integer count: '" + text + "'"); };
  if (text.empty()) throw fail();
  std::string mantissa = text;
  long exponent = 0;
  if (const auto e = text.find_first_of("eE"); e != std::string::npos) {
    mantissa = text.substr(0, e);
    const std::string exp_text = text.substr(e + 1);
    if (exp_text.empty() || exp_text.size() > 2 ||
        !std::all_of(exp_text.begin(), exp_text.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw fail();
    exponent = std::stol(exp_text);
  }
  std::string digits;
  if (const auto dot = mantissa.find('.'); dot != std::string::npos) {
    digits = mantissa.substr(0, dot);
    std::string fraction = mantissa.substr(dot + 1);
    while (!fraction.empty() && fraction.back() == '0') fraction.pop_back();
    if (static_cast<long>(fraction.size()) > exponent) throw fail();
    digits += fraction;
    exponent -= static_cast<long>(fraction.size());
  } else {
    digits = mantissa;
  }
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw fail();
  Int128 value = 0;
  for (char c : digits) {
    value = value * 10 + (c - '0');
    if (value > std::numeric_limits<std::uint64_t>::max()) throw RangeError("'" + text + "' exceeds 64 bits");
  }
  for (long i = 0; i < exponent; ++i) {
    value *= 10;
    if (value > std::numeric_limits<std::uint64_t>::max()) throw RangeError("'" + text + "' exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(value);
}

std::vector<std::uint64_t> parse_checkpoint_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_count(item));
  if (out.empty()) throw UsageError("empty checkpoint list");
  return out;
}

std::vector<std::uint64_t> geometric_checkpoints(std::uint64_t start, std::uint64_t factor,
                                                 std::uint64_t count) {
  if (start == 0 || factor < 2 || count == 0)
    throw UsageError("geometric checkpoints need start >= 1, factor >= 2, count >= 1");
  std::vector<std::uint64_t> out;
  Int128 value = start;
  for (std::uint64_t i = 0; i < count; ++i) {
    if (value > std::numeric_limits<std::uint64_t>::max()) throw UsageError("geometric checkpoints overflow");
    out.push_back(static_cast<std::uint64_t>(value));
    value *= factor;
  }
  return out;
}

namespace {

struct RawArgs {
  std::string n_max;
  std::string n;
  std::string x;
  std::string gmax;
  std::string checkpoints;
  std::string geometric;
  std::string format = "csv";
  std::string output;
  std::string table;
  std::uint64_t modulus = 1;
  std::uint64_t residue = 0;
  std::vector<std::uint64_t> primes;
  unsigned threads = 1;
  double tolerance = 1e-3;
  double scaled_tolerance = 1e-2;
  double drift_tolerance = 0.1;
};

void add_common(CLI::App* sub, RawArgs& raw) {
  sub->add_option("--n-max", raw.n_max, "Sieve bound (default: smallest bound the command needs)");
  sub->add_option("--format", raw.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--output,-o", raw.output, "Write the report to a file instead of standard output");
  sub->add_option("--threads", raw.threads, "Cap on worker threads; results do not depend on it")
      ->check(CLI::Range(1u, 256u));
}

void add_checkpoints(CLI::App* sub, RawArgs& raw) {
  sub->add_option("--checkpoints", raw.checkpoints, "Comma-separated checkpoints, e.g. 1e4,1e5,1e6");
  sub->add_option("--geometric", raw.geometric, "start,factor,count (default 1e3,10,4)");
}

}  // namespace

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out) {
  CLI::App app{"Euler-phi summatory functions over residue classes, with exact cross-checks"};
  app.require_subcommand(1);
  RawArgs raw;

  auto* dump = app.add_subcommand("sieve-dump", "Sieve phi, mu, spf and write a TOTV1 table dump");
  add_common(dump, raw);
  dump->add_option("--table", raw.table, "Dump path (default: $TOTIENT_TABLE_CACHE/totient_<n_max>.totv1)");

  auto* phi = app.add_subcommand("phi-sum", "Phi(n) by three algorithms; fails unless they agree");
  add_common(phi, raw);
  add_checkpoints(phi, raw);
  phi->add_option("--n", raw.n, "Single n");

  auto* mertens = app.add_subcommand("mertens-check", "Check |Phi(G) - 3G^2/pi^2| against Mertens' bound for every G <= gmax");
  add_common(mertens, raw);
  mertens->add_option("--gmax", raw.gmax, "Upper end of the exhaustive scan")->required();
  mertens->add_option("--checkpoints", raw.checkpoints, "Extra G values to report (may exceed gmax)");

  const char* class_note =
      "Residue classes are (modulus k, residue r) with 0 <= r < k. Summands of the form 2pm - j "
      "are the class r = (-j) mod 2p, and summands pm - i are r = (-i) mod p.";

  auto* residue = app.add_subcommand("residue-sum", "Sum of phi(m) over m <= n, m = r (mod k)");
  residue->footer(class_note);
  add_common(residue, raw);
  add_checkpoints(residue, raw);
  residue->add_option("--n", raw.n, "Single n");
  residue->add_option("--modulus,-k", raw.modulus, "Modulus k")->check(CLI::PositiveNumber);
  residue->add_option("--residue,-r", raw.residue, "Residue r");

  auto* conv = app.add_subcommand("converge", "Class sum / n^2 against its limit c/pi^2");
  conv->footer(class_note);
  add_common(conv, raw);
  add_checkpoints(conv, raw);
  conv->add_option("--modulus,-k", raw.modulus, "Modulus k")->check(CLI::PositiveNumber);
  conv->add_option("--residue,-r", raw.residue, "Residue r");
  conv->add_option("--tolerance", raw.tolerance, "Relative error required at the last checkpoint");

  auto* rec = app.add_subcommand("recursion-check", "Exact residuals of the halving and multiple-class recursions for every n");
  add_common(rec, raw);
  rec->add_option("--n", raw.n, "Check every n up to this bound (default 1e5)");
  rec->add_option("--prime,-p", raw.primes, "Prime(s) for the multiple-class recursion (default 2,3,5,7,11,13)");

  auto* pc = app.add_subcommand("prime-class", "Prime counts and ln(p)/p sums per reduced residue class");
  add_common(pc, raw);
  add_checkpoints(pc, raw);
  pc->add_option("--x", raw.x, "Single x");
  pc->add_option("--modulus,-k", raw.modulus, "Modulus k")->check(CLI::PositiveNumber);
  pc->add_option("--drift-tolerance", raw.drift_tolerance, "Allowed change of centered sums between checkpoints >= 1e5");

  auto* lr = app.add_subcommand("lehmer-ratio", "Phi_o(n)/Phi_e(n) and the p-scaled variant");
  add_common(lr, raw);
  add_checkpoints(lr, raw);
  lr->add_option("--prime,-p", raw.primes, "Prime for the scaled ratio")->expected(0, 1);
  lr->add_option("--tolerance", raw.tolerance, "Allowed |ratio - 2| at the last checkpoint");
  lr->add_option("--scaled-tolerance", raw.scaled_tolerance, "Allowed |scaled ratio - 2| at the last checkpoint");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, out);
    return std::nullopt;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, out);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  RunConfig config;
  const auto* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  if (name == "sieve-dump") config.command = Command::kSieveDump;
  else if (name == "phi-sum") config.command = Command::kPhiSum;
  else if (name == "mertens-check") config.command = Command::kMertensCheck;
  else if (name == "residue-sum") config.command = Command::kResidueSum;
  else if (name == "converge") config.command = Command::kConverge;
  else if (name == "recursion-check") config.command = Command::kRecursionCheck;
  else if (name == "prime-class") config.command = Command::kPrimeClass;
  else config.command = Command::kLehmerRatio;

  if (!raw.n_max.empty()) {
    config.n_max = parse_count(raw.n_max);
    if (*config.n_max == 0) throw UsageError("--n-max must be positive");
  }
  config.modulus = raw.modulus;
  config.residue = raw.residue;
  config.primes = raw.primes;
  config.format = raw.format == "json" ? Format::kJson : Format::kCsv;
  if (!raw.output.empty()) config.output = raw.output;
  if (!raw.table.empty()) config.table_path = raw.table;
  config.threads = raw.threads;
  config.tolerance = raw.tolerance;
  config.scaled_tolerance = raw.scaled_tolerance;
  config.drift_tolerance = raw.drift_tolerance;

  const bool single = config.command == Command::kPhiSum || config.command == Command::kResidueSum;
  if (!raw.checkpoints.empty()) config.checkpoints = parse_checkpoint_list(raw.checkpoints);
  if (!raw.geometric.empty()) {
    const auto parts = parse_checkpoint_list(raw.geometric);
    if (parts.size() != 3) throw UsageError("--geometric expects start,factor,count");
    const auto more = geometric_checkpoints(parts[0], parts[1], parts[2]);
    config.checkpoints.insert(config.checkpoints.end(), more.begin(), more.end());
  }
  if (single && !raw.n.empty()) config.checkpoints.push_back(parse_count(raw.n));
  if (config.command == Command::kPrimeClass && !raw.x.empty()) config.checkpoints.push_back(parse_count(raw.x));

  const bool decades_by_default = config.command == Command::kConverge ||
                                  config.command == Command::kPrimeClass ||
                                  config.command == Command::kLehmerRatio;
  if (config.checkpoints.empty() && decades_by_default) config.checkpoints = geometric_checkpoints(1000, 10, 4);

  std::sort(config.checkpoints.begin(), config.checkpoints.end());
  config.checkpoints.erase(std::unique(config.checkpoints.begin(), config.checkpoints.end()),
                           config.checkpoints.end());
  if (!config.checkpoints.empty() && config.checkpoints.front() == 0)
    throw UsageError("checkpoints must be positive");

  if (config.command == Command::kMertensCheck) config.scan_limit = parse_count(raw.gmax);
  if (config.command == Command::kRecursionCheck)
    config.scan_limit = raw.n.empty() ? 100'000 : parse_count(raw.n);

  if (config.command == Command::kResidueSum || config.command == Command::kConverge) {
    if (config.residue >= config.modulus)
      throw UsageError("--residue must lie in [0, --modulus)");
  }
  return config;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const Report report = dispatch(config);
  if (config.output) {
    std::ofstream file(*config.output, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot open " + config.output->string());
    write_report(report, config.format, file);
  } else {
    write_report(report, config.format, out);
  }
  if (!report.summary.empty()) err << report.summary << '\n';
  for (const auto& failure : report.failures) err << "FAIL," << report.command << ',' << failure << '\n';
  if (!report.failures.empty()) return exit_code::kVerification;
  if (report.no_limit) return exit_code::kNoLimit;
  return exit_code::kPass;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  try {
    const auto config = parse_args(argc, argv, out);
    if (!config) return exit_code::kPass;
    return run(*config, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_code::kUsage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_code::kUsage;
  } catch (const RangeError& e) {
    err << "range error: " << e.what() << '\n';
    return exit_code::kRange;
  } catch (const OverflowError& e) {
    err << "range error: " << e.what() << '\n';
    return exit_code::kRange;
  } catch (const UnsupportedModulus& e) {
    err << "unsupported modulus: " << e.what() << '\n';
    return exit_code::kNoLimit;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kIo;
  }
}

}  // namespace totient::cli
