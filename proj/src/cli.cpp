// SPDX-License-Identifier: Apache-2.0

#include "trinom/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "trinom/closed_forms.hpp"
#include "trinom/counters.hpp"
#include "trinom/engines.hpp"
#include "trinom/errors.hpp"
#include "trinom/kernels.hpp"
#include "trinom/recurrences.hpp"

namespace trinom::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr std::uint64_t kCompsumValidateLimit = 300;
constexpr std::uint64_t kValidateMinN = 4;

std::string range_text(std::uint64_t lo, std::uint64_t hi) {
  return "n=" + std::to_string(lo) + ".." + std::to_string(hi);
}

// ---------------------------------------------------------------- compute

struct ComputeOptions {
  std::string cls;
  std::uint64_t n = 0;
  std::string engine = "decoupled";
};

int cmd_compute(const ComputeOptions& o, std::ostream& out) {
  const ClassLabel label = parse_class(o.cls);
  const EngineId engine = parse_engine(o.engine);
  out << compute(engine, label, o.n) << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- table

struct TableOptions {
  std::uint64_t max_n = 0;
  std::string engine = "decoupled";
  std::string format = "table";
  std::string cls;
};

void print_aligned(const std::vector<ClassVector>& rows, std::ostream& out) {
  const std::vector<std::string> header{"n", "C_A", "C_B", "C_C", "C_D", "total"};
  std::vector<std::vector<std::string>> cells;
  cells.reserve(rows.size());
  for (const auto& v : rows) {
    cells.push_back({std::to_string(v.n), v.a().to_string(), v.b().to_string(), v.c().to_string(),
                     v.d().to_string(), v.total().to_string()});
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t k = 0; k < header.size(); ++k) {
    width[k] = header[k].size();
    for (const auto& row : cells) width[k] = std::max(width[k], row[k].size());
  }
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k != 0) out << "  ";
      out << std::setw(static_cast<int>(width[k])) << row[k];
    }
    out << '\n';
  };
  emit(header);
  for (const auto& row : cells) emit(row);
}

int cmd_table(const TableOptions& o, std::ostream& out) {
  const EngineId engine = parse_engine(o.engine);
  const std::uint64_t first = engine_min_n(engine);
  if (o.max_n < first) {
    throw UsageError("engine " + std::string(engine_name(engine)) + " needs --max-n >= " +
                     std::to_string(first));
  }

  if (o.format == "bfile") {
    if (o.cls.empty()) throw UsageError("--format bfile needs --class");
    const ClassLabel label = parse_class(o.cls);
    const auto values = compute_class_range(engine, label, first, o.max_n);
    for (std::size_t k = 0; k < values.size(); ++k) out << first + k << ' ' << values[k] << '\n';
    return kExitOk;
  }
  if (engine == EngineId::quartic_c) {
    throw UsageError("engine quartic-c produces only class C; use --format bfile --class C");
  }

  const auto rows = compute_range(engine, first, o.max_n);
  if (o.format == "table") {
    print_aligned(rows, out);
  } else if (o.format == "csv") {
    out << "n,C_A,C_B,C_C,C_D,total\n";
    for (const auto& v : rows) {
      out << v.n << ',' << v.a() << ',' << v.b() << ',' << v.c() << ',' << v.d() << ','
          << v.total() << '\n';
    }
  } else if (o.format == "json") {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& v : rows) {
      doc.push_back({{"n", v.n},
                     {"C_A", v.a().to_string()},
                     {"C_B", v.b().to_string()},
                     {"C_C", v.c().to_string()},
                     {"C_D", v.d().to_string()},
                     {"total", v.total().to_string()}});
    }
    out << doc.dump(2) << '\n';
  } else {
    throw UsageError("unknown format '" + o.format + "'");
  }
  return kExitOk;
}

// ---------------------------------------------------------------- bfile

struct BfileOptions {
  std::string sequence;
  std::uint64_t max_n = 0;
  std::uint64_t offset = 1;
};

ClassLabel sequence_class(const std::string& id) {
  if (id == kSequenceA) return ClassLabel::A;
  if (id == kSequenceB) return ClassLabel::B;
  if (id == kSequenceC) return ClassLabel::C;
  throw UnknownSequence("unknown sequence '" + id + "' (expected " + kSequenceA + ", " +
                        kSequenceB + " or " + kSequenceC + ")");
}

int cmd_bfile(const BfileOptions& o, std::ostream& out) {
  const ClassLabel label = sequence_class(o.sequence);
  if (o.max_n < 1) throw UsageError("--max-n must be at least 1");
  if (o.offset > o.max_n) throw UsageError("--offset must not exceed --max-n");
  const auto values = decoupled_third_order_sequence(label, o.max_n);
  std::string buffer;
  for (std::uint64_t n = o.offset; n <= o.max_n; ++n) {
    buffer += std::to_string(n);
    buffer += ' ';
    buffer += values[n].to_string();
    buffer += '\n';
  }
  out << buffer;
  return kExitOk;
}

// ---------------------------------------------------------------- validate

struct Check {
  std::string name;
  std::string detail;
  bool passed = false;
};

Check engine_check(EngineId engine, std::uint64_t lo, std::uint64_t hi,
                   const std::vector<ClassVector>& reference) {
  Check check{"engine " + std::string(engine_name(engine)) + " " + range_text(lo, hi), "", true};
  if (engine == EngineId::quartic_c) {
    const auto values = compute_class_range(engine, ClassLabel::C, lo, hi);
    for (std::uint64_t n = lo; n <= hi; ++n) {
      if (values[n - lo] != reference[n].c()) {
        check.passed = false;
        check.detail = "first mismatch n=" + std::to_string(n) + " class C";
        return check;
      }
    }
    check.detail = "class C matches coupled";
    return check;
  }
  const auto rows = compute_range(engine, lo, hi);
  for (std::uint64_t n = lo; n <= hi; ++n) {
    for (auto label : kAllClasses) {
      if (rows[n - lo][label] != reference[n][label]) {
        check.passed = false;
        check.detail = "first mismatch n=" + std::to_string(n) + " class " + to_char(label);
        return check;
      }
    }
  }
  check.detail = "matches coupled";
  return check;
}

template <typename Pred>
Check relation_check(std::string name, std::uint64_t lo, std::uint64_t hi, Pred holds) {
  Check check{std::move(name) + " " + range_text(lo, hi), "", true};
  for (std::uint64_t n = lo; n <= hi; ++n) {
    if (!holds(n)) {
      check.passed = false;
      check.detail = "first failure n=" + std::to_string(n);
      break;
    }
  }
  return check;
}

int cmd_validate(std::uint64_t max_n, std::ostream& out) {
  if (max_n < kValidateMinN) {
    throw UsageError("validate needs --max-n >= " + std::to_string(kValidateMinN));
  }
  const auto reference = coupled_sequence(max_n);
  std::vector<Check> checks;

  checks.push_back(engine_check(EngineId::brute, 0, std::min(max_n, kBruteForceMaxN), reference));
  checks.push_back(
      engine_check(EngineId::compsum, 0, std::min(max_n, kCompsumValidateLimit), reference));
  for (auto e : {EngineId::decoupled, EngineId::quartic_c, EngineId::genfun, EngineId::closed,
                 EngineId::rootbasis, EngineId::mod4}) {
    checks.push_back(engine_check(e, engine_min_n(e), max_n, reference));
  }

  // sum identity against 27^n, computed independently of the engines
  {
    Check range{"sum identity " + range_text(0, max_n), "C_A+C_B+C_C+C_D = 3^(3n)", true};
    BigInt power(1);
    for (std::uint64_t n = 0; n <= max_n; ++n) {
      if (reference[n].total() != power) {
        range.passed = false;
        range.detail = "first failure n=" + std::to_string(n);
        break;
      }
      if (n != max_n) power.mul_small(27);
    }
    checks.push_back(std::move(range));

    const auto& v = reference[max_n];
    const BigInt total = v.total();
    std::ostringstream detail;
    detail << v.a() << '+' << v.b() << '+' << v.c() << '+' << v.d() << " = " << total
           << " = 3^" << 3 * max_n;
    checks.push_back(
        {"sum identity n=" + std::to_string(max_n), detail.str(), total == pow3(3 * max_n)});
  }

  checks.push_back({"char poly factorization", "x^4-26x^3-702x-729 = (x+1)(x^3-27(x^2-x+27))",
                    char_poly_check()});

  for (const auto& r : check_identities(reference).results) {
    const std::string range =
        r.checked == 0 ? "(no valid n <= " + std::to_string(max_n) + ")" : range_text(r.first_n, r.last_n);
    Check c{"identity " + r.name + " " + range, r.formula, r.passed()};
    if (!r.passed()) c.detail = r.formula + "; first failure n=" + std::to_string(*r.first_failure);
    checks.push_back(std::move(c));
  }

  checks.push_back(relation_check("relation C_D = 2(C_A+C_B+C_C)", 1, max_n, [&](std::uint64_t n) {
    const auto& v = reference[n];
    return v.d() == BigInt(2) * (v.a() + v.b() + v.c());
  }));
  checks.push_back(relation_check("relation C_A+C_B+C_C = 3^(3n-1)", 1, max_n, [&](std::uint64_t n) {
    const auto& v = reference[n];
    return v.a() + v.b() + v.c() == pow3(3 * n - 1);
  }));
  checks.push_back(relation_check("relation C_B = C_C (even n)", 1, max_n, [&](std::uint64_t n) {
    return n % 2 == 1 || reference[n].b() == reference[n].c();
  }));
  checks.push_back(
      relation_check("relation C_B+C_C = 2*3^(3n-2) (odd n)", 1, max_n, [&](std::uint64_t n) {
        return n % 2 == 0 || reference[n].b() + reference[n].c() == BigInt(2) * pow3(3 * n - 2);
      }));

  std::stable_sort(checks.begin(), checks.end(),
                   [](const Check& a, const Check& b) { return a.name < b.name; });
  std::size_t passed = 0;
  for (const auto& c : checks) {
    out << c.name << ": ";
    if (!c.detail.empty()) out << c.detail << ' ';
    out << (c.passed ? "PASS" : "FAIL") << '\n';
    passed += c.passed ? 1 : 0;
  }
  out << "validate: " << passed << "/" << checks.size() << " checks passed\n";
  return passed == checks.size() ? kExitOk : kExitValidationFailed;
}

// ---------------------------------------------------------------- bench

struct BenchOptions {
  std::uint64_t max_n = 0;
  std::vector<std::string> engines;
};

std::uint64_t fnv1a(const std::string& text, std::uint64_t h) {
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

int cmd_bench(const BenchOptions& o, std::ostream& out) {
  std::vector<EngineId> engines;
  for (const auto& name : o.engines) {
    if (!name.empty()) engines.push_back(parse_engine(name));
  }
  if (engines.empty()) throw UsageError("--engines must name at least one engine");

  struct Row {
    std::string engine;
    double ms;
    std::size_t digits;
    std::string hash;
    std::vector<std::optional<BigInt>> values;
  };
  std::vector<Row> rows;
  for (auto e : engines) {
    std::vector<std::optional<BigInt>> values(4);
    const auto start = std::chrono::steady_clock::now();
    for (auto label : kAllClasses) {
      if (engine_produces(e, label)) values[index_of(label)] = compute(e, label, o.max_n);
    }
    const auto stop = std::chrono::steady_clock::now();

    std::uint64_t h = 0xcbf29ce484222325ULL;
    std::size_t digits = 0;
    for (const auto& v : values) {
      const std::string text = v ? v->to_string() : "-";
      h = fnv1a(text + ";", h);
      digits = std::max(digits, text.size());
    }
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
    rows.push_back({std::string(engine_name(e)),
                    std::chrono::duration<double, std::milli>(stop - start).count(), digits, hex,
                    std::move(values)});
  }

  out << "n=" << o.max_n << " kernels=" << kernels::active().name << '\n';
  out << std::left << std::setw(11) << "engine" << std::right << std::setw(14) << "time_ms"
      << std::setw(10) << "digits" << "  " << std::setw(16) << "values" << "  agrees\n";
  for (const auto& r : rows) {
    // agreement with the first engine on every class both produce
    bool agrees = true;
    for (std::size_t k = 0; k < 4; ++k) {
      if (r.values[k] && rows.front().values[k] && *r.values[k] != *rows.front().values[k]) {
        agrees = false;
      }
    }
    out << std::left << std::setw(11) << r.engine << std::right << std::setw(14) << std::fixed
        << std::setprecision(3) << r.ms << std::setw(10) << r.digits << "  " << r.hash << "  "
        << (agrees ? "yes" : "NO") << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counts of 3n-letter words over a three-letter alphabet by residue class",
               "trinom"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string kernel_choice = "auto";
  app.add_option("--kernels", kernel_choice, "Limb kernel backend: auto|scalar|avx2|neon")
      ->capture_default_str();

  ComputeOptions compute_opts;
  auto* compute_cmd = app.add_subcommand("compute", "Print C_class(n) from one engine");
  compute_cmd->add_option("--class", compute_opts.cls, "A, B, C or D")->required();
  compute_cmd->add_option("--n", compute_opts.n, "Index n (word length 3n)")->required();
  compute_cmd->add_option("--engine", compute_opts.engine, "Engine id")->capture_default_str();

  TableOptions table_opts;
  auto* table_cmd = app.add_subcommand("table", "Print all classes for n up to --max-n");
  table_cmd->add_option("--max-n", table_opts.max_n)->required();
  table_cmd->add_option("--engine", table_opts.engine)->capture_default_str();
  table_cmd->add_option("--format", table_opts.format, "table|csv|bfile|json")->capture_default_str();
  table_cmd->add_option("--class", table_opts.cls, "Column for --format bfile");

  BfileOptions bfile_opts;
  auto* bfile_cmd = app.add_subcommand("bfile", "Emit an OEIS b-file");
  bfile_cmd->add_option("sequence", bfile_opts.sequence, "A391468, A391469 or A391470")->required();
  bfile_cmd->add_option("--max-n", bfile_opts.max_n)->required();
  bfile_cmd->add_option("--offset", bfile_opts.offset, "First index emitted")->capture_default_str();

  std::uint64_t validate_max_n = 0;
  auto* validate_cmd = app.add_subcommand("validate", "Cross-check every engine and identity");
  validate_cmd->add_option("--max-n", validate_max_n)->required();

  BenchOptions bench_opts;
  auto* bench_cmd = app.add_subcommand("bench", "Time engines at n = --max-n");
  bench_cmd->add_option("--max-n", bench_opts.max_n)->required();
  bench_cmd->add_option("--engines", bench_opts.engines, "Comma-separated engine ids")
      ->required()
      ->delimiter(',');

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::optional<kernels::ScopedBackend> backend;
  try {
    if (kernel_choice != "auto") backend.emplace(kernels::parse_backend(kernel_choice));
    if (*compute_cmd) return cmd_compute(compute_opts, out);
    if (*table_cmd) return cmd_table(table_opts, out);
    if (*bfile_cmd) return cmd_bfile(bfile_opts, out);
    if (*validate_cmd) return cmd_validate(validate_max_n, out);
    if (*bench_cmd) return cmd_bench(bench_opts, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnknownSequence& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const TooLarge& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace trinom::cli
