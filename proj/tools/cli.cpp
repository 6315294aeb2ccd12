#include "cli.hpp"

#include <array>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <future>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "madelung/closed_forms.hpp"
#include "madelung/cusp_forms.hpp"
#include "madelung/errors.hpp"

namespace madelung::cli {

namespace {

constexpr std::array<double, 4> kTableExponents{0.5, 1.5, 3.0, 6.0};

std::string exponent_column(double s) { return "M(" + format_number(s) + ")"; }

bool needs_quotes(const std::string& cell) { return cell.find_first_of(",\"\n\r") != std::string::npos; }

void write_cell(std::string& out, const std::string& cell) {
  if (!needs_quotes(cell)) {
    out += cell;
    return;
  }
  out += '"';
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
}

void write_row(std::string& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) out += ',';
    write_cell(out, cells[i]);
  }
  out += '\n';
}

nlohmann::ordered_json json_cell(const std::string& cell) {
  if (cell.empty()) return nullptr;
  const char* first = cell.data();
  const char* last = first + cell.size();
  std::int64_t integer = 0;
  if (auto [ptr, ec] = std::from_chars(first, last, integer); ec == std::errc() && ptr == last) return integer;
  // Integers too wide for int64 stay strings so no digits are lost.
  if (cell.find_first_not_of("-0123456789") == std::string::npos) return cell;
  char* end = nullptr;
  errno = 0;
  const double x = std::strtod(first, &end);
  if (end == last && errno == 0 && std::isfinite(x)) return x;
  return cell;
}

void require_range(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

struct Check {
  std::string name;
  std::string measured;
  std::string reference;
  std::string tolerance;
  bool passed = false;
};

Check numeric_check(std::string name, double measured, double reference, double tol) {
  return {std::move(name), format_number(measured), format_number(reference), format_number(tol),
          std::abs(measured - reference) < tol};
}

Check count_check(std::string name, std::size_t failures) {
  return {std::move(name), std::to_string(failures), "0", "0", failures == 0};
}

Check exact_check(std::string name, const BigInt& measured, const BigInt& reference) {
  return {std::move(name), format_integer(measured), format_integer(reference), "0", measured == reference};
}

std::string mismatch_cell(const std::optional<std::size_t>& n) { return n ? std::to_string(*n) : "none"; }

std::vector<Check> squares_checks() {
  std::vector<Check> checks;
  constexpr std::size_t max_m = 100;
  const RepTable any = RepTable::squares(6, max_m);
  const RepTable odd = RepTable::odd_squares(6, max_m);
  for (int n = 1; n <= 6; ++n) {
    for (Parity parity : {Parity::any, Parity::odd}) {
      const RepTable& table = parity == Parity::any ? any : odd;
      const auto brute = brute_force_counts(n, max_m, parity);
      std::size_t failures = 0;
      for (std::size_t m = 0; m <= max_m; ++m) failures += table.at(n, m) != brute[m];
      checks.push_back(count_check(std::string(parity == Parity::any ? "r_" : "r_odd_") + std::to_string(n) +
                                       " vs enumeration m<=100",
                                   failures));
    }
  }
  checks.push_back(exact_check("r_10(200)", r_squares(10, 200), BigInt("20513309148")));
  checks.push_back(exact_check("r_10(20)", r_squares(10, 20), 2050344));
  checks.push_back(exact_check("r_3(2)", r_squares(3, 2), 12));
  return checks;
}

std::vector<Check> zucker_checks() {
  std::vector<Check> checks;
  for (int n : {1, 2, 4, 6, 8}) {
    for (double s : kTableExponents) {
      const double bessel = evaluate(MadelungQuery{n, s, 1e-14, Method::automatic}).value;
      checks.push_back(numeric_check("zucker N=" + std::to_string(n) + " s=" + format_number(s), zucker(n, s).value,
                                     bessel, 1e-12));
    }
  }
  return checks;
}

std::vector<Check> cusp_checks() {
  std::vector<Check> checks;
  constexpr std::size_t order = 200;
  const CuspCoefficients table(order);
  const std::array<std::pair<std::size_t, int>, 9> primes{
      {{3, -12}, {5, 54}, {7, -88}, {11, 540}, {13, -418}, {17, 594}, {19, 836}, {23, -4104}, {29, -594}}};
  for (const auto& [p, value] : primes) checks.push_back(exact_check("e12(" + std::to_string(p) + ")", table.e12(p), value));

  std::size_t failures = 0;
  for (std::size_t m = 2; m <= order; ++m) {
    for (std::size_t n = m + 1; m * n <= order; ++n) {
      if (std::gcd(m, n) == 1) failures += table.e12(m * n) != table.e12(m) * table.e12(n);
    }
  }
  checks.push_back(count_check("e12 multiplicative n<=200", failures));

  failures = 0;
  for (std::size_t p = 3; p * p <= order; p += 2) {
    if (divisor_count(p) != 2) continue;
    const BigInt p5 = BigInt(p) * p * p * p * p;
    for (std::size_t lower = 1, mid = p; mid * p <= order; lower = mid, mid *= p) {
      failures += table.e12(mid * p) != table.e12(p) * table.e12(mid) - p5 * table.e12(lower);
    }
  }
  checks.push_back(count_check("e12 prime power recurrence n<=200", failures));

  failures = 0;
  for (std::size_t n = 1; n <= order; ++n) {
    const double bound = std::pow(static_cast<double>(n), 2.5) * static_cast<double>(divisor_count(n));
    failures += std::abs(table.e12(n).convert_to<double>()) > bound;
  }
  checks.push_back(count_check("Deligne bound n<=200", failures));

  for (int k = 1; k <= 4; ++k) {
    const auto mismatch = jacobi_first_mismatch(k, order);
    checks.push_back({"Jacobi " + std::to_string(2 * k) + " squares to order 200", mismatch_cell(mismatch), "none", "0",
                      !mismatch});
  }
  for (int k : {5, 6}) {
    const auto mismatch = glaisher_first_mismatch(k, order);
    checks.push_back({"Glaisher " + std::to_string(2 * k) + " squares to order 200", mismatch_cell(mismatch), "none",
                      "0", !mismatch});
  }

  const CuspSum m12 = m12_cusp(6.0);
  checks.push_back(numeric_check("M_12(6) from e12", m12.value, -21.2451729486919, 1e-11));
  return checks;
}

std::vector<Check> continuation_checks() {
  std::vector<Check> checks;
  for (int n = 1; n <= 6; ++n) {
    for (Method method : {Method::direct, Method::recursive}) {
      for (double s : {0.0, -1.0}) {
        const double value = evaluate(MadelungQuery{n, s, 1e-14, method}).value;
        checks.push_back(numeric_check("M_" + std::to_string(n) + "(" + format_number(s) + ") " +
                                           std::string(to_string(method)),
                                       value, s == 0.0 ? -1.0 : 0.0, 1e-10));
      }
    }
  }
  checks.push_back(numeric_check("critical value s=0", critical_value(0.0).value, -1.0, 1e-15));
  checks.push_back(numeric_check("critical value s=-1", critical_value(-1.0).value, 0.0, 1e-15));
  return checks;
}

void emit(const Table& table, Format format, const std::string& path, std::ostream& out) {
  const std::string text = format == Format::csv ? to_csv(table) : to_json(table);
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open " + path);
  file << text;
}

}  // namespace

std::string format_number(double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.15g", x == 0.0 ? 0.0 : x);
  return buffer;
}

std::string format_integer(const BigInt& n) { return n.str(); }

std::string to_csv(const Table& table) {
  std::string out;
  write_row(out, table.columns);
  for (const auto& row : table.rows) write_row(out, row);
  return out;
}

Table parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string cell;
  bool quoted = false;
  bool cell_started = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c != '"') {
        cell += c;
      } else if (i + 1 < text.size() && text[i + 1] == '"') {
        cell += '"';
        ++i;
      } else {
        quoted = false;
      }
    } else if (c == '"' && !cell_started) {
      quoted = true;
      cell_started = true;
    } else if (c == ',') {
      record.push_back(std::move(cell));
      cell.clear();
      cell_started = false;
    } else if (c == '\n') {
      record.push_back(std::move(cell));
      cell.clear();
      cell_started = false;
      records.push_back(std::move(record));
      record.clear();
    } else {
      cell += c;
      cell_started = true;
    }
  }
  if (quoted) throw UsageError("unterminated quote in CSV");
  if (cell_started || !record.empty()) throw UsageError("CSV must end with a newline");
  if (records.empty()) throw UsageError("CSV has no header");

  Table table;
  table.columns = std::move(records.front());
  for (std::size_t i = 1; i < records.size(); ++i) {
    if (records[i].size() != table.columns.size()) throw UsageError("CSV row " + std::to_string(i) + " has wrong width");
    table.rows.push_back(std::move(records[i]));
  }
  return table;
}

std::string to_json(const Table& table) {
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json record = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < table.columns.size(); ++i) record[table.columns[i]] = json_cell(row[i]);
    records.push_back(std::move(record));
  }
  return records.dump(2) + "\n";
}

Table compute_table(const MadelungQuery& query) {
  const MadelungValue v = evaluate(query);
  return {{"N", "s", "value", "m_max_used", "remainder_estimate", "method_used"},
          {{std::to_string(query.dimension), format_number(query.exponent), format_number(v.value),
            std::to_string(v.m_max_used), format_number(v.remainder_estimate), std::string(to_string(v.method_used))}}};
}

Table coefficient_table(std::size_t from, std::size_t to) {
  Table table{{"m", "c_1/2(m)", "r_2", "r_3", "r_4", "r_6", "r_8", "r_10"}, {}};
  require_range(from >= 1, "coefficient table starts at m = 1");
  require_range(to <= kMaxCoefficientM, "coefficient table limited to m <= " + std::to_string(kMaxCoefficientM));
  if (from > to) return table;
  const RepTable counts = RepTable::squares(10, to);
  for (std::size_t m = from; m <= to; ++m) {
    std::vector<std::string> row{std::to_string(m), format_number(coefficient_direct(0.5, m))};
    for (int n : {2, 3, 4, 6, 8, 10}) row.push_back(format_integer(counts.at(n, m)));
    table.rows.push_back(std::move(row));
  }
  return table;
}

Table madelung_table(int from, int to, std::optional<double> exponent, double tol, Method method) {
  std::vector<double> exponents(kTableExponents.begin(), kTableExponents.end());
  int limit = kMaxTableDimension;
  if (exponent) {
    exponents = {*exponent};
    limit = kMaxSingleExponentDimension;
  }
  Table table{{"N", "m_max"}, {}};
  for (double s : exponents) table.columns.push_back(exponent_column(s));
  require_range(from >= 1, "dimensions start at N = 1");
  require_range(to <= limit, "this table is limited to N <= " + std::to_string(limit));
  if (from > to) return table;

  std::vector<std::future<std::vector<std::string>>> rows;
  for (int n = from; n <= to; ++n) {
    rows.push_back(std::async(std::launch::async, [n, &exponents, tol, method] {
      std::vector<std::string> row{std::to_string(n), std::to_string(n == 1 ? 0 : heuristic_m_max(n))};
      for (double s : exponents) row.push_back(format_number(evaluate(MadelungQuery{n, s, tol, method}).value));
      return row;
    }));
  }
  for (auto& row : rows) table.rows.push_back(row.get());
  return table;
}

Table squares_table(int dimension, std::size_t from, std::size_t to) {
  Table table{{"m", "r_" + std::to_string(dimension) + "(m)"}, {}};
  require_range(dimension >= 1 && dimension <= kMaxSquaresDimension,
                "squares table needs 1 <= N <= " + std::to_string(kMaxSquaresDimension));
  require_range(to <= kMaxCoefficientM, "squares table limited to m <= " + std::to_string(kMaxCoefficientM));
  if (from > to) return table;
  const RepTable counts = RepTable::squares(dimension, to);
  for (std::size_t m = from; m <= to; ++m) table.rows.push_back({std::to_string(m), format_integer(counts.at(dimension, m))});
  return table;
}

Table e12_table(std::size_t from, std::size_t to) {
  Table table{{"n", "e12(n)"}, {}};
  require_range(from >= 1, "e12 table starts at n = 1");
  require_range(to <= kMaxE12Index, "e12 table limited to n <= " + std::to_string(kMaxE12Index));
  if (from > to) return table;
  const std::vector<std::int64_t> odd = e12_odd_table((to + 1) / 2);
  for (std::size_t n = from; n <= to; ++n) {
    table.rows.push_back({std::to_string(n), n % 2 == 0 ? "0" : std::to_string(odd[(n - 1) / 2])});
  }
  return table;
}

Table trace_table(const MadelungQuery& query) {
  const ConvergenceTrace trace = convergence_trace(query);
  const bool direct = query.method != Method::recursive;
  const bool recursive = query.method != Method::direct;
  std::size_t rows = recursive ? trace.terms_d.size() : 0;
  if (direct) rows = std::max(rows, trace.terms_a.size() + 1);

  Table table{{"m", "a(m)", "b_pair", "d(m)"}, {}};
  for (std::size_t m = 0; m < rows; ++m) {
    std::vector<std::string> row{std::to_string(m), "", "", ""};
    if (direct && m >= 1 && m <= trace.terms_a.size()) row[1] = format_number(trace.terms_a[m - 1]);
    if (direct && m >= 2 && m % 2 == 0 && m / 2 - 1 < trace.terms_paired.size()) {
      row[2] = format_number(trace.terms_paired[m / 2 - 1]);
    }
    if (recursive && m < trace.terms_d.size()) row[3] = format_number(trace.terms_d[m]);
    table.rows.push_back(std::move(row));
  }
  return table;
}

Table verify_table(std::string_view suite, bool& all_passed) {
  const std::vector<std::pair<std::string, std::function<std::vector<Check>()>>> suites{
      {"squares", squares_checks}, {"zucker", zucker_checks}, {"cusp", cusp_checks}, {"continuation", continuation_checks}};
  if (suite != "all" && std::none_of(suites.begin(), suites.end(), [&](const auto& s) { return s.first == suite; })) {
    throw UsageError("unknown suite " + std::string(suite));
  }
  Table table{{"suite", "check", "measured", "reference", "tolerance", "result"}, {}};
  all_passed = true;
  for (const auto& [name, run_suite] : suites) {
    if (suite != "all" && suite != name) continue;
    for (const Check& check : run_suite()) {
      all_passed = all_passed && check.passed;
      table.rows.push_back(
          {name, check.name, check.measured, check.reference, check.tolerance, check.passed ? "pass" : "fail"});
    }
  }
  return table;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"N-dimensional Madelung constants"};
  app.require_subcommand(1);

  int dimension = 3;
  double exponent = 0.5;
  std::string method_name = "auto";
  double tol = 1e-14;
  std::string format_name = "csv";
  std::string out_path;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_name, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", out_path, "write to this file instead of standard output");
  };
  auto add_query = [&](CLI::App* cmd) {
    cmd->add_option("-N", dimension, "dimension")->check(CLI::PositiveNumber);
    cmd->add_option("-s", exponent, "exponent");
    cmd->add_option("--method", method_name, "direct, recursive or auto")
        ->check(CLI::IsMember({"direct", "recursive", "auto"}));
    cmd->add_option("--tol", tol, "remainder target")->check(CLI::PositiveNumber);
  };

  CLI::App* compute = app.add_subcommand("compute", "single value of M_N(s)");
  add_query(compute);
  add_common(compute);

  std::string which;
  long long from = 1;
  long long to = 20;
  CLI::App* table_cmd = app.add_subcommand("table", "coefficients, madelung, squares or e12 table");
  table_cmd->add_option("which", which)->required()->check(CLI::IsMember({"coefficients", "madelung", "squares", "e12"}));
  table_cmd->add_option("--from", from, "first m, N or n");
  table_cmd->add_option("--to", to, "last m, N or n");
  CLI::Option* table_dimension = table_cmd->add_option("-N", dimension, "dimension for the squares table");
  CLI::Option* table_exponent = table_cmd->add_option("-s", exponent, "single exponent for the madelung table");
  table_cmd->add_option("--method", method_name)->check(CLI::IsMember({"direct", "recursive", "auto"}));
  table_cmd->add_option("--tol", tol)->check(CLI::PositiveNumber);
  add_common(table_cmd);

  CLI::App* trace = app.add_subcommand("trace", "term sequences of both expansions");
  add_query(trace);
  add_common(trace);

  std::string suite = "all";
  CLI::App* verify = app.add_subcommand("verify", "run invariant checks");
  verify->add_option("suite", suite)->check(CLI::IsMember({"all", "squares", "zucker", "cusp", "continuation"}));
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    const Format format = format_name == "json" ? Format::json : Format::csv;
    const Method method = parse_method(method_name);
    if (compute->parsed()) {
      emit(compute_table(MadelungQuery{dimension, exponent, tol, method}), format, out_path, out);
    } else if (trace->parsed()) {
      emit(trace_table(MadelungQuery{dimension, exponent, tol, method}), format, out_path, out);
    } else if (verify->parsed()) {
      bool passed = false;
      emit(verify_table(suite, passed), format, out_path, out);
      if (!passed) return kVerificationFailure;
    } else {
      require_range(from >= 0 && to >= 0, "ranges must be non-negative");
      const auto first = static_cast<std::size_t>(from);
      const auto last = static_cast<std::size_t>(to);
      if (which == "coefficients") {
        emit(coefficient_table(first, last), format, out_path, out);
      } else if (which == "madelung") {
        require_range(to <= kMaxSingleExponentDimension, "N too large");
        const std::optional<double> single = table_exponent->count() > 0 ? std::optional(exponent) : std::nullopt;
        emit(madelung_table(static_cast<int>(from), static_cast<int>(to), single, tol, method), format, out_path, out);
      } else if (which == "squares") {
        require_range(table_dimension->count() > 0, "squares table needs -N");
        emit(squares_table(dimension, first, last), format, out_path, out);
      } else {
        emit(e12_table(first, last), format, out_path, out);
      }
    }
  } catch (const ConvergenceError& e) {
    err << "convergence failure: " << e.what() << '\n';
    return kConvergenceFailure;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const BoundsError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }
  return kOk;
}

}  // namespace madelung::cli
