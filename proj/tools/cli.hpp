#pragma once

// Command-line front end. Every command produces a Table which is then
// serialized as CSV or JSON; the builders are exposed for testing.

#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "madelung/madelung.hpp"
#include "madelung/sums_of_squares.hpp"

namespace madelung::cli {

enum ExitCode : int { kOk = 0, kVerificationFailure = 1, kUsageError = 2, kConvergenceFailure = 3 };

/// Bad flag values or ranges outside what a command supports.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  bool operator==(const Table&) const = default;
};

enum class Format { csv, json };

/// 15 significant digits, "C" locale.
std::string format_number(double x);
std::string format_integer(const BigInt& n);

std::string to_csv(const Table& table);
/// Inverse of to_csv; throws UsageError on malformed input.
Table parse_csv(std::string_view text);
/// Array of objects keyed by column. Cells that parse as numbers are emitted
/// as numbers, empty cells as null.
std::string to_json(const Table& table);

inline constexpr int kMaxTableDimension = 20;
inline constexpr int kMaxSingleExponentDimension = 100;
inline constexpr std::size_t kMaxCoefficientM = 10000;
inline constexpr int kMaxSquaresDimension = 24;
inline constexpr std::size_t kMaxE12Index = 100000;

Table compute_table(const MadelungQuery& query);
/// m, c_{1/2}(m), r_2, r_3, r_4, r_6, r_8, r_10 for m in [from, to].
Table coefficient_table(std::size_t from, std::size_t to);
/// N, m_max and M_N(s) at s = 1/2, 3/2, 3, 6 (N <= 20), or at the single
/// exponent given (N <= 100). Rows are evaluated concurrently.
Table madelung_table(int from, int to, std::optional<double> exponent, double tol, Method method);
/// m, r_N(m).
Table squares_table(int dimension, std::size_t from, std::size_t to);
/// n, e_12(n).
Table e12_table(std::size_t from, std::size_t to);
/// m, a(m), b_pair, d(m); direct columns are left empty for the recursive
/// method and vice versa.
Table trace_table(const MadelungQuery& query);
/// suite, check, measured, reference, tolerance, result. Sets all_passed.
Table verify_table(std::string_view suite, bool& all_passed);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace madelung::cli
