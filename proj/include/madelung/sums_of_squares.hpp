#pragma once

// Exact representation counts r_N(m) (sums of N squares) and r_N^odd(m)
// (sums of N odd squares), built column by column in N by the recursions
//   r_{N+1}(m)     = r_N(m) + 2 sum_{i>=1, i^2<=m} r_N(m - i^2)
//   r_{N+1}^odd(m) = 2 sum_{i>=1, (2i-1)^2<m} r_N^odd(m - (2i-1)^2)

#include <cstddef>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace madelung {

using BigInt = boost::multiprecision::cpp_int;

enum class Parity { any, odd };

/// Memoized table of representation counts for dimensions 0..max_dimension
/// (1..max_dimension for the odd table) and m = 0..max_m. Immutable once built.
class RepTable {
 public:
  /// r_n(m) for 0 <= n <= max_dimension; r_0(m) = [m == 0].
  static RepTable squares(int max_dimension, std::size_t max_m);
  /// r_n^odd(m) for 1 <= n <= max_dimension; anchored at r_1^odd(m) = 2 [m odd square].
  static RepTable odd_squares(int max_dimension, std::size_t max_m);

  Parity parity() const noexcept { return parity_; }
  int max_dimension() const noexcept { return static_cast<int>(rows_.size()) - 1; }
  std::size_t max_m() const noexcept { return max_m_; }

  /// Throws BoundsError outside the table.
  const BigInt& at(int dimension, std::size_t m) const;
  std::span<const BigInt> row(int dimension) const;

 private:
  RepTable(Parity parity, std::size_t max_m) : parity_(parity), max_m_(max_m) {}

  Parity parity_;
  std::size_t max_m_;
  std::vector<std::vector<BigInt>> rows_;
};

/// Number of integer solutions of i_1^2 + ... + i_N^2 = m.
BigInt r_squares(int dimension, std::size_t m);

/// Number of solutions of (2j_1+1)^2 + ... + (2j_N+1)^2 = m; N >= 1.
BigInt r_odd_squares(int dimension, std::size_t m);

/// Number of representations by N even squares: r_N(m/4) if 4 | m, else 0.
BigInt r_even_squares(int dimension, std::size_t m);

/// Counts for every m' = 0..max_m by direct enumeration of lattice points.
/// Test oracle. Requires dimension <= 8 and max_m <= 400; throws BoundsError
/// when the enumeration would visit more than 1e9 tuples.
std::vector<BigInt> brute_force_counts(int dimension, std::size_t max_m, Parity parity);

/// Single entry of brute_force_counts.
BigInt brute_force_r(int dimension, std::size_t m, Parity parity);

}  // namespace madelung
