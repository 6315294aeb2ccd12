#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "madelung/sums_of_squares.hpp"

namespace madelung {

/// Truncated power series in q with exact integer coefficients,
/// sum_{n=0}^{M} c_n q^n. All arithmetic is exact modulo q^{M+1}; binary
/// operations require equal truncation orders.
class QSeries {
 public:
  explicit QSeries(std::size_t order);
  QSeries(std::size_t order, std::span<const BigInt> coefficients);

  static QSeries one(std::size_t order);
  /// c q^power (zero when power > order).
  static QSeries monomial(std::size_t order, std::size_t power, const BigInt& c = 1);

  std::size_t order() const { return coefficients_.size() - 1; }
  /// Throws BoundsError when n > order().
  const BigInt& coefficient(std::size_t n) const;
  std::span<const BigInt> coefficients() const { return coefficients_; }
  void set(std::size_t n, BigInt value);
  /// Adds value to the coefficient of q^n; ignored beyond the truncation order.
  void add_to(std::size_t n, const BigInt& value);

  QSeries& operator+=(const QSeries& other);
  QSeries& operator-=(const QSeries& other);
  QSeries& operator*=(const BigInt& scalar);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(QSeries a, const BigInt& c) { return a *= c; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend bool operator==(const QSeries& a, const QSeries& b) = default;

  QSeries pow(unsigned exponent) const;

  /// In-place multiplication by (1 - q^j), j >= 1.
  void multiply_one_minus(std::size_t j);
  /// In-place division by (1 - q^j), j >= 1, i.e. multiplication by the
  /// geometric series sum_k q^{jk}.
  void divide_one_minus(std::size_t j);
  /// Multiplication by q^k.
  QSeries shifted(std::size_t k) const;

 private:
  void require_same_order(const QSeries& other) const;

  std::vector<BigInt> coefficients_;
};

}  // namespace madelung
