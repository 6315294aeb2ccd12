#include "madelung/qseries.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "madelung/errors.hpp"

namespace madelung {

QSeries::QSeries(std::size_t order) : coefficients_(order + 1) {}

QSeries::QSeries(std::size_t order, std::span<const BigInt> coefficients) : coefficients_(order + 1) {
  for (std::size_t n = 0; n < coefficients.size() && n <= order; ++n) coefficients_[n] = coefficients[n];
}

QSeries QSeries::one(std::size_t order) { return monomial(order, 0); }

QSeries QSeries::monomial(std::size_t order, std::size_t power, const BigInt& c) {
  QSeries series(order);
  series.add_to(power, c);
  return series;
}

const BigInt& QSeries::coefficient(std::size_t n) const {
  if (n > order()) {
    throw BoundsError("QSeries: coefficient " + std::to_string(n) + " beyond order " +
                      std::to_string(order()));
  }
  return coefficients_[n];
}

void QSeries::set(std::size_t n, BigInt value) {
  if (n > order()) throw BoundsError("QSeries: coefficient " + std::to_string(n) + " beyond order");
  coefficients_[n] = std::move(value);
}

void QSeries::add_to(std::size_t n, const BigInt& value) {
  if (n <= order()) coefficients_[n] += value;
}

void QSeries::require_same_order(const QSeries& other) const {
  if (order() != other.order()) throw std::invalid_argument("QSeries: truncation orders differ");
}

QSeries& QSeries::operator+=(const QSeries& other) {
  require_same_order(other);
  for (std::size_t n = 0; n < coefficients_.size(); ++n) coefficients_[n] += other.coefficients_[n];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& other) {
  require_same_order(other);
  for (std::size_t n = 0; n < coefficients_.size(); ++n) coefficients_[n] -= other.coefficients_[n];
  return *this;
}

QSeries& QSeries::operator*=(const BigInt& scalar) {
  for (auto& c : coefficients_) c *= scalar;
  return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  a.require_same_order(b);
  const std::size_t order = a.order();
  QSeries product(order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (a.coefficients_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= order; ++j) {
      if (b.coefficients_[j] != 0) product.coefficients_[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
  }
  return product;
}

QSeries QSeries::pow(unsigned exponent) const {
  QSeries result = one(order());
  QSeries base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

void QSeries::multiply_one_minus(std::size_t j) {
  if (j == 0) throw std::invalid_argument("QSeries: factor (1 - q^0) not allowed");
  for (std::size_t n = order(); n >= j; --n) coefficients_[n] -= coefficients_[n - j];
}

void QSeries::divide_one_minus(std::size_t j) {
  if (j == 0) throw std::invalid_argument("QSeries: factor (1 - q^0) not allowed");
  for (std::size_t n = j; n <= order(); ++n) coefficients_[n] += coefficients_[n - j];
}

QSeries QSeries::shifted(std::size_t k) const {
  QSeries result(order());
  for (std::size_t n = 0; n + k <= order(); ++n) result.coefficients_[n + k] = coefficients_[n];
  return result;
}

}  // namespace madelung
