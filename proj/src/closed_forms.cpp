#include "madelung/closed_forms.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "madelung/errors.hpp"
#include "madelung/special_functions.hpp"
#include "madelung/sums_of_squares.hpp"

namespace madelung {

namespace {

constexpr double kPi = std::numbers::pi;

double m8(double s) { return -16.0 * eta(s - 3.0) * zeta(s); }

double m8_at_one() {
  constexpr double step = 1e-6;
  const double a1 = 0.5 * (m8(1.0 + step) + m8(1.0 - step));
  const double a2 = 0.5 * (m8(1.0 + 2.0 * step) + m8(1.0 - 2.0 * step));
  // The symmetric average has an O(step^2) error; one Richardson step removes it.
  return (4.0 * a1 - a2) / 3.0;
}

}  // namespace

std::string_view to_string(FormulaId id) noexcept {
  switch (id) {
    case FormulaId::zucker1:
      return "zucker1";
    case FormulaId::zucker2:
      return "zucker2";
    case FormulaId::zucker4:
      return "zucker4";
    case FormulaId::zucker6:
      return "zucker6";
    case FormulaId::zucker8:
      return "zucker8";
    case FormulaId::tyagi:
      return "tyagi";
    case FormulaId::benson:
      return "benson";
    case FormulaId::hautot:
      return "hautot";
    case FormulaId::limit:
      return "limit";
    case FormulaId::critical:
      return "critical";
  }
  return "unknown";
}

ClosedFormResult zucker(int dimension, double s) {
  switch (dimension) {
    case 1:
      return {-2.0 * eta(2.0 * s), FormulaId::zucker1};
    case 2:
      return {-4.0 * beta(s) * eta(s), FormulaId::zucker2};
    case 4:
      return {-8.0 * eta(s - 1.0) * eta(s), FormulaId::zucker4};
    case 6:
      return {-16.0 * eta(s - 2.0) * beta(s) + 4.0 * eta(s) * beta(s - 2.0), FormulaId::zucker6};
    case 8:
      return {s == 1.0 ? m8_at_one() : m8(s), FormulaId::zucker8};
    default:
      throw DomainError("zucker: closed form known only for N in {1, 2, 4, 6, 8}, got " +
                        std::to_string(dimension));
  }
}

ClosedFormResult tyagi_m3(bool include_correction) {
  const double sqrt2 = std::numbers::sqrt2;
  double value = -0.125 - std::numbers::ln2 / (4.0 * kPi) - 4.0 * kPi / 3.0 + 1.0 / (2.0 * sqrt2) +
                 std::tgamma(0.125) * std::tgamma(0.375) / (std::pow(kPi, 1.5) * sqrt2);
  if (include_correction) {
    constexpr std::size_t max_k = 64;
    const RepTable r3 = RepTable::squares(3, max_k);
    double correction = 0.0;
    for (std::size_t k = 1; k <= max_k; ++k) {
      const double root = std::sqrt(static_cast<double>(k));
      const double term = r3.at(3, k).convert_to<double>() / (root * std::expm1(8.0 * kPi * root));
      correction += k % 2 == 1 ? -term : term;
      if (term != 0.0 && term < 1e-18) break;
    }
    value -= 2.0 * correction;
  }
  return {value, FormulaId::tyagi};
}

ClosedFormResult benson_mackenzie_m3() {
  // Sum over square shells max(i, j) = n, so that each shell is monotonically smaller.
  auto term = [](int i, int j) {
    const double a = 2.0 * i - 1.0;
    const double b = 2.0 * j - 1.0;
    const double sech = 1.0 / std::cosh(0.5 * kPi * std::sqrt(a * a + b * b));
    return sech * sech;
  };
  double sum = 0.0;
  for (int n = 1; n < 1000; ++n) {
    double shell = term(n, n);
    for (int k = 1; k < n; ++k) shell += 2.0 * term(n, k);
    sum += shell;
    if (shell < 1e-18) break;
  }
  return {-12.0 * kPi * sum, FormulaId::benson};
}

ClosedFormResult hautot_m3() {
  auto term = [](int i, int j) {
    const double r = std::sqrt(static_cast<double>(i * i + j * j));
    const double value = 1.0 / (std::sinh(kPi * r) * r);
    return i % 2 == 0 ? value : -value;
  };
  double sum = 0.0;
  for (int n = 1; n < 1000; ++n) {
    // Shell max(|i|, |j|) = n.
    double shell = 0.0;
    for (int k = -n; k <= n; ++k) {
      shell += term(n, k) + term(-n, k);
      if (k != -n && k != n) shell += term(k, n) + term(k, -n);
    }
    sum += shell;
    if (std::abs(shell) < 1e-16) break;
  }
  return {-0.5 * kPi + 3.0 * sum, FormulaId::hautot};
}

ClosedFormResult neighbor_limit(int dimension) {
  if (dimension < 1) throw std::invalid_argument("neighbor_limit: dimension must be >= 1");
  return {-2.0 * dimension, FormulaId::limit};
}

ClosedFormResult critical_value(double s) {
  if (!std::isfinite(s) || !is_nonpositive_integer(s)) {
    throw DomainError("critical_value: s must be a non-positive integer");
  }
  return {-2.0 * eta(2.0 * std::nearbyint(s)), FormulaId::critical};
}

}  // namespace madelung
