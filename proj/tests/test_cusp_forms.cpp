#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "madelung/cusp_forms.hpp"
#include "madelung/errors.hpp"
#include "madelung/madelung.hpp"
#include "madelung/qseries.hpp"
#include "madelung/sums_of_squares.hpp"

using namespace madelung;

namespace {

constexpr std::size_t kOrder = 200;

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

const CuspCoefficients& coefficients() {
  static const CuspCoefficients table(kOrder);
  return table;
}

}  // namespace

TEST_CASE("QSeries arithmetic") {
  QSeries a(5);
  a.set(0, 1);
  a.set(1, 2);
  const QSeries square = a * a;  // 1 + 4q + 4q^2
  CHECK(square.coefficient(0) == 1);
  CHECK(square.coefficient(1) == 4);
  CHECK(square.coefficient(2) == 4);
  CHECK(square.coefficient(3) == 0);
  CHECK(a.pow(5).coefficient(5) == 32);
  CHECK(a.pow(0) == QSeries::one(5));
  CHECK((a + a) == a * BigInt(2));
  CHECK((a - a) == QSeries(5));
  CHECK(a.shifted(2).coefficient(3) == 2);
  CHECK(a.shifted(5).coefficient(5) == 1);

  QSeries b = QSeries::one(10);
  b.multiply_one_minus(3);
  CHECK(b.coefficient(3) == -1);
  b.divide_one_minus(3);
  CHECK(b == QSeries::one(10));

  QSeries geometric = QSeries::one(6);
  geometric.divide_one_minus(1);
  for (std::size_t n = 0; n <= 6; ++n) CHECK(geometric.coefficient(n) == 1);

  CHECK(QSeries::monomial(4, 9) == QSeries(4));
  CHECK_THROWS_AS(a.coefficient(6), BoundsError);
  CHECK_THROWS_AS(a + QSeries(4), std::invalid_argument);
  CHECK_THROWS_AS(b.multiply_one_minus(0), std::invalid_argument);
}

TEST_CASE("alternating theta series") {
  const QSeries theta = theta_alternating(50);
  CHECK(theta.coefficient(0) == 1);
  CHECK(theta.coefficient(1) == -2);
  CHECK(theta.coefficient(4) == 2);
  CHECK(theta.coefficient(9) == -2);
  CHECK(theta.coefficient(2) == 0);
  CHECK(theta.coefficient(49) == -2);
}

TEST_CASE("theta powers count signed representations") {
  const RepTable table = RepTable::squares(12, kOrder);
  const QSeries theta = theta_alternating(kOrder);
  for (unsigned k = 1; k <= 6; ++k) {
    const QSeries power = theta.pow(2 * k);
    for (std::size_t m = 0; m <= kOrder; ++m) {
      const BigInt& r = table.at(static_cast<int>(2 * k), m);
      CHECK(power.coefficient(m) == (m % 2 == 0 ? r : BigInt(-r)));
    }
  }
}

TEST_CASE("Jacobi identities for 2, 4, 6, 8 squares") {
  for (int k = 1; k <= 4; ++k) {
    CAPTURE(k);
    CHECK(verify_jacobi(k, 100));
    CHECK(verify_jacobi(k, kOrder));
  }
  CHECK_THROWS_AS(verify_jacobi(5, 10), std::invalid_argument);
  CHECK_THROWS_AS(verify_jacobi(1, 201), BoundsError);
}

TEST_CASE("Glaisher identities for 10 and 12 squares") {
  CHECK(verify_glaisher(6, 100));
  CHECK(verify_glaisher(5, 100));
  CHECK(verify_glaisher(6, kOrder));
  CHECK(verify_glaisher(5, kOrder));
  CHECK_THROWS_AS(verify_glaisher(4, 10), std::invalid_argument);
}

TEST_CASE("dropping the cusp form breaks the identity at its first nonzero coefficient") {
  const auto& table = coefficients();
  std::size_t first12 = 1;
  while (table.e12(first12) == 0) ++first12;
  std::size_t first10 = 1;
  while (table.e10(first10) == 0) ++first10;
  CHECK(glaisher_first_mismatch(6, kOrder, false) == first12);
  CHECK(glaisher_first_mismatch(5, kOrder, false) == first10);
  CHECK(!verify_glaisher(6, kOrder, false));
}

TEST_CASE("e12 values") {
  CHECK(e12(1) == 1);
  CHECK(e12(3) == -12);
  CHECK(e12(5) == 54);
  CHECK(e12(29) == -594);
  const std::vector<std::pair<std::size_t, int>> primes{{3, -12},  {5, 54},   {7, -88},    {11, 540}, {13, -418},
                                                        {17, 594}, {19, 836}, {23, -4104}, {29, -594}};
  for (const auto& [p, value] : primes) {
    CAPTURE(p);
    CHECK(coefficients().e12(p) == value);
  }
  CHECK_THROWS_AS(coefficients().e12(0), BoundsError);
  CHECK_THROWS_AS(coefficients().e12(kOrder + 1), BoundsError);
  CHECK_THROWS_AS(coefficients().e10(kOrder + 1), BoundsError);
  CHECK(coefficients().e10(1) == 1);
}

TEST_CASE("e12 vanishes at even n") {
  for (std::size_t n = 2; n <= kOrder; n += 2) CHECK(coefficients().e12(n) == 0);
}

TEST_CASE("e12 is multiplicative") {
  const auto& table = coefficients();
  for (std::size_t m = 2; m <= kOrder; ++m) {
    for (std::size_t n = m + 1; m * n <= kOrder; ++n) {
      if (std::gcd(m, n) != 1) continue;
      CAPTURE(m);
      CAPTURE(n);
      CHECK(table.e12(m * n) == table.e12(m) * table.e12(n));
    }
  }
}

TEST_CASE("prime power recurrence") {
  const auto& table = coefficients();
  for (std::size_t p : {3, 5, 7}) {
    const BigInt p5 = BigInt(p) * p * p * p * p;
    // lambda = 1 uses e12(p^0) = e12(1) = 1.
    for (std::size_t lower = 1, mid = p; mid * p <= kOrder; lower = mid, mid *= p) {
      CAPTURE(mid * p);
      CHECK(table.e12(mid * p) == table.e12(p) * table.e12(mid) - p5 * table.e12(lower));
    }
  }
}

TEST_CASE("Deligne bound") {
  const auto& table = coefficients();
  for (std::size_t n = 1; n <= kOrder; ++n) {
    const double bound = std::pow(static_cast<double>(n), 2.5) * static_cast<double>(divisor_count(n));
    CAPTURE(n);
    CHECK(std::abs(table.e12(n).convert_to<double>()) <= bound);
  }
}

TEST_CASE("prime values are small relative to the bound") {
  for (std::size_t p = 3; p <= kOrder; ++p) {
    if (!is_prime(p)) continue;
    CHECK(std::abs(coefficients().e12(p).convert_to<double>()) <= 2.0 * std::pow(static_cast<double>(p), 2.5));
  }
}

TEST_CASE("fast e12 table matches the exact product") {
  constexpr std::size_t order = 2001;
  const QSeries exact = e12_series(order);
  const std::vector<std::int64_t> fast = e12_odd_table((order + 1) / 2);
  for (std::size_t j = 0; j < fast.size(); ++j) {
    CAPTURE(2 * j + 1);
    CHECK(exact.coefficient(2 * j + 1) == fast[j]);
  }
}

TEST_CASE("helpers") {
  CHECK(chi4(1) == 1);
  CHECK(chi4(3) == -1);
  CHECK(chi4(4) == 0);
  CHECK(chi4(6) == 0);
  CHECK(chi4(13) == 1);
  CHECK(divisor_count(1) == 1);
  CHECK(divisor_count(12) == 6);
  CHECK(divisor_count(49) == 3);
  CHECK(divisor_count(97) == 2);
  CHECK_THROWS_AS(divisor_count(0), std::invalid_argument);
}

TEST_CASE("M_12 from the cusp form") {
  const CuspSum cusp = m12_cusp(6.0);
  CHECK(cusp.converged);
  CHECK(cusp.tail_bound < 1e-14);
  CHECK(std::abs(cusp.value - -21.2451729486919) < 1e-11);
  const double bessel = madelung_recursive(MadelungQuery{12, 6.0, 1e-14, Method::recursive}).value;
  CHECK(std::abs(cusp.value - bessel) < 1e-11);
}

TEST_CASE("M_12 at s = 4 stays within its reported tail bound") {
  // The bound decays like N^{-1/2} here, so the term cap is reached first.
  const CuspSum cusp = m12_cusp(4.0);
  CHECK(!cusp.converged);
  CHECK(cusp.terms == 5'000'000);
  const double bessel = madelung_recursive(MadelungQuery{12, 4.0, 1e-14, Method::recursive}).value;
  CHECK(std::abs(cusp.value - bessel) <= cusp.tail_bound);
}

TEST_CASE("M_12 series domain") {
  CHECK_THROWS_AS(m12_cusp(3.5), DomainError);
  CHECK_THROWS_AS(m12_cusp(0.5), DomainError);
  CHECK_THROWS_AS(m12_tail_bound(3.0, 10), DomainError);
  CHECK(m12_tail_bound(6.0, 1000) > m12_tail_bound(6.0, 2000));
  const CuspSum short_sum = m12_cusp(8.0, 1e-6);
  CHECK(short_sum.converged);
  CHECK(std::abs(short_sum.value - madelung_recursive(MadelungQuery{12, 8.0, 1e-14, Method::recursive}).value) <
        short_sum.tail_bound);
}
