#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/special_functions/bessel.hpp>

#include "madelung/errors.hpp"
#include "madelung/madelung.hpp"
#include "madelung/special_functions.hpp"
#include "madelung/sums_of_squares.hpp"
#include "reference_tables.hpp"

using namespace madelung;

namespace {

constexpr double kPi = std::numbers::pi;

MadelungValue run(int n, double s, Method method, double tol = 1e-14) {
  return evaluate(MadelungQuery{n, s, tol, method});
}

bool close_rel(double a, double b, double tol) { return std::abs(a - b) <= tol * std::abs(b); }

}  // namespace

TEST_CASE("direct coefficients") {
  CHECK(close_rel(coefficient_direct(0.5, 1), 1.18165052269629e-1, 1e-14));
  CHECK(close_rel(coefficient_direct(0.5, 100), 2.02339226243198e-14, 1e-14));
  CHECK(coefficient_direct(0.0, 5) == 0.0);
  CHECK(coefficient_direct(-2.0, 5) == 0.0);
  CHECK_THROWS_AS(coefficient_direct(0.5, 0), std::invalid_argument);
}

TEST_CASE("sinh integral form of the s = 1/2 coefficients") {
  CHECK(close_rel(coefficient_half_integral(1), 1.18165052269629e-1, 1e-14));
  CHECK(close_rel(coefficient_half_integral(4), 3.66634491506766e-3, 1e-14));
  CHECK(close_rel(coefficient_half_integral(40), 2.62596820286192e-9, 1e-14));
  std::vector<std::size_t> ms;
  for (std::size_t m = 1; m <= 20; ++m) ms.push_back(m);
  for (std::size_t m : {40, 60, 80, 100}) ms.push_back(m);
  for (std::size_t m : ms) {
    CAPTURE(m);
    CHECK(std::abs(coefficient_direct(0.5, m) - coefficient_half_integral(m)) < 1e-15);
  }
}

TEST_CASE("coefficients against 20-digit values") {
  for (std::size_t i = 0; i < reference::kCoefficientRows.size(); ++i) {
    const auto m = static_cast<std::size_t>(reference::kCoefficientRows[i].m);
    const double accurate = reference::kCoefficientHighPrecision[i];
    CAPTURE(m);
    CHECK(close_rel(coefficient_direct(0.5, m), accurate, 4e-15));
    CHECK(close_rel(coefficient_half_integral(m), accurate, 4e-15));
    // Table values are the accurate ones rounded to 15 digits.
    CHECK(close_rel(reference::kCoefficientRows[i].c_half, accurate, 5e-15));
  }
}

TEST_CASE("direct coefficients are positive and decay") {
  for (double s : {0.1, 0.5, 1.5, 3.0, 6.0}) {
    for (std::size_t m = 1; m <= 60; ++m) CHECK(coefficient_direct(s, m) > 0.0);
  }
  double previous = coefficient_direct(0.5, 1);
  for (std::size_t m = 2; m <= 201; ++m) {
    const double current = coefficient_direct(0.5, m);
    CHECK(current < previous);
    previous = current;
  }
}

TEST_CASE("recursive coefficient with a half-integer Bessel order") {
  // s = 1/2, N = 2: K_{-1/2} is elementary and the k-sum is geometric, giving
  // c = -4 / (sqrt(M) (e^{pi sqrt(M)} + 1)), M = 8m + 2.
  for (std::size_t m : {0, 1, 2, 5, 20}) {
    const double big_m = 8.0 * static_cast<double>(m) + 2.0;
    const double expected = -4.0 / (std::sqrt(big_m) * (std::exp(kPi * std::sqrt(big_m)) + 1.0));
    CAPTURE(m);
    CHECK(close_rel(coefficient_recursive(0.5, 2, m), expected, 1e-14));
  }
}

TEST_CASE("recursive coefficient against an independent long double evaluation") {
  auto oracle = [](double s, int n, std::size_t m) {
    using boost::math::cyl_bessel_k;
    const long double big_m = 8.0L * m + n;
    const long double nu = s - 0.5L * n;
    long double sum = 0.0L;
    for (int k = 1; k <= 40; ++k) {
      const long double term = std::pow(big_m / (4.0L * k * k), (2.0L * s - n) / 4.0L) *
                               cyl_bessel_k(nu, std::numbers::pi_v<long double> * k * std::sqrt(big_m));
      sum += k % 2 == 1 ? -term : term;
    }
    return static_cast<double>(4.0L * std::pow(std::numbers::pi_v<long double>, static_cast<long double>(s)) /
                               std::tgamma(static_cast<long double>(s)) * sum);
  };
  const double c = coefficient_recursive(0.5, 15, 10);
  CHECK(c < 0.0);
  CHECK(std::abs(c) < 1e-10);
  CHECK(close_rel(c, oracle(0.5, 15, 10), 1e-13));
  for (double s : {0.5, 1.5, 3.0, 6.0}) {
    for (int n : {1, 3, 8, 15}) {
      for (std::size_t m : {0, 3, 17}) {
        CAPTURE(s);
        CAPTURE(n);
        CAPTURE(m);
        const double value = coefficient_recursive(s, n, m);
        CHECK(value < 0.0);
        CHECK(close_rel(value, oracle(s, n, m), 1e-13));
      }
    }
  }
  CHECK(coefficient_recursive(0.0, 4, 3) == 0.0);
}

TEST_CASE("three dimensional rock salt value") {
  for (Method method : {Method::direct, Method::recursive}) {
    const MadelungValue v = run(3, 0.5, method);
    CHECK(std::abs(v.value - -1.74756459463318) < 1e-14);
    CHECK(v.remainder_estimate <= 1e-14);
    CHECK(v.method_used == method);
  }
}

TEST_CASE("published Madelung table") {
  for (const auto& row : reference::kMadelungRows) {
    for (std::size_t i = 0; i < reference::kExponents.size(); ++i) {
      const double s = reference::kExponents[i];
      const double printed = row.value[i];
      const double accurate = reference::kMadelungHighPrecision[static_cast<std::size_t>(row.n - 1)][i];
      CAPTURE(row.n);
      CAPTURE(s);
      const double value = run(row.n, s, Method::automatic).value;
      CHECK(std::abs(value - printed) <= reference::fourteenth_digit_unit(printed));
      CHECK(std::abs(value - accurate) <= 2e-15 * std::abs(accurate));
      // The printed N = 15, s = 6 entry ends in ...5311; the value is ...53121756.
      if (row.n == 15 && i == 3) {
        CHECK(std::abs(value - printed) > reference::last_digit_unit(printed));
      } else {
        CHECK(std::abs(value - printed) <= reference::last_digit_unit(printed));
      }
    }
  }
}

TEST_CASE("single dimension is the eta term") {
  CHECK(run(1, 0.5, Method::direct).value == -2.0 * std::numbers::ln2);
  CHECK(run(1, 0.5, Method::recursive).value == -2.0 * std::numbers::ln2);
  CHECK(run(1, 0.5, Method::direct).m_max_used == 0);
}

TEST_CASE("the two expansions agree") {
  for (double s : {0.5, 1.5, 3.0, 6.0}) {
    for (int n = 2; n <= 10; ++n) {
      CAPTURE(s);
      CAPTURE(n);
      CHECK(std::abs(run(n, s, Method::direct).value - run(n, s, Method::recursive).value) < 1e-12);
    }
  }
  // Continued values away from the table exponents.
  for (double s : {-1.5, -0.5, 0.25, 0.75, 2.2}) {
    for (int n : {2, 3, 5}) {
      CAPTURE(s);
      CAPTURE(n);
      CHECK(std::abs(run(n, s, Method::direct).value - run(n, s, Method::recursive).value) < 1e-12);
    }
  }
}

TEST_CASE("values decrease with dimension and stay above -2N") {
  for (double s : {0.5, 1.5, 3.0, 6.0}) {
    double previous = run(1, s, Method::recursive).value;
    for (int n = 2; n <= 20; ++n) {
      CAPTURE(s);
      CAPTURE(n);
      const MadelungValue v = run(n, s, Method::recursive);
      CHECK(v.value < previous);
      CHECK(v.value >= -2.0 * n);
      CHECK(v.value < 0.0);
      CHECK(v.remainder_estimate <= 1e-14);
      previous = v.value;
    }
  }
}

TEST_CASE("crossing points at s = 0 and s = -1") {
  for (int n = 1; n <= 6; ++n) {
    for (Method method : {Method::direct, Method::recursive}) {
      CAPTURE(n);
      CHECK(std::abs(run(n, 0.0, method).value + 1.0) < 1e-10);
      CHECK(std::abs(run(n, -1.0, method).value) < 1e-10);
      CHECK(std::abs(run(n, -2.0, method).value) < 1e-10);
    }
  }
}

TEST_CASE("large exponent approaches the nearest neighbour count") {
  CHECK(std::abs(run(3, 50.0, Method::recursive).value + 6.0) < 1e-13);
  CHECK(std::abs(run(4, 40.0, Method::recursive).value + 8.0) < 1e-10);
}

TEST_CASE("trace of the direct expansion") {
  const ConvergenceTrace trace = convergence_trace(MadelungQuery{16, 0.5, 1e-14, Method::direct});
  REQUIRE(trace.terms_a.size() >= 40);
  REQUIRE(trace.terms_paired.size() == trace.terms_a.size() / 2);
  for (std::size_t i = 0; i + 1 < 40; ++i) CHECK(trace.terms_a[i] * trace.terms_a[i + 1] < 0.0);

  const auto peak = std::max_element(trace.terms_a.begin(), trace.terms_a.end(),
                                     [](double a, double b) { return std::abs(a) < std::abs(b); });
  const auto peak_m = static_cast<int>(peak - trace.terms_a.begin()) + 1;
  CHECK(peak_m >= 12);
  CHECK(peak_m <= 16);

  double sum_a = 0.0;
  double sum_b = 0.0;
  for (std::size_t j = 0; j < trace.terms_paired.size(); ++j) {
    sum_a += trace.terms_a[2 * j] + trace.terms_a[2 * j + 1];
    sum_b += trace.terms_paired[j];
    CHECK(std::abs(sum_a - sum_b) < 1e-12);
  }
  const double value = run(16, 0.5, Method::direct).value;
  CHECK(std::abs(sum_b - (value + 2.0 * std::numbers::ln2)) < 1e-12);
}

TEST_CASE("trace of the recursive expansion has zeros where r_2^odd vanishes") {
  const ConvergenceTrace trace = convergence_trace(MadelungQuery{3, 0.5, 1e-14, Method::recursive});
  CHECK(trace.recursion_source_dimension == 2);
  REQUIRE(!trace.terms_d.empty());
  bool saw_zero = false;
  for (std::size_t m = 0; m < trace.terms_d.size(); ++m) {
    const bool vanishes = r_odd_squares(2, 8 * m + 2) == 0;
    CHECK((trace.terms_d[m] == 0.0) == vanishes);
    saw_zero = saw_zero || vanishes;
  }
  CHECK(saw_zero);
}

TEST_CASE("looser tolerance gives shorter traces") {
  const auto tight = convergence_trace(MadelungQuery{8, 0.5, 1e-14, Method::automatic});
  const auto loose = convergence_trace(MadelungQuery{8, 0.5, 1e-6, Method::automatic});
  CHECK(loose.terms_a.size() < tight.terms_a.size());
  CHECK(loose.terms_d.size() < tight.terms_d.size());
}

TEST_CASE("m_max heuristic") {
  CHECK(heuristic_m_max(1) == 86);
  CHECK(heuristic_m_max(3) == 118);
  CHECK(heuristic_m_max(20) == 767);
}

TEST_CASE("convergence failures and bad queries") {
  CHECK_THROWS_AS(run(3, 0.5, Method::direct, 1e-300), ConvergenceError);
  CHECK_THROWS_AS(run(3, 0.5, Method::recursive, 1e-300), ConvergenceError);
  CHECK_THROWS_AS(run(0, 0.5, Method::recursive), std::invalid_argument);
  CHECK_THROWS_AS(run(3, 0.5, Method::recursive, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(run(3, std::nan(""), Method::recursive), DomainError);
  CHECK(parse_method("auto") == Method::automatic);
  CHECK(parse_method("direct") == Method::direct);
  CHECK(to_string(Method::recursive) == "recursive");
  CHECK_THROWS_AS(parse_method("fast"), std::invalid_argument);
  CHECK(run(3, 0.5, Method::automatic).method_used == Method::recursive);
}
