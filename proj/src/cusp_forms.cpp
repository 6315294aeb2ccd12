#include "madelung/cusp_forms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

#include "madelung/errors.hpp"
#include "madelung/special_functions.hpp"

namespace madelung {

namespace {

using Weight = std::function<BigInt(std::int64_t)>;

void require_order(std::size_t order) {
  if (order < 1 || order > kMaxIdentityOrder) {
    throw BoundsError("identity order must be in 1.." + std::to_string(kMaxIdentityOrder));
  }
}

BigInt power(std::int64_t j, unsigned e) {
  BigInt result = 1;
  for (unsigned i = 0; i < e; ++i) result *= j;
  return result;
}

int sign(std::size_t n) { return n % 2 == 0 ? 1 : -1; }

// sum_j w(j) q^j / (1 + q^j) = sum_j w(j) sum_{k>=1} (-1)^{k-1} q^{jk}
QSeries lambert_plus(std::size_t order, const Weight& w) {
  QSeries series(order);
  for (std::size_t j = 1; j <= order; ++j) {
    const BigInt wj = w(static_cast<std::int64_t>(j));
    if (wj == 0) continue;
    for (std::size_t k = 1; j * k <= order; ++k) series.add_to(j * k, k % 2 == 1 ? wj : BigInt(-wj));
  }
  return series;
}

// sum_j w(j) q^j / (1 - q^j) = sum_j w(j) sum_{k>=1} q^{jk}
QSeries lambert_minus(std::size_t order, const Weight& w) {
  QSeries series(order);
  for (std::size_t j = 1; j <= order; ++j) {
    const BigInt wj = w(static_cast<std::int64_t>(j));
    for (std::size_t k = 1; j * k <= order; ++k) series.add_to(j * k, wj);
  }
  return series;
}

// sum_j w(j) q^j / (1 + q^{2j}) = sum_j w(j) sum_{k>=0} (-1)^k q^{j(2k+1)}
QSeries lambert_plus_double(std::size_t order, const Weight& w) {
  QSeries series(order);
  for (std::size_t j = 1; j <= order; ++j) {
    const BigInt wj = w(static_cast<std::int64_t>(j));
    for (std::size_t k = 0; j * (2 * k + 1) <= order; ++k) {
      series.add_to(j * (2 * k + 1), k % 2 == 0 ? wj : BigInt(-wj));
    }
  }
  return series;
}

std::optional<std::size_t> first_difference(const QSeries& a, const QSeries& b) {
  for (std::size_t m = 0; m <= a.order(); ++m) {
    if (a.coefficient(m) != b.coefficient(m)) return m;
  }
  return std::nullopt;
}

}  // namespace

int chi4(std::uint64_t n) noexcept {
  switch (n % 4) {
    case 1:
      return 1;
    case 3:
      return -1;
    default:
      return 0;
  }
}

std::uint64_t divisor_count(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("divisor_count: n must be >= 1");
  std::uint64_t count = 0;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) count += d * d == n ? 1 : 2;
  }
  return count;
}

QSeries theta_alternating(std::size_t order) {
  if (order < 1) throw std::invalid_argument("theta_alternating: order must be >= 1");
  QSeries theta = QSeries::one(order);
  for (std::size_t j = 1; j * j <= order; ++j) theta.set(j * j, 2 * sign(j));
  return theta;
}

QSeries e10_series(std::size_t order) {
  QSeries product = QSeries::one(order);
  for (std::size_t j = 1; j <= order; ++j) {
    for (int i = 0; i < 4; ++i) product.divide_one_minus(j);
    if (2 * j <= order) {
      for (int i = 0; i < 14; ++i) product.multiply_one_minus(2 * j);
    }
  }
  return product.shifted(1);
}

QSeries e12_series(std::size_t order) {
  QSeries product = QSeries::one(order);
  for (std::size_t j = 1; 2 * j <= order; ++j) {
    for (int i = 0; i < 12; ++i) product.multiply_one_minus(2 * j);
  }
  return product.shifted(1);
}

QSeries jacobi_rhs(int k, std::size_t order) {
  const QSeries one = QSeries::one(order);
  switch (k) {
    case 1:
      return one - lambert_plus(order, [](std::int64_t j) { return BigInt(chi4(j)); }) * 4;
    case 2:
      return one + lambert_plus(order, [](std::int64_t j) { return BigInt(sign(j) * j); }) * 8;
    case 3:
      return one + lambert_plus(order, [](std::int64_t j) { return BigInt(chi4(j) * j * j); }) * 4 +
             lambert_plus_double(order, [](std::int64_t j) { return BigInt(sign(j) * j * j); }) * 16;
    case 4:
      return one + lambert_minus(order, [](std::int64_t j) { return BigInt(sign(j) * j * j * j); }) * 16;
    default:
      throw std::invalid_argument("jacobi: k must be in {1, 2, 3, 4}");
  }
}

int glaisher_scale(int k) {
  if (k == 5) return 5;
  if (k == 6) return 1;
  throw std::invalid_argument("glaisher: k must be 5 or 6");
}

QSeries glaisher_rhs(int k, std::size_t order, bool include_cusp) {
  const int scale = glaisher_scale(k);
  QSeries rhs = QSeries::one(order) * scale;
  if (k == 5) {
    rhs -= lambert_plus(order, [](std::int64_t j) { return chi4(j) * power(j, 4); }) * 4;
    rhs += lambert_plus_double(order, [](std::int64_t j) { return sign(j) * power(j, 4); }) * 64;
    if (include_cusp) rhs -= e10_series(order) * 32;
  } else {
    rhs += lambert_plus(order, [](std::int64_t j) { return sign(j) * power(j, 5); }) * 8;
    if (include_cusp) rhs -= e12_series(order) * 16;
  }
  return rhs;
}

std::optional<std::size_t> jacobi_first_mismatch(int k, std::size_t order) {
  require_order(order);
  const QSeries rhs = jacobi_rhs(k, order);
  return first_difference(theta_alternating(order).pow(2 * k), rhs);
}

std::optional<std::size_t> glaisher_first_mismatch(int k, std::size_t order, bool include_cusp) {
  require_order(order);
  const QSeries rhs = glaisher_rhs(k, order, include_cusp);
  const QSeries lhs = theta_alternating(order).pow(2 * k) * glaisher_scale(k);
  return first_difference(lhs, rhs);
}

bool verify_jacobi(int k, std::size_t order) { return !jacobi_first_mismatch(k, order); }

bool verify_glaisher(int k, std::size_t order, bool include_cusp) {
  return !glaisher_first_mismatch(k, order, include_cusp);
}

CuspCoefficients::CuspCoefficients(std::size_t order) : e12_(e12_series(order)), e10_(e10_series(order)) {
  if (order < 1) throw std::invalid_argument("CuspCoefficients: order must be >= 1");
}

const BigInt& CuspCoefficients::e12(std::size_t n) const {
  if (n == 0) throw BoundsError("e12: n must be >= 1");
  return e12_.coefficient(n);
}

const BigInt& CuspCoefficients::e10(std::size_t n) const {
  if (n == 0) throw BoundsError("e10: n must be >= 1");
  return e10_.coefficient(n);
}

BigInt e12(std::size_t n) {
  if (n == 0) throw BoundsError("e12: n must be >= 1");
  return e12_series(n).coefficient(n);
}

std::vector<std::int64_t> e12_odd_table(std::size_t count) {
  // E_12 = q F(q^2) with F = A^4, A(x) = prod (1-x^j)^3 = sum_k (-1)^k (2k+1) x^{k(k+1)/2}.
  // For F = A^4 and A_0 = 1:  n F_n = sum_{t=1}^{n} (5t - n) A_t F_{n-t}.
  // Rows are produced in blocks; contributions from earlier blocks are added
  // term by term over contiguous ranges, the few in-block ones sequentially.
  static std::mutex mutex;
  static std::vector<std::int64_t> cache{1};
  std::lock_guard lock(mutex);
  if (cache.size() >= count) return {cache.begin(), cache.begin() + static_cast<std::ptrdiff_t>(count)};

  constexpr std::size_t block = 4096;
  struct Term {
    std::size_t t;
    std::int64_t a;
  };
  std::vector<Term> terms;
  for (std::size_t k = 1; k * (k + 1) / 2 < count; ++k) {
    const auto odd = static_cast<std::int64_t>(2 * k + 1);
    terms.push_back({k * (k + 1) / 2, k % 2 == 0 ? odd : -odd});
  }

  std::vector<__int128> weighted(block);  // sum 5 t A_t F_{n-t}
  std::vector<__int128> plain(block);     // sum A_t F_{n-t}
  cache.reserve(count);
  while (cache.size() < count) {
    const std::size_t n0 = cache.size();
    const std::size_t n1 = std::min(count, n0 + block);
    std::fill(weighted.begin(), weighted.end(), 0);
    std::fill(plain.begin(), plain.end(), 0);
    for (const Term& term : terms) {
      if (term.t >= n1) break;
      const std::int64_t w = 5 * static_cast<std::int64_t>(term.t) * term.a;
      // Rows n with n - t < n0 only need finished coefficients.
      const std::size_t lo = std::max(n0, term.t);
      const std::size_t hi = std::min(n1, n0 + term.t);
      for (std::size_t n = lo; n < hi; ++n) {
        const std::int64_t f = cache[n - term.t];
        weighted[n - n0] += static_cast<__int128>(w) * f;
        plain[n - n0] += static_cast<__int128>(term.a) * f;
      }
    }
    for (std::size_t n = n0; n < n1; ++n) {
      __int128 w_sum = weighted[n - n0];
      __int128 p_sum = plain[n - n0];
      for (const Term& term : terms) {
        if (term.t > n - n0) break;
        const std::int64_t f = cache[n - term.t];
        w_sum += static_cast<__int128>(5 * static_cast<std::int64_t>(term.t) * term.a) * f;
        p_sum += static_cast<__int128>(term.a) * f;
      }
      const auto divisor = static_cast<__int128>(n);
      const __int128 acc = w_sum - divisor * p_sum;
      const __int128 value = acc / divisor;
      if (value * divisor != acc || value > std::numeric_limits<std::int64_t>::max() ||
          value < std::numeric_limits<std::int64_t>::min()) {
        throw std::overflow_error("e12_odd_table: coefficient out of 64-bit range at n = " +
                                  std::to_string(2 * n + 1));
      }
      cache.push_back(static_cast<std::int64_t>(value));
    }
  }
  return {cache.begin(), cache.begin() + static_cast<std::ptrdiff_t>(count)};
}

double m12_tail_bound(double s, std::uint64_t n) {
  // |e_12(n)| <= n^{5/2} d(n) and sum_{n<=x} d(n) <= x (ln x + 1); partial summation
  // gives sum_{n>N} d(n) n^{-a} <= a N^{1-a} ((ln N + 1)/(a-1) + 1/(a-1)^2), a = s - 5/2.
  if (!(s > 3.5)) throw DomainError("m12_tail_bound: requires s > 7/2");
  if (n < 1) n = 1;
  const double a = s - 2.5;
  const double x = static_cast<double>(n);
  return 16.0 * a * std::pow(x, 1.0 - a) * ((std::log(x) + 1.0) / (a - 1.0) + 1.0 / ((a - 1.0) * (a - 1.0)));
}

CuspSum m12_cusp(double s, double target, std::uint64_t max_terms) {
  if (!std::isfinite(s) || !(s > 3.5)) throw DomainError("m12_cusp: requires s > 7/2");
  if (!(target > 0.0)) throw std::invalid_argument("m12_cusp: target must be positive");
  if (max_terms < 1) throw std::invalid_argument("m12_cusp: max_terms must be >= 1");

  CuspSum result;
  if (m12_tail_bound(s, max_terms) >= target) {
    result.terms = max_terms;
  } else {
    // The bound decreases in N; bisect for the first N that meets the target.
    std::uint64_t lo = 1;
    std::uint64_t hi = max_terms;
    while (lo < hi) {
      const std::uint64_t mid = lo + (hi - lo) / 2;
      if (m12_tail_bound(s, mid) < target) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    result.terms = lo;
    result.converged = true;
  }
  result.tail_bound = m12_tail_bound(s, result.terms);

  const std::vector<std::int64_t> table = e12_odd_table(static_cast<std::size_t>((result.terms + 1) / 2));
  double sum = 0.0;
  for (std::size_t j = table.size(); j-- > 0;) {
    sum += static_cast<double>(table[j]) * std::pow(static_cast<double>(2 * j + 1), -s);
  }
  result.value = -8.0 * eta(s - 5.0) * eta(s) - 16.0 * sum;
  return result;
}

}  // namespace madelung
