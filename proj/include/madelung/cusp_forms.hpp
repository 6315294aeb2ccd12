#pragma once

// Sums of 2..12 squares as q-series identities, the cusp forms E_10 and E_12,
// and M_12(s) as a Dirichlet series over the coefficients of E_12.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "madelung/qseries.hpp"
#include "madelung/sums_of_squares.hpp"

namespace madelung {

/// Largest truncation order accepted by the identity checks.
inline constexpr std::size_t kMaxIdentityOrder = 200;

/// +1, -1, 0 for n = 1, 3, even (mod 4).
int chi4(std::uint64_t n) noexcept;
/// Number of positive divisors of n (n >= 1).
std::uint64_t divisor_count(std::uint64_t n);

/// sum_{j in Z} (-1)^j q^{j^2}.
QSeries theta_alternating(std::size_t order);

/// E_10(q) = q prod_j (1-q^{2j})^14 / (1-q^j)^4.
QSeries e10_series(std::size_t order);
/// E_12(q) = q prod_j (1-q^{2j})^12.
QSeries e12_series(std::size_t order);

/// Right side of the 2k-squares identity, k in {1, 2, 3, 4}.
QSeries jacobi_rhs(int k, std::size_t order);
/// Right side of the 2k-squares identity, k in {5, 6}, multiplied by
/// `scale` = 5 for k = 5 (to stay integral) and 1 for k = 6. The cusp term
/// is left out when include_cusp is false.
QSeries glaisher_rhs(int k, std::size_t order, bool include_cusp = true);
int glaisher_scale(int k);

/// Smallest m at which theta_alternating^{2k} and the right side differ.
std::optional<std::size_t> jacobi_first_mismatch(int k, std::size_t order);
std::optional<std::size_t> glaisher_first_mismatch(int k, std::size_t order, bool include_cusp = true);

/// Coefficient-wise check of the 2k-squares identity through q^order.
/// Throws std::invalid_argument for k outside {1,2,3,4} (resp. {5,6}) and
/// BoundsError for order outside 1..kMaxIdentityOrder.
bool verify_jacobi(int k, std::size_t order);
bool verify_glaisher(int k, std::size_t order, bool include_cusp = true);

/// e_12(n) and e_10(n) for n = 1..order, from the exact products.
class CuspCoefficients {
 public:
  explicit CuspCoefficients(std::size_t order);

  std::size_t order() const { return e12_.order(); }
  /// Throw BoundsError for n = 0 or n > order().
  const BigInt& e12(std::size_t n) const;
  const BigInt& e10(std::size_t n) const;

 private:
  QSeries e12_;
  QSeries e10_;
};

/// e_12(n) by exact product expansion to order n.
BigInt e12(std::size_t n);

/// e_12(1), e_12(3), ..., e_12(2L+1) for the first `count` odd n, by the
/// power recurrence for (prod (1-x^j)^3)^4 with Jacobi's triple-product
/// series for the cube. Fast enough for millions of terms. Cached.
std::vector<std::int64_t> e12_odd_table(std::size_t count);

/// Deligne-bound estimate of 16 |sum_{n>N} e_12(n) n^{-s}|, s > 7/2.
double m12_tail_bound(double s, std::uint64_t n);

struct CuspSum {
  double value = 0.0;
  std::uint64_t terms = 0;  // largest n included
  double tail_bound = 0.0;
  bool converged = false;
};

/// M_12(s) = -8 eta(s-5) eta(s) - 16 sum_n e_12(n) n^{-s}, truncated at the
/// first N whose tail bound is below `target` (but not beyond max_terms, in
/// which case converged = false). Throws DomainError for s <= 7/2.
CuspSum m12_cusp(double s, double target = 1e-14, std::uint64_t max_terms = 5'000'000);

}  // namespace madelung
