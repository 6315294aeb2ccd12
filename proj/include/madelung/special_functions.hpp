#pragma once

// Real-line special functions used by the lattice-sum expansions:
// gamma, the Dirichlet L-series zeta/eta/beta with their analytic
// continuations, and the modified Bessel function K of arbitrary real order.
//
// All functions are pure and reject non-finite arguments with DomainError.

#include <cmath>
#include <cstdint>
#include <numbers>

#include "madelung/errors.hpp"

namespace madelung {

/// Tolerance used to decide whether an argument sits on a non-positive integer.
inline constexpr double kPoleTolerance = 1e-12;

/// True when x lies within kPoleTolerance of 0, -1, -2, ...
bool is_nonpositive_integer(double x) noexcept;

/// Gamma function on the real line. Throws PoleError at 0, -1, -2, ...
double gamma(double x);

/// 1/Gamma(x); entire, exactly zero at the non-positive integers.
double reciprocal_gamma(double x);

/// Riemann zeta. Throws PoleError at s = 1.
double zeta(double s);

/// Dirichlet eta, sum of (-1)^(i-1) i^-s. Entire.
double eta(double s);

/// Dirichlet eta evaluated through its reflection formula,
///   eta(-t) = t (2 - 2^-t) pi^(-t-1) sin(pi t / 2) Gamma(t) zeta(t + 1),
/// with t = -s. Used for s <= 0 by eta() and
/// exposed so the two routes can be compared on 0 < s < 1.
double eta_by_reflection(double s);

/// Dirichlet beta, sum of (-1)^i (2i+1)^-s over i >= 0. Entire.
double beta(double s);

/// Modified Bessel function of the second kind K_nu(x), x > 0, any real nu.
/// Throws DomainError for x <= 0.
double bessel_k(double nu, double x);

/// e^x K_nu(x); same contract as bessel_k but free of underflow at large x.
double bessel_k_scaled(double nu, double x);

/// sin(pi t / 2), exact (0 or +-1) whenever t is an integer.
double sin_half_pi(double t) noexcept;

/// Sum of (-1)^k a(k), k >= 0, for a completely monotone sequence a, using
/// the Cohen-Rodriguez Villegas-Zagier acceleration with `terms` evaluations.
template <class Term>
double accelerated_alternating_sum(Term&& a, int terms = 24) {
  double d = std::pow(3.0 + std::sqrt(8.0), terms);
  d = 0.5 * (d + 1.0 / d);
  double b = -1.0;
  double c = -d;
  double sum = 0.0;
  for (int k = 0; k < terms; ++k) {
    c = b - c;
    sum += c * a(k);
    b = static_cast<double>(k + terms) * static_cast<double>(k - terms) * b /
        ((k + 0.5) * (k + 1.0));
  }
  return sum / d;
}

}  // namespace madelung
