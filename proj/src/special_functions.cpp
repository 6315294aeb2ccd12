#include "madelung/special_functions.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace madelung {

namespace {

constexpr double kPi = std::numbers::pi;

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw DomainError(std::string(what) + ": argument must be finite");
  }
}

// B_{2j} / (2j)! for j = 1..9.
constexpr std::array<double, 9> kBernoulliOverFactorial = {
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
    7.0 / 6.0 / 87178291200.0,
    -3617.0 / 510.0 / 20922789888000.0,
    43867.0 / 798.0 / 6402373705728000.0,
};

// zeta(s) for s > 1: 15 explicit terms plus an Euler-Maclaurin tail at n = 16.
double zeta_euler_maclaurin(double s) {
  constexpr int n = 16;
  const double nd = n;
  const double n_pow = std::pow(nd, -s);

  double tail = 0.0;
  double rising = s;  // s (s+1) ... (s + 2j - 2)
  double n_power = n_pow / nd;  // n^{-s-2j+1} for j = 1
  std::array<double, kBernoulliOverFactorial.size()> corrections{};
  for (std::size_t j = 0; j < kBernoulliOverFactorial.size(); ++j) {
    corrections[j] = kBernoulliOverFactorial[j] * rising * n_power;
    rising *= (s + 2.0 * j + 1.0) * (s + 2.0 * j + 2.0);
    n_power /= nd * nd;
  }
  for (std::size_t j = corrections.size(); j-- > 0;) tail += corrections[j];
  tail += 0.5 * n_pow;
  tail += nd * n_pow / (s - 1.0);

  double head = 0.0;
  for (int k = n - 1; k >= 1; --k) head += std::pow(static_cast<double>(k), -s);
  return head + tail;
}

double eta_series(double s) {
  return accelerated_alternating_sum(
      [s](int k) { return std::pow(static_cast<double>(k + 1), -s); });
}

double beta_series(double s) {
  return accelerated_alternating_sum(
      [s](int k) { return std::pow(2.0 * k + 1.0, -s); });
}

// 1 - 2^{1-s}, accurate near s = 1.
double eta_zeta_factor(double s) { return -std::expm1((1.0 - s) * std::numbers::ln2); }

// e^x K_mu(x) and e^x K_{mu+1}(x) for 0 <= mu < 1 by the trapezoidal rule on
//   e^x K_nu(x) = int_0^inf exp(-x (cosh t - 1)) cosh(nu t) dt.
// The integrand is even and entire in t, so the rule converges geometrically;
// the step shrinks like x^{-1/2} to follow the Gaussian core at large x.
std::pair<double, double> bessel_k_pair_scaled(double mu, double x) {
  const double h = std::min(0.25, 0.35 / std::sqrt(x));
  double sum0 = 0.5;
  double sum1 = 0.5;
  for (int j = 1; j < 100000; ++j) {
    const double t = j * h;
    const double half_sinh = std::sinh(0.5 * t);
    const double damp = std::exp(-2.0 * x * half_sinh * half_sinh);
    const double f0 = damp * std::cosh(mu * t);
    const double f1 = damp * std::cosh((mu + 1.0) * t);
    sum0 += f0;
    sum1 += f1;
    if (f1 < 1e-18 * sum1 && f0 < 1e-18 * sum0) break;
  }
  return {h * sum0, h * sum1};
}

}  // namespace

bool is_nonpositive_integer(double x) noexcept {
  if (x > kPoleTolerance) return false;
  return std::abs(x - std::nearbyint(x)) <= kPoleTolerance;
}

double sin_half_pi(double t) noexcept {
  double r = std::fmod(t, 4.0);
  if (r < 0.0) r += 4.0;
  double sign = 1.0;
  if (r >= 2.0) {
    r -= 2.0;
    sign = -1.0;
  }
  if (r > 1.0) r = 2.0 - r;
  if (r == 0.0) return 0.0;
  if (r == 1.0) return sign;
  return sign * std::sin(0.5 * kPi * r);
}

double gamma(double x) {
  require_finite(x, "gamma");
  if (is_nonpositive_integer(x)) {
    throw PoleError("gamma: pole at non-positive integer " + std::to_string(x));
  }
  return std::tgamma(x);
}

double reciprocal_gamma(double x) {
  require_finite(x, "reciprocal_gamma");
  if (is_nonpositive_integer(x)) return 0.0;
  return 1.0 / std::tgamma(x);
}

double zeta(double s) {
  require_finite(s, "zeta");
  if (s == 1.0) throw PoleError("zeta: pole at s = 1");
  if (s > 1.0) return zeta_euler_maclaurin(s);
  if (s > 0.0) return eta_series(s) / eta_zeta_factor(s);
  if (s == 0.0) return -0.5;
  // zeta(-t) = -2 (2 pi)^{-t-1} sin(pi t / 2) Gamma(t + 1) zeta(t + 1)
  const double t = -s;
  return -2.0 * std::pow(2.0 * kPi, -t - 1.0) * sin_half_pi(t) * std::tgamma(t + 1.0) *
         zeta_euler_maclaurin(t + 1.0);
}

double eta_by_reflection(double s) {
  require_finite(s, "eta_by_reflection");
  if (s == 0.0) return 0.5;
  // At positive integers the formula is a removable 0 * inf; use the series.
  if (s > 0.0 && s == std::nearbyint(s)) return s == 1.0 ? std::numbers::ln2 : eta_series(s);
  const double t = -s;
  const double sine = sin_half_pi(t);
  if (sine == 0.0) return 0.0;
  // t Gamma(t) = Gamma(t + 1) removes the t = 0 singularity of the prefactor.
  return (2.0 - std::exp2(-t)) * std::pow(kPi, -t - 1.0) * sine * std::tgamma(t + 1.0) *
         zeta(t + 1.0);
}

double eta(double s) {
  require_finite(s, "eta");
  if (s == 1.0) return std::numbers::ln2;
  if (s > 0.0) return eta_series(s);
  return eta_by_reflection(s);
}

double beta(double s) {
  require_finite(s, "beta");
  if (s > 0.0) return beta_series(s);
  // beta(1 - t) = (2 / pi)^t sin(pi t / 2) Gamma(t) beta(t), t = 1 - s >= 1
  const double t = 1.0 - s;
  const double sine = sin_half_pi(t);
  if (sine == 0.0) return 0.0;
  return std::pow(2.0 / kPi, t) * sine * std::tgamma(t) * beta_series(t);
}

double bessel_k_scaled(double nu, double x) {
  require_finite(nu, "bessel_k");
  require_finite(x, "bessel_k");
  if (x <= 0.0) throw DomainError("bessel_k: x must be positive");

  const double order = std::abs(nu);
  const double whole = std::floor(order);
  const double mu = order - whole;
  auto [k_lo, k_hi] = bessel_k_pair_scaled(mu, x);
  if (whole == 0.0) return k_lo;

  // Upward recurrence K_{v+1} = (2v/x) K_v + K_{v-1} is stable for K.
  const auto steps = static_cast<std::int64_t>(whole);
  for (std::int64_t j = 1; j < steps; ++j) {
    const double next = 2.0 * (mu + static_cast<double>(j)) / x * k_hi + k_lo;
    k_lo = k_hi;
    k_hi = next;
  }
  return k_hi;
}

double bessel_k(double nu, double x) {
  const double scaled = bessel_k_scaled(nu, x);
  if (x > 700.0 || scaled > 1e300) return std::exp(std::log(scaled) - x);
  return scaled * std::exp(-x);
}

}  // namespace madelung
