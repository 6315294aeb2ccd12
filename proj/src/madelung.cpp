#include "madelung/madelung.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

#include "madelung/errors.hpp"
#include "madelung/special_functions.hpp"
#include "madelung/sums_of_squares.hpp"

namespace madelung {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxBesselTerms = 200;
constexpr double kBesselRelativeCutoff = 1e-20;
constexpr std::size_t kExtensionFactor = 10;

// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

template <class Term>
double bessel_series(Term&& term) {
  double sum = 0.0;
  for (int k = 1; k <= kMaxBesselTerms; ++k) {
    const double t = term(k);
    sum += t;
    if (t == 0.0 || std::abs(t) < kBesselRelativeCutoff * std::abs(sum)) break;
  }
  return sum;
}

void validate(const MadelungQuery& query) {
  if (query.dimension < 1) throw std::invalid_argument("dimension must be >= 1");
  if (!std::isfinite(query.exponent)) throw DomainError("exponent must be finite");
  if (!(query.target_remainder > 0.0)) {
    throw std::invalid_argument("target_remainder must be positive");
  }
}

std::size_t even_ceil(std::size_t m) { return m + (m % 2); }

// Look-ahead window of pairs that must stay below the target after the last
// significant one. Wide enough to span the gap between consecutive squares,
// where r_1 (and hence the N = 2 terms) vanishes.
std::size_t direct_window(std::size_t m) {
  return even_ceil(2 * static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(m)))) + 2);
}

// Same role for the recursive sums; spans the gap between triangular numbers,
// where r_1^odd(8m+1) vanishes.
std::size_t recursive_window(std::size_t m) {
  return static_cast<std::size_t>(std::ceil(std::sqrt(2.0 * static_cast<double>(m)))) + 2;
}

double to_double(const BigInt& r) { return r.convert_to<double>(); }

// K_nu(pi * scale * sqrt(radicand)). The argument is formed and the e^{-x}
// factor applied in extended precision: a rounded x costs x * eps relative
// accuracy through e^{-x}, which the large r_N(m) weights would amplify.
double bessel_k_at(double nu, long double scale, std::size_t radicand) {
  const long double x = std::numbers::pi_v<long double> * scale * std::sqrt(static_cast<long double>(radicand));
  return static_cast<double>(bessel_k_scaled(nu, static_cast<double>(x)) * std::exp(-x));
}

struct DirectRun {
  double value = 0.0;
  std::vector<double> terms_a;       // m = 1..m_used
  std::vector<double> terms_paired;  // b(2j), j = 1..m_used/2
  std::size_t m_used = 0;
  double remainder = 0.0;
};

DirectRun run_direct(const MadelungQuery& query) {
  const int source = query.dimension - 1;
  const double s = query.exponent;
  const double tol = query.target_remainder;

  DirectRun run;
  const double base = -2.0 * eta(2.0 * s);
  if (source == 0) {
    run.value = base;
    return run;
  }

  const std::size_t start = even_ceil(heuristic_m_max(query.dimension));
  const std::size_t cap = kExtensionFactor * start;
  std::vector<double> coefficients{0.0};  // index m; c_s(0) unused
  std::size_t limit = start;

  for (;;) {
    const RepTable table = RepTable::squares(source, limit);
    while (coefficients.size() <= limit) coefficients.push_back(coefficient_direct(s, coefficients.size()));

    std::vector<double> a(limit);
    for (std::size_t m = 1; m <= limit; ++m) {
      const double r = to_double(table.at(source, m));
      a[m - 1] = (m % 2 == 1 ? -r : r) * coefficients[m];
    }
    std::vector<double> b(limit / 2);
    for (std::size_t j = 1; j <= limit / 2; ++j) b[j - 1] = a[2 * j - 1] + a[2 * j - 2];

    std::size_t last_significant = 0;  // pair index j, 0 = none
    for (std::size_t j = b.size(); j >= 1; --j) {
      if (std::abs(b[j - 1]) >= tol) {
        last_significant = j;
        break;
      }
    }
    const std::size_t m_cut = 2 * last_significant;
    const std::size_t m_used = m_cut + direct_window(m_cut);
    if (m_used <= limit) {
      run.m_used = m_used;
      run.terms_a.assign(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(m_used));
      run.terms_paired.assign(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(m_used / 2));
      for (std::size_t j = last_significant + 1; j <= m_used / 2; ++j) {
        run.remainder = std::max(run.remainder, std::abs(b[j - 1]));
      }
      double tail = 0.0;
      for (std::size_t j = m_used / 2; j >= 1; --j) tail += b[j - 1];
      run.value = base + tail;
      return run;
    }
    if (limit >= cap) {
      throw ConvergenceError("madelung_direct: no convergence to " + std::to_string(tol) +
                             " within m = " + std::to_string(cap));
    }
    limit = std::min(cap, even_ceil(std::max(limit + limit / 4, m_used)));
  }
}

// Lazily grown r^odd table shared by the recursion steps of one evaluation.
class OddCounts {
 public:
  OddCounts(int max_dimension, std::size_t initial_m)
      : max_dimension_(max_dimension), table_(RepTable::odd_squares(max_dimension, initial_m)) {}

  const BigInt& at(int n, std::size_t index) {
    if (index > table_.max_m()) {
      table_ = RepTable::odd_squares(max_dimension_, std::max(index, 2 * table_.max_m()));
    }
    return table_.at(n, index);
  }

 private:
  int max_dimension_;
  RepTable table_;
};

struct RecursiveStep {
  double increment = 0.0;
  std::vector<double> terms_d;  // m = 0..m_used
  std::size_t m_used = 0;
  double remainder = 0.0;
};

RecursiveStep run_recursive_step(double s, int n, double tol, std::size_t cap, OddCounts& counts) {
  RecursiveStep step;
  std::optional<std::size_t> last_significant;
  for (std::size_t m = 0;; ++m) {
    if (m > cap) {
      throw ConvergenceError("madelung_recursive: no convergence at dimension step " +
                             std::to_string(n) + " within m = " + std::to_string(cap));
    }
    const BigInt& r = counts.at(n, 8 * m + static_cast<std::size_t>(n));
    const double d = r == 0 ? 0.0 : to_double(r) * coefficient_recursive(s, n, m);
    step.terms_d.push_back(d);
    if (std::abs(d) >= tol) last_significant = m;

    const std::size_t anchor = last_significant.value_or(0);
    if (m >= anchor + recursive_window(anchor)) break;
  }
  step.m_used = step.terms_d.size() - 1;
  const std::size_t first_tail = last_significant ? *last_significant + 1 : 0;
  for (std::size_t m = first_tail; m <= step.m_used; ++m) {
    step.remainder = std::max(step.remainder, std::abs(step.terms_d[m]));
  }
  for (std::size_t m = step.terms_d.size(); m-- > 0;) step.increment += step.terms_d[m];
  return step;
}

}  // namespace

std::string_view to_string(Method method) noexcept {
  switch (method) {
    case Method::direct:
      return "direct";
    case Method::recursive:
      return "recursive";
    case Method::automatic:
      return "auto";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  if (name == "direct") return Method::direct;
  if (name == "recursive") return Method::recursive;
  if (name == "auto") return Method::automatic;
  throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

std::size_t heuristic_m_max(int dimension) {
  const double n = dimension;
  return static_cast<std::size_t>(std::llround(1.16 * n * n + 11.5 * n + 73.0));
}

double coefficient_direct(double s, std::size_t m) {
  if (m == 0) throw std::invalid_argument("coefficient_direct: m must be >= 1");
  const double inv_gamma = reciprocal_gamma(s);
  if (inv_gamma == 0.0) return 0.0;
  const double nu = s - 0.5;
  const double sum = bessel_series([&](int k) {
    return std::pow(k - 0.5, nu) * bessel_k_at(nu, 2.0L * k - 1.0L, m);
  });
  return 4.0 * std::pow(kPi, s) * inv_gamma * std::pow(static_cast<double>(m), (1.0 - 2.0 * s) / 4.0) *
         sum;
}

double coefficient_half_integral(std::size_t m) {
  if (m == 0) throw std::invalid_argument("coefficient_half_integral: m must be >= 1");
  // 1/sinh(a cosh t) = 2 e^{-a cosh t} / (1 - e^{-2 a cosh t}); factor e^{-a}
  // out so the trapezoidal sum works with O(1) numbers.
  const double a = kPi * std::sqrt(static_cast<double>(m));
  const double h = std::min(0.25, 0.35 / std::sqrt(a));
  auto integrand = [a](double t) {
    const double half_sinh = std::sinh(0.5 * t);
    const double shifted = 2.0 * half_sinh * half_sinh;  // cosh t - 1
    return 2.0 * std::exp(-a * shifted) / -std::expm1(-2.0 * a * (shifted + 1.0));
  };
  double sum = 0.5 * integrand(0.0);
  for (int j = 1; j < 100000; ++j) {
    const double f = integrand(j * h);
    sum += f;
    if (f < 1e-18 * sum) break;
  }
  return 2.0 * h * sum * std::exp(-a);
}

double coefficient_recursive(double s, int dimension, std::size_t m) {
  if (dimension < 1) throw std::invalid_argument("coefficient_recursive: dimension must be >= 1");
  const double inv_gamma = reciprocal_gamma(s);
  if (inv_gamma == 0.0) return 0.0;
  const double big_m = 8.0 * static_cast<double>(m) + dimension;
  const double nu = s - 0.5 * dimension;
  const double power = (2.0 * s - dimension) / 4.0;
  const double sum = bessel_series([&](int k) {
    const double kk = k;
    const double term = std::pow(big_m / (4.0 * kk * kk), power) * bessel_k_at(nu, kk, 8 * m + dimension);
    return k % 2 == 1 ? -term : term;
  });
  return 4.0 * std::pow(kPi, s) * inv_gamma * sum;
}

MadelungValue madelung_direct(const MadelungQuery& query) {
  validate(query);
  const DirectRun run = run_direct(query);
  return {run.value, run.m_used, run.remainder, Method::direct};
}

MadelungValue madelung_recursive(const MadelungQuery& query) {
  validate(query);
  const double s = query.exponent;
  const int target = query.dimension;

  CompensatedSum total;
  total.add(-2.0 * eta(2.0 * s));
  MadelungValue result{0.0, 0, 0.0, Method::recursive};
  if (target > 1) {
    const double tol = query.target_remainder / target;
    const std::size_t cap = kExtensionFactor * heuristic_m_max(target);
    OddCounts counts(target - 1, 8 * (64 + 4 * static_cast<std::size_t>(target)) + target);
    for (int n = 1; n < target; ++n) {
      const RecursiveStep step = run_recursive_step(s, n, tol, cap, counts);
      total.add(step.increment);
      result.m_max_used = std::max(result.m_max_used, step.m_used);
      result.remainder_estimate += step.remainder;
    }
  }
  result.value = total.value();
  return result;
}

MadelungValue evaluate(const MadelungQuery& query) {
  return query.method == Method::direct ? madelung_direct(query) : madelung_recursive(query);
}

ConvergenceTrace convergence_trace(const MadelungQuery& query) {
  validate(query);
  ConvergenceTrace trace;
  DirectRun direct = run_direct(query);
  trace.terms_a = std::move(direct.terms_a);
  trace.terms_paired = std::move(direct.terms_paired);

  const int target = query.dimension;
  trace.recursion_source_dimension = target - 1;
  if (target > 1) {
    const double tol = query.target_remainder / target;
    const std::size_t cap = kExtensionFactor * heuristic_m_max(target);
    OddCounts counts(target - 1, 8 * (64 + 4 * static_cast<std::size_t>(target)) + target);
    trace.terms_d = run_recursive_step(query.exponent, target - 1, tol, cap, counts).terms_d;
  }
  return trace;
}

}  // namespace madelung
