#pragma once

// N-dimensional Madelung constant
//   M_N(s) = sum over i in Z^N \ {0} of (-1)^(i_1+...+i_N) / |i|^(2s)
// through two Bessel-function expansions:
//
//   direct:    M_N(s) = -2 eta(2s) + sum_{m>=1} (-1)^m r_{N-1}(m) c_s(m)
//   recursive: M_{n+1}(s) = M_n(s) + sum_{m>=0} r_n^odd(8m+n) c_{s,n}(m),
//              M_1(s) = -2 eta(2s)
//
// The public API always takes the target dimension N; the expansions' own
// "N+1 from N" bookkeeping stays internal.

#include <cstddef>
#include <string_view>
#include <vector>

namespace madelung {

enum class Method { direct, recursive, automatic };

std::string_view to_string(Method method) noexcept;
/// Parses "direct", "recursive" or "auto"; throws std::invalid_argument otherwise.
Method parse_method(std::string_view name);

struct MadelungQuery {
  int dimension = 3;
  double exponent = 0.5;
  double target_remainder = 1e-14;
  Method method = Method::automatic;
};

struct MadelungValue {
  double value = 0.0;
  /// Largest m that entered the sum (over all recursion steps for the recursive method).
  std::size_t m_max_used = 0;
  double remainder_estimate = 0.0;
  Method method_used = Method::recursive;
};

/// Raw term sequences behind a value. terms_a and terms_paired come from the
/// direct expansion (index 0 <-> m = 1, and pair j <-> b(2j+2)); terms_d holds
/// d(m) = r_n^odd(8m+n) c_{s,n}(m), m = 0, 1, ..., for the final recursion
/// step n = recursion_source_dimension = N - 1.
struct ConvergenceTrace {
  std::vector<double> terms_a;
  std::vector<double> terms_paired;
  std::vector<double> terms_d;
  int recursion_source_dimension = 0;
};

/// nint(1.16 N^2 + 11.5 N + 73), the starting truncation for the direct sum.
std::size_t heuristic_m_max(int dimension);

/// c_s(m) = (4 pi^s / Gamma(s)) m^((1-2s)/4) sum_k (k-1/2)^(s-1/2) K_{s-1/2}(pi (2k-1) sqrt(m)).
double coefficient_direct(double s, std::size_t m);

/// c_{1/2}(m) = 2 int_0^inf dt / sinh(pi sqrt(m) cosh t), by quadrature.
double coefficient_half_integral(std::size_t m);

/// c_{s,N}(m) = (4 pi^s / Gamma(s)) sum_k (-1)^k ((8m+N)/(4k^2))^((2s-N)/4) K_{s-N/2}(pi k sqrt(8m+N)).
double coefficient_recursive(double s, int dimension, std::size_t m);

MadelungValue madelung_direct(const MadelungQuery& query);
MadelungValue madelung_recursive(const MadelungQuery& query);
/// Dispatches on query.method; automatic resolves to recursive.
MadelungValue evaluate(const MadelungQuery& query);

/// Term sequences for both expansions, truncated exactly as the summations are.
ConvergenceTrace convergence_trace(const MadelungQuery& query);

}  // namespace madelung
