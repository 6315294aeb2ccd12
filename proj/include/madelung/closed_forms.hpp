#pragma once

// Reference values used as oracles for the Bessel expansions.

#include <string_view>

namespace madelung {

enum class FormulaId {
  zucker1,
  zucker2,
  zucker4,
  zucker6,
  zucker8,
  tyagi,
  benson,
  hautot,
  limit,
  critical,
};

std::string_view to_string(FormulaId id) noexcept;

struct ClosedFormResult {
  double value = 0.0;
  FormulaId formula_id = FormulaId::limit;
};

/// Zucker's closed forms for N in {1, 2, 4, 6, 8}:
///   M_1 = -2 eta(2s)                  M_2 = -4 beta(s) eta(s)
///   M_4 = -8 eta(s-1) eta(s)          M_6 = -16 eta(s-2) beta(s) + 4 eta(s) beta(s-2)
///   M_8 = -16 eta(s-3) zeta(s)
/// M_8 at s = 1 (finite product of a zero and a pole) is taken as a
/// Richardson-extrapolated symmetric limit with step 1e-6.
/// Throws DomainError for any other N.
ClosedFormResult zucker(int dimension, double s);

/// M_3(1/2) from the Tyagi/Crandall formula. With include_correction = false
/// the rapidly vanishing r_3 correction sum is dropped.
ClosedFormResult tyagi_m3(bool include_correction = true);

/// M_3(1/2) = -12 pi sum_{i,j>=1} sech^2((pi/2) sqrt((2i-1)^2 + (2j-1)^2)).
ClosedFormResult benson_mackenzie_m3();

/// M_3(1/2) = -pi/2 + 3 sum'_{i,j} (-1)^i cosech(pi sqrt(i^2+j^2)) / sqrt(i^2+j^2).
ClosedFormResult hautot_m3();

/// lim_{s->inf} M_N(s) = -2N.
ClosedFormResult neighbor_limit(int dimension);

/// M_N(s) = -2 eta(2s) at s = 0, -1, -2, ...: -1 at s = 0, 0 below.
/// Throws DomainError when s is not a non-positive integer.
ClosedFormResult critical_value(double s);

}  // namespace madelung
