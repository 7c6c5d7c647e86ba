#pragma once

#include "vball/decomposition.hpp"

#include <set>

namespace vball {

struct ReductionResult {
  Decomposition reduced;
  /// Every output pair lies in the params entourage raised to this
  /// power. 1 when nothing was eliminated.
  std::uint32_t achieved_power = 1;
  std::uint32_t eliminations = 0;
};

/// Eliminates basis points outside `target` from the difference terms,
/// one point at a time in canonical order: the eliminated point's first
/// term donates its other endpoint as the substitute, composing
/// entourage powers. The denoted vector never changes and the term count
/// never grows. Throws std::invalid_argument when the value actually
/// depends on a point outside the target (nonzero net coefficient, or a
/// nonzero anchor coefficient with the anchor outside the target).
ReductionResult reduce_to_support(const GradedBallean& b, const Decomposition& d,
                                  const std::set<PointId>& target);

struct RestrictionVerdict {
  bool in_entourage = false;
  /// Membership of x - y at n = 1 whenever the pair is in the entourage.
  bool forward_ok = true;
  bool member = false;
  /// The next four describe the found certificate; meaningful only when
  /// member is true, and vacuously true otherwise.
  bool anchor_coeff_zero = true;
  bool reduction_stayed_inside = true;
  bool power_within_n = true;
  bool pair_in_power = true;
  std::uint32_t achieved_power = 0;

  bool ok() const {
    return forward_ok && anchor_coeff_zero && reduction_stayed_inside && power_within_n &&
           pair_in_power;
  }
};

/// Both directions of the base-restriction property for the pair (x, y):
/// entourage membership forces certificate existence at n = 1, and a
/// certificate for x - y at n forces the pair into the entourage's n-th
/// power, via reduce_to_support and relation powers. The anchor defaults
/// to the least ground point when z is empty.
RestrictionVerdict restriction_check(const GradedBallean& b, const PointId& x,
                                     const PointId& y, std::uint32_t n,
                                     EffectiveEntourage e, const PointId& z = {});

}  // namespace vball
