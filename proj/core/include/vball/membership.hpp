#pragma once

#include "vball/decomposition.hpp"
#include "vball/free_vector.hpp"

#include <optional>

namespace vball {

struct MembershipOptions {
  /// When set, first search only pairs whose endpoints stay inside
  /// supp(v) union {z}; on a miss, fall back to the full pair set, so
  /// the verdict is unchanged (the certificate may differ).
  bool support_pruning = false;
};

struct MembershipStats {
  std::uint64_t multisets_tried = 0;
  std::uint64_t systems_solved = 0;
};

struct MembershipResult {
  std::optional<Decomposition> certificate;
  MembershipStats stats;

  bool member() const { return certificate.has_value(); }
};

/// Decides v in S_{n,e} + [-n,n]z exactly. Enumerates multisets of
/// non-degenerate entourage pairs with total multiplicity up to n in
/// lexicographic order and decides each candidate's linear feasibility;
/// the first feasible candidate yields the certificate, so output is
/// deterministic. Sound and complete on finite grounds.
/// Throws std::invalid_argument on support outside the ground and
/// std::out_of_range on a bad level.
MembershipResult ideal_membership(const GradedBallean& b, const FreeVector& v,
                                  const IdealBaseParams& params,
                                  const MembershipOptions& options = {});

/// Base set with the three occurrences of n chosen independently:
/// `copies` summands, coefficient bound, and anchor bound. The public
/// family is the diagonal case; this generalization exists for internal
/// parameter arithmetic.
struct GeneralBaseParams {
  std::uint32_t copies = 1;
  Rational coeff_bound = Rational(1);
  EffectiveEntourage entourage;
  PointId z;
  Rational z_bound = Rational(1);
};

/// Same decision procedure over the generalized base set. A returned
/// certificate carries diagonal params with n large enough to dominate
/// all three bounds, so it re-verifies as-is.
MembershipResult ideal_membership_general(const GradedBallean& b, const FreeVector& v,
                                          const GeneralBaseParams& params,
                                          const MembershipOptions& options = {});

}  // namespace vball
