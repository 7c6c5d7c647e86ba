#pragma once

#include "vball/ballean.hpp"
#include "vball/free_vector.hpp"

#include <string>
#include <vector>

namespace vball {

/// Names one base set of the free vector ideal over a graded ballean:
/// the sum of n copies of [-n,n]-scaled difference vectors of the named
/// entourage, plus [-n,n] multiples of the anchor point z.
struct IdealBaseParams {
  std::uint32_t n = 1;
  EffectiveEntourage entourage;
  PointId z;

  bool operator==(const IdealBaseParams&) const = default;
};

/// One summand lambda * (x - y). Degenerate pairs (x == y) contribute
/// zero and are legal.
struct DiffTerm {
  PointId x;
  PointId y;
  Rational lambda;

  bool operator==(const DiffTerm&) const = default;
};

/// Certificate of base-set membership: an explicit expression
/// sum lambda_i (x_i - y_i) + z_coeff * z together with the params it
/// claims to satisfy, so re-verification is self-contained.
struct Decomposition {
  std::vector<DiffTerm> terms;
  Rational z_coeff = Rational(0);
  IdealBaseParams params;

  bool operator==(const Decomposition&) const = default;
};

/// The vector the decomposition denotes.
FreeVector evaluate(const Decomposition& d);

struct VerifyReport {
  std::vector<std::string> issues;

  bool ok() const { return issues.empty(); }
};

/// Checks every certificate constraint: term count and coefficient
/// bounds against n, anchor bound, ground membership of all named
/// points, level validity, and each pair's presence in the named
/// entourage power. Collects all violations.
VerifyReport verify_decomposition_detailed(const GradedBallean& b, const Decomposition& d);

bool verify_decomposition(const GradedBallean& b, const Decomposition& d);

}  // namespace vball
