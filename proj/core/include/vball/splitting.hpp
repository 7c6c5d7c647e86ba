#pragma once

#include "vball/ballean.hpp"
#include "vball/decomposition.hpp"
#include "vball/free_vector.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace vball {

// Coordinate split along one basis point: v = coeff * axis + rest, with
// the rest supported away from the axis.
std::pair<Rational, FreeVector> split_forward(const FreeVector& v, const PointId& axis);
FreeVector split_backward(const Rational& axis_coeff, const FreeVector& rest,
                          const PointId& axis);

struct SplitContext {
  PointId axis;
  Ground rest_ground;
  PointId rest_anchor;
  GradedBallean rest_ballean;
};

// Requires at least two points; the rest anchor is the least remaining
// point in canonical order.
SplitContext make_split_context(const GradedBallean& b, const PointId& axis);

// Where a base set lands on the two sides of the split.  The axis
// coordinate is boxed by n(n+1); the rest side moves to the top level at
// n^2+n copies around the rest anchor.
struct SplitForwardParams {
  IdealBaseParams source;
  Rational axis_box;
  IdealBaseParams rest;
};

// Recombination target for a boxed axis coordinate and a rest-side base
// set: top level at the rest power, n grown by the box ceiling.
struct SplitBackwardParams {
  Rational axis_box;
  IdealBaseParams rest;
  IdealBaseParams whole;
};

SplitForwardParams split_forward_params(const SplitContext& ctx,
                                        const IdealBaseParams& source);
SplitBackwardParams split_backward_params(const SplitContext& ctx,
                                          const GradedBallean& b, const Rational& axis_box,
                                          const IdealBaseParams& rest);

// Moves a whole-space decomposition across the split: the axis coordinate
// is peeled off and axis endpoints are rerouted through the rest anchor.
std::pair<Rational, Decomposition> transport_to_rest(const SplitContext& ctx,
                                                     const Decomposition& d);

// Rebuilds a whole-space decomposition from an axis coordinate and a
// rest-side decomposition anchored at the rest anchor.
Decomposition transport_to_whole(const SplitContext& ctx, const GradedBallean& b,
                                 const Rational& axis_coeff, const Rational& axis_box,
                                 const Decomposition& rest_d);

struct SplitValidation {
  PointId axis;
  PointId rest_anchor;
  std::uint32_t round_trips = 0;
  std::uint32_t round_trip_failures = 0;
  std::uint32_t forward_samples = 0;
  std::uint32_t forward_failures = 0;
  std::uint32_t backward_samples = 0;
  std::uint32_t backward_failures = 0;
  std::vector<std::string> issues;

  bool ok() const {
    return round_trip_failures == 0 && forward_failures == 0 && backward_failures == 0;
  }
};

// Samples round trips and certificate transports in both directions,
// verifying every moved decomposition against its emitted parameters.
SplitValidation validate_split(const GradedBallean& b, const PointId& axis,
                               std::uint64_t seed, std::uint32_t round_trip_samples,
                               std::uint32_t certificate_samples);

}  // namespace vball
