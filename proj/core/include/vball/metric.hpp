#pragma once

#include "vball/ballean.hpp"
#include "vball/rational.hpp"

#include <vector>

namespace vball {

/// Finite metric space with exact rational distances. The constructor
/// verifies all metric axioms and throws std::invalid_argument with the
/// offending points on a violation.
class FiniteMetric {
 public:
  FiniteMetric(Ground ground, std::vector<std::vector<Rational>> rows);

  const Ground& ground() const { return ground_; }
  const Rational& distance(std::uint32_t i, std::uint32_t j) const;
  const Rational& distance(const PointId& x, const PointId& y) const;
  Rational diameter() const;

  bool operator==(const FiniteMetric&) const = default;

 private:
  Ground ground_;
  std::vector<Rational> d_;  // row-major
};

/// Ballean of the metric: level r relates pairs with d(x,y) < r, for
/// natural r = 1 .. ceil(diam)+1. The strict inequality makes level 1 the
/// diagonal for integer metrics.
GradedBallean metric_ballean(const FiniteMetric& m);

/// Chain metric realizing the scale: the weight of a hop (u,v) is the
/// least level containing it, and d(x,y) minimizes total weight over
/// chains. The identity between b and metric_ballean(metric_from_scale(b))
/// is expected to be an asymorphism; callers verify that with
/// check_asymorphism rather than assuming it.
FiniteMetric metric_from_scale(const GradedBallean& b);

}  // namespace vball
