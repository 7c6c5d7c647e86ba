#pragma once

#include "vball/ballean.hpp"
#include "vball/free_vector.hpp"
#include "vball/metric.hpp"
#include "vball/presets.hpp"
#include "vball/rng.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace vball::testing {

inline FreeVector vec(std::map<PointId, Rational> coords) {
  return FreeVector(std::move(coords));
}

inline FreeVector diff(const PointId& x, const PointId& y) { return difference(x, y); }

struct NamedBallean {
  std::string name;
  GradedBallean ballean;
};

/// Mixed bag of valid presentations: presets of several shapes, a
/// restriction, a product, and a non-integer metric space.
inline std::vector<NamedBallean> corpus() {
  std::vector<NamedBallean> out;
  for (std::uint32_t s : {2u, 3u, 4u, 6u}) {
    out.push_back({"line" + std::to_string(s), line_ballean(s)});
  }
  for (std::uint32_t s : {3u, 5u}) {
    out.push_back({"cycle" + std::to_string(s), cycle_ballean(s)});
  }
  out.push_back({"grid2", grid_ballean(2)});
  out.push_back({"restrict(line6,evens)",
                 restrict(line_ballean(6), std::set<PointId>{"p0", "p2", "p4"})});
  out.push_back({"product(line2,line3)", product(line_ballean(2), line_ballean(3))});
  {
    Ground g({"a", "b", "c"});
    const Rational h(1, 2);
    std::vector<std::vector<Rational>> rows{{Rational(0), h, Rational(2)},
                                            {h, Rational(0), Rational(3, 2)},
                                            {Rational(2), Rational(3, 2), Rational(0)}};
    out.push_back({"halfmetric3", metric_ballean(FiniteMetric(g, std::move(rows)))});
  }
  return out;
}

/// One presentation broken in exactly one axiom, built from a valid one.
struct Mutation {
  std::string description;
  BalleanAxiom expected;
  GradedBallean broken;
};

/// Deterministic single-axiom mutations of b. Each removes or rewrites
/// pairs through GradedBallean::raw so no normalization repairs the
/// damage. Mutations that would not change b (e.g. desymmetrizing a
/// diagonal-only level) are skipped.
inline std::vector<Mutation> mutations(const GradedBallean& b) {
  std::vector<Mutation> out;
  const Ground& g = b.ground();
  const auto levels_of = [&] {
    std::vector<std::vector<std::pair<PointId, PointId>>> ls;
    for (std::uint32_t r = 1; r <= b.level_count(); ++r) {
      ls.push_back(b.level(r).pairs_by_id());
    }
    return ls;
  };
  const auto build = [&](const std::vector<std::vector<std::pair<PointId, PointId>>>& ls) {
    std::vector<Relation> rs;
    for (const auto& pairs : ls) rs.emplace_back(g, pairs);
    return GradedBallean::raw(g, std::move(rs));
  };

  // Drop one diagonal pair from the first level.
  {
    auto ls = levels_of();
    auto& level1 = ls[0];
    std::erase(level1, std::pair<PointId, PointId>{g.at(0), g.at(0)});
    out.push_back({"missing diagonal pair", BalleanAxiom::Diagonal, build(ls)});
  }
  // Remove one direction of an off-diagonal pair from the top level.
  {
    auto ls = levels_of();
    auto& top = ls.back();
    for (const auto& [x, y] : top) {
      if (x < y) {
        std::erase(top, std::pair<PointId, PointId>{y, x});
        out.push_back({"desymmetrized top level", BalleanAxiom::Symmetry, build(ls)});
        break;
      }
    }
  }
  // Remove an off-diagonal top pair in both directions: with at least
  // two levels the pair survives in a lower level, breaking nesting; on
  // two points it instead breaks connectedness.
  if (b.level_count() >= 2 && g.size() >= 2) {
    auto ls = levels_of();
    auto& top = ls.back();
    const auto& below = ls[ls.size() - 2];
    for (const auto& [x, y] : below) {
      if (x != y) {
        std::erase(top, std::pair<PointId, PointId>{x, y});
        std::erase(top, std::pair<PointId, PointId>{y, x});
        out.push_back({"top level lost a lower pair", BalleanAxiom::Monotonicity,
                       build(ls)});
        break;
      }
    }
  }
  // Shrink the top level to the diagonal. On two or more points the top
  // no longer relates every pair (it may break nesting too; detection
  // asserts the expected axiom is among the violations).
  if (g.size() >= 2) {
    auto ls = levels_of();
    std::vector<std::pair<PointId, PointId>> diag;
    for (std::size_t i = 0; i < g.size(); ++i) diag.emplace_back(g.at(i), g.at(i));
    ls.back() = diag;
    out.push_back(
        {"top level cut to the diagonal", BalleanAxiom::Connectedness, build(ls)});
  }
  return out;
}

}  // namespace vball::testing
