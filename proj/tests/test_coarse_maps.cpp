#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "vball/ballean.hpp"
#include "vball/coarse_map.hpp"
#include "vball/metric.hpp"
#include "vball/presets.hpp"

#include <algorithm>
#include <map>
#include <vector>

using namespace vball;
using vball::testing::corpus;

namespace {

PointMap doubling_embed(const Ground& src, const Ground& dst) {
  std::map<PointId, PointId> table;
  for (std::size_t i = 0; i < src.size(); ++i) {
    table[src.at(i)] = dst.at(2 * i);
  }
  return PointMap(src, dst, table);
}

PointMap constant_map(const Ground& src, const Ground& dst) {
  std::map<PointId, PointId> table;
  for (std::size_t i = 0; i < src.size(); ++i) table[src.at(i)] = dst.at(0);
  return PointMap(src, dst, table);
}

/// Direct displacement check of one modulus table entry, independent of
/// the production verifier: image of every source ball fits in the
/// claimed target ball.
bool entry_holds(const PointMap& f, const GradedBallean& a, const GradedBallean& b,
                 EffectiveEntourage e, EffectiveEntourage target) {
  for (std::size_t i = 0; i < a.ground().size(); ++i) {
    const PointId x = a.ground().at(i);
    const auto target_ball = ball(b, f.apply(x), target);
    for (const PointId& y : ball(a, x, e)) {
      if (!std::binary_search(target_ball.begin(), target_ball.end(), f.apply(y))) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("identity map has the identity modulus table") {
  const GradedBallean b = line_ballean(4);
  const CoarseCheckResult r =
      check_coarse_map(PointMap::identity(b.ground()), b, b);
  REQUIRE(r.ok());
  for (std::uint32_t lvl = 1; lvl <= b.level_count(); ++lvl) {
    CHECK(r.witness->lookup({lvl, 1}) == EffectiveEntourage{lvl, 1});
  }
}

TEST_CASE("constant map collapses every level to the diagonal") {
  const GradedBallean a = line_ballean(4);
  const GradedBallean b = line_ballean(3);
  const CoarseCheckResult r =
      check_coarse_map(constant_map(a.ground(), b.ground()), a, b);
  REQUIRE(r.ok());
  for (std::uint32_t lvl = 1; lvl <= a.level_count(); ++lvl) {
    CHECK(r.witness->lookup({lvl, 1}) == EffectiveEntourage{1, 1});
  }
}

TEST_CASE("doubling embed stretches unit steps to distance two") {
  const GradedBallean a = line_ballean(4);
  const GradedBallean b = line_ballean(8);
  const PointMap f = doubling_embed(a.ground(), b.ground());
  const CoarseCheckResult r = check_coarse_map(f, a, b);
  REQUIRE(r.ok());
  const EffectiveEntourage img = r.witness->lookup({2, 1});
  CHECK(entry_holds(f, a, b, {2, 1}, img));
  // distance-1 sources map to distance-2 images, so level 3 is needed
  // and suffices at power 1
  CHECK(img == EffectiveEntourage{3, 1});
}

TEST_CASE("every modulus entry passes the direct displacement check") {
  const GradedBallean a = line_ballean(4);
  const GradedBallean b = line_ballean(8);
  for (const PointMap& f : {PointMap::identity(a.ground()),
                            doubling_embed(a.ground(), b.ground()),
                            constant_map(a.ground(), b.ground())}) {
    const GradedBallean& target = f.target() == a.ground() ? a : b;
    const CoarseCheckResult r = check_coarse_map(f, a, target);
    REQUIRE(r.ok());
    for (const auto& [e, img] : r.witness->table) {
      CAPTURE(e.level);
      CHECK(entry_holds(f, a, target, e, img));
    }
  }
}

TEST_CASE("any total map between finite presentations is coarse") {
  const GradedBallean a = cycle_ballean(5);
  const GradedBallean b = line_ballean(3);
  RandomSource rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    std::map<PointId, PointId> table;
    for (std::size_t i = 0; i < a.ground().size(); ++i) {
      table[a.ground().at(i)] = b.ground().at(rng.below(b.ground().size()));
    }
    const CoarseCheckResult r = check_coarse_map(PointMap(a.ground(), b.ground(), table), a, b);
    CHECK(r.ok());
  }
}

TEST_CASE("composed maps have a modulus bounded by table composition") {
  const GradedBallean a = line_ballean(3);
  const GradedBallean b = line_ballean(6);
  const GradedBallean c = line_ballean(6);
  const PointMap f = doubling_embed(a.ground(), b.ground());
  const PointMap g = PointMap::identity(b.ground());
  const PointMap gf = PointMap::composed(f, g);
  const CoarseCheckResult rf = check_coarse_map(f, a, b);
  const CoarseCheckResult rg = check_coarse_map(g, b, c);
  const CoarseCheckResult rgf = check_coarse_map(gf, a, c);
  REQUIRE(rf.ok());
  REQUIRE(rg.ok());
  REQUIRE(rgf.ok());
  for (const auto& [e, mid] : rf.witness->table) {
    const EffectiveEntourage end = rg.witness->lookup(mid);
    // the composite's own table is sound by construction; the chained
    // entry must also satisfy the displacement condition
    CHECK(entry_holds(gf, a, c, e, end));
  }
}

TEST_CASE("identity asymorphism has identity tables both ways") {
  const GradedBallean b = cycle_ballean(4);
  const AsymorphismResult r =
      check_asymorphism(PointMap::identity(b.ground()), b, b);
  REQUIRE(r.ok());
  CHECK(r.forward.witness->lookup({2, 1}) == EffectiveEntourage{2, 1});
  CHECK(r.backward.witness->lookup({2, 1}) == EffectiveEntourage{2, 1});
}

TEST_CASE("doubling the metric is an asymorphism with shifted levels") {
  const FiniteMetric m = line_metric(4);
  std::vector<std::vector<Rational>> doubled_rows;
  for (std::size_t i = 0; i < 4; ++i) {
    std::vector<Rational> row;
    for (std::size_t j = 0; j < 4; ++j) {
      row.push_back(Rational(2) * m.distance(static_cast<std::uint32_t>(i),
                                             static_cast<std::uint32_t>(j)));
    }
    doubled_rows.push_back(std::move(row));
  }
  const GradedBallean b = metric_ballean(m);
  const GradedBallean b2 = metric_ballean(FiniteMetric(m.ground(), doubled_rows));
  const AsymorphismResult r = check_asymorphism(PointMap::identity(m.ground()), b, b2);
  REQUIRE(r.ok());
  // distances < r become distances < 2r, and the least strict natural
  // threshold over them is 2r-1
  for (std::uint32_t lvl = 2; lvl <= b.level_count(); ++lvl) {
    CHECK(r.forward.witness->lookup({lvl, 1}) == EffectiveEntourage{2 * lvl - 1, 1});
  }
}

TEST_CASE("any bijection between finite presentations is an asymorphism") {
  const GradedBallean a = line_ballean(4);
  const GradedBallean b = cycle_ballean(4);
  std::map<PointId, PointId> table;
  for (std::size_t i = 0; i < 4; ++i) {
    table[a.ground().at(i)] = b.ground().at((i * 3) % 4);
  }
  const AsymorphismResult r = check_asymorphism(PointMap(a.ground(), b.ground(), table), a, b);
  CHECK(r.ok());
}

TEST_CASE("non-bijective input to the asymorphism check throws") {
  const GradedBallean a = line_ballean(3);
  CHECK_THROWS_AS(
      check_asymorphism(constant_map(a.ground(), a.ground()), a, a),
      std::invalid_argument);
}

TEST_CASE("chain metric on the line recovers the path distances") {
  const GradedBallean b = line_ballean(4);
  const FiniteMetric m = metric_from_scale(b);
  // adjacent points first relate at level 2, so a unit hop weighs 2
  CHECK(m.distance("p0", "p1") == Rational(2));
  CHECK(m.distance("p0", "p3") <= Rational(6));
  CHECK(m.distance("p0", "p0") == Rational(0));
}

TEST_CASE("one-point presentation yields the zero metric") {
  const GradedBallean one = restrict(line_ballean(2), {"p0"});
  const FiniteMetric m = metric_from_scale(one);
  CHECK(m.distance("p0", "p0") == Rational(0));
  CHECK(m.diameter() == Rational(0));
}

TEST_CASE("identity realizes every corpus presentation in its chain metric") {
  for (const auto& [name, b] : corpus()) {
    CAPTURE(name);
    const GradedBallean target = metric_ballean(metric_from_scale(b));
    const AsymorphismResult r =
        check_asymorphism(PointMap::identity(b.ground()), b, target);
    CHECK(r.ok());
  }
}

TEST_CASE("chain metric round-trips a metric presentation") {
  const FiniteMetric m = cycle_metric(5);
  const GradedBallean b = metric_ballean(m);
  const FiniteMetric back = metric_from_scale(b);
  const AsymorphismResult r =
      check_asymorphism(PointMap::identity(m.ground()), b, metric_ballean(back));
  CHECK(r.ok());
}
