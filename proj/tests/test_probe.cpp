#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "vball/membership.hpp"
#include "vball/presets.hpp"
#include "vball/probe.hpp"

using namespace vball;
using vball::testing::corpus;
using vball::testing::diff;
using vball::testing::vec;

TEST_CASE("sampled certificates always re-verify") {
  RandomSource rng(89);
  const GradedBallean b = cycle_ballean(5);
  for (int trial = 0; trial < 60; ++trial) {
    const IdealBaseParams p{
        static_cast<std::uint32_t>(1 + rng.below(3)),
        {static_cast<std::uint32_t>(1 + rng.below(b.level_count())),
         static_cast<std::uint32_t>(1 + rng.below(2))},
        b.ground().at(rng.below(b.ground().size()))};
    CHECK(verify_decomposition(b, random_decomposition(b, p, rng)));
  }
}

TEST_CASE("worked sum example stays within doubled copies") {
  const GradedBallean b = line_ballean(4);
  const FreeVector u = diff("p2", "p1");
  CHECK(ideal_membership(b, u, IdealBaseParams{1, {2, 1}, "p0"}).member());
  CHECK(ideal_membership(b, u + u, IdealBaseParams{2, {2, 1}, "p0"}).member());
}

TEST_CASE("worked scaling example uses the coefficient ceiling") {
  const GradedBallean b = line_ballean(4);
  const FreeVector scaled = Rational(3, 2) * diff("p2", "p1");
  CHECK(ideal_membership(b, scaled, IdealBaseParams{2, {2, 1}, "p0"}).member());
}

TEST_CASE("every basis point is reachable at the top level") {
  for (const auto& [name, b] : corpus()) {
    CAPTURE(name);
    const std::uint32_t top = static_cast<std::uint32_t>(b.level_count());
    const PointId z = b.ground().at(0);
    for (std::size_t i = 0; i < b.ground().size(); ++i) {
      const FreeVector y = FreeVector::basis(b.ground().at(i));
      CHECK(ideal_membership(b, y, IdealBaseParams{1, {top, 1}, z}).member());
    }
  }
}

TEST_CASE("the four sampled laws hold on the corpus") {
  for (const auto& [name, b] : corpus()) {
    CAPTURE(name);
    const ProbeReport r = ideal_axiom_probe(b, ProbeConfig{101, 25, 2});
    for (const ProbeCheck& c : r.checks) {
      CAPTURE(c.law);
      CHECK(c.failures == 0);
      CHECK(c.checked > 0);
    }
    CHECK(r.checks.size() == 4);
    CHECK(r.ok());
  }
}

TEST_CASE("probe reports are reproducible under a fixed seed") {
  const GradedBallean b = line_ballean(4);
  const ProbeReport a = ideal_axiom_probe(b, ProbeConfig{7, 30, 2});
  const ProbeReport c = ideal_axiom_probe(b, ProbeConfig{7, 30, 2});
  REQUIRE(a.checks.size() == c.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].law == c.checks[i].law);
    CHECK(a.checks[i].checked == c.checks[i].checked);
    CHECK(a.checks[i].failures == c.checks[i].failures);
  }
}
