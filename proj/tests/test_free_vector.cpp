#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "vball/decomposition.hpp"
#include "vball/free_vector.hpp"
#include "vball/membership.hpp"
#include "vball/oracle.hpp"
#include "vball/presets.hpp"
#include "vball/probe.hpp"

#include <vector>

using namespace vball;
using vball::testing::corpus;
using vball::testing::diff;
using vball::testing::vec;

namespace {

IdealBaseParams params(std::uint32_t n, std::uint32_t level, std::uint32_t power,
                       PointId z) {
  return IdealBaseParams{n, {level, power}, std::move(z)};
}

}  // namespace

TEST_CASE("vector arithmetic is exact and cancels") {
  const FreeVector a = diff("p1", "p0");
  const FreeVector b = diff("p0", "p1");
  CHECK((a + b).is_zero());
  CHECK(diff("p2", "p1").coordinate_sum() == Rational(0));
  const FreeVector v = vec({{"p0", Rational(3)}}) + diff("p2", "p1");
  CHECK(v.coordinate_sum() == Rational(3));
  CHECK((Rational(1, 2) * vec({{"p0", Rational(2, 3)}})).coefficient("p0") ==
        Rational(1, 3));
  CHECK((-a) == b);
}

TEST_CASE("zero coefficients vanish from the support") {
  FreeVector v = vec({{"p0", Rational(1)}, {"p1", Rational(-1)}});
  v += diff("p1", "p0");
  CHECK(v.is_zero());
  CHECK(v.support().empty());
}

TEST_CASE("evaluate sums difference terms and the anchor") {
  Decomposition d;
  d.params = params(1, 2, 1, "p0");
  d.terms = {{"p2", "p1", Rational(1)}};
  CHECK(evaluate(d) == diff("p2", "p1"));

  d.terms = {{"p1", "p0", Rational(1)}, {"p0", "p1", Rational(1)}};
  CHECK(evaluate(d).is_zero());

  d.terms = {};
  d.z_coeff = Rational(2);
  CHECK(evaluate(d) == vec({{"p0", Rational(2)}}));
}

TEST_CASE("certificate verification enforces every bound") {
  const GradedBallean b = line_ballean(4);
  Decomposition d;
  d.params = params(1, 2, 1, "p0");
  d.terms = {{"p2", "p1", Rational(1)}};
  CHECK(verify_decomposition(b, d));

  Decomposition far = d;
  far.terms = {{"p3", "p1", Rational(1)}};
  CHECK(!verify_decomposition(b, far));
  const auto detail = verify_decomposition_detailed(b, far);
  REQUIRE(!detail.ok());

  Decomposition heavy = d;
  heavy.terms = {{"p2", "p1", Rational(3)}};
  CHECK(!verify_decomposition(b, heavy));

  Decomposition crowded = d;
  crowded.terms = {{"p2", "p1", Rational(1)}, {"p1", "p0", Rational(1)}};
  CHECK(!verify_decomposition(b, crowded));

  Decomposition anchored = d;
  anchored.z_coeff = Rational(3, 2);
  CHECK(!verify_decomposition(b, anchored));
}

TEST_CASE("single difference is a member at one copy") {
  const GradedBallean b = line_ballean(4);
  const MembershipResult r = ideal_membership(b, diff("p2", "p1"), params(1, 2, 1, "p0"));
  REQUIRE(r.member());
  CHECK(verify_decomposition(b, *r.certificate));
  CHECK(evaluate(*r.certificate) == diff("p2", "p1"));
}

TEST_CASE("a basis point splits into a top-level difference plus the anchor") {
  const GradedBallean b = line_ballean(4);
  const MembershipResult r =
      ideal_membership(b, vec({{"p3", Rational(1)}}), params(1, 4, 1, "p0"));
  REQUIRE(r.member());
  CHECK(r.certificate->z_coeff == Rational(1));
  CHECK(evaluate(*r.certificate) == vec({{"p3", Rational(1)}}));
  CHECK(verify_decomposition(b, *r.certificate));
}

TEST_CASE("distance-two difference needs two copies at the unit level") {
  const GradedBallean b = line_ballean(4);
  const FreeVector v = diff("p3", "p1");
  CHECK(!ideal_membership(b, v, params(1, 2, 1, "p0")).member());
  const MembershipResult r = ideal_membership(b, v, params(2, 2, 1, "p0"));
  REQUIRE(r.member());
  CHECK(verify_decomposition(b, *r.certificate));
  CHECK(evaluate(*r.certificate) == v);
}

TEST_CASE("coefficient bound blocks a tripled difference at one copy") {
  const GradedBallean b = line_ballean(4);
  const FreeVector v = Rational(3) * diff("p2", "p1");
  CHECK(!ideal_membership(b, v, params(1, 2, 1, "p0")).member());
  CHECK(ideal_membership(b, v, params(3, 2, 1, "p0")).member());
}

TEST_CASE("zero vector and pure anchor multiples sit on the boundary") {
  const GradedBallean b = line_ballean(4);
  CHECK(ideal_membership(b, FreeVector(), params(1, 1, 1, "p0")).member());
  for (std::uint32_t n = 1; n <= 3; ++n) {
    const FreeVector v = vec({{"p0", Rational(static_cast<long>(n))}});
    const MembershipResult r = ideal_membership(b, v, params(n, 1, 1, "p0"));
    REQUIRE(r.member());
    CHECK(r.certificate->z_coeff == Rational(static_cast<long>(n)));
    // one more than the bound is out
    const FreeVector over = vec({{"p0", Rational(static_cast<long>(n) + 1)}});
    CHECK(!ideal_membership(b, over, params(n, 1, 1, "p0")).member());
  }
}

TEST_CASE("membership of v and -v coincide") {
  const GradedBallean b = line_ballean(5);
  RandomSource rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const FreeVector v = random_vector(b, rng);
    const auto p = params(2, 2, 1, "p0");
    CHECK(ideal_membership(b, v, p).member() == ideal_membership(b, -v, p).member());
  }
}

TEST_CASE("membership is monotone in copies, level, and power") {
  const GradedBallean b = line_ballean(5);
  RandomSource rng(43);
  for (int trial = 0; trial < 25; ++trial) {
    const FreeVector v = random_vector(b, rng, 2, 2);
    for (std::uint32_t n = 1; n <= 2; ++n) {
      for (std::uint32_t lvl = 1; lvl + 1 <= b.level_count(); ++lvl) {
        if (!ideal_membership(b, v, params(n, lvl, 1, "p0")).member()) continue;
        CHECK(ideal_membership(b, v, params(n + 1, lvl, 1, "p0")).member());
        CHECK(ideal_membership(b, v, params(n, lvl + 1, 1, "p0")).member());
        CHECK(ideal_membership(b, v, params(n, lvl, 2, "p0")).member());
      }
    }
  }
}

TEST_CASE("support pruning never changes the verdict") {
  const GradedBallean b = line_ballean(5);
  RandomSource rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    const FreeVector v = random_vector(b, rng);
    const auto p = params(static_cast<std::uint32_t>(1 + rng.below(2)),
                          static_cast<std::uint32_t>(1 + rng.below(b.level_count())), 1,
                          b.ground().at(rng.below(b.ground().size())));
    const MembershipResult plain = ideal_membership(b, v, p);
    const MembershipResult pruned = ideal_membership(b, v, p, MembershipOptions{true});
    CHECK(plain.member() == pruned.member());
    if (pruned.member()) CHECK(verify_decomposition(b, *pruned.certificate));
  }
}

TEST_CASE("search is deterministic and the first certificate is stable") {
  const GradedBallean b = line_ballean(4);
  const FreeVector v = diff("p3", "p1");
  const MembershipResult a = ideal_membership(b, v, params(2, 2, 1, "p0"));
  const MembershipResult c = ideal_membership(b, v, params(2, 2, 1, "p0"));
  REQUIRE(a.member());
  CHECK(*a.certificate == *c.certificate);
}

TEST_CASE("exhaustive oracle agrees on the worked examples") {
  const GradedBallean b = line_ballean(4);
  CHECK(!brute_force_oracle(b, diff("p3", "p1"), params(1, 2, 1, "p0")).has_value());
  const auto two = brute_force_oracle(b, diff("p3", "p1"), params(2, 2, 1, "p0"));
  REQUIRE(two.has_value());
  CHECK(verify_decomposition(b, *two));
  CHECK(evaluate(*two) == diff("p3", "p1"));

  const auto zero = brute_force_oracle(b, FreeVector(), params(1, 3, 1, "p0"));
  REQUIRE(zero.has_value());
  CHECK(evaluate(*zero).is_zero());

  const auto anchored =
      brute_force_oracle(b, vec({{"p0", Rational(2)}}), params(2, 1, 1, "p0"));
  REQUIRE(anchored.has_value());
  CHECK(anchored->z_coeff == Rational(2));
}

TEST_CASE("oracle refuses oversized instances") {
  const GradedBallean big = line_ballean(7);
  CHECK_THROWS_AS(
      brute_force_oracle(big, diff("p1", "p0"), params(1, 2, 1, "p0")),
      std::invalid_argument);
  const GradedBallean b = line_ballean(4);
  CHECK_THROWS_AS(brute_force_oracle(b, diff("p1", "p0"), params(4, 2, 1, "p0")),
                  std::invalid_argument);
}

TEST_CASE("primary decision and oracle agree on random instances") {
  RandomSource rng(53);
  const std::vector<GradedBallean> spaces{line_ballean(4), cycle_ballean(5),
                                          line_ballean(5)};
  int checked = 0;
  for (const GradedBallean& b : spaces) {
    for (int trial = 0; trial < 40; ++trial) {
      FreeVector v;
      if (rng.one_in(2)) {
        IdealBaseParams gen = params(
            static_cast<std::uint32_t>(1 + rng.below(2)),
            static_cast<std::uint32_t>(1 + rng.below(b.level_count())),
            static_cast<std::uint32_t>(1 + rng.below(2)),
            b.ground().at(rng.below(b.ground().size())));
        RandomSource inner(rng.next());
        v = evaluate(random_decomposition(b, gen, inner));
      } else {
        v = random_vector(b, rng, 3, 4);
      }
      const IdealBaseParams p = params(
          static_cast<std::uint32_t>(1 + rng.below(3)),
          static_cast<std::uint32_t>(1 + rng.below(b.level_count())),
          static_cast<std::uint32_t>(1 + rng.below(2)),
          b.ground().at(rng.below(b.ground().size())));
      const MembershipResult mine = ideal_membership(b, v, p);
      const auto theirs = brute_force_oracle(b, v, p);
      CAPTURE(trial);
      CHECK(mine.member() == theirs.has_value());
      if (mine.member()) CHECK(verify_decomposition(b, *mine.certificate));
      if (theirs) CHECK(verify_decomposition(b, *theirs));
      ++checked;
    }
  }
  CHECK(checked == 120);
}

TEST_CASE("every returned certificate re-verifies across the corpus") {
  RandomSource rng(59);
  for (const auto& [name, b] : corpus()) {
    CAPTURE(name);
    for (int trial = 0; trial < 10; ++trial) {
      const IdealBaseParams p = params(
          static_cast<std::uint32_t>(1 + rng.below(2)),
          static_cast<std::uint32_t>(1 + rng.below(b.level_count())), 1,
          b.ground().at(rng.below(b.ground().size())));
      const FreeVector v = evaluate(random_decomposition(b, p, rng));
      const MembershipResult r = ideal_membership(b, v, p);
      REQUIRE(r.member());
      CHECK(verify_decomposition(b, *r.certificate));
      CHECK(evaluate(*r.certificate) == v);
    }
  }
}

TEST_CASE("anchor coefficient equals the coordinate sum") {
  const GradedBallean b = line_ballean(5);
  RandomSource rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    const IdealBaseParams p = params(
        2, static_cast<std::uint32_t>(1 + rng.below(b.level_count())), 1, "p0");
    const Decomposition d = random_decomposition(b, p, rng);
    CHECK(evaluate(d).coordinate_sum() == d.z_coeff);
  }
  // difference targets force a zero anchor coefficient
  const MembershipResult r = ideal_membership(b, diff("p4", "p2"), params(2, 2, 1, "p0"));
  REQUIRE(r.member());
  CHECK(r.certificate->z_coeff == Rational(0));
}
