#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "vball/membership.hpp"
#include "vball/presets.hpp"
#include "vball/probe.hpp"
#include "vball/splitting.hpp"

using namespace vball;
using vball::testing::corpus;
using vball::testing::diff;
using vball::testing::vec;

TEST_CASE("forward split peels the axis coordinate") {
  const FreeVector v = vec({{"p0", Rational(2)}, {"p1", Rational(3)}});
  const auto [coeff, rest] = split_forward(v, "p0");
  CHECK(coeff == Rational(2));
  CHECK(rest == vec({{"p1", Rational(3)}}));
  CHECK(rest.coefficient("p0") == Rational(0));
}

TEST_CASE("splitting a vector without the axis leaves it whole") {
  const FreeVector v = diff("p2", "p1");
  const auto [coeff, rest] = split_forward(v, "p0");
  CHECK(coeff == Rational(0));
  CHECK(rest == v);
}

TEST_CASE("backward split is the exact inverse") {
  RandomSource rng(97);
  const GradedBallean b = line_ballean(5);
  for (int trial = 0; trial < 100; ++trial) {
    const FreeVector v = random_vector(b, rng);
    const auto [coeff, rest] = split_forward(v, "p2");
    CHECK(split_backward(coeff, rest, "p2") == v);
  }
}

TEST_CASE("the split context restricts to the remaining points") {
  const GradedBallean b = line_ballean(4);
  const SplitContext ctx = make_split_context(b, "p1");
  CHECK(ctx.axis == "p1");
  CHECK(ctx.rest_anchor == "p0");
  CHECK(ctx.rest_ground.points() == std::vector<PointId>{"p0", "p2", "p3"});
  CHECK(check_axioms(ctx.rest_ballean).ok());
}

TEST_CASE("a one-point space cannot split") {
  const GradedBallean one = restrict(line_ballean(2), {"p0"});
  CHECK_THROWS_AS(make_split_context(one, "p0"), std::invalid_argument);
  const GradedBallean b = line_ballean(3);
  CHECK_THROWS_AS(make_split_context(b, "nope"), std::invalid_argument);
}

TEST_CASE("forward parameter map grows by the announced arithmetic") {
  const GradedBallean b = line_ballean(4);
  const SplitContext ctx = make_split_context(b, "p0");
  const IdealBaseParams source{2, {2, 1}, "p1"};
  const SplitForwardParams fp = split_forward_params(ctx, source);
  CHECK(fp.axis_box == Rational(6));  // n(n+1)
  CHECK(fp.rest.n == 6);              // n^2 + n
  CHECK(fp.rest.z == ctx.rest_anchor);
  CHECK(fp.rest.entourage.level == ctx.rest_ballean.level_count());
}

TEST_CASE("transported certificates stay inside the mapped parameters") {
  for (const PointId axis : {PointId("p0"), PointId("p2")}) {
    const GradedBallean b = line_ballean(4);
    const SplitContext ctx = make_split_context(b, axis);
    RandomSource rng(103);
    for (int trial = 0; trial < 50; ++trial) {
      const IdealBaseParams p{
          static_cast<std::uint32_t>(1 + rng.below(2)),
          {static_cast<std::uint32_t>(1 + rng.below(b.level_count())),
           static_cast<std::uint32_t>(1 + rng.below(2))},
          b.ground().at(rng.below(b.ground().size()))};
      const Decomposition d = random_decomposition(b, p, rng);
      const SplitForwardParams fp = split_forward_params(ctx, p);
      const auto [axis_coeff, rest_d] = transport_to_rest(ctx, d);

      const auto [expect_coeff, expect_rest] = split_forward(evaluate(d), axis);
      CHECK(axis_coeff == expect_coeff);
      CHECK(evaluate(rest_d) == expect_rest);
      CHECK(abs(axis_coeff) <= fp.axis_box);
      CHECK(rest_d.params == fp.rest);
      CHECK(verify_decomposition(ctx.rest_ballean, rest_d));
    }
  }
}

TEST_CASE("recombined certificates verify in the whole space") {
  const GradedBallean b = line_ballean(4);
  const SplitContext ctx = make_split_context(b, "p0");
  RandomSource rng(107);
  for (int trial = 0; trial < 50; ++trial) {
    const IdealBaseParams rest_p{
        static_cast<std::uint32_t>(1 + rng.below(2)),
        {static_cast<std::uint32_t>(1 + rng.below(ctx.rest_ballean.level_count())),
         static_cast<std::uint32_t>(1 + rng.below(2))},
        ctx.rest_anchor};
    const Decomposition rest_d = random_decomposition(ctx.rest_ballean, rest_p, rng);
    const Rational box(static_cast<long>(rng.range(0, 3)));
    Rational coeff(static_cast<long>(rng.range(-6, 6)), 2L);
    coeff.canonicalize();
    if (abs(coeff) > box) continue;
    const SplitBackwardParams bp = split_backward_params(ctx, b, box, rest_p);
    const Decomposition whole = transport_to_whole(ctx, b, coeff, box, rest_d);
    CHECK(whole.params == bp.whole);
    CHECK(verify_decomposition(b, whole));
    CHECK(evaluate(whole) ==
          split_backward(coeff, evaluate(rest_d), ctx.axis));
  }
}

TEST_CASE("the backward parameter map rejects a mismatched rest anchor") {
  const GradedBallean b = line_ballean(4);
  const SplitContext ctx = make_split_context(b, "p0");
  const IdealBaseParams wrong{1, {1, 1}, "p3"};
  CHECK_THROWS_AS(split_backward_params(ctx, b, Rational(1), wrong),
                  std::invalid_argument);
}

TEST_CASE("full validation passes on every corpus presentation with two points") {
  for (const auto& [name, b] : corpus()) {
    if (b.ground().size() < 2) continue;
    CAPTURE(name);
    const SplitValidation r =
        validate_split(b, b.ground().at(0), 211, 60, 20);
    CAPTURE(r.issues);
    CHECK(r.ok());
    CHECK(r.round_trips == 60);
    CHECK(r.forward_samples == 20);
    CHECK(r.backward_samples == 20);
  }
}

TEST_CASE("validation works with a non-least axis too") {
  const GradedBallean b = cycle_ballean(5);
  const SplitValidation r = validate_split(b, "p3", 223, 40, 15);
  CAPTURE(r.issues);
  CHECK(r.ok());
  CHECK(r.rest_anchor == "p0");
}
