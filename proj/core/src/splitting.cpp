#include "vball/splitting.hpp"

#include "vball/probe.hpp"
#include "vball/rng.hpp"

#include <set>
#include <stdexcept>

namespace vball {

namespace {

std::uint32_t top_level(const GradedBallean& b) {
  return static_cast<std::uint32_t>(b.level_count());
}

void note(SplitValidation& v, std::uint32_t& counter, const std::string& what) {
  ++counter;
  if (v.issues.size() < 5) v.issues.push_back(what);
}

}  // namespace

std::pair<Rational, FreeVector> split_forward(const FreeVector& v, const PointId& axis) {
  const Rational c = v.coefficient(axis);
  FreeVector rest = v;
  rest -= c * FreeVector::basis(axis);
  return {c, std::move(rest)};
}

FreeVector split_backward(const Rational& axis_coeff, const FreeVector& rest,
                          const PointId& axis) {
  FreeVector v = rest;
  v += axis_coeff * FreeVector::basis(axis);
  return v;
}

SplitContext make_split_context(const GradedBallean& b, const PointId& axis) {
  if (b.ground().size() < 2) {
    throw std::invalid_argument("splitting needs at least two points");
  }
  (void)b.ground().index_of(axis);
  std::vector<PointId> rest_ids;
  std::set<PointId> rest_set;
  for (const PointId& p : b.ground().points()) {
    if (p != axis) {
      rest_ids.push_back(p);
      rest_set.insert(p);
    }
  }
  Ground rest_ground(rest_ids);
  PointId anchor = rest_ground.at(0);
  GradedBallean rest_ballean = restrict(b, rest_set);
  return SplitContext{axis, std::move(rest_ground), std::move(anchor),
                      std::move(rest_ballean)};
}

SplitForwardParams split_forward_params(const SplitContext& ctx,
                                        const IdealBaseParams& source) {
  const std::uint32_t n = source.n;
  SplitForwardParams out;
  out.source = source;
  out.axis_box = Rational(static_cast<long>(n) * (static_cast<long>(n) + 1));
  out.rest.n = n * n + n;
  out.rest.entourage = EffectiveEntourage{top_level(ctx.rest_ballean), 1};
  out.rest.z = ctx.rest_anchor;
  return out;
}

SplitBackwardParams split_backward_params(const SplitContext& ctx,
                                          const GradedBallean& b, const Rational& axis_box,
                                          const IdealBaseParams& rest) {
  if (rest.z != ctx.rest_anchor) {
    throw std::invalid_argument("rest-side parameters must anchor at the rest anchor");
  }
  SplitBackwardParams out;
  out.axis_box = axis_box;
  out.rest = rest;
  out.whole.n = rest.n + ceil_abs_to_nat(axis_box, 0);
  out.whole.entourage = EffectiveEntourage{top_level(b), rest.entourage.power};
  out.whole.z = ctx.rest_anchor;
  return out;
}

std::pair<Rational, Decomposition> transport_to_rest(const SplitContext& ctx,
                                                     const Decomposition& d) {
  const SplitForwardParams map = split_forward_params(ctx, d.params);

  Rational axis_coeff(0);
  Rational anchor_acc = d.z_coeff;
  Decomposition rest_d;
  rest_d.params = map.rest;

  if (d.params.z == ctx.axis) {
    axis_coeff += d.z_coeff;
    anchor_acc = 0;
  } else if (d.params.z != ctx.rest_anchor && d.z_coeff != 0) {
    rest_d.terms.push_back(DiffTerm{d.params.z, ctx.rest_anchor, d.z_coeff});
  }

  for (const DiffTerm& t : d.terms) {
    if (t.lambda == 0 || t.x == t.y) continue;
    if (t.x == ctx.axis) {
      axis_coeff += t.lambda;
      rest_d.terms.push_back(DiffTerm{ctx.rest_anchor, t.y, t.lambda});
      anchor_acc -= t.lambda;
    } else if (t.y == ctx.axis) {
      axis_coeff -= t.lambda;
      rest_d.terms.push_back(DiffTerm{t.x, ctx.rest_anchor, t.lambda});
      anchor_acc += t.lambda;
    } else {
      rest_d.terms.push_back(t);
    }
  }
  rest_d.z_coeff = anchor_acc;
  return {std::move(axis_coeff), std::move(rest_d)};
}

Decomposition transport_to_whole(const SplitContext& ctx, const GradedBallean& b,
                                 const Rational& axis_coeff, const Rational& axis_box,
                                 const Decomposition& rest_d) {
  const SplitBackwardParams map =
      split_backward_params(ctx, b, axis_box, rest_d.params);

  Decomposition whole;
  whole.params = map.whole;
  whole.terms = rest_d.terms;
  whole.z_coeff = rest_d.z_coeff;
  if (axis_coeff != 0) {
    whole.terms.push_back(DiffTerm{ctx.axis, ctx.rest_anchor, axis_coeff});
    whole.z_coeff += axis_coeff;
  }
  return whole;
}

SplitValidation validate_split(const GradedBallean& b, const PointId& axis,
                               std::uint64_t seed, std::uint32_t round_trip_samples,
                               std::uint32_t certificate_samples) {
  const SplitContext ctx = make_split_context(b, axis);
  SplitValidation v;
  v.axis = ctx.axis;
  v.rest_anchor = ctx.rest_anchor;

  RandomSource rng(seed);
  const std::uint32_t levels = top_level(b);
  const std::uint32_t rest_levels = top_level(ctx.rest_ballean);

  for (std::uint32_t s = 0; s < round_trip_samples; ++s) {
    ++v.round_trips;
    const FreeVector vec = random_vector(b, rng);
    const auto [coeff, rest] = split_forward(vec, axis);
    bool good = rest.coefficient(axis) == 0;
    good = good && split_backward(coeff, rest, axis) == vec;
    const auto [coeff2, rest2] = split_forward(split_backward(coeff, rest, axis), axis);
    good = good && coeff2 == coeff && rest2 == rest;
    if (!good) note(v, v.round_trip_failures, "round trip broke on a sampled vector");
  }

  for (std::uint32_t s = 0; s < certificate_samples; ++s) {
    ++v.forward_samples;
    IdealBaseParams params;
    params.n = static_cast<std::uint32_t>(rng.range(1, 2));
    params.entourage = EffectiveEntourage{
        static_cast<std::uint32_t>(rng.range(1, levels)),
        static_cast<std::uint32_t>(rng.range(1, 2))};
    params.z = b.ground().at(rng.below(b.ground().size()));
    const Decomposition d = random_decomposition(b, params, rng);
    const SplitForwardParams map = split_forward_params(ctx, params);

    const auto [axis_coeff, rest_d] = transport_to_rest(ctx, d);
    const auto [want_coeff, want_rest] = split_forward(evaluate(d), axis);
    if (axis_coeff != want_coeff || evaluate(rest_d) != want_rest) {
      note(v, v.forward_failures, "forward transport changed the vector");
      continue;
    }
    if (abs(axis_coeff) > map.axis_box) {
      note(v, v.forward_failures, "axis coordinate escaped its box");
      continue;
    }
    if (!(rest_d.params == map.rest)) {
      note(v, v.forward_failures, "forward transport emitted unexpected parameters");
      continue;
    }
    if (!verify_decomposition(ctx.rest_ballean, rest_d)) {
      note(v, v.forward_failures, "forward transport left the target base set");
    }
  }

  for (std::uint32_t s = 0; s < certificate_samples; ++s) {
    ++v.backward_samples;
    IdealBaseParams params;
    params.n = static_cast<std::uint32_t>(rng.range(1, 2));
    params.entourage = EffectiveEntourage{
        static_cast<std::uint32_t>(rng.range(1, rest_levels)),
        static_cast<std::uint32_t>(rng.range(1, 2))};
    params.z = ctx.rest_anchor;
    const Decomposition rest_d = random_decomposition(ctx.rest_ballean, params, rng);
    const long box_units = static_cast<long>(rng.range(0, 3));
    const Rational axis_box(box_units);
    Rational axis_coeff(static_cast<long>(rng.range(-2 * box_units, 2 * box_units)), 2L);
    axis_coeff.canonicalize();
    const SplitBackwardParams map = split_backward_params(ctx, b, axis_box, params);

    const Decomposition whole = transport_to_whole(ctx, b, axis_coeff, axis_box, rest_d);
    if (evaluate(whole) != split_backward(axis_coeff, evaluate(rest_d), axis)) {
      note(v, v.backward_failures, "backward transport changed the vector");
      continue;
    }
    if (!(whole.params == map.whole)) {
      note(v, v.backward_failures, "backward transport emitted unexpected parameters");
      continue;
    }
    if (!verify_decomposition(b, whole)) {
      note(v, v.backward_failures, "backward transport left the target base set");
    }
  }
  return v;
}

}  // namespace vball
