#include "vball/probe.hpp"

#include "vball/membership.hpp"

#include <algorithm>

namespace vball {

Decomposition random_decomposition(const GradedBallean& b, const IdealBaseParams& params,
                                   RandomSource& rng) {
  Decomposition d;
  d.params = params;
  const auto& pairs = b.entourage(params.entourage).pairs();
  const long n = static_cast<long>(params.n);
  const std::uint32_t count = static_cast<std::uint32_t>(rng.below(params.n + 1));
  for (std::uint32_t i = 0; i < count && !pairs.empty(); ++i) {
    const IndexPair& q = pairs[rng.below(pairs.size())];
    const long den = rng.range(1, 3);
    Rational lambda(rng.range(-n * den, n * den), den);
    lambda.canonicalize();
    if (lambda == 0) continue;
    d.terms.push_back(
        DiffTerm{b.ground().at(q.first), b.ground().at(q.second), std::move(lambda)});
  }
  const long den = rng.range(1, 3);
  Rational mu(rng.range(-n * den, n * den), den);
  mu.canonicalize();
  d.z_coeff = std::move(mu);
  return d;
}

FreeVector random_vector(const GradedBallean& b, RandomSource& rng, long max_num,
                         long max_den) {
  std::map<PointId, Rational> coords;
  const std::size_t entries = rng.below(b.ground().size() + 1);
  for (std::size_t i = 0; i < entries; ++i) {
    const PointId& p = b.ground().at(rng.below(b.ground().size()));
    coords[p] = rng.rational(max_num, max_den);
  }
  return FreeVector(std::move(coords));
}

namespace {

void record_failure(ProbeCheck& check, const std::string& detail) {
  ++check.failures;
  if (check.details.size() < 5) check.details.push_back(detail);
}

std::string describe_params(const IdealBaseParams& p) {
  return "n=" + std::to_string(p.n) + " level=" + std::to_string(p.entourage.level) +
         " power=" + std::to_string(p.entourage.power) + " z=" + p.z;
}

}  // namespace

ProbeReport ideal_axiom_probe(const GradedBallean& b, const ProbeConfig& config) {
  ProbeReport report;
  report.checks = {ProbeCheck{"sum", 0, 0, {}}, ProbeCheck{"scale", 0, 0, {}},
                   ProbeCheck{"cover", 0, 0, {}}, ProbeCheck{"monotone", 0, 0, {}}};
  ProbeCheck& sum = report.checks[0];
  ProbeCheck& scale = report.checks[1];
  ProbeCheck& cover = report.checks[2];
  ProbeCheck& monotone = report.checks[3];

  RandomSource rng(config.seed);
  const std::uint32_t levels = static_cast<std::uint32_t>(b.level_count());
  const MembershipOptions fast{true};

  for (std::uint32_t s = 0; s < config.samples; ++s) {
    IdealBaseParams params;
    params.n = 1 + static_cast<std::uint32_t>(rng.below(std::max<std::uint32_t>(config.max_n, 1)));
    params.entourage =
        EffectiveEntourage{1 + static_cast<std::uint32_t>(rng.below(levels)),
                           1 + static_cast<std::uint32_t>(rng.below(2))};
    params.z = b.ground().at(rng.below(b.ground().size()));

    const Decomposition d1 = random_decomposition(b, params, rng);
    const Decomposition d2 = random_decomposition(b, params, rng);
    const FreeVector u = evaluate(d1);
    const FreeVector v = evaluate(d2);

    IdealBaseParams doubled = params;
    doubled.n = 2 * params.n;
    ++sum.checked;
    if (!ideal_membership(b, u + v, doubled, fast).member()) {
      record_failure(sum, "sum escaped the doubled base set at " + describe_params(params));
    }

    Rational lambda = rng.rational(3, 2);
    while (abs(lambda) > 2) lambda = rng.rational(3, 2);
    IdealBaseParams scaled = params;
    scaled.n = params.n * ceil_abs_to_nat(lambda, 1);
    ++scale.checked;
    if (!ideal_membership(b, lambda * u, scaled, fast).member()) {
      record_failure(scale, "scaling by " + format_rational(lambda) + " escaped at " +
                                describe_params(params));
    }

    IdealBaseParams bigger_n = params;
    bigger_n.n = params.n + 1;
    IdealBaseParams bigger_level = params;
    bigger_level.entourage.level = std::min(params.entourage.level + 1, levels);
    IdealBaseParams bigger_power = params;
    bigger_power.entourage.power = params.entourage.power + 1;
    ++monotone.checked;
    if (!ideal_membership(b, u, bigger_n, fast).member() ||
        !ideal_membership(b, u, bigger_level, fast).member() ||
        !ideal_membership(b, u, bigger_power, fast).member()) {
      record_failure(monotone, "membership failed to persist upward at " +
                                   describe_params(params));
    }
  }

  const IdealBaseParams top{1, EffectiveEntourage{levels, 1}, b.ground().at(0)};
  for (const PointId& p : b.ground().points()) {
    ++cover.checked;
    if (!ideal_membership(b, FreeVector::basis(p), top, fast).member()) {
      record_failure(cover, "basis point " + p + " is not covered at the top level");
    }
  }
  return report;
}

}  // namespace vball
