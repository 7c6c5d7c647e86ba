#include "vball/metrization.hpp"

#include "vball/membership.hpp"
#include "vball/probe.hpp"
#include "vball/rng.hpp"

#include <algorithm>
#include <set>

namespace vball {

BornologyReport bornology_cof(const GradedBallean& b) {
  BornologyReport report;
  report.cofinality = "1";
  std::set<PointId> everything(b.ground().points().begin(), b.ground().points().end());
  report.top_witness = is_bounded(b, everything);
  if (report.top_witness) {
    report.base.push_back("ball at " + report.top_witness->center + " of level " +
                          std::to_string(report.top_witness->entourage.level) + " power " +
                          std::to_string(report.top_witness->entourage.power) +
                          " containing the whole ground");
  } else {
    report.notes.push_back(
        "no single ball bounds the ground; the presentation is not connected");
  }
  return report;
}

BornologyReport bornology_cof(const WindowBallean& b) {
  BornologyReport report;
  report.cofinality = "countable";
  const std::uint32_t shown = std::max<std::uint32_t>(1, std::min<std::uint32_t>(8, b.max_radius()));
  for (std::uint32_t r = 1; r <= shown; ++r) {
    report.chain_radii.push_back(r);
    report.base.push_back("points within max-norm distance < " + std::to_string(r) +
                          " of the origin");
  }
  report.notes.push_back("chain continues for every radius; listing truncated");
  return report;
}

MetrizabilityReport metrizability_check(const GradedBallean& b, std::uint64_t seed,
                                        std::uint32_t samples) {
  MetrizabilityReport report;
  const AxiomReport axioms = check_axioms(b);
  if (!axioms.ok()) {
    for (const AxiomViolation& v : axioms.violations) {
      if (report.notes.size() < 5) report.notes.push_back(v.describe());
    }
    return report;
  }
  report.metrizable = true;

  FiniteMetric realized = metric_from_scale(b);
  GradedBallean target = metric_ballean(realized);
  report.realization = check_asymorphism(PointMap::identity(b.ground()), b, target);
  report.metric = std::move(realized);

  RandomSource rng(seed);
  const MembershipOptions fast{true};
  const std::uint32_t levels = static_cast<std::uint32_t>(b.level_count());
  for (std::uint32_t s = 0; s < samples; ++s) {
    IdealBaseParams params;
    params.n = static_cast<std::uint32_t>(rng.range(1, 2));
    params.entourage = EffectiveEntourage{
        static_cast<std::uint32_t>(rng.range(1, levels)),
        static_cast<std::uint32_t>(rng.range(1, 2))};
    params.z = b.ground().at(rng.below(b.ground().size()));
    const Decomposition d = random_decomposition(b, params, rng);
    const FreeVector v = evaluate(d);

    ChainSample sample;
    sample.sampled = params;
    const std::uint32_t n_cap = params.n * params.entourage.power + 1;
    for (std::uint32_t np = 1; np <= n_cap && !sample.containing; ++np) {
      for (std::uint32_t rp = 1; rp <= levels && !sample.containing; ++rp) {
        IdealBaseParams chain_entry{np, EffectiveEntourage{rp, 1}, params.z};
        if (ideal_membership(b, v, chain_entry, fast).member()) {
          sample.containing = chain_entry;
        }
      }
    }
    if (!sample.containing) ++report.chain_failures;
    report.chain.push_back(std::move(sample));
  }
  return report;
}

}  // namespace vball
