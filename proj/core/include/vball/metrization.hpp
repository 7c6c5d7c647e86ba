#pragma once

#include "vball/ballean.hpp"
#include "vball/coarse_map.hpp"
#include "vball/decomposition.hpp"
#include "vball/lattice.hpp"
#include "vball/metric.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace vball {

// A cofinal base for the bounded sets, with its cardinality class.
struct BornologyReport {
  std::string cofinality;
  std::vector<std::string> base;
  std::optional<BoundWitness> top_witness;
  std::vector<std::uint32_t> chain_radii;
  std::vector<std::string> notes;

  bool ok() const { return !base.empty(); }
};

// Finite presentation: one ball bounds the whole ground.
BornologyReport bornology_cof(const GradedBallean& b);

// Lattice model: the canonical chain of balls at the origin.
BornologyReport bornology_cof(const WindowBallean& b);

struct ChainSample {
  IdealBaseParams sampled;
  std::optional<IdealBaseParams> containing;
};

struct MetrizabilityReport {
  bool metrizable = false;
  std::optional<FiniteMetric> metric;
  std::optional<AsymorphismResult> realization;
  std::vector<ChainSample> chain;
  std::uint32_t chain_failures = 0;
  std::vector<std::string> notes;

  bool ok() const {
    return metrizable && realization && realization->ok() && chain_failures == 0;
  }
};

// Realizes the scale as a metric, validates the identity as an
// asymorphism onto the metric presentation, and samples ideal members to
// confirm the power-free chain of base sets is cofinal.
MetrizabilityReport metrizability_check(const GradedBallean& b, std::uint64_t seed,
                                        std::uint32_t samples);

}  // namespace vball
