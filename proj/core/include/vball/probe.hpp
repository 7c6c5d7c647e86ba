#pragma once

#include "vball/decomposition.hpp"
#include "vball/rng.hpp"

#include <string>
#include <vector>

namespace vball {

/// Random certificate for the given params: every constraint holds by
/// construction, so the result always re-verifies.
Decomposition random_decomposition(const GradedBallean& b, const IdealBaseParams& params,
                                   RandomSource& rng);

/// Random vector supported on the ground with small coefficients.
FreeVector random_vector(const GradedBallean& b, RandomSource& rng, long max_num = 3,
                         long max_den = 4);

struct ProbeConfig {
  std::uint64_t seed = 0;
  std::uint32_t samples = 50;
  std::uint32_t max_n = 2;
};

struct ProbeCheck {
  std::string law;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> details;  // first few failures
};

struct ProbeReport {
  std::vector<ProbeCheck> checks;

  bool ok() const {
    for (const ProbeCheck& c : checks) {
      if (c.failures > 0) return false;
    }
    return true;
  }
};

/// Samples base-set members and drives them through the ideal laws:
/// sums land in the doubled base set, scalings land in the ceiling-
/// scaled base set, every basis point is covered at the top level, and
/// membership is monotone in both the copy count and the entourage.
/// Check order in the report: sum, scale, cover, monotone.
ProbeReport ideal_axiom_probe(const GradedBallean& b, const ProbeConfig& config);

}  // namespace vball
