#pragma once

#include "vball/decomposition.hpp"
#include "vball/membership.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vball {

/// Symbolic set descriptor: the sum of `copies` copies of
/// [-bound, bound]-scaled difference vectors of entourage e, plus
/// [-z_bound, z_bound] multiples of the anchor. Seeds have copies 1 with
/// bound 1 (difference sets) or a bare anchor interval.
struct ClosureDescriptor {
  std::uint32_t copies = 0;
  Rational bound = Rational(0);
  EffectiveEntourage e{1, 1};
  Rational z_bound = Rational(0);
  std::uint32_t generation = 0;

  bool operator==(const ClosureDescriptor&) const = default;
};

struct BaseCover {
  IdealBaseParams base;
  std::optional<std::size_t> descriptor;  // index into family
};

struct ClosureReport {
  PointId anchor;
  std::uint32_t depth = 0;
  std::vector<ClosureDescriptor> family;
  /// Per family entry, base params containing it (parameter arithmetic).
  std::vector<IdealBaseParams> covering_base;
  /// Per probed base set, the family entry containing it, when any.
  std::vector<BaseCover> base_covers;
  std::uint64_t sampled_checks = 0;
  std::vector<std::string> failures;

  bool mutually_cofinal() const {
    for (const BaseCover& c : base_covers) {
      if (!c.descriptor) return false;
    }
    return failures.empty();
  }
};

/// Closes the difference-set and anchor seeds under doubling, natural
/// scaling up to `depth`, and pairwise joins, for `depth` generations
/// with dominance pruning. Then probes mutual cofinality with the
/// B(n, e, z) family for n up to depth: one direction is proved by
/// parameter arithmetic, containments small enough to afford are also
/// confirmed by membership sampling. Throws std::invalid_argument when
/// depth exceeds 4.
ClosureReport generated_ideal_closure(const GradedBallean& b, std::uint32_t depth,
                                      const PointId& anchor, std::uint64_t seed,
                                      std::uint32_t samples);

}  // namespace vball
