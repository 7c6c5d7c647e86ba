#pragma once

#include "vball/ballean.hpp"

#include <map>
#include <optional>

namespace vball {

/// Total point map between two grounds.
class PointMap {
 public:
  PointMap(Ground source, Ground target, const std::map<PointId, PointId>& images);

  static PointMap identity(const Ground& ground);
  static PointMap constant(Ground source, Ground target, const PointId& value);

  const Ground& source() const { return source_; }
  const Ground& target() const { return target_; }

  PointId apply(const PointId& p) const;
  std::uint32_t apply_index(std::uint32_t i) const { return image_.at(i); }

  bool is_bijection() const;
  /// Requires a bijection.
  PointMap inverted() const;

  static PointMap composed(const PointMap& first, const PointMap& then);

 private:
  PointMap(Ground source, Ground target, std::vector<std::uint32_t> image);

  Ground source_;
  Ground target_;
  std::vector<std::uint32_t> image_;  // indexed by source index
};

/// Coarseness modulus: for each tabulated source entourage, a target
/// entourage whose balls absorb the displaced source balls.
struct ModulusWitness {
  std::map<EffectiveEntourage, EffectiveEntourage> table;

  /// Extends base entries multiplicatively: if level r maps to (r', k'),
  /// then (r, k) maps to (r', k'*k). Throws if the level is missing.
  EffectiveEntourage lookup(EffectiveEntourage e) const;
};

struct CoarseCounterexample {
  PointId point;
  std::uint32_t source_level;
};

struct CoarseCheckResult {
  std::optional<ModulusWitness> witness;
  std::optional<CoarseCounterexample> counterexample;

  bool ok() const { return witness.has_value(); }
};

/// Finds, per source level, the least target entourage (smallest power,
/// then smallest level) with f(e[x]) inside e'[f(x)] for every x. On
/// scales whose top level is full this always succeeds; the
/// counterexample branch reports otherwise.
CoarseCheckResult check_coarse_map(const PointMap& f, const GradedBallean& b,
                                   const GradedBallean& b2);

struct AsymorphismResult {
  CoarseCheckResult forward;
  CoarseCheckResult backward;

  bool ok() const { return forward.ok() && backward.ok(); }
};

/// Both directions' moduli. Throws std::invalid_argument unless f is a
/// bijection between the grounds.
AsymorphismResult check_asymorphism(const PointMap& f, const GradedBallean& b,
                                    const GradedBallean& b2);

}  // namespace vball
