#pragma once

#include "vball/relation.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace vball {

/// Names one member of the generated entourage base: the `power`-fold
/// composition of scale level `level`. Ordering is lexicographic
/// (level, power); boundedness witnesses use it.
struct EffectiveEntourage {
  std::uint32_t level = 1;
  std::uint32_t power = 1;

  auto operator<=>(const EffectiveEntourage&) const = default;
};

/// A finitely presented ballean: a ground set with a monotone scale of
/// reflexive symmetric relations. Level L is expected to relate every
/// pair of points (connectedness); check_axioms verifies that together
/// with the other scale invariants, so adversarial presentations are
/// representable and diagnosable.
class GradedBallean {
 public:
  struct Normalization {
    bool symmetrized = false;
    bool diagonal_completed = false;

    std::vector<std::string> warnings() const;
  };

  /// Normalizes each level to be symmetric and reflexive (the closure
  /// does not change the generated coarse structure) and reports what
  /// was fixed up.
  static std::pair<GradedBallean, Normalization> normalized(Ground ground,
                                                            std::vector<Relation> levels);

  /// Stores levels exactly as given; used to present broken scales to
  /// check_axioms.
  static GradedBallean raw(Ground ground, std::vector<Relation> levels);

  const Ground& ground() const { return ground_; }
  std::size_t level_count() const { return levels_.size(); }
  /// 1-based level access.
  const Relation& level(std::uint32_t r) const;
  const std::vector<Relation>& levels() const { return levels_; }

  /// The relation named by e, with powers memoized (and cut off at their
  /// stabilization point). Throws std::out_of_range on a bad level.
  const Relation& entourage(EffectiveEntourage e) const;

  GradedBallean(const GradedBallean& other);
  GradedBallean(GradedBallean&&) noexcept = default;
  GradedBallean& operator=(const GradedBallean& other);
  GradedBallean& operator=(GradedBallean&&) noexcept = default;

  bool operator==(const GradedBallean& other) const {
    return ground_ == other.ground_ && levels_ == other.levels_;
  }

 private:
  GradedBallean(Ground ground, std::vector<Relation> levels);

  Ground ground_;
  std::vector<Relation> levels_;

  mutable std::map<EffectiveEntourage, Relation> power_cache_;
  mutable std::unique_ptr<std::mutex> cache_mutex_;
};

/// ball(x, e) = e[x], as sorted point ids.
std::vector<PointId> ball(const GradedBallean& b, const PointId& x, EffectiveEntourage e);

/// e[A] = union of e[a] over a in A.
std::vector<PointId> ball_of_set(const GradedBallean& b, const std::vector<PointId>& set,
                                 EffectiveEntourage e);

struct BoundWitness {
  PointId center;
  EffectiveEntourage entourage;

  bool operator==(const BoundWitness&) const = default;
};

/// Least witness (level, power, point) with Y inside one ball, or nullopt
/// when the presentation is too broken to bound Y. The empty set is
/// bounded with the trivial witness.
std::optional<BoundWitness> is_bounded(const GradedBallean& b, const std::set<PointId>& points);

enum class BalleanAxiom {
  Diagonal,       // each level contains the diagonal
  Symmetry,       // each level equals its inverse
  Monotonicity,   // levels are nested upward
  Connectedness,  // the top level relates every pair
};

std::string to_string(BalleanAxiom axiom);

struct AxiomViolation {
  BalleanAxiom axiom;
  std::uint32_t level = 0;  // 0 when not level-specific
  std::optional<std::pair<PointId, PointId>> witness;

  std::string describe() const;
};

/// check_axioms report: all violations in scan order; the first entry is
/// the first violated axiom. Composition/inverse/subset closure of the
/// generated family reduces, on the (level, power) base, to symmetry plus
/// monotonicity of the scale.
struct AxiomReport {
  std::vector<AxiomViolation> violations;

  bool ok() const { return violations.empty(); }
};

AxiomReport check_axioms(const GradedBallean& b);

/// Subballean on Y: each level intersected with Y x Y, top level
/// re-completed to full. Y must be a nonempty subset of the ground.
GradedBallean restrict(const GradedBallean& b, const std::set<PointId>& sub);

/// Product ballean on the cartesian ground, levels aligned by index and
/// the shorter scale padded with its top level. Product points are named
/// "(p,q)".
GradedBallean product(const GradedBallean& b1, const GradedBallean& b2);

PointId product_point(const PointId& p, const PointId& q);

}  // namespace vball
