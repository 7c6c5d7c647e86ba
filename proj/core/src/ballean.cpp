#include "vball/ballean.hpp"

#include <algorithm>
#include <stdexcept>

namespace vball {

std::vector<std::string> GradedBallean::Normalization::warnings() const {
  std::vector<std::string> out;
  if (symmetrized) out.push_back("levels symmetrized (pair inverses added)");
  if (diagonal_completed) out.push_back("diagonal completed on some levels");
  return out;
}

GradedBallean::GradedBallean(Ground ground, std::vector<Relation> levels)
    : ground_(std::move(ground)),
      levels_(std::move(levels)),
      cache_mutex_(std::make_unique<std::mutex>()) {
  if (ground_.empty()) throw std::invalid_argument("ballean ground must be nonempty");
  if (levels_.empty()) throw std::invalid_argument("ballean needs at least one level");
  for (const auto& level : levels_) {
    if (level.ground() != ground_) throw std::invalid_argument("level ground mismatch");
  }
}

GradedBallean::GradedBallean(const GradedBallean& other)
    : ground_(other.ground_),
      levels_(other.levels_),
      cache_mutex_(std::make_unique<std::mutex>()) {}

GradedBallean& GradedBallean::operator=(const GradedBallean& other) {
  if (this != &other) {
    ground_ = other.ground_;
    levels_ = other.levels_;
    power_cache_.clear();
  }
  return *this;
}

std::pair<GradedBallean, GradedBallean::Normalization> GradedBallean::normalized(
    Ground ground, std::vector<Relation> levels) {
  Normalization note;
  for (auto& level : levels) {
    bool symmetric = level.is_symmetric();
    bool reflexive = level.contains_diagonal();
    if (!symmetric || !reflexive) {
      level = level.symmetric_reflexive_closure();
      note.symmetrized |= !symmetric;
      note.diagonal_completed |= !reflexive;
    }
  }
  return {GradedBallean(std::move(ground), std::move(levels)), note};
}

GradedBallean GradedBallean::raw(Ground ground, std::vector<Relation> levels) {
  return GradedBallean(std::move(ground), std::move(levels));
}

const Relation& GradedBallean::level(std::uint32_t r) const {
  if (r < 1 || r > levels_.size()) throw std::out_of_range("level out of range");
  return levels_[r - 1];
}

const Relation& GradedBallean::entourage(EffectiveEntourage e) const {
  if (e.level < 1 || e.level > levels_.size()) throw std::out_of_range("level out of range");
  if (e.power < 1) throw std::out_of_range("power must be >= 1");
  if (e.power == 1) return levels_[e.level - 1];

  std::lock_guard<std::mutex> lock(*cache_mutex_);
  auto it = power_cache_.find(e);
  if (it != power_cache_.end()) return it->second;

  // Extend from the largest cached power below e.power; once a power
  // stabilizes, every higher power is the same relation.
  Relation acc = levels_[e.level - 1];
  std::uint32_t have = 1;
  auto below = power_cache_.lower_bound(e);
  if (below != power_cache_.begin()) {
    --below;
    if (below->first.level == e.level) {
      acc = below->second;
      have = below->first.power;
    }
  }
  while (have < e.power) {
    Relation next = compose(acc, levels_[e.level - 1]);
    if (next == acc) break;
    acc = std::move(next);
    ++have;
  }
  return power_cache_.emplace(e, std::move(acc)).first->second;
}

std::vector<PointId> ball(const GradedBallean& b, const PointId& x, EffectiveEntourage e) {
  const std::uint32_t xi = b.ground().index_of(x);
  std::vector<PointId> out;
  for (std::uint32_t y : b.entourage(e).row(xi)) out.push_back(b.ground().at(y));
  return out;
}

std::vector<PointId> ball_of_set(const GradedBallean& b, const std::vector<PointId>& set,
                                 EffectiveEntourage e) {
  std::set<PointId> acc;
  for (const auto& a : set) {
    for (auto& p : ball(b, a, e)) acc.insert(std::move(p));
  }
  return {acc.begin(), acc.end()};
}

namespace {

// Powers of one level, enumerated until the relation stops growing.
std::vector<Relation> stabilized_powers(const GradedBallean& b, std::uint32_t level) {
  std::vector<Relation> out;
  out.push_back(b.entourage({level, 1}));
  for (std::uint32_t k = 2;; ++k) {
    const Relation& next = b.entourage({level, k});
    if (next == out.back()) break;
    out.push_back(next);
  }
  return out;
}

}  // namespace

std::optional<BoundWitness> is_bounded(const GradedBallean& b, const std::set<PointId>& points) {
  if (points.empty()) {
    return BoundWitness{b.ground().at(0), EffectiveEntourage{1, 1}};
  }
  std::vector<std::uint32_t> targets;
  targets.reserve(points.size());
  for (const auto& p : points) targets.push_back(b.ground().index_of(p));

  for (std::uint32_t r = 1; r <= b.level_count(); ++r) {
    const auto powers = stabilized_powers(b, r);
    for (std::uint32_t k = 1; k <= powers.size(); ++k) {
      const Relation& rel = powers[k - 1];
      for (std::uint32_t x = 0; x < b.ground().size(); ++x) {
        bool all = true;
        for (std::uint32_t y : targets) {
          if (!rel.contains(x, y)) {
            all = false;
            break;
          }
        }
        if (all) return BoundWitness{b.ground().at(x), EffectiveEntourage{r, k}};
      }
    }
  }
  return std::nullopt;
}

std::string to_string(BalleanAxiom axiom) {
  switch (axiom) {
    case BalleanAxiom::Diagonal: return "diagonal";
    case BalleanAxiom::Symmetry: return "symmetry";
    case BalleanAxiom::Monotonicity: return "monotonicity";
    case BalleanAxiom::Connectedness: return "connectedness";
  }
  return "?";
}

std::string AxiomViolation::describe() const {
  std::string out = to_string(axiom);
  if (level > 0) out += " at level " + std::to_string(level);
  if (witness) out += ", witness (" + witness->first + "," + witness->second + ")";
  return out;
}

AxiomReport check_axioms(const GradedBallean& b) {
  AxiomReport report;
  const Ground& g = b.ground();

  for (std::uint32_t r = 1; r <= b.level_count(); ++r) {
    for (std::uint32_t i = 0; i < g.size(); ++i) {
      if (!b.level(r).contains(i, i)) {
        report.violations.push_back(
            {BalleanAxiom::Diagonal, r, std::make_pair(g.at(i), g.at(i))});
        break;
      }
    }
  }
  for (std::uint32_t r = 1; r <= b.level_count(); ++r) {
    for (const auto& [x, y] : b.level(r).pairs()) {
      if (!b.level(r).contains(y, x)) {
        report.violations.push_back(
            {BalleanAxiom::Symmetry, r, std::make_pair(g.at(x), g.at(y))});
        break;
      }
    }
  }
  for (std::uint32_t r = 1; r + 1 <= b.level_count(); ++r) {
    for (const auto& [x, y] : b.level(r).pairs()) {
      if (!b.level(r + 1).contains(x, y)) {
        report.violations.push_back(
            {BalleanAxiom::Monotonicity, r, std::make_pair(g.at(x), g.at(y))});
        break;
      }
    }
  }
  const Relation& top = b.level(static_cast<std::uint32_t>(b.level_count()));
  bool done = false;
  for (std::uint32_t i = 0; i < g.size() && !done; ++i) {
    for (std::uint32_t j = 0; j < g.size() && !done; ++j) {
      if (!top.contains(i, j)) {
        report.violations.push_back({BalleanAxiom::Connectedness,
                                     static_cast<std::uint32_t>(b.level_count()),
                                     std::make_pair(g.at(i), g.at(j))});
        done = true;
      }
    }
  }
  return report;
}

GradedBallean restrict(const GradedBallean& b, const std::set<PointId>& sub) {
  if (sub.empty()) throw std::invalid_argument("restriction to empty set");
  for (const auto& p : sub) {
    if (!b.ground().contains(p)) throw std::invalid_argument("unknown point id: '" + p + "'");
  }
  Ground sub_ground(std::vector<PointId>(sub.begin(), sub.end()));
  std::vector<Relation> levels;
  levels.reserve(b.level_count());
  for (std::uint32_t r = 1; r <= b.level_count(); ++r) {
    levels.push_back(b.level(r).restricted_to(sub_ground));
  }
  levels.back() = Relation::full(sub_ground);
  return GradedBallean::raw(std::move(sub_ground), std::move(levels));
}

PointId product_point(const PointId& p, const PointId& q) {
  return "(" + p + "," + q + ")";
}

GradedBallean product(const GradedBallean& b1, const GradedBallean& b2) {
  std::vector<PointId> points;
  points.reserve(b1.ground().size() * b2.ground().size());
  for (const auto& p : b1.ground().points()) {
    for (const auto& q : b2.ground().points()) points.push_back(product_point(p, q));
  }
  Ground ground(std::move(points));

  // index of (i,j) in the product ground
  std::vector<std::uint32_t> id_map(b1.ground().size() * b2.ground().size());
  for (std::uint32_t i = 0; i < b1.ground().size(); ++i) {
    for (std::uint32_t j = 0; j < b2.ground().size(); ++j) {
      id_map[i * b2.ground().size() + j] =
          ground.index_of(product_point(b1.ground().at(i), b2.ground().at(j)));
    }
  }

  const auto level_count =
      static_cast<std::uint32_t>(std::max(b1.level_count(), b2.level_count()));
  std::vector<Relation> levels;
  levels.reserve(level_count);
  for (std::uint32_t r = 1; r <= level_count; ++r) {
    const Relation& e1 =
        b1.level(std::min<std::uint32_t>(r, static_cast<std::uint32_t>(b1.level_count())));
    const Relation& e2 =
        b2.level(std::min<std::uint32_t>(r, static_cast<std::uint32_t>(b2.level_count())));
    if (e1.is_full() && e2.is_full()) {
      levels.push_back(Relation::full(ground));
      continue;
    }
    std::vector<IndexPair> pairs;
    pairs.reserve(e1.pair_count() * e2.pair_count());
    for (const auto& [x1, y1] : e1.pairs()) {
      for (const auto& [x2, y2] : e2.pairs()) {
        pairs.emplace_back(id_map[x1 * b2.ground().size() + x2],
                           id_map[y1 * b2.ground().size() + y2]);
      }
    }
    levels.emplace_back(ground, std::move(pairs));
  }
  return GradedBallean::raw(std::move(ground), std::move(levels));
}

}  // namespace vball
