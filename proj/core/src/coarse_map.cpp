#include "vball/coarse_map.hpp"

#include <algorithm>
#include <stdexcept>

namespace vball {

PointMap::PointMap(Ground source, Ground target, std::vector<std::uint32_t> image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {}

PointMap::PointMap(Ground source, Ground target, const std::map<PointId, PointId>& images)
    : source_(std::move(source)), target_(std::move(target)) {
  image_.reserve(source_.size());
  for (std::uint32_t i = 0; i < source_.size(); ++i) {
    const PointId& p = source_.at(i);
    auto it = images.find(p);
    if (it == images.end()) {
      throw std::invalid_argument("point map missing image for \"" + p + "\"");
    }
    image_.push_back(target_.index_of(it->second));
  }
  for (const auto& [from, to] : images) {
    if (!source_.find(from)) {
      throw std::invalid_argument("point map names \"" + from +
                                  "\" which is not in the source ground");
    }
  }
}

PointMap PointMap::identity(const Ground& ground) {
  std::vector<std::uint32_t> image(ground.size());
  for (std::uint32_t i = 0; i < ground.size(); ++i) image[i] = i;
  return PointMap(ground, ground, std::move(image));
}

PointMap PointMap::constant(Ground source, Ground target, const PointId& value) {
  const std::uint32_t v = target.index_of(value);
  std::vector<std::uint32_t> image(source.size(), v);
  return PointMap(std::move(source), std::move(target), std::move(image));
}

PointId PointMap::apply(const PointId& p) const {
  return target_.at(image_.at(source_.index_of(p)));
}

bool PointMap::is_bijection() const {
  if (source_.size() != target_.size()) return false;
  std::vector<bool> hit(target_.size(), false);
  for (std::uint32_t v : image_) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

PointMap PointMap::inverted() const {
  if (!is_bijection()) {
    throw std::invalid_argument("cannot invert a non-bijective point map");
  }
  std::vector<std::uint32_t> image(target_.size());
  for (std::uint32_t i = 0; i < source_.size(); ++i) image[image_[i]] = i;
  return PointMap(target_, source_, std::move(image));
}

PointMap PointMap::composed(const PointMap& first, const PointMap& then) {
  if (!(first.target() == then.source())) {
    throw std::invalid_argument("point map composition: grounds do not line up");
  }
  std::vector<std::uint32_t> image(first.source_.size());
  for (std::uint32_t i = 0; i < first.source_.size(); ++i) {
    image[i] = then.image_[first.image_[i]];
  }
  return PointMap(first.source_, then.target_, std::move(image));
}

EffectiveEntourage ModulusWitness::lookup(EffectiveEntourage e) const {
  auto it = table.find(e);
  if (it != table.end()) return it->second;
  it = table.find(EffectiveEntourage{e.level, 1});
  if (it == table.end()) {
    throw std::invalid_argument("modulus has no entry for the requested level");
  }
  return EffectiveEntourage{it->second.level, it->second.power * e.power};
}

namespace {

// True when f maps every ball of `src` into the corresponding ball of `tgt`.
bool absorbs(const PointMap& f, const Relation& src, const Relation& tgt) {
  for (const auto& [x, y] : src.pairs()) {
    if (!tgt.contains(f.apply_index(x), f.apply_index(y))) return false;
  }
  return true;
}

}  // namespace

CoarseCheckResult check_coarse_map(const PointMap& f, const GradedBallean& b,
                                   const GradedBallean& b2) {
  if (!(f.source() == b.ground()) || !(f.target() == b2.ground())) {
    throw std::invalid_argument("coarse map check: map grounds do not match the scales");
  }
  CoarseCheckResult result;
  ModulusWitness witness;
  const std::uint32_t target_cap =
      static_cast<std::uint32_t>(b2.ground().size() * b2.ground().size() + 1);
  for (std::uint32_t r = 1; r <= static_cast<std::uint32_t>(b.level_count()); ++r) {
    const Relation& src = b.entourage({r, 1});
    std::optional<EffectiveEntourage> found;
    for (std::uint32_t k = 1; k <= target_cap && !found; ++k) {
      for (std::uint32_t r2 = 1; r2 <= static_cast<std::uint32_t>(b2.level_count()); ++r2) {
        if (absorbs(f, src, b2.entourage({r2, k}))) {
          found = EffectiveEntourage{r2, k};
          break;
        }
      }
    }
    if (!found) {
      // Name a displaced point whose image escapes every tabulated target.
      const Relation& top = b2.entourage({static_cast<std::uint32_t>(b2.level_count()), target_cap});
      for (const auto& [x, y] : src.pairs()) {
        if (!top.contains(f.apply_index(x), f.apply_index(y))) {
          result.counterexample = CoarseCounterexample{b.ground().at(x), r};
          break;
        }
      }
      if (!result.counterexample) {
        result.counterexample = CoarseCounterexample{b.ground().at(0), r};
      }
      return result;
    }
    witness.table.emplace(EffectiveEntourage{r, 1}, *found);
  }
  result.witness = std::move(witness);
  return result;
}

AsymorphismResult check_asymorphism(const PointMap& f, const GradedBallean& b,
                                    const GradedBallean& b2) {
  if (!f.is_bijection()) {
    throw std::invalid_argument("asymorphism check requires a bijective point map");
  }
  AsymorphismResult result;
  result.forward = check_coarse_map(f, b, b2);
  result.backward = check_coarse_map(f.inverted(), b2, b);
  return result;
}

}  // namespace vball
