#include "vball/ground.hpp"

#include <algorithm>
#include <stdexcept>

namespace vball {

Ground::Ground(std::vector<PointId> points) : points_(std::move(points)) {
  for (const auto& p : points_) {
    if (p.empty()) throw std::invalid_argument("empty point id");
  }
  std::sort(points_.begin(), points_.end());
  auto dup = std::adjacent_find(points_.begin(), points_.end());
  if (dup != points_.end()) {
    throw std::invalid_argument("duplicate point id: '" + *dup + "'");
  }
}

bool Ground::contains(const PointId& p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

std::optional<std::uint32_t> Ground::find(const PointId& p) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), p);
  if (it == points_.end() || *it != p) return std::nullopt;
  return static_cast<std::uint32_t>(it - points_.begin());
}

std::uint32_t Ground::index_of(const PointId& p) const {
  auto idx = find(p);
  if (!idx) throw std::invalid_argument("unknown point id: '" + p + "'");
  return *idx;
}

}  // namespace vball
