#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace vball {

/// Opaque point token. Canonical order is plain string order; every
/// deterministic enumeration in the library follows it.
using PointId = std::string;

/// Immutable finite ground set. Points are stored sorted and unique, so
/// indices are stable and canonical.
class Ground {
 public:
  Ground() = default;
  explicit Ground(std::vector<PointId> points);

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const std::vector<PointId>& points() const { return points_; }
  const PointId& at(std::size_t index) const { return points_.at(index); }

  bool contains(const PointId& p) const;
  std::optional<std::uint32_t> find(const PointId& p) const;
  /// Throws std::invalid_argument if the point is unknown.
  std::uint32_t index_of(const PointId& p) const;

  bool operator==(const Ground&) const = default;

 private:
  std::vector<PointId> points_;
};

}  // namespace vball
