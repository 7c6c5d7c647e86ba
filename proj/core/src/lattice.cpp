#include "vball/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace vball {

namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();
constexpr std::uint64_t kMaxCells = 4u * 1024u * 1024u;

long long chebyshev(const LatticePoint& a, const LatticePoint& b) {
  long long best = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    best = std::max(best, std::llabs(a[i] - b[i]));
  }
  return best;
}

// Chebyshev distance to a predicate's points, tabulated on [-bound, bound]^d.
// King-move breadth-first search realizes the max norm exactly.
class DistanceGrid {
 public:
  DistanceGrid(const SubsetSpec& spec, std::uint32_t dim, long long bound)
      : dim_(dim), bound_(bound), side_(2 * bound + 1) {
    std::uint64_t cells = 1;
    for (std::uint32_t i = 0; i < dim_; ++i) {
      cells *= static_cast<std::uint64_t>(side_);
      if (cells > kMaxCells) {
        throw std::invalid_argument("lattice window too large to enumerate");
      }
    }
    dist_.assign(cells, kUnreached);
    std::vector<std::uint64_t> frontier;
    LatticePoint p(dim_, 0);
    for (std::uint64_t idx = 0; idx < cells; ++idx) {
      decode(idx, p);
      if (spec.contains(p)) {
        dist_[idx] = 0;
        frontier.push_back(idx);
      }
    }
    std::vector<std::uint64_t> next;
    std::uint32_t layer = 0;
    LatticePoint q(dim_, 0);
    while (!frontier.empty()) {
      ++layer;
      next.clear();
      for (std::uint64_t idx : frontier) {
        decode(idx, p);
        q = p;
        step_neighbors(p, q, 0, layer, next);
      }
      frontier.swap(next);
    }
  }

  std::uint32_t at(const LatticePoint& p) const {
    for (long long c : p) {
      if (c < -bound_ || c > bound_) return kUnreached;
    }
    return dist_[encode(p)];
  }

 private:
  void decode(std::uint64_t idx, LatticePoint& out) const {
    for (std::uint32_t i = dim_; i-- > 0;) {
      out[i] = static_cast<long long>(idx % static_cast<std::uint64_t>(side_)) - bound_;
      idx /= static_cast<std::uint64_t>(side_);
    }
  }

  std::uint64_t encode(const LatticePoint& p) const {
    std::uint64_t idx = 0;
    for (std::uint32_t i = 0; i < dim_; ++i) {
      idx = idx * static_cast<std::uint64_t>(side_) +
            static_cast<std::uint64_t>(p[i] + bound_);
    }
    return idx;
  }

  void step_neighbors(const LatticePoint& center, LatticePoint& scratch,
                      std::uint32_t axis, std::uint32_t layer,
                      std::vector<std::uint64_t>& next) {
    if (axis == dim_) {
      if (scratch == center) return;
      const std::uint64_t idx = encode(scratch);
      if (dist_[idx] == kUnreached) {
        dist_[idx] = layer;
        next.push_back(idx);
      }
      return;
    }
    for (long long delta = -1; delta <= 1; ++delta) {
      const long long c = center[axis] + delta;
      if (c < -bound_ || c > bound_) continue;
      scratch[axis] = c;
      step_neighbors(center, scratch, axis + 1, layer, next);
    }
    scratch[axis] = center[axis];
  }

  std::uint32_t dim_;
  long long bound_;
  long long side_;
  std::vector<std::uint32_t> dist_;
};

void validate_radii(const WindowBallean& b, std::uint32_t lo, std::uint32_t hi) {
  if (lo < 1 || lo > hi) {
    throw std::invalid_argument("radius range must satisfy 1 <= lo <= hi");
  }
  if (hi > b.max_radius()) {
    throw std::invalid_argument(
        "radius too large for the window; widen the window or lower the radius");
  }
}

void validate_dim(const WindowBallean& b, const SubsetSpec& s) {
  if (s.dim() != b.dim()) {
    throw std::invalid_argument("subset dimension does not match the lattice");
  }
}

struct Extremum {
  long long extent = -1;
  LatticePoint point;

  void offer(const LatticePoint& p) {
    const long long norm = max_norm(p);
    if (norm > extent || (norm == extent && p > point)) {
      extent = norm;
      point = p;
    }
  }

  bool seen() const { return extent >= 0; }
};

}  // namespace

long long max_norm(const LatticePoint& p) {
  long long best = 0;
  for (long long c : p) best = std::max(best, std::llabs(c));
  return best;
}

std::string format_lattice_point(const LatticePoint& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(p[i]);
  }
  out += ")";
  return out;
}

WindowBallean::WindowBallean(std::uint32_t dim, std::uint32_t window)
    : dim_(dim), window_(window) {
  if (dim_ < 1 || dim_ > 3) {
    throw std::invalid_argument("lattice dimension must be 1, 2, or 3");
  }
  if (window_ < 1 || window_ > 1000) {
    throw std::invalid_argument("window must be between 1 and 1000");
  }
}

bool WindowBallean::in_window(const LatticePoint& p) const {
  if (p.size() != dim_) return false;
  for (long long c : p) {
    if (c < -static_cast<long long>(window_) || c > static_cast<long long>(window_)) {
      return false;
    }
  }
  return true;
}

std::vector<LatticePoint> WindowBallean::window_points() const {
  const long long w = window_;
  std::uint64_t cells = 1;
  for (std::uint32_t i = 0; i < dim_; ++i) {
    cells *= static_cast<std::uint64_t>(2 * w + 1);
    if (cells > kMaxCells) {
      throw std::invalid_argument("lattice window too large to enumerate");
    }
  }
  std::vector<LatticePoint> out;
  out.reserve(cells);
  LatticePoint p(dim_, -w);
  while (true) {
    out.push_back(p);
    std::uint32_t axis = dim_;
    while (axis > 0) {
      --axis;
      if (p[axis] < w) {
        ++p[axis];
        for (std::uint32_t j = axis + 1; j < dim_; ++j) p[j] = -w;
        break;
      }
      if (axis == 0) return out;
    }
  }
}

SubsetSpec SubsetSpec::finite(std::uint32_t dim, std::vector<LatticePoint> points) {
  if (dim < 1) throw std::invalid_argument("subset dimension must be positive");
  for (const LatticePoint& p : points) {
    if (p.size() != dim) {
      throw std::invalid_argument("finite subset point has the wrong dimension");
    }
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  SubsetSpec s;
  s.kind_ = Kind::Finite;
  s.dim_ = dim;
  s.points_ = std::move(points);
  return s;
}

SubsetSpec SubsetSpec::halfspace(std::vector<long long> normal, long long offset) {
  if (normal.empty()) throw std::invalid_argument("halfspace normal must be nonempty");
  bool nonzero = false;
  for (long long c : normal) nonzero = nonzero || c != 0;
  if (!nonzero) throw std::invalid_argument("halfspace normal must be nonzero");
  SubsetSpec s;
  s.kind_ = Kind::Halfspace;
  s.dim_ = static_cast<std::uint32_t>(normal.size());
  s.normal_ = std::move(normal);
  s.offset_ = offset;
  return s;
}

SubsetSpec SubsetSpec::parity(std::uint32_t dim, int remainder,
                              std::optional<long long> min_sum) {
  if (dim < 1) throw std::invalid_argument("subset dimension must be positive");
  if (remainder != 0 && remainder != 1) {
    throw std::invalid_argument("parity remainder must be 0 or 1");
  }
  SubsetSpec s;
  s.kind_ = Kind::Parity;
  s.dim_ = dim;
  s.remainder_ = remainder;
  s.min_sum_ = min_sum;
  return s;
}

bool SubsetSpec::contains(const LatticePoint& p) const {
  if (p.size() != dim_) return false;
  switch (kind_) {
    case Kind::Finite:
      return std::binary_search(points_.begin(), points_.end(), p);
    case Kind::Halfspace: {
      long long dot = 0;
      for (std::size_t i = 0; i < p.size(); ++i) dot += normal_[i] * p[i];
      return dot >= offset_;
    }
    case Kind::Parity: {
      long long sum = 0;
      for (long long c : p) sum += c;
      if (min_sum_ && sum < *min_sum_) return false;
      return ((sum % 2) + 2) % 2 == remainder_;
    }
  }
  return false;
}

std::string SubsetSpec::describe() const {
  switch (kind_) {
    case Kind::Finite:
      return "finite set of " + std::to_string(points_.size()) + " points";
    case Kind::Halfspace: {
      std::string out = "halfspace ";
      for (std::size_t i = 0; i < normal_.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(normal_[i]);
      }
      return out + " . x >= " + std::to_string(offset_);
    }
    case Kind::Parity: {
      std::string out = "coordinate sum parity " + std::to_string(remainder_);
      if (min_sum_) out += ", sum >= " + std::to_string(*min_sum_);
      return out;
    }
  }
  return "";
}

std::string verdict_status_name(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::HoldsUpToWindow:
      return "holds-up-to-window";
    case VerdictStatus::BoundedWithWitness:
      return "bounded-with-witness";
    case VerdictStatus::FailsWithWitness:
      return "fails-with-witness";
  }
  return "";
}

Verdict asymptotic_neighborhood(const SubsetSpec& set, const SubsetSpec& neighborhood,
                                const WindowBallean& b, std::uint32_t radius_lo,
                                std::uint32_t radius_hi) {
  validate_radii(b, radius_lo, radius_hi);
  validate_dim(b, set);
  validate_dim(b, neighborhood);

  const long long w = b.window();
  const DistanceGrid grid(set, b.dim(), w + radius_hi);
  const std::vector<LatticePoint> pts = b.window_points();

  Verdict v;
  v.window = b.window();
  v.radius_lo = radius_lo;
  v.radius_hi = radius_hi;

  bool dilation_interior = true;
  Extremum dilation_best;
  Extremum difference_best;
  for (std::uint32_t r = radius_lo; r <= radius_hi; ++r) {
    RadiusFinding f;
    f.radius = r;
    Extremum dil;
    Extremum diff;
    for (const LatticePoint& p : pts) {
      const std::uint32_t d = grid.at(p);
      if (d == kUnreached || d >= r) continue;
      dil.offer(p);
      if (neighborhood.contains(p)) continue;
      ++f.count;
      diff.offer(p);
    }
    if (dil.seen() && dil.extent > w - static_cast<long long>(r)) {
      dilation_interior = false;
    }
    if (dil.seen()) dilation_best.offer(dil.point);
    if (diff.seen()) {
      f.extent = diff.extent;
      f.extremal = diff.point;
      f.reaches_rim = diff.extent > w - static_cast<long long>(r);
      difference_best.offer(diff.point);
    }
    v.per_radius.push_back(std::move(f));
  }

  for (const RadiusFinding& f : v.per_radius) {
    if (f.reaches_rim) {
      v.status = VerdictStatus::FailsWithWitness;
      v.failing_radius = f.radius;
      v.witness = f.extremal;
      return v;
    }
  }
  if (dilation_interior) {
    v.status = VerdictStatus::BoundedWithWitness;
    if (dilation_best.seen()) {
      v.witness = dilation_best.point;
      v.bounding_radius = dilation_best.extent + 1;
    } else {
      v.bounding_radius = 0;
    }
    return v;
  }
  v.status = VerdictStatus::HoldsUpToWindow;
  if (difference_best.seen()) v.bounding_radius = difference_best.extent + 1;
  return v;
}

Verdict asymptotically_disjoint(const SubsetSpec& left, const SubsetSpec& right,
                                const WindowBallean& b, std::uint32_t radius_lo,
                                std::uint32_t radius_hi) {
  validate_radii(b, radius_lo, radius_hi);
  validate_dim(b, left);
  validate_dim(b, right);

  const long long w = b.window();
  const DistanceGrid left_grid(left, b.dim(), w + radius_hi);
  const DistanceGrid right_grid(right, b.dim(), w + radius_hi);
  const std::vector<LatticePoint> pts = b.window_points();

  Verdict v;
  v.window = b.window();
  v.radius_lo = radius_lo;
  v.radius_hi = radius_hi;

  bool left_interior = true;
  bool right_interior = true;
  Extremum left_best;
  Extremum right_best;
  Extremum meet_best;
  for (std::uint32_t r = radius_lo; r <= radius_hi; ++r) {
    RadiusFinding f;
    f.radius = r;
    Extremum left_dil;
    Extremum right_dil;
    Extremum meet;
    for (const LatticePoint& p : pts) {
      const std::uint32_t dl = left_grid.at(p);
      const std::uint32_t dr = right_grid.at(p);
      const bool in_left = dl != kUnreached && dl < r;
      const bool in_right = dr != kUnreached && dr < r;
      if (in_left) left_dil.offer(p);
      if (in_right) right_dil.offer(p);
      if (in_left && in_right) {
        ++f.count;
        meet.offer(p);
      }
    }
    const long long rim = w - static_cast<long long>(r);
    if (left_dil.seen() && left_dil.extent > rim) left_interior = false;
    if (right_dil.seen() && right_dil.extent > rim) right_interior = false;
    if (left_dil.seen()) left_best.offer(left_dil.point);
    if (right_dil.seen()) right_best.offer(right_dil.point);
    if (meet.seen()) {
      f.extent = meet.extent;
      f.extremal = meet.point;
      f.reaches_rim = meet.extent > rim;
      meet_best.offer(meet.point);
    }
    v.per_radius.push_back(std::move(f));
  }

  for (const RadiusFinding& f : v.per_radius) {
    if (f.reaches_rim) {
      v.status = VerdictStatus::FailsWithWitness;
      v.failing_radius = f.radius;
      v.witness = f.extremal;
      return v;
    }
  }
  if (left_interior || right_interior) {
    v.status = VerdictStatus::BoundedWithWitness;
    const Extremum& side = left_interior ? left_best : right_best;
    if (side.seen()) {
      v.witness = side.point;
      v.bounding_radius = side.extent + 1;
    } else {
      v.bounding_radius = 0;
    }
    return v;
  }
  v.status = VerdictStatus::HoldsUpToWindow;
  if (meet_best.seen()) v.bounding_radius = meet_best.extent + 1;
  return v;
}

bool SeparatorResult::ok() const {
  return found && left_check && left_check->ok() && right_check &&
         right_check->ok() && point_disjoint;
}

SeparatorResult metric_separator(const SubsetSpec& left, const SubsetSpec& right,
                                 const WindowBallean& b, std::uint32_t radius_lo,
                                 std::uint32_t radius_hi) {
  SeparatorResult res;
  res.disjointness = asymptotically_disjoint(left, right, b, radius_lo, radius_hi);
  if (!res.disjointness.ok()) return res;
  res.found = true;

  const DistanceGrid left_grid(left, b.dim(), static_cast<long long>(b.window()) + radius_hi);
  const DistanceGrid right_grid(right, b.dim(), static_cast<long long>(b.window()) + radius_hi);
  std::vector<LatticePoint> left_points;
  std::vector<LatticePoint> right_points;
  for (const LatticePoint& p : b.window_points()) {
    if (left_grid.at(p) <= right_grid.at(p)) {
      left_points.push_back(p);
    } else {
      right_points.push_back(p);
    }
  }
  res.left_side = SubsetSpec::finite(b.dim(), std::move(left_points));
  res.right_side = SubsetSpec::finite(b.dim(), std::move(right_points));
  res.left_check = asymptotic_neighborhood(left, *res.left_side, b, radius_lo, radius_hi);
  res.right_check = asymptotic_neighborhood(right, *res.right_side, b, radius_lo, radius_hi);

  res.point_disjoint = true;
  for (const LatticePoint& p : res.left_side->points()) {
    if (res.right_side->contains(p)) res.point_disjoint = false;
  }
  return res;
}

GradedBallean lattice_slice(const WindowBallean& b, std::uint32_t level_cap) {
  if (level_cap < 1) throw std::invalid_argument("level cap must be at least 1");
  const std::vector<LatticePoint> pts = b.window_points();
  if (pts.size() > 256) {
    throw std::invalid_argument("window slice too large to materialize; shrink the window");
  }
  std::vector<PointId> ids;
  ids.reserve(pts.size());
  for (const LatticePoint& p : pts) ids.push_back(format_lattice_point(p));
  Ground ground(ids);

  std::vector<Relation> levels;
  for (std::uint32_t r = 1; r <= level_cap; ++r) {
    std::vector<std::pair<PointId, PointId>> pairs;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = 0; j < pts.size(); ++j) {
        if (chebyshev(pts[i], pts[j]) < static_cast<long long>(r)) {
          pairs.emplace_back(ids[i], ids[j]);
        }
      }
    }
    levels.emplace_back(ground, pairs);
  }
  return GradedBallean::normalized(std::move(ground), std::move(levels)).first;
}

}  // namespace vball
