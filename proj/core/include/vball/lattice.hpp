#pragma once

#include "vball/ballean.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace vball {

using LatticePoint = std::vector<long long>;

long long max_norm(const LatticePoint& p);
std::string format_lattice_point(const LatticePoint& p);

// Integer lattice with max-norm entourages, enumerated inside the finite
// window [-W, W]^d.  Radius r relates points at distance < r, the same
// strict-radius convention metric presentations use.
class WindowBallean {
 public:
  WindowBallean(std::uint32_t dim, std::uint32_t window);

  std::uint32_t dim() const { return dim_; }
  std::uint32_t window() const { return window_; }

  // Largest radius the window can answer for; larger requests are refused.
  std::uint32_t max_radius() const { return window_ / 4; }

  bool in_window(const LatticePoint& p) const;
  std::vector<LatticePoint> window_points() const;

 private:
  std::uint32_t dim_;
  std::uint32_t window_;
};

// Decidable point predicate on the lattice.
class SubsetSpec {
 public:
  enum class Kind { Finite, Halfspace, Parity };

  static SubsetSpec finite(std::uint32_t dim, std::vector<LatticePoint> points);
  // {x : <normal, x> >= offset}
  static SubsetSpec halfspace(std::vector<long long> normal, long long offset);
  // {x : coordinate sum has the given parity}, optionally with sum >= min_sum.
  static SubsetSpec parity(std::uint32_t dim, int remainder,
                           std::optional<long long> min_sum = std::nullopt);

  Kind kind() const { return kind_; }
  std::uint32_t dim() const { return dim_; }
  bool contains(const LatticePoint& p) const;
  std::string describe() const;

  const std::vector<LatticePoint>& points() const { return points_; }
  const std::vector<long long>& normal() const { return normal_; }
  long long offset() const { return offset_; }
  int remainder() const { return remainder_; }
  const std::optional<long long>& min_sum() const { return min_sum_; }

 private:
  SubsetSpec() = default;

  Kind kind_ = Kind::Finite;
  std::uint32_t dim_ = 1;
  std::vector<LatticePoint> points_;
  std::vector<long long> normal_;
  long long offset_ = 0;
  int remainder_ = 0;
  std::optional<long long> min_sum_;
};

enum class VerdictStatus { HoldsUpToWindow, BoundedWithWitness, FailsWithWitness };

std::string verdict_status_name(VerdictStatus s);

struct RadiusFinding {
  std::uint32_t radius = 1;
  std::uint64_t count = 0;
  long long extent = -1;
  std::optional<LatticePoint> extremal;
  bool reaches_rim = false;
};

// Window-qualified answer.  A rim failure stays valid at every larger
// window; a pass only speaks for the window it was computed in.
struct Verdict {
  VerdictStatus status = VerdictStatus::HoldsUpToWindow;
  std::uint32_t window = 0;
  std::uint32_t radius_lo = 1;
  std::uint32_t radius_hi = 1;
  std::vector<RadiusFinding> per_radius;
  std::optional<std::uint32_t> failing_radius;
  std::optional<LatticePoint> witness;
  std::optional<long long> bounding_radius;

  bool ok() const { return status != VerdictStatus::FailsWithWitness; }
};

// Is every dilation of `set`, minus `neighborhood`, safely interior?
Verdict asymptotic_neighborhood(const SubsetSpec& set, const SubsetSpec& neighborhood,
                                const WindowBallean& b, std::uint32_t radius_lo,
                                std::uint32_t radius_hi);

// Do the dilations of the two sets overlap only in a bounded region?
Verdict asymptotically_disjoint(const SubsetSpec& left, const SubsetSpec& right,
                                const WindowBallean& b, std::uint32_t radius_lo,
                                std::uint32_t radius_hi);

struct SeparatorResult {
  bool found = false;
  Verdict disjointness;
  std::optional<SubsetSpec> left_side;
  std::optional<SubsetSpec> right_side;
  std::optional<Verdict> left_check;
  std::optional<Verdict> right_check;
  bool point_disjoint = false;

  bool ok() const;
};

// Splits the window by nearest-set comparison, ties going to the left set,
// and validates both halves as asymptotic neighborhoods.
SeparatorResult metric_separator(const SubsetSpec& left, const SubsetSpec& right,
                                 const WindowBallean& b, std::uint32_t radius_lo,
                                 std::uint32_t radius_hi);

// Finite slice of the lattice as a graded presentation: ground is the
// window, level r relates points at max-norm distance < r.
GradedBallean lattice_slice(const WindowBallean& b, std::uint32_t level_cap);

}  // namespace vball
