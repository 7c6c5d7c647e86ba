#pragma once

#include "vball/ground.hpp"
#include "vball/rational.hpp"

#include <map>
#include <vector>

namespace vball {

/// Formal rational combination of point ids with finite support. Zero
/// coefficients are never stored, so representation is canonical and
/// equality is coefficient-wise. Ids are validated against a ground set
/// at operation boundaries, not here.
class FreeVector {
 public:
  FreeVector() = default;
  explicit FreeVector(std::map<PointId, Rational> coords);

  static FreeVector basis(const PointId& p);

  const std::map<PointId, Rational>& coords() const { return coords_; }
  Rational coefficient(const PointId& p) const;
  std::vector<PointId> support() const;
  bool is_zero() const { return coords_.empty(); }

  /// Sum of all coefficients. Difference vectors x - y sum to zero.
  Rational coordinate_sum() const;

  bool supported_on(const Ground& ground) const;

  FreeVector& operator+=(const FreeVector& other);
  FreeVector& operator-=(const FreeVector& other);
  FreeVector& operator*=(const Rational& scalar);

  friend FreeVector operator+(FreeVector a, const FreeVector& b) { return a += b; }
  friend FreeVector operator-(FreeVector a, const FreeVector& b) { return a -= b; }
  friend FreeVector operator*(const Rational& s, FreeVector v) { return v *= s; }
  FreeVector operator-() const;

  bool operator==(const FreeVector& other) const { return coords_ == other.coords_; }

 private:
  void set(const PointId& p, Rational value);

  std::map<PointId, Rational> coords_;
};

/// x - y as a FreeVector; zero when x == y.
FreeVector difference(const PointId& x, const PointId& y);

}  // namespace vball
