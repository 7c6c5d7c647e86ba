#include "vball/free_vector.hpp"

namespace vball {

FreeVector::FreeVector(std::map<PointId, Rational> coords) : coords_(std::move(coords)) {
  for (auto it = coords_.begin(); it != coords_.end();) {
    if (it->second == 0) {
      it = coords_.erase(it);
    } else {
      ++it;
    }
  }
}

FreeVector FreeVector::basis(const PointId& p) {
  FreeVector v;
  v.coords_.emplace(p, Rational(1));
  return v;
}

Rational FreeVector::coefficient(const PointId& p) const {
  auto it = coords_.find(p);
  return it == coords_.end() ? Rational(0) : it->second;
}

std::vector<PointId> FreeVector::support() const {
  std::vector<PointId> points;
  points.reserve(coords_.size());
  for (const auto& [p, c] : coords_) points.push_back(p);
  return points;
}

Rational FreeVector::coordinate_sum() const {
  Rational sum(0);
  for (const auto& [p, c] : coords_) sum += c;
  return sum;
}

bool FreeVector::supported_on(const Ground& ground) const {
  for (const auto& [p, c] : coords_) {
    if (!ground.contains(p)) return false;
  }
  return true;
}

void FreeVector::set(const PointId& p, Rational value) {
  if (value == 0) {
    coords_.erase(p);
  } else {
    coords_[p] = std::move(value);
  }
}

FreeVector& FreeVector::operator+=(const FreeVector& other) {
  for (const auto& [p, c] : other.coords_) set(p, coefficient(p) + c);
  return *this;
}

FreeVector& FreeVector::operator-=(const FreeVector& other) {
  for (const auto& [p, c] : other.coords_) set(p, coefficient(p) - c);
  return *this;
}

FreeVector& FreeVector::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    coords_.clear();
    return *this;
  }
  for (auto& [p, c] : coords_) c *= scalar;
  return *this;
}

FreeVector FreeVector::operator-() const {
  FreeVector v(*this);
  for (auto& [p, c] : v.coords_) c = -c;
  return v;
}

FreeVector difference(const PointId& x, const PointId& y) {
  FreeVector v = FreeVector::basis(x);
  v -= FreeVector::basis(y);
  return v;
}

}  // namespace vball
