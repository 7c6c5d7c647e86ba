#pragma once

#include "vball/ground.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace vball {

using IndexPair = std::pair<std::uint32_t, std::uint32_t>;

/// Finite set of ordered point pairs over a ground set: the concrete form
/// of an entourage. Pairs are kept sorted and unique, so equality and
/// serialization are canonical.
class Relation {
 public:
  explicit Relation(Ground ground);
  Relation(Ground ground, std::vector<IndexPair> pairs);
  Relation(Ground ground, const std::vector<std::pair<PointId, PointId>>& pairs);

  static Relation diagonal(const Ground& ground);
  static Relation full(const Ground& ground);

  const Ground& ground() const { return ground_; }
  const std::vector<IndexPair>& pairs() const { return pairs_; }
  std::vector<std::pair<PointId, PointId>> pairs_by_id() const;
  std::size_t pair_count() const { return pairs_.size(); }

  bool contains(std::uint32_t x, std::uint32_t y) const;
  bool contains(const PointId& x, const PointId& y) const;

  bool subset_of(const Relation& other) const;
  bool contains_diagonal() const;
  bool is_symmetric() const;
  bool is_full() const;

  /// Successors of x: { y : (x,y) in this }, as sorted indices.
  std::vector<std::uint32_t> row(std::uint32_t x) const;

  Relation united(const Relation& other) const;
  Relation intersected(const Relation& other) const;
  /// This relation union its inverse union the diagonal.
  Relation symmetric_reflexive_closure() const;
  /// Pairs with both endpoints in `sub`, reindexed onto `sub`.
  Relation restricted_to(const Ground& sub) const;

  bool operator==(const Relation&) const = default;

 private:
  Ground ground_;
  std::vector<IndexPair> pairs_;

  void normalize();
};

/// {(x,y) : exists z with (x,z) in a and (z,y) in b}. Grounds must match.
Relation compose(const Relation& a, const Relation& b);

/// {(y,x) : (x,y) in a}.
Relation inverse(const Relation& a);

/// k-fold composition of a with itself (k >= 1).
Relation relation_power(const Relation& a, std::uint32_t k);

}  // namespace vball
