#include "vball/relation.hpp"

#include <algorithm>
#include <stdexcept>

namespace vball {

namespace {

// Row-major adjacency bitmap; composition is boolean matrix product.
class BitRows {
 public:
  BitRows(std::size_t n) : n_(n), words_per_row_((n + 63) / 64), bits_(n * words_per_row_, 0) {}

  void set(std::uint32_t x, std::uint32_t y) {
    bits_[x * words_per_row_ + y / 64] |= std::uint64_t{1} << (y % 64);
  }
  bool get(std::uint32_t x, std::uint32_t y) const {
    return (bits_[x * words_per_row_ + y / 64] >> (y % 64)) & 1;
  }
  void or_row_into(std::uint32_t src, std::vector<std::uint64_t>& acc) const {
    const std::uint64_t* row = &bits_[src * words_per_row_];
    for (std::size_t w = 0; w < words_per_row_; ++w) acc[w] |= row[w];
  }
  std::size_t words_per_row() const { return words_per_row_; }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_;
  std::size_t words_per_row_;
  std::vector<std::uint64_t> bits_;
};

BitRows to_rows(const Relation& r) {
  BitRows rows(r.ground().size());
  for (const auto& [x, y] : r.pairs()) rows.set(x, y);
  return rows;
}

}  // namespace

Relation::Relation(Ground ground) : ground_(std::move(ground)) {}

Relation::Relation(Ground ground, std::vector<IndexPair> pairs)
    : ground_(std::move(ground)), pairs_(std::move(pairs)) {
  const auto n = ground_.size();
  for (const auto& [x, y] : pairs_) {
    if (x >= n || y >= n) throw std::invalid_argument("relation pair index outside ground");
  }
  normalize();
}

Relation::Relation(Ground ground, const std::vector<std::pair<PointId, PointId>>& pairs)
    : ground_(std::move(ground)) {
  pairs_.reserve(pairs.size());
  for (const auto& [x, y] : pairs) {
    pairs_.emplace_back(ground_.index_of(x), ground_.index_of(y));
  }
  normalize();
}

void Relation::normalize() {
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

Relation Relation::diagonal(const Ground& ground) {
  std::vector<IndexPair> pairs;
  pairs.reserve(ground.size());
  for (std::uint32_t i = 0; i < ground.size(); ++i) pairs.emplace_back(i, i);
  return Relation(ground, std::move(pairs));
}

Relation Relation::full(const Ground& ground) {
  std::vector<IndexPair> pairs;
  pairs.reserve(ground.size() * ground.size());
  for (std::uint32_t i = 0; i < ground.size(); ++i) {
    for (std::uint32_t j = 0; j < ground.size(); ++j) pairs.emplace_back(i, j);
  }
  return Relation(ground, std::move(pairs));
}

std::vector<std::pair<PointId, PointId>> Relation::pairs_by_id() const {
  std::vector<std::pair<PointId, PointId>> out;
  out.reserve(pairs_.size());
  for (const auto& [x, y] : pairs_) out.emplace_back(ground_.at(x), ground_.at(y));
  return out;
}

bool Relation::contains(std::uint32_t x, std::uint32_t y) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), IndexPair{x, y});
}

bool Relation::contains(const PointId& x, const PointId& y) const {
  return contains(ground_.index_of(x), ground_.index_of(y));
}

bool Relation::subset_of(const Relation& other) const {
  if (ground_ != other.ground_) throw std::invalid_argument("relation ground mismatch");
  return std::includes(other.pairs_.begin(), other.pairs_.end(), pairs_.begin(), pairs_.end());
}

bool Relation::contains_diagonal() const {
  for (std::uint32_t i = 0; i < ground_.size(); ++i) {
    if (!contains(i, i)) return false;
  }
  return true;
}

bool Relation::is_symmetric() const {
  for (const auto& [x, y] : pairs_) {
    if (!contains(y, x)) return false;
  }
  return true;
}

bool Relation::is_full() const {
  return pairs_.size() == ground_.size() * ground_.size();
}

std::vector<std::uint32_t> Relation::row(std::uint32_t x) const {
  std::vector<std::uint32_t> out;
  auto lo = std::lower_bound(pairs_.begin(), pairs_.end(), IndexPair{x, 0});
  for (auto it = lo; it != pairs_.end() && it->first == x; ++it) out.push_back(it->second);
  return out;
}

Relation Relation::united(const Relation& other) const {
  if (ground_ != other.ground_) throw std::invalid_argument("relation ground mismatch");
  std::vector<IndexPair> pairs;
  pairs.reserve(pairs_.size() + other.pairs_.size());
  std::set_union(pairs_.begin(), pairs_.end(), other.pairs_.begin(), other.pairs_.end(),
                 std::back_inserter(pairs));
  return Relation(ground_, std::move(pairs));
}

Relation Relation::intersected(const Relation& other) const {
  if (ground_ != other.ground_) throw std::invalid_argument("relation ground mismatch");
  std::vector<IndexPair> pairs;
  std::set_intersection(pairs_.begin(), pairs_.end(), other.pairs_.begin(), other.pairs_.end(),
                        std::back_inserter(pairs));
  return Relation(ground_, std::move(pairs));
}

Relation Relation::symmetric_reflexive_closure() const {
  std::vector<IndexPair> pairs = pairs_;
  for (const auto& [x, y] : pairs_) pairs.emplace_back(y, x);
  for (std::uint32_t i = 0; i < ground_.size(); ++i) pairs.emplace_back(i, i);
  return Relation(ground_, std::move(pairs));
}

Relation Relation::restricted_to(const Ground& sub) const {
  std::vector<std::uint32_t> map(ground_.size(), UINT32_MAX);
  for (const auto& p : sub.points()) {
    map[ground_.index_of(p)] = sub.index_of(p);
  }
  std::vector<IndexPair> pairs;
  for (const auto& [x, y] : pairs_) {
    if (map[x] != UINT32_MAX && map[y] != UINT32_MAX) pairs.emplace_back(map[x], map[y]);
  }
  return Relation(sub, std::move(pairs));
}

Relation compose(const Relation& a, const Relation& b) {
  if (a.ground() != b.ground()) throw std::invalid_argument("relation ground mismatch");
  const std::size_t n = a.ground().size();
  BitRows rows_b = to_rows(b);
  std::vector<IndexPair> pairs;
  std::vector<std::uint64_t> acc(rows_b.words_per_row());
  for (std::uint32_t x = 0; x < n; ++x) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::uint32_t z : a.row(x)) rows_b.or_row_into(z, acc);
    for (std::uint32_t y = 0; y < n; ++y) {
      if ((acc[y / 64] >> (y % 64)) & 1) pairs.emplace_back(x, y);
    }
  }
  return Relation(a.ground(), std::move(pairs));
}

Relation inverse(const Relation& a) {
  std::vector<IndexPair> pairs;
  pairs.reserve(a.pairs().size());
  for (const auto& [x, y] : a.pairs()) pairs.emplace_back(y, x);
  return Relation(a.ground(), std::move(pairs));
}

Relation relation_power(const Relation& a, std::uint32_t k) {
  if (k == 0) throw std::invalid_argument("relation power must be >= 1");
  Relation acc = a;
  for (std::uint32_t i = 1; i < k; ++i) {
    Relation next = compose(acc, a);
    if (next == acc) break;  // stabilized
    acc = std::move(next);
  }
  return acc;
}

}  // namespace vball
