#include "vball/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace vball {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

// Affine solution set of the equality system: particular + span(basis).
struct AffineSet {
  bool consistent = false;
  std::vector<Rational> particular;
  Matrix basis;  // one nullspace vector per entry
};

AffineSet solve_equalities(Matrix m, std::vector<Rational> r, std::size_t vars) {
  AffineSet set;
  std::vector<std::optional<std::size_t>> pivot_row(vars);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < vars && rank < m.size(); ++col) {
    std::size_t row = rank;
    while (row < m.size() && m[row][col] == 0) ++row;
    if (row == m.size()) continue;
    std::swap(m[rank], m[row]);
    std::swap(r[rank], r[row]);
    const Rational inv = 1 / Rational(m[rank][col]);
    for (Rational& value : m[rank]) value *= inv;
    r[rank] *= inv;
    for (std::size_t other = 0; other < m.size(); ++other) {
      if (other == rank || m[other][col] == 0) continue;
      const Rational factor = m[other][col];
      for (std::size_t c = 0; c < vars; ++c) m[other][c] -= factor * m[rank][c];
      r[other] -= factor * r[rank];
    }
    pivot_row[col] = rank;
    ++rank;
  }
  for (std::size_t row = rank; row < m.size(); ++row) {
    if (r[row] != 0) return set;
  }
  set.consistent = true;
  set.particular.assign(vars, Rational(0));
  for (std::size_t col = 0; col < vars; ++col) {
    if (pivot_row[col]) set.particular[col] = r[*pivot_row[col]];
  }
  for (std::size_t col = 0; col < vars; ++col) {
    if (pivot_row[col]) continue;
    std::vector<Rational> direction(vars, Rational(0));
    direction[col] = 1;
    for (std::size_t pc = 0; pc < vars; ++pc) {
      if (pivot_row[pc]) direction[pc] = -m[*pivot_row[pc]][col];
    }
    set.basis.push_back(std::move(direction));
  }
  return set;
}

// Unique solution of a square system, or nullopt when singular.
std::optional<std::vector<Rational>> solve_square(Matrix m, std::vector<Rational> r) {
  const std::size_t k = m.size();
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t row = col;
    while (row < k && m[row][col] == 0) ++row;
    if (row == k) return std::nullopt;
    std::swap(m[col], m[row]);
    std::swap(r[col], r[row]);
    const Rational inv = 1 / Rational(m[col][col]);
    for (Rational& value : m[col]) value *= inv;
    r[col] *= inv;
    for (std::size_t other = 0; other < k; ++other) {
      if (other == col || m[other][col] == 0) continue;
      const Rational factor = m[other][col];
      for (std::size_t c = 0; c < k; ++c) m[other][c] -= factor * m[col][c];
      r[other] -= factor * r[col];
    }
  }
  return r;
}

struct BoundedRegion {
  std::vector<Rational> lower;
  std::vector<Rational> upper;
};

bool inside(const std::vector<Rational>& x, const BoundedRegion& box) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < box.lower[i] || x[i] > box.upper[i]) return false;
  }
  return true;
}

// Walks the candidate vertices of {x in affine set : x in box}: every
// choice of dim(basis) active bound rows with an invertible restriction
// pins one candidate. A nonempty region here is bounded, so it always
// has such a vertex; checking each candidate against the whole box makes
// the scan exact.
std::optional<std::vector<Rational>> vertex_scan(const AffineSet& set,
                                                 const BoundedRegion& box) {
  const std::size_t vars = set.particular.size();
  const std::size_t f = set.basis.size();
  if (f == 0) {
    if (inside(set.particular, box)) return set.particular;
    return std::nullopt;
  }

  // Active row i < vars pins x_i at its upper bound, i >= vars at lower.
  const std::size_t row_count = 2 * vars;
  std::vector<std::size_t> chosen(f);
  for (std::size_t i = 0; i < f; ++i) chosen[i] = i;
  while (true) {
    Matrix m(f, std::vector<Rational>(f));
    std::vector<Rational> rhs(f);
    for (std::size_t i = 0; i < f; ++i) {
      const std::size_t var = chosen[i] % vars;
      const bool at_upper = chosen[i] < vars;
      for (std::size_t j = 0; j < f; ++j) m[i][j] = set.basis[j][var];
      rhs[i] = (at_upper ? box.upper[var] : box.lower[var]) - set.particular[var];
    }
    if (auto y = solve_square(std::move(m), std::move(rhs))) {
      std::vector<Rational> x = set.particular;
      for (std::size_t j = 0; j < f; ++j) {
        for (std::size_t i = 0; i < vars; ++i) x[i] += (*y)[j] * set.basis[j][i];
      }
      if (inside(x, box)) return x;
    }

    std::size_t i = f;
    while (i > 0 && chosen[i - 1] + (f - (i - 1)) >= row_count) --i;
    if (i == 0) return std::nullopt;
    ++chosen[i - 1];
    for (std::size_t j = i; j < f; ++j) chosen[j] = chosen[j - 1] + 1;
  }
}

struct Instance {
  std::vector<IndexPair> pairs;
  std::vector<Rational> target;
  std::uint32_t z_index = 0;
  std::uint32_t n = 1;
};

bool endpoints_cover_target(const Instance& inst, const std::vector<std::size_t>& picks) {
  for (std::uint32_t p = 0; p < inst.target.size(); ++p) {
    if (inst.target[p] == 0 || p == inst.z_index) continue;
    bool hit = false;
    for (std::size_t idx : picks) {
      if (inst.pairs[idx].first == p || inst.pairs[idx].second == p) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

std::optional<std::vector<Rational>> try_picks(const Instance& inst,
                                               const std::vector<std::size_t>& picks) {
  if (!endpoints_cover_target(inst, picks)) return std::nullopt;

  std::vector<std::size_t> distinct;
  std::vector<std::uint32_t> count;
  for (std::size_t idx : picks) {
    if (!distinct.empty() && distinct.back() == idx) {
      ++count.back();
    } else {
      distinct.push_back(idx);
      count.push_back(1);
    }
  }
  const std::size_t t = distinct.size();

  std::vector<std::uint32_t> points;
  for (std::size_t j = 0; j < t; ++j) {
    points.push_back(inst.pairs[distinct[j]].first);
    points.push_back(inst.pairs[distinct[j]].second);
  }
  points.push_back(inst.z_index);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  Matrix m;
  std::vector<Rational> rhs;
  for (std::uint32_t p : points) {
    std::vector<Rational> row(t + 1, Rational(0));
    for (std::size_t j = 0; j < t; ++j) {
      if (inst.pairs[distinct[j]].first == p) row[j] += 1;
      if (inst.pairs[distinct[j]].second == p) row[j] -= 1;
    }
    if (p == inst.z_index) row[t] = 1;
    m.push_back(std::move(row));
    rhs.push_back(inst.target[p]);
  }

  AffineSet set = solve_equalities(std::move(m), std::move(rhs), t + 1);
  if (!set.consistent) return std::nullopt;

  BoundedRegion box;
  box.lower.resize(t + 1);
  box.upper.resize(t + 1);
  const Rational n_bound(static_cast<long>(inst.n));
  for (std::size_t j = 0; j < t; ++j) {
    Rational cap = n_bound * Rational(static_cast<long>(count[j]));
    box.lower[j] = -cap;
    box.upper[j] = cap;
  }
  box.lower[t] = -n_bound;
  box.upper[t] = n_bound;
  return vertex_scan(set, box);
}

std::optional<std::vector<Rational>> scan_multisets(const Instance& inst, std::size_t start,
                                                    std::uint32_t remaining,
                                                    std::vector<std::size_t>& picks) {
  if (auto hit = try_picks(inst, picks)) return hit;
  if (remaining == 0) return std::nullopt;
  for (std::size_t idx = start; idx < inst.pairs.size(); ++idx) {
    picks.push_back(idx);
    // Re-testing shorter prefixes is avoided by testing before descent.
    if (auto hit = scan_multisets(inst, idx, remaining - 1, picks)) return hit;
    picks.pop_back();
  }
  return std::nullopt;
}

}  // namespace

std::optional<Decomposition> brute_force_oracle(const GradedBallean& b, const FreeVector& v,
                                                const IdealBaseParams& params) {
  if (b.ground().size() > 6) {
    throw std::invalid_argument("oracle refuses ground sets larger than 6 points");
  }
  if (params.n > 3) {
    throw std::invalid_argument("oracle refuses copy counts larger than 3");
  }
  if (params.n < 1) throw std::invalid_argument("copy count n must be at least 1");
  if (params.entourage.level < 1 || params.entourage.level > b.level_count()) {
    throw std::out_of_range("entourage level out of range");
  }
  if (params.entourage.power < 1) {
    throw std::invalid_argument("entourage power must be at least 1");
  }
  if (!v.supported_on(b.ground())) {
    throw std::invalid_argument("vector support is not inside the ground set");
  }

  Instance inst;
  inst.z_index = b.ground().index_of(params.z);
  inst.n = params.n;
  inst.target.assign(b.ground().size(), Rational(0));
  for (const auto& [p, c] : v.coords()) inst.target[b.ground().index_of(p)] = c;
  for (const IndexPair& q : b.entourage(params.entourage).pairs()) {
    if (q.first != q.second) inst.pairs.push_back(q);
  }

  // On success the recursion returns without unwinding, so picks still
  // names the multiset the solution belongs to.
  std::vector<std::size_t> picks;
  auto solution = scan_multisets(inst, 0, params.n, picks);
  if (!solution) return std::nullopt;

  std::vector<std::size_t> distinct;
  for (std::size_t idx : picks) {
    if (distinct.empty() || distinct.back() != idx) distinct.push_back(idx);
  }

  Decomposition cert;
  cert.params = params;
  const Rational n_bound(static_cast<long>(params.n));
  for (std::size_t j = 0; j < distinct.size(); ++j) {
    Rational c = (*solution)[j];
    const PointId& x = b.ground().at(inst.pairs[distinct[j]].first);
    const PointId& y = b.ground().at(inst.pairs[distinct[j]].second);
    while (abs(c) > n_bound) {
      const Rational piece = c > 0 ? Rational(n_bound) : Rational(-n_bound);
      cert.terms.push_back(DiffTerm{x, y, piece});
      c -= piece;
    }
    if (c != 0) cert.terms.push_back(DiffTerm{x, y, std::move(c)});
  }
  cert.z_coeff = (*solution)[distinct.size()];
  return cert;
}

}  // namespace vball
