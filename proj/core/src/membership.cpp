#include "vball/membership.hpp"

#include "vball/solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace vball {

namespace {

struct SearchSpace {
  std::vector<IndexPair> pairs;  // non-degenerate, canonical order
  std::vector<Rational> target;  // per ground index
  std::vector<std::uint32_t> required;
  std::uint32_t z_index = 0;
};

// Next nondecreasing tuple over [0, pair_count) in lexicographic order.
bool advance(std::vector<std::size_t>& tuple, std::size_t pair_count) {
  for (std::size_t i = tuple.size(); i-- > 0;) {
    if (tuple[i] + 1 < pair_count) {
      const std::size_t v = tuple[i] + 1;
      for (std::size_t j = i; j < tuple.size(); ++j) tuple[j] = v;
      return true;
    }
  }
  return false;
}

bool covers_required(const SearchSpace& space, const std::vector<std::size_t>& tuple) {
  for (std::uint32_t p : space.required) {
    bool hit = false;
    for (std::size_t idx : tuple) {
      const IndexPair& q = space.pairs[idx];
      if (q.first == p || q.second == p) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

// Feasibility of target = sum c_j (x_j - y_j) + mu z over one multiset.
std::optional<std::vector<Rational>> try_multiset(const SearchSpace& space,
                                                  const std::vector<std::size_t>& distinct,
                                                  const std::vector<std::uint32_t>& mult,
                                                  const Rational& coeff_bound,
                                                  const Rational& z_bound) {
  const std::size_t t = distinct.size();
  std::vector<std::uint32_t> points;  // equation rows, sorted ground indices
  for (std::size_t j = 0; j < t; ++j) {
    points.push_back(space.pairs[distinct[j]].first);
    points.push_back(space.pairs[distinct[j]].second);
  }
  points.push_back(space.z_index);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  BoxSystem sys;
  sys.vars = t + 1;
  sys.lower.resize(sys.vars);
  sys.upper.resize(sys.vars);
  for (std::size_t j = 0; j < t; ++j) {
    Rational cap = coeff_bound * Rational(static_cast<long>(mult[j]));
    sys.lower[j] = -cap;
    sys.upper[j] = cap;
  }
  sys.lower[t] = -z_bound;
  sys.upper[t] = z_bound;

  for (std::uint32_t p : points) {
    std::vector<Rational> row(sys.vars, Rational(0));
    for (std::size_t j = 0; j < t; ++j) {
      const IndexPair& q = space.pairs[distinct[j]];
      if (q.first == p) row[j] += 1;
      if (q.second == p) row[j] -= 1;
    }
    if (p == space.z_index) row[t] = 1;
    sys.eq_rows.push_back(std::move(row));
    sys.eq_rhs.push_back(space.target[p]);
  }
  return solve_box_system(sys);
}

// Splits the aggregated coefficient of one pair into certificate terms
// each within the bound; the multiplicity cap is never exceeded.
void emit_terms(std::vector<DiffTerm>& out, const Ground& ground, const IndexPair& pair,
                Rational total, const Rational& bound) {
  const PointId& x = ground.at(pair.first);
  const PointId& y = ground.at(pair.second);
  while (abs(total) > bound) {
    const Rational piece = total > 0 ? Rational(bound) : Rational(-bound);
    out.push_back(DiffTerm{x, y, piece});
    total -= piece;
  }
  if (total != 0) out.push_back(DiffTerm{x, y, std::move(total)});
}

MembershipResult search(const GradedBallean& b, const SearchSpace& space,
                        std::uint32_t copies, const Rational& coeff_bound,
                        const Rational& z_bound, const IdealBaseParams& cert_params,
                        MembershipStats& stats) {
  MembershipResult result;
  for (std::uint32_t p : space.required) {
    bool reachable = false;
    for (const IndexPair& q : space.pairs) {
      if (q.first == p || q.second == p) {
        reachable = true;
        break;
      }
    }
    if (!reachable) {
      result.stats = stats;
      return result;
    }
  }

  for (std::uint32_t m = 0; m <= copies; ++m) {
    if (m > 0 && space.pairs.empty()) break;
    std::vector<std::size_t> tuple(m, 0);
    do {
      ++stats.multisets_tried;
      if (!covers_required(space, tuple)) continue;

      std::vector<std::size_t> distinct;
      std::vector<std::uint32_t> mult;
      for (std::size_t idx : tuple) {
        if (!distinct.empty() && distinct.back() == idx) {
          ++mult.back();
        } else {
          distinct.push_back(idx);
          mult.push_back(1);
        }
      }

      ++stats.systems_solved;
      auto solution = try_multiset(space, distinct, mult, coeff_bound, z_bound);
      if (!solution) continue;

      Decomposition cert;
      cert.params = cert_params;
      for (std::size_t j = 0; j < distinct.size(); ++j) {
        emit_terms(cert.terms, b.ground(), space.pairs[distinct[j]], (*solution)[j],
                   coeff_bound);
      }
      cert.z_coeff = (*solution)[distinct.size()];
      result.certificate = std::move(cert);
      result.stats = stats;
      return result;
    } while (advance(tuple, space.pairs.size()));
  }
  result.stats = stats;
  return result;
}

MembershipResult decide(const GradedBallean& b, const FreeVector& v, std::uint32_t copies,
                        const Rational& coeff_bound, const Rational& z_bound,
                        EffectiveEntourage e, const PointId& z,
                        const IdealBaseParams& cert_params,
                        const MembershipOptions& options) {
  if (e.level < 1 || e.level > b.level_count()) {
    throw std::out_of_range("entourage level out of range");
  }
  if (e.power < 1) {
    throw std::invalid_argument("entourage power must be at least 1");
  }
  if (coeff_bound < 0 || z_bound < 0) {
    throw std::invalid_argument("base set bounds must be nonnegative");
  }
  if (!v.supported_on(b.ground())) {
    throw std::invalid_argument("vector support is not inside the ground set");
  }

  SearchSpace space;
  space.z_index = b.ground().index_of(z);
  space.target.assign(b.ground().size(), Rational(0));
  for (const auto& [p, c] : v.coords()) {
    const std::uint32_t idx = b.ground().index_of(p);
    space.target[idx] = c;
    if (idx != space.z_index) space.required.push_back(idx);
  }

  std::vector<IndexPair> all_pairs;
  for (const IndexPair& q : b.entourage(e).pairs()) {
    if (q.first != q.second) all_pairs.push_back(q);
  }

  MembershipStats stats;
  if (options.support_pruning) {
    SearchSpace pruned = space;
    for (const IndexPair& q : all_pairs) {
      const bool x_ok = space.target[q.first] != 0 || q.first == space.z_index;
      const bool y_ok = space.target[q.second] != 0 || q.second == space.z_index;
      if (x_ok && y_ok) pruned.pairs.push_back(q);
    }
    if (pruned.pairs.size() < all_pairs.size()) {
      MembershipResult fast =
          search(b, pruned, copies, coeff_bound, z_bound, cert_params, stats);
      if (fast.member()) return fast;
    }
  }
  space.pairs = std::move(all_pairs);
  return search(b, space, copies, coeff_bound, z_bound, cert_params, stats);
}

}  // namespace

MembershipResult ideal_membership(const GradedBallean& b, const FreeVector& v,
                                  const IdealBaseParams& params,
                                  const MembershipOptions& options) {
  if (params.n < 1) throw std::invalid_argument("copy count n must be at least 1");
  const Rational bound(static_cast<long>(params.n));
  return decide(b, v, params.n, bound, bound, params.entourage, params.z, params, options);
}

MembershipResult ideal_membership_general(const GradedBallean& b, const FreeVector& v,
                                          const GeneralBaseParams& params,
                                          const MembershipOptions& options) {
  IdealBaseParams cert_params;
  cert_params.n = std::max({params.copies, ceil_abs_to_nat(params.coeff_bound, 1),
                            ceil_abs_to_nat(params.z_bound, 1)});
  cert_params.entourage = params.entourage;
  cert_params.z = params.z;
  return decide(b, v, params.copies, params.coeff_bound, params.z_bound, params.entourage,
                params.z, cert_params, options);
}

}  // namespace vball
