#include "vball/reduction.hpp"

#include "vball/membership.hpp"

#include <optional>
#include <stdexcept>

namespace vball {

namespace {

struct WorkTerm {
  PointId x;
  PointId y;
  Rational lambda;
  std::uint32_t power = 1;
};

}  // namespace

ReductionResult reduce_to_support(const GradedBallean& b, const Decomposition& d,
                                  const std::set<PointId>& target) {
  const Ground& ground = b.ground();
  if (!ground.contains(d.params.z)) {
    throw std::invalid_argument("anchor point \"" + d.params.z +
                                "\" is not in the ground set");
  }
  for (const DiffTerm& t : d.terms) {
    if (!ground.contains(t.x) || !ground.contains(t.y)) {
      throw std::invalid_argument("term endpoint is not in the ground set");
    }
  }
  if (d.z_coeff != 0 && target.count(d.params.z) == 0) {
    throw std::invalid_argument("anchor \"" + d.params.z +
                                "\" carries a nonzero coefficient outside the target");
  }

  std::vector<WorkTerm> terms;
  for (const DiffTerm& t : d.terms) {
    if (t.lambda == 0 || t.x == t.y) continue;
    terms.push_back(WorkTerm{t.x, t.y, t.lambda, 1});
  }

  std::uint32_t eliminations = 0;
  for (;;) {
    std::optional<PointId> extraneous;
    for (const WorkTerm& t : terms) {
      for (const PointId* p : {&t.x, &t.y}) {
        if (target.count(*p) == 0 && (!extraneous || *p < *extraneous)) extraneous = *p;
      }
    }
    if (!extraneous) break;
    const PointId a = *extraneous;

    Rational net(0);
    for (const WorkTerm& t : terms) {
      if (t.x == a) net += t.lambda;
      if (t.y == a) net -= t.lambda;
    }
    if (net != 0) {
      throw std::invalid_argument("point \"" + a +
                                  "\" carries net coefficient " + format_rational(net) +
                                  " but lies outside the target");
    }

    std::size_t k = 0;
    while (!(terms[k].x == a || terms[k].y == a)) ++k;
    const PointId partner = terms[k].x == a ? terms[k].y : terms[k].x;
    const std::uint32_t donor_power = terms[k].power;

    // Substituting the partner for a everywhere shifts the value by the
    // net coefficient of a, which is zero; the donor term degenerates.
    std::vector<WorkTerm> next;
    next.reserve(terms.size());
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (i == k) continue;
      WorkTerm t = terms[i];
      bool touched = false;
      if (t.x == a) {
        t.x = partner;
        touched = true;
      }
      if (t.y == a) {
        t.y = partner;
        touched = true;
      }
      if (touched) {
        t.power += donor_power;
        if (t.x == t.y) continue;
      }
      next.push_back(std::move(t));
    }
    terms = std::move(next);
    ++eliminations;
  }

  ReductionResult result;
  result.eliminations = eliminations;
  result.reduced.params = d.params;
  result.reduced.z_coeff = d.z_coeff;
  for (const WorkTerm& t : terms) {
    result.reduced.terms.push_back(DiffTerm{t.x, t.y, t.lambda});
    result.achieved_power = std::max(result.achieved_power, t.power);
  }
  return result;
}

RestrictionVerdict restriction_check(const GradedBallean& b, const PointId& x,
                                     const PointId& y, std::uint32_t n,
                                     EffectiveEntourage e, const PointId& z) {
  const PointId anchor = z.empty() ? b.ground().at(0) : z;
  RestrictionVerdict verdict;
  verdict.in_entourage = b.entourage(e).contains(x, y);

  const FreeVector v = difference(x, y);
  if (verdict.in_entourage) {
    verdict.forward_ok = ideal_membership(b, v, IdealBaseParams{1, e, anchor}).member();
  }

  auto found = ideal_membership(b, v, IdealBaseParams{n, e, anchor});
  verdict.member = found.member();
  if (!found.member()) return verdict;

  const Decomposition& cert = *found.certificate;
  verdict.anchor_coeff_zero = cert.z_coeff == 0;
  if (!verdict.anchor_coeff_zero) return verdict;

  auto red = reduce_to_support(b, cert, {x, y});
  verdict.achieved_power = red.achieved_power;
  verdict.power_within_n = red.achieved_power <= n;
  for (const DiffTerm& t : red.reduced.terms) {
    const bool x_ok = t.x == x || t.x == y;
    const bool y_ok = t.y == x || t.y == y;
    if (!x_ok || !y_ok) verdict.reduction_stayed_inside = false;
  }
  verdict.pair_in_power =
      b.entourage(EffectiveEntourage{e.level, e.power * n}).contains(x, y);
  return verdict;
}

}  // namespace vball
