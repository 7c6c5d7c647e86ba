#include "vball/closure.hpp"

#include "vball/probe.hpp"
#include "vball/rng.hpp"

#include <algorithm>
#include <stdexcept>

namespace vball {

namespace {

constexpr std::size_t kFamilyCap = 512;

// Containment by parameter comparison; valid on monotone scales.
bool dominates(const ClosureDescriptor& a, const ClosureDescriptor& b) {
  const bool diff_part = a.copies >= b.copies && a.bound >= b.bound &&
                         a.e.level >= b.e.level && a.e.power >= b.e.power;
  return diff_part && a.z_bound >= b.z_bound;
}

// Empty difference parts collapse to one canonical shape so that
// dominance and deduplication see through them.
void canonicalize(ClosureDescriptor& d) {
  if (d.copies == 0 || d.bound == 0) {
    d.copies = 0;
    d.bound = 0;
    d.e = EffectiveEntourage{1, 1};
  }
}

// Insert unless dominated; evict members the newcomer dominates.
// Returns whether the family changed.
bool absorb(std::vector<ClosureDescriptor>& family, ClosureDescriptor d) {
  canonicalize(d);
  for (const ClosureDescriptor& have : family) {
    if (dominates(have, d)) return false;
  }
  family.erase(std::remove_if(family.begin(), family.end(),
                              [&d](const ClosureDescriptor& have) {
                                return dominates(d, have);
                              }),
               family.end());
  if (family.size() >= kFamilyCap) return false;
  family.push_back(std::move(d));
  return true;
}

ClosureDescriptor doubled(ClosureDescriptor d, std::uint32_t generation) {
  d.copies *= 2;
  d.z_bound *= 2;
  d.generation = generation;
  return d;
}

ClosureDescriptor scaled(ClosureDescriptor d, std::uint32_t factor,
                         std::uint32_t generation) {
  const Rational f(static_cast<long>(factor));
  d.bound *= f;
  d.z_bound *= f;
  d.generation = generation;
  return d;
}

// Joins are the union axiom and cost no generation: the component-wise
// maximum contains both operands.
ClosureDescriptor joined(const ClosureDescriptor& a, const ClosureDescriptor& b) {
  ClosureDescriptor j;
  j.copies = std::max(a.copies, b.copies);
  j.bound = std::max(a.bound, b.bound);
  j.e = EffectiveEntourage{std::max(a.e.level, b.e.level), std::max(a.e.power, b.e.power)};
  j.z_bound = std::max(a.z_bound, b.z_bound);
  j.generation = std::max(a.generation, b.generation);
  canonicalize(j);
  return j;
}

void close_under_joins(std::vector<ClosureDescriptor>& family) {
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<ClosureDescriptor> snapshot = family;
    for (std::size_t i = 0; i < snapshot.size(); ++i) {
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        if (absorb(family, joined(snapshot[i], snapshot[j]))) grew = true;
      }
    }
  }
}

Rational fraction_in(const Rational& bound, RandomSource& rng) {
  Rational f(rng.range(-4, 4), 4);
  f.canonicalize();
  return Rational(bound * f);
}

std::string describe_descriptor(const ClosureDescriptor& d) {
  return "copies=" + std::to_string(d.copies) + " bound=" + format_rational(d.bound) +
         " level=" + std::to_string(d.e.level) + " power=" + std::to_string(d.e.power) +
         " anchor_bound=" + format_rational(d.z_bound);
}

}  // namespace

ClosureReport generated_ideal_closure(const GradedBallean& b, std::uint32_t depth,
                                      const PointId& anchor, std::uint64_t seed,
                                      std::uint32_t samples) {
  if (depth < 1 || depth > 4) {
    throw std::invalid_argument("closure depth must be between 1 and 4");
  }
  (void)b.ground().index_of(anchor);

  ClosureReport report;
  report.anchor = anchor;
  report.depth = depth;

  std::vector<ClosureDescriptor>& family = report.family;
  const std::uint32_t levels = static_cast<std::uint32_t>(b.level_count());
  for (std::uint32_t r = 1; r <= levels; ++r) {
    ClosureDescriptor seed_desc;
    seed_desc.copies = 1;
    seed_desc.bound = 1;
    seed_desc.e = EffectiveEntourage{r, 1};
    absorb(family, seed_desc);
  }
  ClosureDescriptor anchor_seed;
  anchor_seed.z_bound = 1;
  absorb(family, anchor_seed);
  close_under_joins(family);

  for (std::uint32_t gen = 1; gen <= depth; ++gen) {
    const std::vector<ClosureDescriptor> snapshot = family;
    for (const ClosureDescriptor& d : snapshot) {
      absorb(family, doubled(d, gen));
      for (std::uint32_t factor = 2; factor <= depth; ++factor) {
        absorb(family, scaled(d, factor, gen));
      }
    }
    close_under_joins(family);
  }

  std::sort(family.begin(), family.end(), [](const ClosureDescriptor& a,
                                             const ClosureDescriptor& b2) {
    if (a.generation != b2.generation) return a.generation < b2.generation;
    if (a.copies != b2.copies) return a.copies < b2.copies;
    if (a.e.level != b2.e.level) return a.e.level < b2.e.level;
    if (a.e.power != b2.e.power) return a.e.power < b2.e.power;
    if (a.bound != b2.bound) return a.bound < b2.bound;
    return a.z_bound < b2.z_bound;
  });

  for (const ClosureDescriptor& d : family) {
    const std::uint32_t n = std::max(
        {d.copies, ceil_abs_to_nat(d.bound, 1), ceil_abs_to_nat(d.z_bound, 1)});
    report.covering_base.push_back(IdealBaseParams{n, d.e, anchor});
  }

  for (std::uint32_t n = 1; n <= depth; ++n) {
    for (std::uint32_t r = 1; r <= levels; ++r) {
      BaseCover cover;
      cover.base = IdealBaseParams{n, EffectiveEntourage{r, 1}, anchor};
      const Rational need(static_cast<long>(n));
      for (std::size_t i = 0; i < family.size(); ++i) {
        const ClosureDescriptor& d = family[i];
        if (d.copies >= n && d.bound >= need && d.z_bound >= need && d.e.level >= r) {
          cover.descriptor = i;
          break;
        }
      }
      report.base_covers.push_back(std::move(cover));
    }
  }

  RandomSource rng(seed);
  const MembershipOptions fast{true};
  for (std::size_t i = 0; i < family.size(); ++i) {
    const ClosureDescriptor& d = family[i];
    if (report.covering_base[i].n > 4 || d.copies > 4) continue;
    const auto& pairs = d.copies > 0 ? b.entourage(d.e).pairs() : std::vector<IndexPair>{};
    for (std::uint32_t s = 0; s < samples; ++s) {
      FreeVector v;
      for (std::uint32_t c = 0; c < d.copies && !pairs.empty(); ++c) {
        const IndexPair& q = pairs[rng.below(pairs.size())];
        v += fraction_in(d.bound, rng) *
             difference(b.ground().at(q.first), b.ground().at(q.second));
      }
      v += fraction_in(d.z_bound, rng) * FreeVector::basis(anchor);
      ++report.sampled_checks;
      if (!ideal_membership(b, v, report.covering_base[i], fast).member()) {
        report.failures.push_back("sampled element of {" + describe_descriptor(d) +
                                  "} escaped its covering base set");
      }
    }
  }
  for (const BaseCover& cover : report.base_covers) {
    if (!cover.descriptor) continue;
    const ClosureDescriptor& d = family[*cover.descriptor];
    if (d.copies > 6) continue;
    GeneralBaseParams general;
    general.copies = d.copies;
    general.coeff_bound = d.bound;
    general.entourage = d.e;
    general.z = anchor;
    general.z_bound = d.z_bound;
    for (std::uint32_t s = 0; s < samples; ++s) {
      const Decomposition sample = random_decomposition(b, cover.base, rng);
      ++report.sampled_checks;
      if (!ideal_membership_general(b, evaluate(sample), general, fast).member()) {
        report.failures.push_back("sampled base-set member escaped the descriptor {" +
                                  describe_descriptor(d) + "}");
      }
    }
  }
  return report;
}

}  // namespace vball
