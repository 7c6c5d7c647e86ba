#include "vball/linear_map.hpp"

#include "vball/membership.hpp"
#include "vball/probe.hpp"

#include <algorithm>

namespace vball {

Rational StandardVector::inf_norm() const {
  Rational best(0);
  for (const Rational& c : coords) {
    Rational a = abs(c);
    if (a > best) best = std::move(a);
  }
  return best;
}

StandardVector& StandardVector::operator+=(const StandardVector& other) {
  if (coords.size() != other.coords.size()) {
    throw std::invalid_argument("standard vector dimension mismatch");
  }
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += other.coords[i];
  return *this;
}

StandardVector& StandardVector::operator*=(const Rational& scalar) {
  for (Rational& c : coords) c *= scalar;
  return *this;
}

bool StandardVectorBallean::box_contains(const StandardVector& v, std::uint32_t m) const {
  if (v.dim() != dim) throw std::invalid_argument("standard vector dimension mismatch");
  return v.inf_norm() <= Rational(static_cast<long>(m));
}

FreeLinearMap linear_extension(const PointMap& f) {
  std::vector<FreeVector> images;
  images.reserve(f.source().size());
  for (std::uint32_t i = 0; i < f.source().size(); ++i) {
    images.push_back(FreeVector::basis(f.target().at(f.apply_index(i))));
  }
  return FreeLinearMap(f.source(), std::move(images));
}

namespace {

std::uint32_t level_limit(const GradedBallean& b, const ParamRange& range) {
  const std::uint32_t levels = static_cast<std::uint32_t>(b.level_count());
  return range.max_level == 0 ? levels : std::min(range.max_level, levels);
}

std::string describe_params(const IdealBaseParams& p) {
  return "n=" + std::to_string(p.n) + " level=" + std::to_string(p.entourage.level) +
         " power=" + std::to_string(p.entourage.power) + " z=" + p.z;
}

}  // namespace

BoxCoarseResult check_linear_coarse(const BoxLinearMap& h, const GradedBallean& b,
                                    const ParamRange& range, std::uint64_t seed,
                                    std::uint32_t samples) {
  if (range.max_n < 1 || range.max_power < 1) {
    throw std::invalid_argument("parameter range is empty");
  }
  BoxCoarseResult result;
  const PointId anchor = b.ground().at(0);
  const Rational anchor_norm = h.image_of(anchor).inf_norm();
  RandomSource rng(seed);

  for (std::uint32_t r = 1; r <= level_limit(b, range); ++r) {
    for (std::uint32_t k = 1; k <= range.max_power; ++k) {
      const EffectiveEntourage e{r, k};
      Rational diff_bound(0);
      for (const IndexPair& q : b.entourage(e).pairs()) {
        StandardVector d = h.image_of(b.ground().at(q.first));
        StandardVector other = h.image_of(b.ground().at(q.second));
        other *= Rational(-1);
        d += other;
        Rational norm = d.inf_norm();
        if (norm > diff_bound) diff_bound = std::move(norm);
      }
      for (std::uint32_t n = 1; n <= range.max_n; ++n) {
        const Rational raw = Rational(static_cast<long>(n) * n) * diff_bound +
                             Rational(static_cast<long>(n)) * anchor_norm;
        BoxCoarseEntry entry;
        entry.source = IdealBaseParams{n, e, anchor};
        entry.box_index = ceil_abs_to_nat(raw, 1);
        entry.mode = "arithmetic";

        for (std::uint32_t s = 0; s < samples; ++s) {
          const Decomposition d = random_decomposition(b, entry.source, rng);
          ++result.sampled_checks;
          const StandardVector img = h.apply(evaluate(d));
          if (img.inf_norm() > Rational(static_cast<long>(entry.box_index))) {
            result.failures.push_back("sampled image escaped box " +
                                      std::to_string(entry.box_index) + " at " +
                                      describe_params(entry.source));
          }
        }
        result.table.push_back(std::move(entry));
      }
    }
  }
  return result;
}

FreeCoarseResult check_linear_coarse(const FreeLinearMap& h, const GradedBallean& b,
                                     const GradedBallean& b2, const PointId& target_anchor,
                                     const ParamRange& range, std::uint64_t seed,
                                     std::uint32_t samples) {
  if (range.max_n < 1 || range.max_power < 1) {
    throw std::invalid_argument("parameter range is empty");
  }
  FreeCoarseResult result;
  const PointId anchor = b.ground().at(0);
  const std::uint32_t target_levels = static_cast<std::uint32_t>(b2.level_count());
  const std::uint32_t target_max_n = 2 * range.max_n + 2;
  const std::uint32_t target_max_power = std::max<std::uint32_t>(range.max_power, 2);
  const MembershipOptions fast{true};
  RandomSource rng(seed);

  for (std::uint32_t r = 1; r <= level_limit(b, range); ++r) {
    for (std::uint32_t k = 1; k <= range.max_power; ++k) {
      for (std::uint32_t n = 1; n <= range.max_n; ++n) {
        const IdealBaseParams source{n, EffectiveEntourage{r, k}, anchor};
        std::vector<FreeVector> images;
        images.reserve(samples);
        for (std::uint32_t s = 0; s < samples; ++s) {
          images.push_back(h.apply(evaluate(random_decomposition(b, source, rng))));
        }

        std::optional<IdealBaseParams> found;
        for (std::uint32_t tn = 1; tn <= target_max_n && !found; ++tn) {
          for (std::uint32_t tr = 1; tr <= target_levels && !found; ++tr) {
            for (std::uint32_t tk = 1; tk <= target_max_power && !found; ++tk) {
              const IdealBaseParams cand{tn, EffectiveEntourage{tr, tk}, target_anchor};
              bool all = true;
              for (const FreeVector& img : images) {
                ++result.sampled_checks;
                if (!ideal_membership(b2, img, cand, fast).member()) {
                  all = false;
                  break;
                }
              }
              if (all) found = cand;
            }
          }
        }
        if (found) {
          result.table.push_back(FreeCoarseEntry{source, *found, "sampled"});
        } else {
          result.escaping_sample =
              "a sampled image from " + describe_params(source) +
              " escaped every tested target base set (up to n=" +
              std::to_string(target_max_n) + ")";
          return result;
        }
      }
    }
  }
  return result;
}

Decomposition transport_decomposition(const Decomposition& d, const PointMap& f,
                                      const ModulusWitness& rho) {
  Decomposition out;
  out.params.n = d.params.n;
  out.params.entourage = rho.lookup(d.params.entourage);
  out.params.z = f.apply(d.params.z);
  out.z_coeff = d.z_coeff;
  out.terms.reserve(d.terms.size());
  for (const DiffTerm& t : d.terms) {
    out.terms.push_back(DiffTerm{f.apply(t.x), f.apply(t.y), t.lambda});
  }
  return out;
}

ExtensionCertificate extension_certificate(const PointMap& f, const GradedBallean& b,
                                           const GradedBallean& b2, const ParamRange& range,
                                           std::uint64_t seed, std::uint32_t samples) {
  if (range.max_n < 1 || range.max_power < 1) {
    throw std::invalid_argument("parameter range is empty");
  }
  const CoarseCheckResult coarse = check_coarse_map(f, b, b2);
  if (!coarse.ok()) {
    throw std::invalid_argument("the point map is not coarse, no modulus exists");
  }
  const ModulusWitness& rho = *coarse.witness;
  const FreeLinearMap h = linear_extension(f);

  ExtensionCertificate cert;
  const PointId anchor = b.ground().at(0);
  RandomSource rng(seed);
  for (std::uint32_t r = 1; r <= level_limit(b, range); ++r) {
    for (std::uint32_t k = 1; k <= range.max_power; ++k) {
      for (std::uint32_t n = 1; n <= range.max_n; ++n) {
        ExtensionEntry entry;
        entry.source = IdealBaseParams{n, EffectiveEntourage{r, k}, anchor};
        entry.target = IdealBaseParams{n, rho.lookup(entry.source.entourage),
                                       f.apply(anchor)};
        for (std::uint32_t s = 0; s < samples; ++s) {
          const Decomposition d = random_decomposition(b, entry.source, rng);
          const Decomposition moved = transport_decomposition(d, f, rho);
          ++cert.validated_samples;
          if (moved.params != entry.target) {
            cert.failures.push_back("transported params diverged from the table at " +
                                    describe_params(entry.source));
            continue;
          }
          if (!verify_decomposition(b2, moved)) {
            cert.failures.push_back("transported certificate failed to verify at " +
                                    describe_params(entry.source));
          }
          if (!(evaluate(moved) == h.apply(evaluate(d)))) {
            cert.failures.push_back("transport disagreed with the linear extension at " +
                                    describe_params(entry.source));
          }
        }
        cert.table.push_back(std::move(entry));
      }
    }
  }
  return cert;
}

}  // namespace vball
