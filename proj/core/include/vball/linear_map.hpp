#pragma once

#include "vball/coarse_map.hpp"
#include "vball/decomposition.hpp"
#include "vball/free_vector.hpp"
#include "vball/rng.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vball {

/// Element of Q^d with exact coordinates.
struct StandardVector {
  std::vector<Rational> coords;

  StandardVector() = default;
  explicit StandardVector(std::vector<Rational> c) : coords(std::move(c)) {}

  std::size_t dim() const { return coords.size(); }
  Rational inf_norm() const;

  StandardVector& operator+=(const StandardVector& other);
  StandardVector& operator*=(const Rational& scalar);
  bool operator==(const StandardVector& other) const { return coords == other.coords; }
};

/// Q^d with the box ideal: base sets [-m, m]^d for natural m >= 1.
struct StandardVectorBallean {
  std::uint32_t dim = 1;

  bool box_contains(const StandardVector& v, std::uint32_t m) const;
};

/// Linear extension of a basis assignment. The target vector type needs
/// default construction, += and scalar *=.
template <typename TargetVector>
class LinearMap {
 public:
  LinearMap(Ground source, std::vector<TargetVector> images)
      : source_(std::move(source)), images_(std::move(images)) {
    if (images_.size() != source_.size()) {
      throw std::invalid_argument("linear map must assign an image to every basis point");
    }
  }

  LinearMap(const Ground& source, const std::map<PointId, TargetVector>& images)
      : source_(source) {
    images_.reserve(source.size());
    for (std::uint32_t i = 0; i < source.size(); ++i) {
      auto it = images.find(source.at(i));
      if (it == images.end()) {
        throw std::invalid_argument("linear map missing image for \"" + source.at(i) + "\"");
      }
      images_.push_back(it->second);
    }
  }

  const Ground& source() const { return source_; }
  const TargetVector& image_of(const PointId& p) const {
    return images_.at(source_.index_of(p));
  }

  TargetVector apply(const FreeVector& v) const {
    if (!v.supported_on(source_)) {
      throw std::invalid_argument("vector support is not inside the map's source ground");
    }
    TargetVector out{};
    bool seeded = false;
    for (const auto& [p, c] : v.coords()) {
      TargetVector part = images_[source_.index_of(p)];
      part *= c;
      if (seeded) {
        out += part;
      } else {
        out = std::move(part);
        seeded = true;
      }
    }
    if (!seeded && !images_.empty()) {
      out = images_[0];
      out *= Rational(0);
    }
    return out;
  }

 private:
  Ground source_;
  std::vector<TargetVector> images_;
};

using FreeLinearMap = LinearMap<FreeVector>;
using BoxLinearMap = LinearMap<StandardVector>;

/// The point map's unique linear extension between free vector spaces.
FreeLinearMap linear_extension(const PointMap& f);

struct ParamRange {
  std::uint32_t max_n = 2;
  std::uint32_t max_power = 1;
  /// 0 means every level of the source scale.
  std::uint32_t max_level = 0;
};

struct BoxCoarseEntry {
  IdealBaseParams source;
  std::uint32_t box_index = 1;
  std::string mode;  // "arithmetic"
};

struct BoxCoarseResult {
  std::vector<BoxCoarseEntry> table;
  std::uint64_t sampled_checks = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Per source base set, the box index ceil(n^2 * d_max + n * |h(z)|)
/// where d_max bounds image differences over the entourage; proved by
/// term-wise arithmetic and confirmed on sampled members. The anchor is
/// the least ground point.
BoxCoarseResult check_linear_coarse(const BoxLinearMap& h, const GradedBallean& b,
                                    const ParamRange& range, std::uint64_t seed,
                                    std::uint32_t samples);

struct FreeCoarseEntry {
  IdealBaseParams source;
  IdealBaseParams target;
  std::string mode;  // "sampled"
};

struct FreeCoarseResult {
  std::vector<FreeCoarseEntry> table;
  std::uint64_t sampled_checks = 0;
  std::optional<std::string> escaping_sample;

  bool ok() const { return !escaping_sample.has_value(); }
};

/// Per source base set, the first target base params (ascending n, then
/// level, then power) containing every sampled image; reports a sample
/// escaping the tested range otherwise. Sampled evidence only, and
/// marked as such.
FreeCoarseResult check_linear_coarse(const FreeLinearMap& h, const GradedBallean& b,
                                     const GradedBallean& b2, const PointId& target_anchor,
                                     const ParamRange& range, std::uint64_t seed,
                                     std::uint32_t samples);

struct ExtensionEntry {
  IdealBaseParams source;
  IdealBaseParams target;
};

struct ExtensionCertificate {
  std::vector<ExtensionEntry> table;
  std::uint64_t validated_samples = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// For a coarse point map with modulus rho, emits the containment table
/// B(n, e, z) -> B'(n, rho(e), f(z)) and validates it by transporting
/// sampled certificates term by term and re-verifying them in the
/// target. Throws std::invalid_argument when the map is not coarse.
ExtensionCertificate extension_certificate(const PointMap& f, const GradedBallean& b,
                                           const GradedBallean& b2, const ParamRange& range,
                                           std::uint64_t seed, std::uint32_t samples);

/// The transported certificate itself: each term maps through f, the
/// anchor moves to f(z), and the entourage becomes rho(e).
Decomposition transport_decomposition(const Decomposition& d, const PointMap& f,
                                      const ModulusWitness& rho);

}  // namespace vball
