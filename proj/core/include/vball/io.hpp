#pragma once

#include "vball/ballean.hpp"
#include "vball/coarse_map.hpp"
#include "vball/decomposition.hpp"
#include "vball/free_vector.hpp"
#include "vball/lattice.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace vball {

// Input rejection carrying the offending location, "$.levels[2][0]" style.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string where, const std::string& what)
      : std::runtime_error(what + " (at " + where + ")"), where_(std::move(where)) {}

  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

nlohmann::json read_json_file(const std::string& path);

Rational parse_rational_at(const std::string& text, const std::string& where);

struct LoadedBallean {
  GradedBallean ballean;
  GradedBallean::Normalization normalization;
};

// Accepts {"points", "levels"[, "raw"]}, {"metric": {"points", "rows"}},
// or {"preset", "size"}.
LoadedBallean load_ballean(const nlohmann::json& j);

// Flat object mapping point ids to rational strings.
FreeVector load_vector(const nlohmann::json& j, const Ground& ground);

// {"terms": [[x, y, rational], ...], "zCoeff": rational,
//  "params": {"n", "level", "power", "z"}}.  Structural checks only;
// semantic validity is the verifier's business.
Decomposition load_decomposition(const nlohmann::json& j);

// Flat object mapping source ids to target ids.
PointMap load_point_map(const nlohmann::json& j, const Ground& source,
                        const Ground& target);

// {"finite": [[...], ...]} | {"halfspace": {"normal", "offset"}} |
// {"parity": {"remainder"[, "min"]}}.
SubsetSpec load_subset(const nlohmann::json& j, std::uint32_t dim);

// {"dim", "window"}.
WindowBallean load_lattice(const nlohmann::json& j);

// Serializes a presentation back into the {"points", "levels"} shape
// load_ballean accepts.
nlohmann::json ballean_to_json(const GradedBallean& b);

nlohmann::json vector_to_json(const FreeVector& v);
nlohmann::json decomposition_to_json(const Decomposition& d);
nlohmann::json subset_to_json(const SubsetSpec& s);
nlohmann::json verdict_to_json(const Verdict& v);

}  // namespace vball
