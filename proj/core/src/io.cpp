#include "vball/io.hpp"

#include "vball/metric.hpp"
#include "vball/presets.hpp"

#include <fstream>
#include <utility>

namespace vball {

namespace {

using nlohmann::json;

void require_object(const json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError(where, "expected an object");
}

void require_array(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where, "expected an array");
}

const json& require_key(const json& j, const char* key, const std::string& where) {
  require_object(j, where);
  auto it = j.find(key);
  if (it == j.end()) {
    throw ParseError(where, std::string("missing key '") + key + "'");
  }
  return *it;
}

std::string get_string(const json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where, "expected a string");
  return j.get<std::string>();
}

std::uint32_t get_uint(const json& j, const std::string& where,
                       long long limit = 1000000) {
  if (!j.is_number_integer() && !j.is_number_unsigned()) {
    throw ParseError(where, "expected a nonnegative integer");
  }
  const long long v = j.get<long long>();
  if (v < 0 || v > limit) {
    throw ParseError(where, "integer out of range [0, " + std::to_string(limit) + "]");
  }
  return static_cast<std::uint32_t>(v);
}

long long get_int(const json& j, const std::string& where) {
  if (!j.is_number_integer() && !j.is_number_unsigned()) {
    throw ParseError(where, "expected an integer");
  }
  return j.get<long long>();
}

}  // namespace

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ":byte " + std::to_string(e.byte), e.what());
  }
}

Rational parse_rational_at(const std::string& text, const std::string& where) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(where, e.what());
  }
}

LoadedBallean load_ballean(const nlohmann::json& j) {
  require_object(j, "$");

  if (j.contains("preset")) {
    const std::string name = get_string(require_key(j, "preset", "$"), "$.preset");
    const std::uint32_t size = get_uint(require_key(j, "size", "$"), "$.size", 64);
    try {
      return LoadedBallean{preset_ballean(name, size), {}};
    } catch (const std::invalid_argument& e) {
      throw ParseError("$.preset", e.what());
    }
  }

  if (j.contains("metric")) {
    const json& m = require_key(j, "metric", "$");
    const json& pts = require_key(m, "points", "$.metric");
    require_array(pts, "$.metric.points");
    std::vector<PointId> ids;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      ids.push_back(get_string(pts[i], "$.metric.points[" + std::to_string(i) + "]"));
    }
    const json& rows = require_key(m, "rows", "$.metric");
    require_array(rows, "$.metric.rows");
    std::vector<std::vector<Rational>> table;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::string row_where = "$.metric.rows[" + std::to_string(i) + "]";
      require_array(rows[i], row_where);
      std::vector<Rational> row;
      for (std::size_t k = 0; k < rows[i].size(); ++k) {
        const std::string cell = row_where + "[" + std::to_string(k) + "]";
        row.push_back(parse_rational_at(get_string(rows[i][k], cell), cell));
      }
      table.push_back(std::move(row));
    }
    try {
      Ground ground(ids);
      FiniteMetric metric(ground, table);
      return LoadedBallean{metric_ballean(metric), {}};
    } catch (const std::invalid_argument& e) {
      throw ParseError("$.metric", e.what());
    }
  }

  const json& pts = require_key(j, "points", "$");
  require_array(pts, "$.points");
  std::vector<PointId> ids;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    ids.push_back(get_string(pts[i], "$.points[" + std::to_string(i) + "]"));
  }
  Ground ground = [&] {
    try {
      return Ground(ids);
    } catch (const std::invalid_argument& e) {
      throw ParseError("$.points", e.what());
    }
  }();

  const json& levels = require_key(j, "levels", "$");
  require_array(levels, "$.levels");
  if (levels.empty()) throw ParseError("$.levels", "need at least one level");
  std::vector<Relation> scale;
  for (std::size_t r = 0; r < levels.size(); ++r) {
    const std::string level_where = "$.levels[" + std::to_string(r) + "]";
    require_array(levels[r], level_where);
    std::vector<std::pair<PointId, PointId>> pairs;
    for (std::size_t k = 0; k < levels[r].size(); ++k) {
      const std::string pair_where = level_where + "[" + std::to_string(k) + "]";
      const json& entry = levels[r][k];
      if (!entry.is_array() || entry.size() != 2) {
        throw ParseError(pair_where, "expected a pair [x, y]");
      }
      pairs.emplace_back(get_string(entry[0], pair_where + "[0]"),
                         get_string(entry[1], pair_where + "[1]"));
    }
    try {
      scale.emplace_back(ground, pairs);
    } catch (const std::invalid_argument& e) {
      throw ParseError(level_where, e.what());
    }
  }

  bool raw = false;
  if (j.contains("raw")) {
    const json& flag = j.at("raw");
    if (!flag.is_boolean()) throw ParseError("$.raw", "expected a boolean");
    raw = flag.get<bool>();
  }
  if (raw) {
    return LoadedBallean{GradedBallean::raw(std::move(ground), std::move(scale)), {}};
  }
  auto [ballean, normalization] =
      GradedBallean::normalized(std::move(ground), std::move(scale));
  return LoadedBallean{std::move(ballean), normalization};
}

FreeVector load_vector(const nlohmann::json& j, const Ground& ground) {
  require_object(j, "$");
  FreeVector v;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string where = "$." + it.key();
    if (!ground.contains(it.key())) {
      throw ParseError(where, "unknown point '" + it.key() + "'");
    }
    const Rational c = parse_rational_at(get_string(it.value(), where), where);
    v += c * FreeVector::basis(it.key());
  }
  return v;
}

Decomposition load_decomposition(const nlohmann::json& j) {
  Decomposition d;
  const json& terms = require_key(j, "terms", "$");
  require_array(terms, "$.terms");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string where = "$.terms[" + std::to_string(i) + "]";
    const json& t = terms[i];
    if (!t.is_array() || t.size() != 3) {
      throw ParseError(where, "expected [x, y, coefficient]");
    }
    DiffTerm term;
    term.x = get_string(t[0], where + "[0]");
    term.y = get_string(t[1], where + "[1]");
    term.lambda = parse_rational_at(get_string(t[2], where + "[2]"), where + "[2]");
    d.terms.push_back(std::move(term));
  }
  const std::string z_text = get_string(require_key(j, "zCoeff", "$"), "$.zCoeff");
  d.z_coeff = parse_rational_at(z_text, "$.zCoeff");

  const json& params = require_key(j, "params", "$");
  d.params.n = get_uint(require_key(params, "n", "$.params"), "$.params.n");
  d.params.entourage.level =
      get_uint(require_key(params, "level", "$.params"), "$.params.level");
  d.params.entourage.power =
      get_uint(require_key(params, "power", "$.params"), "$.params.power");
  d.params.z = get_string(require_key(params, "z", "$.params"), "$.params.z");
  return d;
}

PointMap load_point_map(const nlohmann::json& j, const Ground& source,
                        const Ground& target) {
  require_object(j, "$");
  std::map<PointId, PointId> table;
  for (auto it = j.begin(); it != j.end(); ++it) {
    table[it.key()] = get_string(it.value(), "$." + it.key());
  }
  try {
    return PointMap(source, target, table);
  } catch (const std::invalid_argument& e) {
    throw ParseError("$", e.what());
  }
}

SubsetSpec load_subset(const nlohmann::json& j, std::uint32_t dim) {
  require_object(j, "$");
  try {
    if (j.contains("finite")) {
      const json& arr = j.at("finite");
      require_array(arr, "$.finite");
      std::vector<LatticePoint> points;
      for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string where = "$.finite[" + std::to_string(i) + "]";
        require_array(arr[i], where);
        LatticePoint p;
        for (std::size_t k = 0; k < arr[i].size(); ++k) {
          p.push_back(get_int(arr[i][k], where + "[" + std::to_string(k) + "]"));
        }
        points.push_back(std::move(p));
      }
      return SubsetSpec::finite(dim, std::move(points));
    }
    if (j.contains("halfspace")) {
      const json& h = j.at("halfspace");
      const json& normal = require_key(h, "normal", "$.halfspace");
      require_array(normal, "$.halfspace.normal");
      std::vector<long long> n;
      for (std::size_t i = 0; i < normal.size(); ++i) {
        n.push_back(get_int(normal[i], "$.halfspace.normal[" + std::to_string(i) + "]"));
      }
      const long long offset =
          get_int(require_key(h, "offset", "$.halfspace"), "$.halfspace.offset");
      if (n.size() != dim) {
        throw ParseError("$.halfspace.normal", "normal dimension mismatch");
      }
      return SubsetSpec::halfspace(std::move(n), offset);
    }
    if (j.contains("parity")) {
      const json& p = j.at("parity");
      const int remainder = static_cast<int>(
          get_uint(require_key(p, "remainder", "$.parity"), "$.parity.remainder", 1));
      std::optional<long long> min_sum;
      if (p.contains("min")) min_sum = get_int(p.at("min"), "$.parity.min");
      return SubsetSpec::parity(dim, remainder, min_sum);
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError("$", e.what());
  }
  throw ParseError("$", "expected one of 'finite', 'halfspace', 'parity'");
}

WindowBallean load_lattice(const nlohmann::json& j) {
  const std::uint32_t dim = get_uint(require_key(j, "dim", "$"), "$.dim", 8);
  const std::uint32_t window = get_uint(require_key(j, "window", "$"), "$.window", 100000);
  try {
    return WindowBallean(dim, window);
  } catch (const std::invalid_argument& e) {
    throw ParseError("$", e.what());
  }
}

nlohmann::json ballean_to_json(const GradedBallean& b) {
  json points = json::array();
  for (const PointId& p : b.ground().points()) points.push_back(p);
  json levels = json::array();
  for (const Relation& level : b.levels()) {
    json pairs = json::array();
    for (const auto& [x, y] : level.pairs_by_id()) {
      pairs.push_back(json::array({x, y}));
    }
    levels.push_back(std::move(pairs));
  }
  return json{{"points", std::move(points)}, {"levels", std::move(levels)}};
}

nlohmann::json vector_to_json(const FreeVector& v) {
  json out = json::object();
  for (const auto& [p, c] : v.coords()) out[p] = format_rational(c);
  return out;
}

nlohmann::json decomposition_to_json(const Decomposition& d) {
  json terms = json::array();
  for (const DiffTerm& t : d.terms) {
    terms.push_back(json::array({t.x, t.y, format_rational(t.lambda)}));
  }
  return json{{"terms", std::move(terms)},
              {"zCoeff", format_rational(d.z_coeff)},
              {"params",
               {{"n", d.params.n},
                {"level", d.params.entourage.level},
                {"power", d.params.entourage.power},
                {"z", d.params.z}}}};
}

nlohmann::json subset_to_json(const SubsetSpec& s) {
  switch (s.kind()) {
    case SubsetSpec::Kind::Finite: {
      json arr = json::array();
      for (const LatticePoint& p : s.points()) arr.push_back(p);
      return json{{"finite", std::move(arr)}};
    }
    case SubsetSpec::Kind::Halfspace:
      return json{{"halfspace", {{"normal", s.normal()}, {"offset", s.offset()}}}};
    case SubsetSpec::Kind::Parity: {
      json p = {{"remainder", s.remainder()}};
      if (s.min_sum()) p["min"] = *s.min_sum();
      return json{{"parity", std::move(p)}};
    }
  }
  return json::object();
}

nlohmann::json verdict_to_json(const Verdict& v) {
  json per = json::array();
  for (const RadiusFinding& f : v.per_radius) {
    json entry{{"radius", f.radius},
               {"count", f.count},
               {"reachesRim", f.reaches_rim}};
    if (f.extremal) {
      entry["extent"] = f.extent;
      entry["extremal"] = *f.extremal;
    }
    per.push_back(std::move(entry));
  }
  json out{{"status", verdict_status_name(v.status)},
           {"window", v.window},
           {"radiusLo", v.radius_lo},
           {"radiusHi", v.radius_hi},
           {"perRadius", std::move(per)},
           {"note",
            "a failing verdict stays valid at larger windows; a passing one is "
            "only claimed up to this window"}};
  if (v.failing_radius) out["failingRadius"] = *v.failing_radius;
  if (v.witness) out["witness"] = *v.witness;
  if (v.bounding_radius) out["boundingRadius"] = *v.bounding_radius;
  return out;
}

}  // namespace vball
