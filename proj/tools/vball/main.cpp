#include "vball/ballean.hpp"
#include "vball/closure.hpp"
#include "vball/coarse_map.hpp"
#include "vball/decomposition.hpp"
#include "vball/free_vector.hpp"
#include "vball/io.hpp"
#include "vball/lattice.hpp"
#include "vball/linear_map.hpp"
#include "vball/membership.hpp"
#include "vball/metric.hpp"
#include "vball/metrization.hpp"
#include "vball/presets.hpp"
#include "vball/probe.hpp"
#include "vball/reduction.hpp"
#include "vball/splitting.hpp"
#include "vball/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace vball;

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitInput = 2;

json base_report(const std::string& command) {
  return json{{"version", kVersion}, {"command", command}};
}

int emit(const json& report, const std::string& output, const std::string& summary,
         int code) {
  const std::string text = report.dump(2) + "\n";
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) throw ParseError(output, "cannot write output file");
    out << text;
    std::cout << summary << "\n";
  }
  return code;
}

json entourage_json(EffectiveEntourage e) {
  return json{{"level", e.level}, {"power", e.power}};
}

json params_json(const IdealBaseParams& p) {
  return json{{"n", p.n},
              {"level", p.entourage.level},
              {"power", p.entourage.power},
              {"z", p.z}};
}

json modulus_json(const ModulusWitness& w) {
  json table = json::array();
  for (const auto& [source, target] : w.table) {
    table.push_back(json{{"source", entourage_json(source)},
                         {"target", entourage_json(target)}});
  }
  return table;
}

json coarse_json(const CoarseCheckResult& r) {
  json out{{"ok", r.ok()}};
  if (r.witness) out["modulus"] = modulus_json(*r.witness);
  if (r.counterexample) {
    out["counterexample"] = json{{"point", r.counterexample->point},
                                 {"sourceLevel", r.counterexample->source_level}};
  }
  return out;
}

json normalization_json(const GradedBallean::Normalization& n) {
  return json{{"symmetrized", n.symmetrized},
              {"diagonalCompleted", n.diagonal_completed}};
}

LoadedBallean load_ballean_file(const std::string& path) {
  return load_ballean(read_json_file(path));
}

bool is_lattice_file(const json& j) {
  return j.is_object() && j.contains("dim") && j.contains("window");
}

void require_points_known(const Ground& g, const std::vector<std::string>& points) {
  for (const std::string& p : points) {
    if (!g.contains(p)) throw std::invalid_argument("unknown point '" + p + "'");
  }
}

Decomposition load_decomposition_file(const std::string& path) {
  json j = read_json_file(path);
  if (j.is_object() && j.contains("certificate") && j.at("certificate").is_object()) {
    j = j.at("certificate");
  } else if (j.is_object() && j.contains("reduced") && j.at("reduced").is_object()) {
    j = j.at("reduced");
  }
  return load_decomposition(j);
}

BoxLinearMap load_box_images(const json& j, const Ground& g, std::uint32_t dim) {
  if (!j.is_object()) throw ParseError("$", "expected an object of image vectors");
  std::map<PointId, StandardVector> images;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string where = "$." + it.key();
    if (!it.value().is_array() || it.value().size() != dim) {
      throw ParseError(where, "expected an array of " + std::to_string(dim) +
                                  " coordinates");
    }
    std::vector<Rational> coords;
    for (std::size_t k = 0; k < it.value().size(); ++k) {
      const std::string cell = where + "[" + std::to_string(k) + "]";
      const json& c = it.value()[k];
      if (!c.is_string()) throw ParseError(cell, "expected a rational string");
      coords.push_back(parse_rational_at(c.get<std::string>(), cell));
    }
    images.emplace(it.key(), StandardVector(std::move(coords)));
  }
  return BoxLinearMap(g, images);
}

FreeLinearMap load_free_images(const json& j, const Ground& source, const Ground& target) {
  if (!j.is_object()) throw ParseError("$", "expected an object of image vectors");
  std::map<PointId, FreeVector> images;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!it.value().is_object()) {
      throw ParseError("$." + it.key(), "expected a vector object");
    }
    images.emplace(it.key(), load_vector(it.value(), target));
  }
  return FreeLinearMap(source, images);
}

struct LatticeInputs {
  WindowBallean lattice;
  std::uint32_t lo = 1;
  std::uint32_t hi = 1;
};

LatticeInputs load_lattice_inputs(const std::string& path, std::uint32_t lo,
                                  std::uint32_t hi) {
  WindowBallean lattice = load_lattice(read_json_file(path));
  if (hi == 0) hi = std::min<std::uint32_t>(10, lattice.max_radius());
  return LatticeInputs{lattice, lo, hi};
}

json verdict_report(const std::string& command, const Verdict& v) {
  json report = base_report(command);
  report["window"] = v.window;
  report["verdict"] = verdict_to_json(v);
  return report;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"free vector ideals over finitely presented coarse spaces"};
  app.require_subcommand(1);
  int exit_code = kExitHolds;

  std::string output;
  app.add_option("-o,--output", output, "write the full report here, summary to stdout");

  // check-axioms
  struct {
    std::string ballean;
  } ax;
  auto* sc_axioms = app.add_subcommand("check-axioms", "validate a presentation's scale");
  sc_axioms->add_option("ballean", ax.ballean, "presentation file")->required();
  sc_axioms->callback([&] {
    const LoadedBallean loaded = load_ballean_file(ax.ballean);
    const AxiomReport r = check_axioms(loaded.ballean);
    json report = base_report("check-axioms");
    report["ok"] = r.ok();
    report["normalization"] = normalization_json(loaded.normalization);
    json violations = json::array();
    for (const AxiomViolation& v : r.violations) {
      json entry{{"axiom", to_string(v.axiom)}, {"level", v.level}};
      if (v.witness) entry["witness"] = json::array({v.witness->first, v.witness->second});
      violations.push_back(std::move(entry));
    }
    report["violations"] = std::move(violations);
    exit_code = emit(report, output, r.ok() ? "ok" : "violations found",
                     r.ok() ? kExitHolds : kExitFails);
  });

  // ball
  struct {
    std::string ballean;
    std::string point;
    std::uint32_t level = 1;
    std::uint32_t power = 1;
  } bl;
  auto* sc_ball = app.add_subcommand("ball", "list a ball around a point");
  sc_ball->add_option("ballean", bl.ballean)->required();
  sc_ball->add_option("--point", bl.point, "center")->required();
  sc_ball->add_option("--level", bl.level, "scale level");
  sc_ball->add_option("--power", bl.power, "composition power");
  sc_ball->callback([&] {
    const LoadedBallean loaded = load_ballean_file(bl.ballean);
    require_points_known(loaded.ballean.ground(), {bl.point});
    const auto members =
        ball(loaded.ballean, bl.point, EffectiveEntourage{bl.level, bl.power});
    json report = base_report("ball");
    report["center"] = bl.point;
    report["level"] = bl.level;
    report["power"] = bl.power;
    report["ball"] = members;
    exit_code = emit(report, output, "ok", kExitHolds);
  });

  // bounded
  struct {
    std::string ballean;
    std::vector<std::string> points;
  } bd;
  auto* sc_bounded = app.add_subcommand("bounded", "test a point set for boundedness");
  sc_bounded->add_option("ballean", bd.ballean)->required();
  sc_bounded->add_option("--point", bd.points, "set member (repeatable)");
  sc_bounded->callback([&] {
    const LoadedBallean loaded = load_ballean_file(bd.ballean);
    require_points_known(loaded.ballean.ground(), bd.points);
    const std::set<PointId> set(bd.points.begin(), bd.points.end());
    const auto witness = is_bounded(loaded.ballean, set);
    json report = base_report("bounded");
    report["bounded"] = witness.has_value();
    if (witness) {
      report["witness"] = json{{"center", witness->center},
                               {"entourage", entourage_json(witness->entourage)}};
    }
    exit_code = emit(report, output, witness ? "bounded" : "not bounded",
                     witness ? kExitHolds : kExitFails);
  });

  // restrict
  struct {
    std::string ballean;
    std::vector<std::string> points;
  } rs;
  auto* sc_restrict = app.add_subcommand("restrict", "subpresentation on a point set");
  sc_restrict->add_option("ballean", rs.ballean)->required();
  sc_restrict->add_option("--point", rs.points, "kept point (repeatable)")->required();
  sc_restrict->callback([&] {
    const LoadedBallean loaded = load_ballean_file(rs.ballean);
    const std::set<PointId> set(rs.points.begin(), rs.points.end());
    const GradedBallean sub = restrict(loaded.ballean, set);
    json report = base_report("restrict");
    report["presentation"] = ballean_to_json(sub);
    exit_code = emit(report, output, "ok", kExitHolds);
  });

  // product
  struct {
    std::string left;
    std::string right;
  } pr;
  auto* sc_product = app.add_subcommand("product", "product of two presentations");
  sc_product->add_option("left", pr.left)->required();
  sc_product->add_option("right", pr.right)->required();
  sc_product->callback([&] {
    const LoadedBallean a = load_ballean_file(pr.left);
    const LoadedBallean b = load_ballean_file(pr.right);
    const GradedBallean prod = product(a.ballean, b.ballean);
    json report = base_report("product");
    report["presentation"] = ballean_to_json(prod);
    exit_code = emit(report, output, "ok", kExitHolds);
  });

  // coarse-map
  struct {
    std::string source;
    std::string target;
    std::string map;
  } cm;
  auto* sc_coarse = app.add_subcommand("coarse-map", "find a coarseness modulus");
  sc_coarse->add_option("source", cm.source)->required();
  sc_coarse->add_option("target", cm.target)->required();
  sc_coarse->add_option("map", cm.map, "point map file")->required();
  sc_coarse->callback([&] {
    const LoadedBallean a = load_ballean_file(cm.source);
    const LoadedBallean b = load_ballean_file(cm.target);
    const PointMap f =
        load_point_map(read_json_file(cm.map), a.ballean.ground(), b.ballean.ground());
    const CoarseCheckResult r = check_coarse_map(f, a.ballean, b.ballean);
    json report = base_report("coarse-map");
    report.update(coarse_json(r));
    exit_code = emit(report, output, r.ok() ? "coarse" : "not coarse",
                     r.ok() ? kExitHolds : kExitFails);
  });

  // asymorphism
  struct {
    std::string source;
    std::string target;
    std::string map;
  } am;
  auto* sc_asym = app.add_subcommand("asymorphism", "check a bijection both ways");
  sc_asym->add_option("source", am.source)->required();
  sc_asym->add_option("target", am.target)->required();
  sc_asym->add_option("map", am.map)->required();
  sc_asym->callback([&] {
    const LoadedBallean a = load_ballean_file(am.source);
    const LoadedBallean b = load_ballean_file(am.target);
    const PointMap f =
        load_point_map(read_json_file(am.map), a.ballean.ground(), b.ballean.ground());
    json report = base_report("asymorphism");
    if (!f.is_bijection()) {
      report["ok"] = false;
      report["reason"] = "the point map is not a bijection";
      exit_code = emit(report, output, "not an asymorphism", kExitFails);
      return;
    }
    const AsymorphismResult r = check_asymorphism(f, a.ballean, b.ballean);
    report["ok"] = r.ok();
    report["forward"] = coarse_json(r.forward);
    report["backward"] = coarse_json(r.backward);
    exit_code = emit(report, output, r.ok() ? "asymorphism" : "not an asymorphism",
                     r.ok() ? kExitHolds : kExitFails);
  });

  // metrize
  struct {
    std::string ballean;
    std::uint32_t samples = 30;
    std::uint64_t seed = kDefaultSeed;
  } mz;
  auto* sc_metrize = app.add_subcommand("metrize", "realize the scale as a metric");
  sc_metrize->add_option("ballean", mz.ballean, "presentation or lattice file")->required();
  sc_metrize->add_option("--samples", mz.samples);
  sc_metrize->add_option("--seed", mz.seed);
  sc_metrize->callback([&] {
    const json j = read_json_file(mz.ballean);
    json report = base_report("metrize");
    report["seed"] = mz.seed;
    GradedBallean presentation = [&] {
      if (is_lattice_file(j)) {
        const WindowBallean lattice = load_lattice(j);
        report["slice"] = json{{"dim", lattice.dim()}, {"window", lattice.window()}};
        return lattice_slice(lattice, 2 * lattice.window() + 1);
      }
      return load_ballean(j).ballean;
    }();
    const MetrizabilityReport r = metrizability_check(presentation, mz.seed, mz.samples);
    report["metrizable"] = r.metrizable;
    report["notes"] = r.notes;
    if (r.realization) {
      report["realization"] = json{{"ok", r.realization->ok()},
                                   {"forward", coarse_json(r.realization->forward)},
                                   {"backward", coarse_json(r.realization->backward)}};
    }
    if (r.metric) {
      json rows = json::array();
      const Ground& g = presentation.ground();
      for (std::size_t i = 0; i < g.size(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < g.size(); ++k) {
          row.push_back(format_rational(
              r.metric->distance(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(k))));
        }
        rows.push_back(std::move(row));
      }
      report["metric"] = json{{"points", g.points()}, {"rows", std::move(rows)}};
    }
    json chain = json::array();
    for (const ChainSample& s : r.chain) {
      json entry{{"sampled", params_json(s.sampled)}};
      if (s.containing) entry["containing"] = params_json(*s.containing);
      chain.push_back(std::move(entry));
    }
    report["chain"] = std::move(chain);
    report["chainFailures"] = r.chain_failures;
    report["ok"] = r.ok();
    exit_code = emit(report, output, r.ok() ? "metrizable" : "check failed",
                     r.ok() ? kExitHolds : kExitFails);
  });

  // membership
  struct {
    std::string ballean;
    std::string vector;
    std::uint32_t n = 1;
    std::uint32_t level = 1;
    std::uint32_t power = 1;
    std::string z;
    bool prune = false;
  } mb;
  auto* sc_member = app.add_subcommand("membership", "decide base-set membership");
  sc_member->add_option("ballean", mb.ballean)->required();
  sc_member->add_option("vector", mb.vector, "vector file")->required();
  sc_member->add_option("--n", mb.n, "copy count");
  sc_member->add_option("--level", mb.level);
  sc_member->add_option("--power", mb.power);
  sc_member->add_option("--z", mb.z, "anchor point (default: least point)");
  sc_member->add_flag("--prune", mb.prune, "try support-restricted pairs first");
  sc_member->callback([&] {
    const LoadedBallean loaded = load_ballean_file(mb.ballean);
    const FreeVector v = load_vector(read_json_file(mb.vector), loaded.ballean.ground());
    IdealBaseParams params;
    params.n = mb.n;
    params.entourage = EffectiveEntourage{mb.level, mb.power};
    params.z = mb.z.empty() ? loaded.ballean.ground().at(0) : mb.z;
    const MembershipResult r =
        ideal_membership(loaded.ballean, v, params, MembershipOptions{mb.prune});
    json report = base_report("membership");
    report["params"] = params_json(params);
    report["vector"] = vector_to_json(v);
    report["member"] = r.member();
    report["stats"] = json{{"multisetsTried", r.stats.multisets_tried},
                           {"systemsSolved", r.stats.systems_solved}};
    if (r.certificate) report["certificate"] = decomposition_to_json(*r.certificate);
    exit_code = emit(report, output, r.member() ? "member" : "no certificate",
                     r.member() ? kExitHolds : kExitFails);
  });

  // verify
  struct {
    std::string ballean;
    std::string cert;
  } vf;
  auto* sc_verify = app.add_subcommand("verify", "re-check a certificate");
  sc_verify->add_option("ballean", vf.ballean)->required();
  sc_verify->add_option("certificate", vf.cert, "certificate or report file")->required();
  sc_verify->callback([&] {
    const LoadedBallean loaded = load_ballean_file(vf.ballean);
    const Decomposition d = load_decomposition_file(vf.cert);
    const VerifyReport r = verify_decomposition_detailed(loaded.ballean, d);
    json report = base_report("verify");
    report["ok"] = r.ok();
    report["issues"] = r.issues;
    report["value"] = vector_to_json(evaluate(d));
    exit_code =
        emit(report, output, r.ok() ? "ok" : "invalid", r.ok() ? kExitHolds : kExitFails);
  });

  // reduce
  struct {
    std::string ballean;
    std::string cert;
    std::vector<std::string> target;
  } rd;
  auto* sc_reduce = app.add_subcommand("reduce", "eliminate points outside a target set");
  sc_reduce->add_option("ballean", rd.ballean)->required();
  sc_reduce->add_option("certificate", rd.cert)->required();
  sc_reduce->add_option("--target", rd.target, "kept point (repeatable)")->required();
  sc_reduce->callback([&] {
    const LoadedBallean loaded = load_ballean_file(rd.ballean);
    require_points_known(loaded.ballean.ground(), rd.target);
    const Decomposition d = load_decomposition_file(rd.cert);
    const std::set<PointId> target(rd.target.begin(), rd.target.end());
    const ReductionResult r = reduce_to_support(loaded.ballean, d, target);
    json report = base_report("reduce");
    report["reduced"] = decomposition_to_json(r.reduced);
    report["achievedPower"] = r.achieved_power;
    report["eliminations"] = r.eliminations;
    report["value"] = vector_to_json(evaluate(r.reduced));
    exit_code = emit(report, output, "reduced", kExitHolds);
  });

  // restriction-check
  struct {
    std::string ballean;
    std::string x;
    std::string y;
    std::uint32_t n = 1;
    std::uint32_t level = 1;
    std::uint32_t power = 1;
    std::string z;
  } rc;
  auto* sc_rcheck = app.add_subcommand("restriction-check",
                                       "both directions of base restriction for a pair");
  sc_rcheck->add_option("ballean", rc.ballean)->required();
  sc_rcheck->add_option("--x", rc.x)->required();
  sc_rcheck->add_option("--y", rc.y)->required();
  sc_rcheck->add_option("--n", rc.n);
  sc_rcheck->add_option("--level", rc.level);
  sc_rcheck->add_option("--power", rc.power);
  sc_rcheck->add_option("--z", rc.z, "anchor (default: least point)");
  sc_rcheck->callback([&] {
    const LoadedBallean loaded = load_ballean_file(rc.ballean);
    const RestrictionVerdict r =
        restriction_check(loaded.ballean, rc.x, rc.y, rc.n,
                          EffectiveEntourage{rc.level, rc.power}, rc.z);
    json report = base_report("restriction-check");
    report["ok"] = r.ok();
    report["inEntourage"] = r.in_entourage;
    report["forwardOk"] = r.forward_ok;
    report["member"] = r.member;
    report["anchorCoeffZero"] = r.anchor_coeff_zero;
    report["reductionStayedInside"] = r.reduction_stayed_inside;
    report["powerWithinN"] = r.power_within_n;
    report["pairInPower"] = r.pair_in_power;
    report["achievedPower"] = r.achieved_power;
    exit_code = emit(report, output, r.ok() ? "holds" : "fails",
                     r.ok() ? kExitHolds : kExitFails);
  });

  // ideal-probe
  struct {
    std::string ballean;
    std::uint32_t samples = 50;
    std::uint32_t max_n = 2;
    std::uint64_t seed = kDefaultSeed;
  } ip;
  auto* sc_probe = app.add_subcommand("ideal-probe", "sample the ideal laws");
  sc_probe->add_option("ballean", ip.ballean)->required();
  sc_probe->add_option("--samples", ip.samples);
  sc_probe->add_option("--max-n", ip.max_n);
  sc_probe->add_option("--seed", ip.seed);
  sc_probe->callback([&] {
    const LoadedBallean loaded = load_ballean_file(ip.ballean);
    ProbeConfig config;
    config.seed = ip.seed;
    config.samples = ip.samples;
    config.max_n = ip.max_n;
    const ProbeReport r = ideal_axiom_probe(loaded.ballean, config);
    json report = base_report("ideal-probe");
    report["seed"] = ip.seed;
    report["ok"] = r.ok();
    json checks = json::array();
    for (const ProbeCheck& c : r.checks) {
      checks.push_back(json{{"law", c.law},
                            {"checked", c.checked},
                            {"failures", c.failures},
                            {"details", c.details}});
    }
    report["checks"] = std::move(checks);
    exit_code = emit(report, output, r.ok() ? "holds" : "fails",
                     r.ok() ? kExitHolds : kExitFails);
  });

  // extend
  struct {
    std::string source;
    std::string target;
    std::string map;
    std::uint32_t max_n = 2;
    std::uint32_t max_power = 1;
    std::uint32_t max_level = 0;
    std::uint32_t samples = 20;
    std::uint64_t seed = kDefaultSeed;
  } ex;
  auto* sc_extend =
      app.add_subcommand("extend", "containment table for the linear extension");
  sc_extend->add_option("source", ex.source)->required();
  sc_extend->add_option("target", ex.target)->required();
  sc_extend->add_option("map", ex.map)->required();
  sc_extend->add_option("--max-n", ex.max_n);
  sc_extend->add_option("--max-power", ex.max_power);
  sc_extend->add_option("--max-level", ex.max_level, "0 means all levels");
  sc_extend->add_option("--samples", ex.samples, "samples per table entry");
  sc_extend->add_option("--seed", ex.seed);
  sc_extend->callback([&] {
    const LoadedBallean a = load_ballean_file(ex.source);
    const LoadedBallean b = load_ballean_file(ex.target);
    const PointMap f =
        load_point_map(read_json_file(ex.map), a.ballean.ground(), b.ballean.ground());
    json report = base_report("extend");
    report["seed"] = ex.seed;
    const CoarseCheckResult coarse = check_coarse_map(f, a.ballean, b.ballean);
    if (!coarse.ok()) {
      report["ok"] = false;
      report["coarse"] = coarse_json(coarse);
      exit_code = emit(report, output, "not coarse", kExitFails);
      return;
    }
    const ParamRange range{ex.max_n, ex.max_power, ex.max_level};
    const ExtensionCertificate r =
        extension_certificate(f, a.ballean, b.ballean, range, ex.seed, ex.samples);
    report["modulus"] = modulus_json(*coarse.witness);
    json table = json::array();
    for (const ExtensionEntry& entry : r.table) {
      table.push_back(json{{"source", params_json(entry.source)},
                           {"target", params_json(entry.target)}});
    }
    report["table"] = std::move(table);
    report["validatedSamples"] = r.validated_samples;
    report["failures"] = r.failures;
    report["ok"] = r.ok();
    exit_code = emit(report, output, r.ok() ? "extends" : "validation failed",
                     r.ok() ? kExitHolds : kExitFails);
  });

  // linear-coarse
  struct {
    std::string ballean;
    std::string images;
    std::string target;  // "box" or "free"
    std::string target_ballean;
    std::uint32_t box_dim = 1;
    std::string anchor;
    std::uint32_t max_n = 2;
    std::uint32_t max_power = 1;
    std::uint32_t max_level = 0;
    std::uint32_t samples = 20;
    std::uint64_t seed = kDefaultSeed;
  } lc;
  auto* sc_linear =
      app.add_subcommand("linear-coarse", "coarseness of a linear map on basis images");
  sc_linear->add_option("ballean", lc.ballean)->required();
  sc_linear->add_option("images", lc.images, "basis image file")->required();
  sc_linear->add_option("--target", lc.target, "box or free")->required();
  sc_linear->add_option("--target-ballean", lc.target_ballean, "free target presentation");
  sc_linear->add_option("--box-dim", lc.box_dim, "box target dimension");
  sc_linear->add_option("--anchor", lc.anchor, "free target anchor (default: least)");
  sc_linear->add_option("--max-n", lc.max_n);
  sc_linear->add_option("--max-power", lc.max_power);
  sc_linear->add_option("--max-level", lc.max_level);
  sc_linear->add_option("--samples", lc.samples);
  sc_linear->add_option("--seed", lc.seed);
  sc_linear->callback([&] {
    const LoadedBallean a = load_ballean_file(lc.ballean);
    const ParamRange range{lc.max_n, lc.max_power, lc.max_level};
    json report = base_report("linear-coarse");
    report["seed"] = lc.seed;
    if (lc.target == "box") {
      const BoxLinearMap h =
          load_box_images(read_json_file(lc.images), a.ballean.ground(), lc.box_dim);
      const BoxCoarseResult r =
          check_linear_coarse(h, a.ballean, range, lc.seed, lc.samples);
      report["mode"] = "arithmetic";
      json table = json::array();
      for (const BoxCoarseEntry& entry : r.table) {
        table.push_back(json{{"source", params_json(entry.source)},
                             {"boxIndex", entry.box_index}});
      }
      report["table"] = std::move(table);
      report["sampledChecks"] = r.sampled_checks;
      report["failures"] = r.failures;
      report["ok"] = r.ok();
      exit_code = emit(report, output, r.ok() ? "coarse" : "failed",
                       r.ok() ? kExitHolds : kExitFails);
      return;
    }
    if (lc.target != "free") {
      throw std::invalid_argument("--target must be 'box' or 'free'");
    }
    if (lc.target_ballean.empty()) {
      throw std::invalid_argument("--target-ballean is required for a free target");
    }
    const LoadedBallean b = load_ballean_file(lc.target_ballean);
    const FreeLinearMap h =
        load_free_images(read_json_file(lc.images), a.ballean.ground(), b.ballean.ground());
    const PointId anchor = lc.anchor.empty() ? b.ballean.ground().at(0) : lc.anchor;
    require_points_known(b.ballean.ground(), {anchor});
    const FreeCoarseResult r = check_linear_coarse(h, a.ballean, b.ballean, anchor, range,
                                                   lc.seed, lc.samples);
    report["mode"] = "sampled";
    json table = json::array();
    for (const FreeCoarseEntry& entry : r.table) {
      table.push_back(json{{"source", params_json(entry.source)},
                           {"target", params_json(entry.target)}});
    }
    report["table"] = std::move(table);
    report["sampledChecks"] = r.sampled_checks;
    if (r.escaping_sample) report["escapingSample"] = *r.escaping_sample;
    report["ok"] = r.ok();
    exit_code = emit(report, output, r.ok() ? "coarse on samples" : "sample escaped",
                     r.ok() ? kExitHolds : kExitFails);
  });

  // closure
  struct {
    std::string ballean;
    std::uint32_t depth = 2;
    std::string anchor;
    std::uint32_t samples = 10;
    std::uint64_t seed = kDefaultSeed;
  } cl;
  auto* sc_closure =
      app.add_subcommand("closure", "close the difference-set seeds and compare bases");
  sc_closure->add_option("ballean", cl.ballean)->required();
  sc_closure->add_option("--depth", cl.depth, "generations (at most 4)");
  sc_closure->add_option("--anchor", cl.anchor, "anchor point (default: least)");
  sc_closure->add_option("--samples", cl.samples, "samples per containment");
  sc_closure->add_option("--seed", cl.seed);
  sc_closure->callback([&] {
    const LoadedBallean loaded = load_ballean_file(cl.ballean);
    const PointId anchor =
        cl.anchor.empty() ? loaded.ballean.ground().at(0) : cl.anchor;
    const ClosureReport r =
        generated_ideal_closure(loaded.ballean, cl.depth, anchor, cl.seed, cl.samples);
    json report = base_report("closure");
    report["seed"] = cl.seed;
    report["anchor"] = r.anchor;
    report["depth"] = r.depth;
    json family = json::array();
    for (std::size_t i = 0; i < r.family.size(); ++i) {
      const ClosureDescriptor& d = r.family[i];
      family.push_back(json{{"copies", d.copies},
                            {"bound", format_rational(d.bound)},
                            {"level", d.e.level},
                            {"power", d.e.power},
                            {"anchorBound", format_rational(d.z_bound)},
                            {"generation", d.generation},
                            {"coveringBase", params_json(r.covering_base[i])}});
    }
    report["family"] = std::move(family);
    json covers = json::array();
    for (const BaseCover& c : r.base_covers) {
      json entry{{"base", params_json(c.base)}};
      if (c.descriptor) entry["descriptor"] = *c.descriptor;
      covers.push_back(std::move(entry));
    }
    report["baseCovers"] = std::move(covers);
    report["sampledChecks"] = r.sampled_checks;
    report["failures"] = r.failures;
    report["mutuallyCofinal"] = r.mutually_cofinal();
    exit_code = emit(report, output,
                     r.mutually_cofinal() ? "mutually cofinal" : "gap found",
                     r.mutually_cofinal() ? kExitHolds : kExitFails);
  });

  // asym-nbhd
  struct {
    std::string lattice;
    std::string set;
    std::string nbhd;
    std::uint32_t lo = 1;
    std::uint32_t hi = 0;
  } an;
  auto* sc_nbhd = app.add_subcommand("asym-nbhd", "is the hull an asymptotic neighborhood");
  sc_nbhd->add_option("lattice", an.lattice, "lattice config file")->required();
  sc_nbhd->add_option("set", an.set, "subset file")->required();
  sc_nbhd->add_option("neighborhood", an.nbhd, "subset file")->required();
  sc_nbhd->add_option("--radius-lo", an.lo);
  sc_nbhd->add_option("--radius-hi", an.hi, "0 means automatic");
  sc_nbhd->callback([&] {
    const LatticeInputs in = load_lattice_inputs(an.lattice, an.lo, an.hi);
    const SubsetSpec set = load_subset(read_json_file(an.set), in.lattice.dim());
    const SubsetSpec nbhd = load_subset(read_json_file(an.nbhd), in.lattice.dim());
    const Verdict v = asymptotic_neighborhood(set, nbhd, in.lattice, in.lo, in.hi);
    json report = verdict_report("asym-nbhd", v);
    exit_code = emit(report, output, verdict_status_name(v.status),
                     v.ok() ? kExitHolds : kExitFails);
  });

  // asym-disjoint
  struct {
    std::string lattice;
    std::string left;
    std::string right;
    std::uint32_t lo = 1;
    std::uint32_t hi = 0;
  } ad;
  auto* sc_disjoint = app.add_subcommand("asym-disjoint", "bounded dilation overlap");
  sc_disjoint->add_option("lattice", ad.lattice)->required();
  sc_disjoint->add_option("left", ad.left)->required();
  sc_disjoint->add_option("right", ad.right)->required();
  sc_disjoint->add_option("--radius-lo", ad.lo);
  sc_disjoint->add_option("--radius-hi", ad.hi, "0 means automatic");
  sc_disjoint->callback([&] {
    const LatticeInputs in = load_lattice_inputs(ad.lattice, ad.lo, ad.hi);
    const SubsetSpec left = load_subset(read_json_file(ad.left), in.lattice.dim());
    const SubsetSpec right = load_subset(read_json_file(ad.right), in.lattice.dim());
    const Verdict v = asymptotically_disjoint(left, right, in.lattice, in.lo, in.hi);
    json report = verdict_report("asym-disjoint", v);
    exit_code = emit(report, output, verdict_status_name(v.status),
                     v.ok() ? kExitHolds : kExitFails);
  });

  // separator
  struct {
    std::string lattice;
    std::string left;
    std::string right;
    std::uint32_t lo = 1;
    std::uint32_t hi = 0;
  } sp;
  auto* sc_separator =
      app.add_subcommand("separator", "construct disjoint asymptotic neighborhoods");
  sc_separator->add_option("lattice", sp.lattice)->required();
  sc_separator->add_option("left", sp.left)->required();
  sc_separator->add_option("right", sp.right)->required();
  sc_separator->add_option("--radius-lo", sp.lo);
  sc_separator->add_option("--radius-hi", sp.hi, "0 means automatic");
  sc_separator->callback([&] {
    const LatticeInputs in = load_lattice_inputs(sp.lattice, sp.lo, sp.hi);
    const SubsetSpec left = load_subset(read_json_file(sp.left), in.lattice.dim());
    const SubsetSpec right = load_subset(read_json_file(sp.right), in.lattice.dim());
    const SeparatorResult r = metric_separator(left, right, in.lattice, in.lo, in.hi);
    json report = base_report("separator");
    report["window"] = in.lattice.window();
    report["found"] = r.found;
    report["disjointness"] = verdict_to_json(r.disjointness);
    if (r.left_side) report["left"] = subset_to_json(*r.left_side);
    if (r.right_side) report["right"] = subset_to_json(*r.right_side);
    if (r.left_check) report["leftCheck"] = verdict_to_json(*r.left_check);
    if (r.right_check) report["rightCheck"] = verdict_to_json(*r.right_check);
    report["pointDisjoint"] = r.point_disjoint;
    report["ok"] = r.ok();
    exit_code = emit(report, output, r.ok() ? "separated" : "no separator",
                     r.ok() ? kExitHolds : kExitFails);
  });

  // split
  struct {
    std::string ballean;
    std::string axis;
    std::string vector_file;
    std::uint32_t round_trips = 200;
    std::uint32_t cert_samples = 50;
    std::uint64_t seed = kDefaultSeed;
  } st;
  auto* sc_split = app.add_subcommand("split", "peel one coordinate off the free space");
  sc_split->add_option("ballean", st.ballean)->required();
  sc_split->add_option("--axis", st.axis, "split point")->required();
  sc_split->add_option("--vector", st.vector_file, "also split this vector");
  sc_split->add_option("--round-trips", st.round_trips);
  sc_split->add_option("--cert-samples", st.cert_samples);
  sc_split->add_option("--seed", st.seed);
  sc_split->callback([&] {
    const LoadedBallean loaded = load_ballean_file(st.ballean);
    const SplitValidation r =
        validate_split(loaded.ballean, st.axis, st.seed, st.round_trips, st.cert_samples);
    json report = base_report("split");
    report["seed"] = st.seed;
    report["axis"] = r.axis;
    report["restAnchor"] = r.rest_anchor;
    report["roundTrips"] = r.round_trips;
    report["roundTripFailures"] = r.round_trip_failures;
    report["forwardSamples"] = r.forward_samples;
    report["forwardFailures"] = r.forward_failures;
    report["backwardSamples"] = r.backward_samples;
    report["backwardFailures"] = r.backward_failures;
    report["issues"] = r.issues;
    report["ok"] = r.ok();
    if (!st.vector_file.empty()) {
      const FreeVector v =
          load_vector(read_json_file(st.vector_file), loaded.ballean.ground());
      const auto [coeff, rest] = split_forward(v, st.axis);
      report["forward"] = json{{"axisCoeff", format_rational(coeff)},
                               {"rest", vector_to_json(rest)}};
    }
    exit_code = emit(report, output, r.ok() ? "splits" : "validation failed",
                     r.ok() ? kExitHolds : kExitFails);
  });

  // bornology
  struct {
    std::string ballean;
  } bo;
  auto* sc_bornology = app.add_subcommand("bornology", "cofinal base of bounded sets");
  sc_bornology->add_option("ballean", bo.ballean, "presentation or lattice file")
      ->required();
  sc_bornology->callback([&] {
    const json j = read_json_file(bo.ballean);
    const BornologyReport r =
        is_lattice_file(j) ? bornology_cof(load_lattice(j))
                           : bornology_cof(load_ballean(j).ballean);
    json report = base_report("bornology");
    report["cofinality"] = r.cofinality;
    report["base"] = r.base;
    if (r.top_witness) {
      report["topWitness"] = json{{"center", r.top_witness->center},
                                  {"entourage", entourage_json(r.top_witness->entourage)}};
    }
    if (!r.chain_radii.empty()) report["chainRadii"] = r.chain_radii;
    report["notes"] = r.notes;
    report["ok"] = r.ok();
    exit_code = emit(report, output, r.ok() ? "ok" : "no base",
                     r.ok() ? kExitHolds : kExitFails);
  });

  for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; })) {
    sc->fallthrough(true);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return exit_code;
}
