#include "vball/decomposition.hpp"

namespace vball {

FreeVector evaluate(const Decomposition& d) {
  FreeVector v;
  for (const DiffTerm& t : d.terms) {
    if (t.x == t.y) continue;
    v += t.lambda * difference(t.x, t.y);
  }
  if (d.z_coeff != 0) {
    v += d.z_coeff * FreeVector::basis(d.params.z);
  }
  return v;
}

VerifyReport verify_decomposition_detailed(const GradedBallean& b, const Decomposition& d) {
  VerifyReport report;
  const Ground& ground = b.ground();
  const Rational bound(static_cast<long>(d.params.n));

  if (d.params.n < 1) {
    report.issues.push_back("copy count n must be at least 1");
  }
  if (d.terms.size() > d.params.n) {
    report.issues.push_back("term count " + std::to_string(d.terms.size()) +
                            " exceeds n = " + std::to_string(d.params.n));
  }
  if (!ground.contains(d.params.z)) {
    report.issues.push_back("anchor point \"" + d.params.z + "\" is not in the ground set");
  }
  if (abs(d.z_coeff) > bound) {
    report.issues.push_back("anchor coefficient " + format_rational(d.z_coeff) +
                            " exceeds the bound " + format_rational(bound));
  }

  const bool level_ok =
      d.params.entourage.level >= 1 && d.params.entourage.level <= b.level_count();
  if (!level_ok) {
    report.issues.push_back("entourage level " + std::to_string(d.params.entourage.level) +
                            " is out of range");
  }
  if (d.params.entourage.power < 1) {
    report.issues.push_back("entourage power must be at least 1");
  }

  for (std::size_t i = 0; i < d.terms.size(); ++i) {
    const DiffTerm& t = d.terms[i];
    const std::string label = "term " + std::to_string(i);
    bool points_ok = true;
    if (!ground.contains(t.x)) {
      report.issues.push_back(label + ": point \"" + t.x + "\" is not in the ground set");
      points_ok = false;
    }
    if (!ground.contains(t.y)) {
      report.issues.push_back(label + ": point \"" + t.y + "\" is not in the ground set");
      points_ok = false;
    }
    if (abs(t.lambda) > bound) {
      report.issues.push_back(label + ": coefficient " + format_rational(t.lambda) +
                              " exceeds the bound " + format_rational(bound));
    }
    if (points_ok && level_ok && d.params.entourage.power >= 1 &&
        !b.entourage(d.params.entourage).contains(t.x, t.y)) {
      report.issues.push_back(label + ": pair (" + t.x + ", " + t.y +
                              ") is not in the named entourage");
    }
  }
  return report;
}

bool verify_decomposition(const GradedBallean& b, const Decomposition& d) {
  return verify_decomposition_detailed(b, d).ok();
}

}  // namespace vball
