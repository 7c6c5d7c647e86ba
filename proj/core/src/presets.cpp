#include "vball/presets.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace vball {

namespace {

Ground numbered_points(std::uint32_t n) {
  std::vector<PointId> points;
  points.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) points.push_back("p" + std::to_string(i));
  return Ground(std::move(points));
}

// The ground sorts ids as strings; recover each point's numeric label so
// distances follow the intended geometry, not the id order.
std::vector<std::uint32_t> numeric_labels(const Ground& ground) {
  std::vector<std::uint32_t> labels;
  labels.reserve(ground.size());
  for (const PointId& p : ground.points()) {
    labels.push_back(static_cast<std::uint32_t>(std::stoul(p.substr(1))));
  }
  return labels;
}

FiniteMetric metric_from_rule(Ground ground, std::uint32_t n,
                              long (*rule)(std::uint32_t, std::uint32_t, std::uint32_t)) {
  const std::vector<std::uint32_t> labels = numeric_labels(ground);
  std::vector<std::vector<Rational>> rows(ground.size(),
                                          std::vector<Rational>(ground.size()));
  for (std::size_t i = 0; i < ground.size(); ++i) {
    for (std::size_t j = 0; j < ground.size(); ++j) {
      rows[i][j] = Rational(rule(labels[i], labels[j], n));
    }
  }
  return FiniteMetric(std::move(ground), std::move(rows));
}

long line_rule(std::uint32_t i, std::uint32_t j, std::uint32_t) {
  return std::labs(static_cast<long>(i) - static_cast<long>(j));
}

long cycle_rule(std::uint32_t i, std::uint32_t j, std::uint32_t n) {
  const long direct = std::labs(static_cast<long>(i) - static_cast<long>(j));
  return std::min(direct, static_cast<long>(n) - direct);
}

}  // namespace

FiniteMetric line_metric(std::uint32_t n) {
  if (n < 1) throw std::invalid_argument("line preset needs at least 1 point");
  return metric_from_rule(numbered_points(n), n, line_rule);
}

FiniteMetric cycle_metric(std::uint32_t n) {
  if (n < 3) throw std::invalid_argument("cycle preset needs at least 3 points");
  return metric_from_rule(numbered_points(n), n, cycle_rule);
}

FiniteMetric grid_metric(std::uint32_t n) {
  if (n < 1) throw std::invalid_argument("grid preset needs at least 1 point per side");
  std::vector<PointId> points;
  points.reserve(static_cast<std::size_t>(n) * n);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      points.push_back("p" + std::to_string(i) + "_" + std::to_string(j));
    }
  }
  Ground ground(std::move(points));
  std::vector<std::pair<long, long>> coords;
  coords.reserve(ground.size());
  for (const PointId& p : ground.points()) {
    const std::size_t sep = p.find('_');
    coords.emplace_back(std::stol(p.substr(1, sep - 1)), std::stol(p.substr(sep + 1)));
  }
  std::vector<std::vector<Rational>> rows(ground.size(),
                                          std::vector<Rational>(ground.size()));
  for (std::size_t a = 0; a < ground.size(); ++a) {
    for (std::size_t b = 0; b < ground.size(); ++b) {
      rows[a][b] = Rational(std::labs(coords[a].first - coords[b].first) +
                            std::labs(coords[a].second - coords[b].second));
    }
  }
  return FiniteMetric(std::move(ground), std::move(rows));
}

GradedBallean line_ballean(std::uint32_t n) { return metric_ballean(line_metric(n)); }

GradedBallean cycle_ballean(std::uint32_t n) { return metric_ballean(cycle_metric(n)); }

GradedBallean grid_ballean(std::uint32_t n) { return metric_ballean(grid_metric(n)); }

GradedBallean preset_ballean(std::string_view name, std::uint32_t size) {
  if (name == "line") return line_ballean(size);
  if (name == "cycle") return cycle_ballean(size);
  if (name == "grid") return grid_ballean(size);
  throw std::invalid_argument("unknown preset \"" + std::string(name) + "\"");
}

}  // namespace vball
