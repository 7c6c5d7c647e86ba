#include "vball/metric.hpp"

#include <limits>
#include <stdexcept>

namespace vball {

FiniteMetric::FiniteMetric(Ground ground, std::vector<std::vector<Rational>> rows)
    : ground_(std::move(ground)) {
  const std::size_t n = ground_.size();
  if (rows.size() != n) throw std::invalid_argument("metric row count mismatch");
  d_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw std::invalid_argument("metric row length mismatch");
    for (std::size_t j = 0; j < n; ++j) d_[i * n + j] = rows[i][j];
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (d_[i * n + i] != 0) {
      throw std::invalid_argument("metric violation: d(" + ground_.at(i) + "," + ground_.at(i) +
                                  ") != 0");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (d_[i * n + j] < 0) {
        throw std::invalid_argument("metric violation: negative d(" + ground_.at(i) + "," +
                                    ground_.at(j) + ")");
      }
      if (i != j && d_[i * n + j] == 0) {
        throw std::invalid_argument("metric violation: zero d(" + ground_.at(i) + "," +
                                    ground_.at(j) + ") for distinct points");
      }
      if (d_[i * n + j] != d_[j * n + i]) {
        throw std::invalid_argument("metric violation: asymmetric at (" + ground_.at(i) + "," +
                                    ground_.at(j) + ")");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (d_[i * n + j] > d_[i * n + k] + d_[k * n + j]) {
          throw std::invalid_argument("metric violation: triangle inequality at (" +
                                      ground_.at(i) + "," + ground_.at(j) + "," + ground_.at(k) +
                                      ")");
        }
      }
    }
  }
}

const Rational& FiniteMetric::distance(std::uint32_t i, std::uint32_t j) const {
  return d_.at(i * ground_.size() + j);
}

const Rational& FiniteMetric::distance(const PointId& x, const PointId& y) const {
  return distance(ground_.index_of(x), ground_.index_of(y));
}

Rational FiniteMetric::diameter() const {
  Rational best = 0;
  for (const auto& v : d_) {
    if (v > best) best = v;
  }
  return best;
}

GradedBallean metric_ballean(const FiniteMetric& m) {
  const Ground& g = m.ground();
  const std::uint32_t top = ceil_abs_to_nat(m.diameter()) + 1;
  std::vector<Relation> levels;
  levels.reserve(top);
  for (std::uint32_t r = 1; r <= top; ++r) {
    std::vector<IndexPair> pairs;
    for (std::uint32_t i = 0; i < g.size(); ++i) {
      for (std::uint32_t j = 0; j < g.size(); ++j) {
        if (m.distance(i, j) < r) pairs.emplace_back(i, j);
      }
    }
    levels.emplace_back(g, std::move(pairs));
  }
  return GradedBallean::raw(g, std::move(levels));
}

FiniteMetric metric_from_scale(const GradedBallean& b) {
  const std::size_t n = b.ground().size();
  constexpr std::uint64_t kUnreachable = std::numeric_limits<std::uint64_t>::max() / 4;

  // Hop weight: least level containing the pair.
  std::vector<std::uint64_t> dist(n * n, kUnreachable);
  for (std::size_t i = 0; i < n; ++i) dist[i * n + i] = 0;
  for (std::uint32_t r = 1; r <= b.level_count(); ++r) {
    for (const auto& [x, y] : b.level(r).pairs()) {
      if (x != y && dist[x * n + y] > r) dist[x * n + y] = r;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const std::uint64_t via = dist[i * n + k] + dist[k * n + j];
        if (via < dist[i * n + j]) dist[i * n + j] = via;
      }
    }
  }

  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (dist[i * n + j] >= kUnreachable) {
        throw std::invalid_argument("scale does not connect " + b.ground().at(i) + " and " +
                                    b.ground().at(j));
      }
      rows[i][j] = Rational(static_cast<unsigned long>(dist[i * n + j]));
    }
  }
  return FiniteMetric(b.ground(), std::move(rows));
}

}  // namespace vball
