#pragma once

#include "vball/ballean.hpp"
#include "vball/metric.hpp"

#include <string_view>

namespace vball {

/// Path metric on points p0..p{n-1}: d(i, j) = |i - j|.
FiniteMetric line_metric(std::uint32_t n);

/// Cycle metric on points p0..p{n-1}: d(i, j) = min(|i - j|, n - |i - j|).
FiniteMetric cycle_metric(std::uint32_t n);

/// Manhattan metric on the n-by-n grid, points pI_J for 0 <= I, J < n.
FiniteMetric grid_metric(std::uint32_t n);

GradedBallean line_ballean(std::uint32_t n);
GradedBallean cycle_ballean(std::uint32_t n);
GradedBallean grid_ballean(std::uint32_t n);

/// Dispatches on "line" / "cycle" / "grid"; throws std::invalid_argument
/// on unknown names or sizes below the preset's minimum.
GradedBallean preset_ballean(std::string_view name, std::uint32_t size);

}  // namespace vball
