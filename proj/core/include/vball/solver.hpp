#pragma once

#include "vball/rational.hpp"

#include <optional>
#include <vector>

namespace vball {

/// Exact linear feasibility instance: equality rows over box-bounded
/// variables. All data rational; the solver never rounds.
struct BoxSystem {
  std::size_t vars = 0;
  std::vector<Rational> lower;  // size vars
  std::vector<Rational> upper;  // size vars
  std::vector<std::vector<Rational>> eq_rows;
  std::vector<Rational> eq_rhs;
};

/// Decides feasibility and produces a witness assignment: Gaussian
/// elimination of the equalities, then Fourier-Motzkin reduction of the
/// residual inequalities over the free variables, then back-substitution
/// choosing the in-interval value nearest zero at each stage. The
/// witness always satisfies every row and every box bound exactly.
std::optional<std::vector<Rational>> solve_box_system(const BoxSystem& sys);

}  // namespace vball
