#pragma once

#include "vball/decomposition.hpp"
#include "vball/free_vector.hpp"

#include <optional>

namespace vball {

/// Second, independent route to the base-set membership verdict, used to
/// cross-check ideal_membership. Enumerates pair multisets recursively
/// and decides each linear system by fixing subsets of variables at
/// their bounds and inspecting the resulting candidate vertices; a
/// bounded nonempty region always exposes one such vertex. No interval
/// reasoning is shared with the primary decision procedure.
/// Refuses instances with more than 6 ground points or n > 3 by
/// throwing std::invalid_argument.
std::optional<Decomposition> brute_force_oracle(const GradedBallean& b, const FreeVector& v,
                                                const IdealBaseParams& params);

}  // namespace vball
