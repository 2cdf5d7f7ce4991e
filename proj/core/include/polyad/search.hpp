#pragma once

#include <optional>
#include <vector>

#include "polyad/group.hpp"
#include "polyad/limits.hpp"

namespace polyad {

/// All automorphisms of g, duplicate-free and sorted lexicographically by
/// table. Backtracks over order-preserving images of a generating set and
/// prunes as soon as the partial map fails to be an injective homomorphism
/// on the subgroup generated so far. Throws search_bound_exceeded when
/// g.order() > limits.search_bound.
std::vector<GroupMap> automorphism_group(const FiniteGroup& g,
                                         const Limits& limits = default_limits());

/// An isomorphism g -> h, the first one in lexicographic order of generator
/// images, or nullopt once all candidates are exhausted.
std::optional<GroupMap> isomorphism_search(const FiniteGroup& g, const FiniteGroup& h,
                                           const Limits& limits = default_limits());

}  // namespace polyad
