#pragma once

#include <span>
#include <vector>

#include "polyad/group.hpp"

namespace polyad {

/// Closure of `seeds` under product and inverse, sorted ascending.
std::vector<Element> subgroup_generated(const FiniteGroup& g, std::span<const Element> seeds);

/// True iff the (sorted or unsorted) set contains the identity and is closed
/// under the product.
bool is_subgroup(const FiniteGroup& g, std::span<const Element> subset);

/// Greedy irredundant generating set: repeatedly adds the element of largest
/// order (smallest index on ties) outside the current subgroup.
std::vector<Element> generating_set(const FiniteGroup& g);

/// Quotient G/H. Cosets are indexed in increasing order of their minimal
/// representative.
struct Quotient {
  FiniteGroup group;
  std::vector<Element> representatives;  ///< minimal element of each coset
  std::vector<Element> coset_of;         ///< element -> coset index
};

/// Throws not_subgroup, or not_normal with witness {g, h} where g h g^-1 is
/// not in H.
Quotient normal_quotient(const FiniteGroup& g, std::span<const Element> subgroup);

}  // namespace polyad
