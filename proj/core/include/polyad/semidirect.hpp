#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "polyad/group.hpp"

namespace polyad {

/// Z_modulus acting on a group through powers of one automorphism:
/// i.x = theta^i(x). Construction throws action_order_mismatch unless
/// theta^modulus is the identity map.
class CyclicAction {
 public:
  CyclicAction(std::size_t modulus, GroupMap theta);

  std::size_t modulus() const noexcept { return modulus_; }
  const GroupMap& theta() const noexcept { return powers_[1 % powers_.size()]; }
  /// theta^i for any i >= 0 (reduced mod modulus).
  const GroupMap& power(std::size_t i) const noexcept { return powers_[i % modulus_]; }
  Element act(std::size_t i, Element x) const noexcept { return powers_[i % modulus_](x); }

 private:
  std::size_t modulus_;
  std::vector<GroupMap> powers_;
};

/// Z_k ⋉ G with the pair (i, x) flattened to i * |G| + x and product
///   (i, x)(j, y) = (i + j mod k, x * theta^i(y)).
struct SemidirectProduct {
  FiniteGroup group;
  FiniteGroup base;
  CyclicAction action;

  std::size_t modulus() const noexcept { return action.modulus(); }
  Element encode(std::size_t i, Element x) const noexcept {
    return static_cast<Element>((i % modulus()) * base.order() + x);
  }
  std::pair<std::size_t, Element> decode(Element z) const noexcept {
    return {z / base.order(), static_cast<Element>(z % base.order())};
  }
  /// The generator a = (1, e) of the acting cyclic group.
  Element generator() const noexcept { return encode(1 % modulus(), base.identity()); }
  /// x in G embedded as (0, x).
  Element embed(Element x) const noexcept { return encode(0, x); }
};

/// Throws action_order_mismatch if action.modulus() != modulus or the action
/// is not on `base`.
SemidirectProduct semidirect_product(std::size_t modulus, const FiniteGroup& base,
                                     const CyclicAction& action);

}  // namespace polyad
