#pragma once

#include "polyad/group.hpp"
#include "polyad/limits.hpp"
#include "polyad/nary_group.hpp"

namespace polyad {

/// Binary group, automorphism and constant recovering an n-ary group as
/// der_{theta,b}(retract).
struct Decomposition {
  FiniteGroup retract;  ///< x o y = f(x, a, ..., a, y), identity = skew(a)
  GroupMap theta;
  Element b;
  Element anchor;
  /// True when the closed-form theta/b candidates verified; false when the
  /// fallback search over Aut(retract) x G was needed.
  bool closed_form;
};

/// Hosszu-Gluskin decomposition at an anchor. The closed-form candidates
///   theta(x) = f(skew(a), x, a, ..., a),  b = f(skew(a), ..., skew(a))
/// are tried first; the result is only returned after the reconstructed
/// derived operation has been compared with g on all m^n tuples.
/// Throws decomposition_not_found (an axiom violation) if no candidate works.
Decomposition hosszu_gluskin_decompose(const NaryGroup& g, Element anchor,
                                       const Limits& limits = default_limits());

/// The fallback path alone: exhaustive search over Aut(retract) x G for a
/// (theta, b) reproducing g. Exposed so both strategies can be exercised.
Decomposition search_decomposition(const NaryGroup& g, Element anchor,
                                   const Limits& limits = default_limits());

}  // namespace polyad
