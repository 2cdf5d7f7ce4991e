#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "polyad/group.hpp"
#include "polyad/nary_group.hpp"

namespace polyad {

/// Z_2 ⋉ Z_k with the non-trivial element acting by inversion.
FiniteGroup dihedral_group(std::size_t k);

struct SuggestedAction {
  std::string theta_name;
  GroupMap theta;
  unsigned arity;  ///< theta^(arity-1) = id
};

struct Preset {
  std::string name;
  FiniteGroup group;
  std::vector<SuggestedAction> suggestions;
};

/// Parses a group spec: "cyclic:<m>", "dihedral:<k>", "symmetric3",
/// "direct:<spec>,<spec>" (comma or '*' separated, left to right).
/// Throws invalid_argument for anything else.
Preset catalog_preset(std::string_view spec);

/// Named automorphisms: "id", "neg"/"inv" (x -> x^-1, abelian only),
/// "mul<k>" (x -> x^k, abelian only), "inner:<u>". Throws invalid_argument,
/// or not_automorphism when the preset is not an automorphism of g.
GroupMap theta_preset(const FiniteGroup& g, std::string_view name);

/// One derived n-ary group of the standard verification catalog.
struct CatalogEntry {
  std::string name;
  FiniteGroup base;
  GroupMap theta;
  unsigned arity;

  NaryGroup nary() const;
};

/// The fixed verification catalog:
///   der_neg(Z_3) n=3, der_neg(Z_4) n=3, der_{x->2x}(Z_5) n=5,
///   der_id(Z_3) n=3, der_inner(S_3) n=3, der_inv(Z_2 x Z_4) n=3.
std::vector<CatalogEntry> catalog_all();

}  // namespace polyad
