#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "polyad/group.hpp"
#include "polyad/limits.hpp"
#include "polyad/semidirect.hpp"

namespace polyad {

/// Automorphisms of a cyclic extension A ⋉ G, A = <a> of order n-1, built
/// from a pair (phi, u) with [phi, theta] = I_u and (a u)^(n-1) = 1, where
/// theta(x) = a x a^-1:
///   (a^i, x) |-> (a^i, u^-1 phi(x) u (a u)^i a^-i).

/// theta(x) = a x a^-1 read off the extension's table.
GroupMap conjugation_by_generator(const SemidirectProduct& hat);

struct ExtensionMap {
  GroupMap map;
  Element u;
  bool commutator_holds;
  bool power_holds;
};

/// Throws hypothesis_failed with detail "commutator" (witness {z,
/// [phi,theta](z), I_u(z)}) or "power" (witness {u, (au)^(n-1)}). The map is
/// certified as an automorphism of hat.
ExtensionMap extension_automorphism(const SemidirectProduct& hat, const GroupMap& phi, Element u);

struct ExtensionCensus {
  std::size_t modulus = 0;          ///< n - 1
  std::size_t automorphisms_of_base = 0;
  std::size_t qualifying_pairs = 0;
  std::size_t distinct_maps = 0;
  std::size_t nary_automorphism_count = 0;  ///< |Aut(der_theta(G))|
  bool counts_match = false;
  bool all_distinct = false;
  bool delta_matches = false;       ///< delta(i,u) = (au)^i a^-i for all i, u
  bool idempotent_iff_power = false;
  /// Observation only: whether the maps are closed under composition.
  bool closed_under_composition = false;
  std::optional<std::pair<std::size_t, Element>> delta_witness;    ///< (i, u)
  std::optional<Element> idempotent_witness;
  std::vector<std::vector<Element>> map_tables;
  double elapsed_ms = 0.0;

  bool ok() const noexcept { return counts_match && all_distinct && delta_matches && idempotent_iff_power; }
};

ExtensionCensus extension_census(const SemidirectProduct& hat, const Limits& limits = default_limits());

}  // namespace polyad
