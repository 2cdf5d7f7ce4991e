#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "polyad/group.hpp"
#include "polyad/limits.hpp"
#include "polyad/nary_group.hpp"
#include "polyad/post_cover.hpp"
#include "polyad/semidirect.hpp"

namespace polyad {

// Conventions used throughout this header (all over the base group (G,.)):
//   I_u(z)     = u z u^-1
//   [phi, th]  = phi o th o phi^-1 o th^-1
//   R_u phi(x) = phi(x) u            (phi applied first)
//   delta(i,u) = theta(u) theta^2(u) ... theta^i(u),  delta(0,u) = e

/// An automorphism of der_theta(G) in its unique factored form
/// Lambda = R_u phi, with u = Lambda(e) idempotent, phi in Aut(G) and
/// [phi, theta] = I_u.
class NaryAutomorphism {
 public:
  /// Factors an automorphism table: u = table[e], phi(x) = table[x] u^-1.
  /// Throws certification_failed (detail names the broken condition) if the
  /// result is not a valid pair or the table is not an n-ary automorphism.
  static NaryAutomorphism factor(const NaryGroup& g, std::vector<Element> table);
  /// Builds R_u phi after checking the pair conditions.
  static NaryAutomorphism from_pair(const NaryGroup& g, Element u, const GroupMap& phi);

  Element u() const noexcept { return u_; }
  const GroupMap& phi() const noexcept { return phi_; }
  const std::vector<Element>& table() const noexcept { return table_; }
  Element operator()(Element x) const noexcept { return table_[x]; }
  bool is_identity() const noexcept;

  friend bool operator==(const NaryAutomorphism& a, const NaryAutomorphism& b) noexcept {
    return a.table_ == b.table_;
  }

 private:
  NaryAutomorphism(Element u, GroupMap phi, std::vector<Element> table)
      : u_(u), phi_(std::move(phi)), table_(std::move(table)) {}
  Element u_;
  GroupMap phi_;
  std::vector<Element> table_;
};

/// (a o b)(x) = a(b(x)), refactored.
NaryAutomorphism compose(const NaryGroup& g, const NaryAutomorphism& a, const NaryAutomorphism& b);

/// Aut(G, f) for der_theta(G) with b = e: pairs (u, phi) with u idempotent,
/// phi in Aut(G) and [phi, theta] = I_u, each re-checked with
/// is_nary_homomorphism. Ordered by u ascending, then phi lexicographically.
/// Throws not_derived_at_identity or search_bound_exceeded.
std::vector<NaryAutomorphism> nary_automorphisms(const NaryGroup& g,
                                                 const Limits& limits = default_limits());

/// Oracle: every bijection of the carrier that is an n-ary homomorphism, in
/// lexicographic order. Any presentation; throws search_bound_exceeded when
/// m > limits.brute_force_max.
std::vector<std::vector<Element>> brute_force_nary_automorphisms(
    const NaryGroup& g, const Limits& limits = default_limits());

/// delta(i, u) = theta(u) theta^2(u) ... theta^i(u) for any i >= 0; the empty
/// product (i = 0) is e. The exponent is not reduced.
Element orbit_product(const NaryGroup& g, std::size_t i, Element u);

/// Lambda*: (i, x) |-> (i, Lambda(x) delta(i, u)) on the cover at e,
/// certified as an automorphism. Throws wrong_anchor,
/// not_derived_at_identity or certification_failed.
GroupMap lift_to_cover(const NaryAutomorphism& lambda, const CoverGroup& at_e);

/// (i, x) |-> (i, Lambda(x)) from the cover at e to the cover at u,
/// certified as an isomorphism.
GroupMap transport_to_anchor(const NaryAutomorphism& lambda, const CoverGroup& at_e,
                             const CoverGroup& at_u);

/// q_u: (i, x) |-> (i, x delta(i, u)) from the cover at u = anchor(at_u) to
/// the cover at e, certified as an isomorphism. Requires u idempotent with
/// skew(u) = u (certification_failed otherwise).
GroupMap rebase_to_identity(const CoverGroup& at_u, const CoverGroup& at_e);

/// The lift Lambda -> Lambda* checked as an embedding Aut(G,f) -> Aut(G*_e).
struct CoverEmbeddingReport {
  std::size_t source_count = 0;
  std::size_t pairs_checked = 0;
  bool homomorphism = true;   ///< (L1 o L2)* = L1* o L2* on all ordered pairs
  bool injective = true;      ///< images pairwise distinct
  bool kernel_trivial = true; ///< L* = id  =>  u = e and L = id
  bool product_form = true;   ///< L*(i,x) = (0, L(x)) * (0, u)^i
  std::optional<std::pair<std::size_t, std::size_t>> homomorphism_witness;
  std::optional<std::pair<std::size_t, std::size_t>> collision_witness;
  std::vector<std::vector<Element>> image_tables;
  double elapsed_ms = 0.0;

  bool ok() const noexcept { return homomorphism && injective && kernel_trivial && product_form; }
};

CoverEmbeddingReport cover_embedding_report(const NaryGroup& g,
                                            const Limits& limits = default_limits());

/// alpha(Lambda): (i, x) |-> (i, u^-1 phi(x) u delta(i, u)) on Z_{n-1} ⋉ G,
/// certified as an automorphism.
GroupMap lift_to_semidirect(const NaryAutomorphism& lambda, const NaryGroup& g,
                            const SemidirectProduct& sd);

}  // namespace polyad
