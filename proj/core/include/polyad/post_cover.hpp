#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyad/group.hpp"
#include "polyad/limits.hpp"
#include "polyad/nary_group.hpp"
#include "polyad/semidirect.hpp"
#include "polyad/subgroup.hpp"

namespace polyad {

/// Post's covering group G*_a of an n-ary group: a binary group on
/// Z_{n-1} x G with the pair (i, x) flattened to i * m + x.
///
/// The constructor only checks that the group has order (n-1) * m; any
/// FiniteGroup of that order is accepted so that wrong tables can be fed to
/// the checks below. Use post_cover() to build the genuine cover.
class CoverGroup {
 public:
  CoverGroup(FiniteGroup group, NaryGroup source, Element anchor);

  const FiniteGroup& group() const noexcept { return group_; }
  const NaryGroup& source() const noexcept { return source_; }
  Element anchor() const noexcept { return anchor_; }
  /// n - 1.
  std::size_t residues() const noexcept { return source_.arity() - 1; }
  std::size_t base_size() const noexcept { return source_.size(); }

  Element encode(std::size_t i, Element x) const noexcept {
    return static_cast<Element>((i % residues()) * base_size() + x);
  }
  std::pair<std::size_t, Element> decode(Element z) const noexcept {
    return {z / base_size(), static_cast<Element>(z % base_size())};
  }

  /// Header comments for the Cayley file format.
  std::vector<std::string> header_comments() const;

 private:
  FiniteGroup group_;
  NaryGroup source_;
  Element anchor_;
};

/// (i, x) * (j, y) = (i+j+1, f_*(x, a^(i), y, a^(j), skew(a), a^(k))) with
/// k = n-i-j-3 mod n-1; the argument list has length n or 2n-1 and is
/// evaluated with eval_long. The finished table is validated as a group.
CoverGroup post_cover(const NaryGroup& g, Element anchor);

struct EmbeddingCheck {
  std::uint64_t tuples_checked = 0;
  /// First n-tuple where (0,x_1) * ... * (0,x_n) != (0, f(x_1..x_n)).
  std::optional<std::vector<Element>> failure;
  bool ok() const noexcept { return !failure; }
};

/// Exhaustive check of f(x_1..x_n) = x_1 * ... * x_n inside the cover.
EmbeddingCheck base_embedding_check(const CoverGroup& c);

struct RSubgroupReport {
  std::vector<Element> r_elements;  ///< {(n-2, x)}
  bool is_subgroup = false;
  bool is_normal = false;
  std::optional<Element> normality_witness;
  std::size_t quotient_order = 0;
  bool quotient_cyclic = false;  ///< isomorphic to Z_{n-1}
  bool base_is_coset = false;    ///< {(0,x)} is a single coset of R
  bool base_generates = false;   ///< {(0,x)} generates the cover
  std::optional<GroupMap> quotient_iso;

  bool ok() const noexcept {
    return is_subgroup && is_normal && quotient_cyclic && base_is_coset && base_generates;
  }
};

RSubgroupReport r_subgroup_report(const CoverGroup& c, const Limits& limits = default_limits());

/// An explicit isomorphism G*_a -> G*_b found by search; throws
/// not_isomorphic if none exists.
GroupMap covers_isomorphic(const NaryGroup& g, Element a, Element b,
                           const Limits& limits = default_limits());

/// Z_{n-1} ⋉ G for a derived group with b = e, using theta as the action.
SemidirectProduct semidirect_of(const NaryGroup& g);

/// Isomorphism from Z_{n-1} ⋉ G onto the cover of der_theta(G) at e,
///   (i, x) |-> (i-1 mod n-1, theta^(n-2)(x)),
/// i.e. left multiplication by (1, e)^-1. Certified on all pairs.
/// Throws not_derived_at_identity or wrong_anchor.
GroupMap semidirect_cover_iso(const CoverGroup& c, const SemidirectProduct& sd);

/// First pair (z, w) of semidirect elements where z*_cover w differs from
/// z (1,e) w computed in the semidirect product, with the cover and the
/// semidirect product sharing the pair codec.
std::optional<std::pair<Element, Element>> shifted_law_violation(const CoverGroup& c,
                                                                 const SemidirectProduct& sd);

}  // namespace polyad
