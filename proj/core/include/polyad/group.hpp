#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace polyad {

/// Group elements are dense indices 0..m-1.
using Element = std::uint32_t;

/// A finite group given by its Cayley table. Immutable; copies share the
/// underlying table.
///
/// Invariants (checked by build_group_from_table): every entry is a valid
/// index, every row and column is a permutation, a two-sided identity
/// exists, and the product is associative.
class FiniteGroup {
 public:
  std::size_t order() const noexcept { return data_->order; }
  Element identity() const noexcept { return data_->identity; }
  Element mul(Element x, Element y) const noexcept { return data_->table[x * data_->order + y]; }
  Element inv(Element x) const noexcept { return data_->inverse[x]; }
  /// x^k for k >= 0.
  Element pow(Element x, std::uint64_t k) const noexcept;
  /// Order of x as a group element.
  std::size_t element_order(Element x) const noexcept;

  /// Row-major m*m table.
  std::span<const Element> table() const noexcept { return data_->table; }
  std::span<const Element> inverses() const noexcept { return data_->inverse; }
  const std::string& label() const noexcept { return data_->label; }
  bool contains(std::int64_t x) const noexcept {
    return x >= 0 && static_cast<std::uint64_t>(x) < data_->order;
  }

  /// Same table (labels are ignored).
  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) noexcept;

  /// True iff both handles share one table object.
  bool same_instance(const FiniteGroup& other) const noexcept { return data_ == other.data_; }

  FiniteGroup with_label(std::string label) const;

 private:
  struct Data {
    std::size_t order = 0;
    std::vector<Element> table;
    Element identity = 0;
    std::vector<Element> inverse;
    std::string label;
  };
  explicit FiniteGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;

  friend FiniteGroup build_group_from_table(std::size_t, std::vector<Element>, std::string);
};

/// Validates a row-major Cayley table and returns the group. The identity is
/// detected, never relabeled. Throws Error{not_a_group} with detail one of
/// "bad-index", "not-latin", "no-identity", "not-associative" and a witness
/// triple.
FiniteGroup build_group_from_table(std::size_t order, std::vector<Element> table,
                                   std::string label = {});

/// Same as above for a nested m x m table.
FiniteGroup build_group_from_rows(const std::vector<std::vector<Element>>& rows,
                                  std::string label = {});

/// Addition mod m.
FiniteGroup cyclic_group(std::size_t m);

/// G x H with pair (g, h) flattened to g * |H| + h.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

/// Symmetric group on {0,1,2}. Elements are the six permutations listed in
/// lexicographic order of their one-line notation; the product is
/// composition (s*t)(k) = s(t(k)).
FiniteGroup symmetric_group_3();

/// Relabels a group by a permutation: the new table satisfies
/// perm[x]*perm[y] = perm[x*y].
FiniteGroup relabel(const FiniteGroup& g, std::span<const Element> perm);

enum class MapKind { automorphism, isomorphism, bijection };

/// A map between two finite groups stored as an index table.
///
/// kind automorphism/isomorphism: the constructor certifies bijectivity and
/// the homomorphism law on all pairs; automorphism also requires
/// source == target. kind bijection: only bijectivity is certified.
class GroupMap {
 public:
  GroupMap(FiniteGroup source, FiniteGroup target, std::vector<Element> table, MapKind kind);

  static GroupMap identity(const FiniteGroup& g);

  Element operator()(Element x) const noexcept { return table_[x]; }
  const FiniteGroup& source() const noexcept { return source_; }
  const FiniteGroup& target() const noexcept { return target_; }
  const std::vector<Element>& table() const noexcept { return table_; }
  MapKind kind() const noexcept { return kind_; }
  bool is_identity() const noexcept;

  /// Tables equal (kinds and group handles are not compared).
  friend bool operator==(const GroupMap& a, const GroupMap& b) noexcept { return a.table_ == b.table_; }
  friend auto operator<=>(const GroupMap& a, const GroupMap& b) noexcept { return a.table_ <=> b.table_; }

 private:
  FiniteGroup source_;
  FiniteGroup target_;
  std::vector<Element> table_;
  MapKind kind_;
};

/// First pair (x, y) with map(x*y) != map(x)*map(y), if any.
std::optional<std::pair<Element, Element>> homomorphism_violation(const FiniteGroup& source,
                                                                  const FiniteGroup& target,
                                                                  std::span<const Element> table);

/// compose(f, g)(x) = f(g(x)). Throws not_composable.
GroupMap compose(const GroupMap& f, const GroupMap& g);
/// Throws not_invertible unless f is a bijection.
GroupMap invert(const GroupMap& f);
/// f^k by repeated composition, k >= 0; f must be a self-map.
GroupMap power(const GroupMap& f, std::uint64_t k);
/// f o g o f^-1 o g^-1.
GroupMap commutator(const GroupMap& f, const GroupMap& g);

/// z |-> u z u^-1.
GroupMap inner_automorphism(const FiniteGroup& g, Element u);
/// x |-> x u (a bijection, generally not a homomorphism).
GroupMap right_translation(const FiniteGroup& g, Element u);

}  // namespace polyad
