#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polyad/group.hpp"
#include "polyad/limits.hpp"

namespace polyad {

/// A finite n-ary group (G, f).
///
/// Two presentations share one evaluator:
///  - Derived: f(x_1..x_n) = x_1 * theta(x_2) * ... * theta^(n-1)(x_n) * b over
///    a binary base group, with theta(b) = b and theta^(n-1) = conjugation by
///    b. Never materialized.
///  - Table: an explicit row-major m^n array (x_1 most significant).
///
/// Derived instances are n-ary groups by construction and are flagged
/// verified; Table instances are flagged only after `verified()` succeeds.
class NaryGroup {
 public:
  struct Derived {
    FiniteGroup base;
    GroupMap theta;
    Element b;
  };

  /// Unverified table presentation. Throws invalid_argument on bad sizes or
  /// indices, budget_exceeded if m^n > limits.table_max.
  static NaryGroup from_table(unsigned arity, std::size_t size, std::vector<Element> values,
                              const Limits& limits = default_limits());

  unsigned arity() const noexcept { return impl_->arity; }
  std::size_t size() const noexcept { return impl_->size; }
  bool verified() const noexcept { return impl_->verified; }
  bool is_derived() const noexcept { return impl_->derived.has_value(); }
  /// Throws invalid_argument for table presentations.
  const Derived& derived() const;
  /// Derived with b equal to the base identity.
  bool derived_at_identity() const noexcept;
  /// Row-major values of a table presentation (empty for derived).
  std::span<const Element> table_values() const noexcept { return impl_->table; }
  const std::string& label() const noexcept { return impl_->label; }
  NaryGroup with_label(std::string label) const;

  /// f on exactly arity() arguments; no validation.
  Element eval_raw(const Element* args) const noexcept;
  /// theta^k(x) for a derived presentation, k in 0..n-1.
  Element theta_power(unsigned k, Element x) const noexcept {
    return impl_->theta_powers[k * impl_->size + x];
  }

  /// m^n.
  std::uint64_t tuple_count() const noexcept;

 private:
  struct Impl {
    unsigned arity = 2;
    std::size_t size = 0;
    std::optional<Derived> derived;
    std::vector<Element> theta_powers;  // n blocks of size m
    std::vector<Element> table;
    bool verified = false;
    std::string label;
  };
  explicit NaryGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;

  friend NaryGroup derive(const FiniteGroup&, const GroupMap&, Element, unsigned);
  friend NaryGroup verified(const NaryGroup&, const Limits&);
  friend NaryGroup materialize(const NaryGroup&, const Limits&);
  friend NaryGroup relabel(const NaryGroup&, std::span<const Element>, const Limits&);
};

/// der_{theta,b}(G). Throws derivation_condition_failed with detail
/// "theta-b-fixed" (witness {b, theta(b)}) or "theta-power" (witness
/// {x, theta^(n-1)(x), b x b^-1}); invalid_argument if theta is not an
/// automorphism of base or n < 2.
NaryGroup derive(const FiniteGroup& base, const GroupMap& theta, Element b, unsigned n);

/// f(x_1..x_n). Throws arity_mismatch or invalid_argument on a bad index.
Element eval_f(const NaryGroup& g, std::span<const Element> args);

/// Long product: the sequence is reduced left to right, replacing the first
/// n entries by their value, until one element remains. Accepts length 1 or
/// any length >= n with length = 1 (mod n-1); throws bad_length with witness
/// {got, n-1} otherwise.
Element eval_long(const NaryGroup& g, std::span<const Element> args);

struct AssociativityFailure {
  unsigned shift;                  ///< inner product starts at this position
  std::vector<Element> arguments;  ///< the 2n-1 arguments
  Element left;                    ///< f(f(x_1..x_n), x_{n+1}..)
  Element right;                   ///< value with the inner product shifted
};

struct SolvabilityFailure {
  unsigned position;               ///< the unknown's position (0-based)
  std::vector<Element> arguments;  ///< the other arguments, unknown set to 0
  Element value;                   ///< a value hit twice (or never)
};

struct AxiomReport {
  std::uint64_t associativity_instances = 0;
  std::uint64_t solvability_instances = 0;
  /// First failure for each shift that has one, in shift order.
  std::vector<AssociativityFailure> associativity_failures;
  /// First failure for each position that has one, in position order.
  std::vector<SolvabilityFailure> solvability_failures;

  bool ok() const noexcept { return associativity_failures.empty() && solvability_failures.empty(); }
};

/// Exhaustive check of n-ary associativity for every shift and unique
/// solvability in every position. Throws budget_exceeded when
/// (n-1) * m^(2n-1) > limits.axiom_budget.
AxiomReport verify_nary_axioms(const NaryGroup& g, const Limits& limits = default_limits());

/// Returns a verified copy, or throws not_nary_group with the first witness.
NaryGroup verified(const NaryGroup& g, const Limits& limits = default_limits());

/// Skew elements: skew[x] is the unique solution of f(skew, x, ..., x) = x.
/// The right-placed equation f(x, ..., x, skew) = x is checked as well and
/// any element where it disagrees is listed, never silently resolved.
struct SkewTable {
  std::vector<Element> skew;
  std::vector<Element> placement_mismatches;

  Element operator[](Element x) const noexcept { return skew[x]; }
};

/// Throws not_verified, skew_no_solution or skew_not_unique.
SkewTable skew_table(const NaryGroup& g);

/// All u with f(u, ..., u) = u, ascending.
std::vector<Element> idempotents(const NaryGroup& g);

struct HomomorphismCheck {
  bool holds = true;
  /// First tuple (lexicographic) where map(f(x)) != f'(map x).
  std::vector<Element> witness;

  explicit operator bool() const noexcept { return holds; }
};

/// map(f_g(x_1..x_n)) == f_h(map x_1, ..., map x_n) on all n-tuples.
/// Throws arity_mismatch or invalid_argument on size mismatch.
HomomorphismCheck is_nary_homomorphism(const NaryGroup& g, const NaryGroup& h,
                                       std::span<const Element> map);

/// First tuple on which two operations of equal arity and size disagree.
std::optional<std::vector<Element>> first_difference(const NaryGroup& a, const NaryGroup& b);

/// Explicit table of g (same verified flag).
NaryGroup materialize(const NaryGroup& g, const Limits& limits = default_limits());

/// Table presentation of the operation transported along a carrier
/// permutation: f'(perm x_1, ..., perm x_n) = perm f(x_1, ..., x_n).
NaryGroup relabel(const NaryGroup& g, std::span<const Element> perm,
                  const Limits& limits = default_limits());

/// Decodes a row-major linear index into `out` (first argument most
/// significant).
void decode_tuple(std::uint64_t index, std::size_t base, std::span<Element> out) noexcept;

}  // namespace polyad
