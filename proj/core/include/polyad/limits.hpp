#pragma once

#include <cstddef>
#include <cstdint>

namespace polyad {

/// Runtime bounds for the exhaustive searches. None of the algorithms bake
/// these in; they are checked up front and raise search_bound_exceeded or
/// budget_exceeded.
struct Limits {
  /// Largest group order accepted by automorphism and isomorphism search.
  std::size_t search_bound = 64;
  /// Largest number of n-ary associativity instances, (n-1) * m^(2n-1).
  std::uint64_t axiom_budget = 100'000'000;
  /// Largest carrier size for the all-bijections oracles (m! growth).
  std::size_t brute_force_max = 6;
  /// Largest m^n for an explicit n-ary table.
  std::uint64_t table_max = 10'000'000;
};

/// Process-wide defaults. The first call reads POLYAD_SEARCH_BOUND from the
/// environment.
const Limits& default_limits();
void set_default_limits(const Limits& limits);

/// Worker count for internal parallel loops; 0 means hardware concurrency.
/// Results never depend on this value.
void set_thread_count(unsigned threads);
unsigned thread_count();

}  // namespace polyad
