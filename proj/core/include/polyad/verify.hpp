#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "polyad/limits.hpp"
#include "polyad/nary_group.hpp"

namespace polyad {

inline constexpr const char* report_schema = "polyad.report/1";

struct CheckResult {
  std::string name;
  bool passed = false;
  bool skipped = false;
  std::string detail;
  nlohmann::json data = nlohmann::json::object();
  double elapsed_ms = 0.0;
};

struct VerificationReport {
  std::string subject;
  unsigned arity = 0;
  std::size_t size = 0;
  std::vector<CheckResult> checks;

  bool passed() const noexcept;
  const CheckResult* find(const std::string& name) const noexcept;
};

struct VerifyOptions {
  Limits limits = default_limits();
  /// Random carrier relabelings for the decomposition round trip, in
  /// addition to the unrelabeled operation.
  unsigned relabel_trials = 0;
  std::uint64_t seed = 20240601;
  /// Test hook: replace the cover by a relabeled (still valid, but wrong)
  /// group table before the cover checks run.
  bool corrupt_cover = false;
};

/// Runs every structural check applicable to g. Checks that need a derived
/// presentation with b = e are reported as skipped for other inputs.
/// Check names:
///   axioms, skew, cover, base_embedding, r_subgroup, cover_independence,
///   semidirect_iso, automorphisms, oracle_agreement, cover_embedding,
///   anchor_lemmas, delta_identity, semidirect_lift, extension_census,
///   decomposition
VerificationReport verify_nary(const NaryGroup& g, const VerifyOptions& options = {});

/// Timing fields are omitted unless requested so that reports of fixed
/// inputs are byte-stable.
nlohmann::json to_json(const VerificationReport& report, bool include_timing = false);

}  // namespace polyad
