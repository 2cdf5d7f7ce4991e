#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace polyad {

/// Error categories raised by the library. Every failure carries one of
/// these plus a short detail tag and, where one exists, a witness.
enum class Errc {
  not_a_group,
  action_order_mismatch,
  search_bound_exceeded,
  not_composable,
  not_invertible,
  not_automorphism,
  not_subgroup,
  not_normal,
  not_isomorphic,
  derivation_condition_failed,
  arity_mismatch,
  bad_length,
  budget_exceeded,
  not_nary_group,
  not_verified,
  skew_no_solution,
  skew_not_unique,
  decomposition_not_found,
  wrong_anchor,
  not_derived_at_identity,
  certification_failed,
  hypothesis_failed,
  parse_error,
  invalid_argument,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string detail, std::vector<std::int64_t> witness = {},
        std::string message = {});

  Errc code() const noexcept { return code_; }
  /// Machine-readable sub-reason, e.g. "not-latin" or "theta-b-fixed".
  const std::string& detail() const noexcept { return detail_; }
  const std::vector<std::int64_t>& witness() const noexcept { return witness_; }
  /// "Name{detail}", for wrapping this error inside another.
  std::string cause() const;

 private:
  Errc code_;
  std::string detail_;
  std::vector<std::int64_t> witness_;
};

}  // namespace polyad
