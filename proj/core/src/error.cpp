#include "polyad/error.hpp"

#include <sstream>

namespace polyad {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::not_a_group: return "NotAGroup";
    case Errc::action_order_mismatch: return "ActionOrderMismatch";
    case Errc::search_bound_exceeded: return "SearchBoundExceeded";
    case Errc::not_composable: return "NotComposable";
    case Errc::not_invertible: return "NotInvertible";
    case Errc::not_automorphism: return "NotAutomorphism";
    case Errc::not_subgroup: return "NotSubgroup";
    case Errc::not_normal: return "NotNormal";
    case Errc::not_isomorphic: return "NotIsomorphic";
    case Errc::derivation_condition_failed: return "DerivationConditionFailed";
    case Errc::arity_mismatch: return "ArityMismatch";
    case Errc::bad_length: return "BadLength";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::not_nary_group: return "NotNaryGroup";
    case Errc::not_verified: return "NotVerified";
    case Errc::skew_no_solution: return "SkewNoSolution";
    case Errc::skew_not_unique: return "SkewNotUnique";
    case Errc::decomposition_not_found: return "DecompositionNotFound";
    case Errc::wrong_anchor: return "WrongAnchor";
    case Errc::not_derived_at_identity: return "NotDerivedAtIdentity";
    case Errc::certification_failed: return "CertificationFailed";
    case Errc::hypothesis_failed: return "HypothesisFailed";
    case Errc::parse_error: return "ParseError";
    case Errc::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

std::string format_message(Errc code, const std::string& detail,
                           const std::vector<std::int64_t>& witness, const std::string& message) {
  std::ostringstream os;
  os << errc_name(code);
  if (!detail.empty()) os << '{' << detail << '}';
  if (!message.empty()) os << ": " << message;
  if (!witness.empty()) {
    os << " [witness";
    for (auto w : witness) os << ' ' << w;
    os << ']';
  }
  return os.str();
}

}  // namespace

Error::Error(Errc code, std::string detail, std::vector<std::int64_t> witness, std::string message)
    : std::runtime_error(format_message(code, detail, witness, message)),
      code_(code),
      detail_(std::move(detail)),
      witness_(std::move(witness)) {}

std::string Error::cause() const { return std::string(errc_name(code_)) + "{" + detail_ + "}"; }

}  // namespace polyad
