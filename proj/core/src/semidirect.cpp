#include "polyad/semidirect.hpp"

#include "polyad/error.hpp"

namespace polyad {

CyclicAction::CyclicAction(std::size_t modulus, GroupMap theta) : modulus_(modulus) {
  if (modulus == 0) throw Error(Errc::invalid_argument, "modulus", {0});
  if (theta.kind() != MapKind::automorphism)
    throw Error(Errc::not_automorphism, "action-needs-automorphism");
  powers_.reserve(modulus);
  powers_.push_back(GroupMap::identity(theta.source()));
  for (std::size_t i = 1; i < modulus; ++i) powers_.push_back(compose(theta, powers_.back()));
  const auto full = compose(theta, powers_.back());
  if (!full.is_identity()) {
    for (Element x = 0; x < full.table().size(); ++x)
      if (full(x) != x)
        throw Error(Errc::action_order_mismatch, "theta-power", {static_cast<std::int64_t>(modulus), x, full(x)});
  }
}

SemidirectProduct semidirect_product(std::size_t modulus, const FiniteGroup& base, const CyclicAction& action) {
  if (action.modulus() != modulus)
    throw Error(Errc::action_order_mismatch, "modulus",
                {static_cast<std::int64_t>(modulus), static_cast<std::int64_t>(action.modulus())});
  if (!(action.theta().source() == base))
    throw Error(Errc::action_order_mismatch, "action-not-on-base");
  const auto m = base.order();
  const auto order = modulus * m;
  std::vector<Element> table(order * order);
  for (std::size_t i = 0; i < modulus; ++i)
    for (Element x = 0; x < m; ++x)
      for (std::size_t j = 0; j < modulus; ++j)
        for (Element y = 0; y < m; ++y) {
          const auto z = (i * m + x) * order + (j * m + y);
          table[z] = static_cast<Element>(((i + j) % modulus) * m + base.mul(x, action.act(i, y)));
        }
  std::string label;
  if (!base.label().empty()) label = "Z" + std::to_string(modulus) + "|x" + base.label();
  return SemidirectProduct{build_group_from_table(order, std::move(table), std::move(label)), base, action};
}

}  // namespace polyad
