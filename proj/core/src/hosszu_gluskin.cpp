#include "polyad/hosszu_gluskin.hpp"

#include "polyad/error.hpp"
#include "polyad/search.hpp"

namespace polyad {

namespace {

struct Retract {
  FiniteGroup group;
  Element skew_anchor;
};

Retract build_retract(const NaryGroup& g, Element anchor) {
  if (!g.verified()) throw Error(Errc::not_verified, "decompose");
  if (anchor >= g.size()) throw Error(Errc::invalid_argument, "bad-index", {anchor});
  const unsigned n = g.arity();
  const auto m = g.size();
  const auto skew = skew_table(g);
  std::vector<Element> args(n, anchor);
  std::vector<Element> table(m * m);
  for (Element x = 0; x < m; ++x)
    for (Element y = 0; y < m; ++y) {
      args.front() = x;
      args.back() = y;
      table[x * m + y] = g.eval_raw(args.data());
    }
  try {
    auto group = build_group_from_table(m, std::move(table), g.label().empty() ? "" : g.label() + "@" + std::to_string(anchor));
    if (group.identity() != skew[anchor])
      throw Error(Errc::decomposition_not_found, "retract-identity", {group.identity(), skew[anchor]});
    return {std::move(group), skew[anchor]};
  } catch (const Error& e) {
    if (e.code() == Errc::decomposition_not_found) throw;
    throw Error(Errc::decomposition_not_found, "retract-not-a-group", e.witness(), e.cause());
  }
}

// Derives from (theta, b) and compares with g on every tuple.
bool reproduces(const NaryGroup& g, const FiniteGroup& retract, const GroupMap& theta, Element b) {
  try {
    const auto rebuilt = derive(retract, theta, b, g.arity());
    return !first_difference(rebuilt, g);
  } catch (const Error&) {
    return false;
  }
}

Decomposition search_with(const NaryGroup& g, Element anchor, const Retract& r, const Limits& limits) {
  const auto m = g.size();
  for (const auto& phi : automorphism_group(r.group, limits)) {
    for (Element b = 0; b < m; ++b) {
      if (phi(b) != b) continue;
      if (reproduces(g, r.group, phi, b)) return Decomposition{r.group, phi, b, anchor, false};
    }
  }
  throw Error(Errc::decomposition_not_found, "search-exhausted", {anchor});
}

}  // namespace

Decomposition hosszu_gluskin_decompose(const NaryGroup& g, Element anchor, const Limits& limits) {
  const auto r = build_retract(g, anchor);
  const unsigned n = g.arity();
  const auto m = g.size();

  std::vector<Element> args(n, anchor);
  args[0] = r.skew_anchor;
  std::vector<Element> theta_table(m);
  for (Element x = 0; x < m; ++x) {
    args[1] = x;
    theta_table[x] = g.eval_raw(args.data());
  }
  std::fill(args.begin(), args.end(), r.skew_anchor);
  const Element b = g.eval_raw(args.data());

  try {
    GroupMap theta(r.group, r.group, std::move(theta_table), MapKind::automorphism);
    if (reproduces(g, r.group, theta, b)) return Decomposition{r.group, std::move(theta), b, anchor, true};
  } catch (const Error&) {
    // Not an automorphism of the retract; fall through to the search.
  }
  return search_with(g, anchor, r, limits);
}

Decomposition search_decomposition(const NaryGroup& g, Element anchor, const Limits& limits) {
  return search_with(g, anchor, build_retract(g, anchor), limits);
}

}  // namespace polyad
