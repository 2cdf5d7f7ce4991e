#include "polyad/subgroup.hpp"

#include <algorithm>

#include "polyad/error.hpp"

namespace polyad {

std::vector<Element> subgroup_generated(const FiniteGroup& g, std::span<const Element> seeds) {
  const auto m = g.order();
  std::vector<char> in(m, 0);
  std::vector<Element> members{g.identity()};
  in[g.identity()] = 1;
  std::vector<Element> gens;
  for (auto s : seeds) {
    if (!g.contains(s)) throw Error(Errc::invalid_argument, "bad-index", {s});
    gens.push_back(s);
  }
  // Right-multiplying by generators from the identity reaches every element:
  // inverses are positive powers in a finite group.
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (auto s : gens) {
      const auto y = g.mul(members[head], s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool is_subgroup(const FiniteGroup& g, std::span<const Element> subset) {
  std::vector<char> in(g.order(), 0);
  for (auto x : subset) {
    if (!g.contains(x)) return false;
    in[x] = 1;
  }
  if (!in[g.identity()]) return false;
  for (auto x : subset)
    for (auto y : subset)
      if (!in[g.mul(x, y)]) return false;
  return true;
}

std::vector<Element> generating_set(const FiniteGroup& g) {
  const auto m = g.order();
  std::vector<std::size_t> orders(m);
  for (Element x = 0; x < m; ++x) orders[x] = g.element_order(x);
  std::vector<Element> gens;
  std::vector<Element> current{g.identity()};
  while (current.size() < m) {
    std::vector<char> in(m, 0);
    for (auto x : current) in[x] = 1;
    Element best = 0;
    std::size_t best_order = 0;
    for (Element x = 0; x < m; ++x)
      if (!in[x] && orders[x] > best_order) {
        best = x;
        best_order = orders[x];
      }
    gens.push_back(best);
    current = subgroup_generated(g, gens);
  }
  return gens;
}

Quotient normal_quotient(const FiniteGroup& g, std::span<const Element> subgroup) {
  if (!is_subgroup(g, subgroup)) throw Error(Errc::not_subgroup, "not-closed");
  const auto m = g.order();
  std::vector<char> in(m, 0);
  for (auto h : subgroup) in[h] = 1;
  for (Element x = 0; x < m; ++x)
    for (auto h : subgroup)
      if (!in[g.mul(g.mul(x, h), g.inv(x))])
        throw Error(Errc::not_normal, "conjugate-escapes", {x, h});

  std::vector<Element> coset_of(m, static_cast<Element>(m));
  std::vector<Element> reps;
  for (Element x = 0; x < m; ++x) {
    if (coset_of[x] != m) continue;
    const auto index = static_cast<Element>(reps.size());
    reps.push_back(x);
    for (auto h : subgroup) coset_of[g.mul(x, h)] = index;
  }
  const auto k = reps.size();
  std::vector<Element> table(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) table[a * k + b] = coset_of[g.mul(reps[a], reps[b])];
  return Quotient{build_group_from_table(k, std::move(table)), std::move(reps), std::move(coset_of)};
}

}  // namespace polyad
