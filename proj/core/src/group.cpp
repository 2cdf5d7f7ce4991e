#include "polyad/group.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "polyad/error.hpp"
#include "polyad/parallel.hpp"

namespace polyad {

namespace {

using W = std::vector<std::int64_t>;

[[noreturn]] void not_a_group(const char* reason, W witness) {
  throw Error(Errc::not_a_group, reason, std::move(witness));
}

}  // namespace

Element FiniteGroup::pow(Element x, std::uint64_t k) const noexcept {
  Element result = identity();
  Element base = x;
  while (k > 0) {
    if (k & 1u) result = mul(result, base);
    base = mul(base, base);
    k >>= 1u;
  }
  return result;
}

std::size_t FiniteGroup::element_order(Element x) const noexcept {
  std::size_t k = 1;
  for (Element y = x; y != identity(); y = mul(y, x)) ++k;
  return k;
}

bool operator==(const FiniteGroup& a, const FiniteGroup& b) noexcept {
  return a.data_ == b.data_ || a.data_->table == b.data_->table;
}

FiniteGroup FiniteGroup::with_label(std::string label) const {
  auto data = std::make_shared<Data>(*data_);
  data->label = std::move(label);
  return FiniteGroup(std::move(data));
}

FiniteGroup build_group_from_table(std::size_t order, std::vector<Element> table, std::string label) {
  if (order == 0) throw Error(Errc::invalid_argument, "order", {0}, "group order must be positive");
  if (table.size() != order * order)
    throw Error(Errc::invalid_argument, "dimensions", {static_cast<std::int64_t>(table.size())},
                "table size does not match order");
  const auto m = order;
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      if (table[x * m + y] >= m)
        not_a_group("bad-index", {static_cast<std::int64_t>(x), static_cast<std::int64_t>(y),
                                  static_cast<std::int64_t>(table[x * m + y])});

  // Rows, then columns: first repeated value gives the witness.
  std::vector<std::size_t> seen(m);
  for (std::size_t x = 0; x < m; ++x) {
    std::fill(seen.begin(), seen.end(), m);
    for (std::size_t y = 0; y < m; ++y) {
      const auto v = table[x * m + y];
      if (seen[v] != m)
        not_a_group("not-latin", {static_cast<std::int64_t>(x), static_cast<std::int64_t>(seen[v]),
                                  static_cast<std::int64_t>(y)});
      seen[v] = y;
    }
  }
  for (std::size_t y = 0; y < m; ++y) {
    std::fill(seen.begin(), seen.end(), m);
    for (std::size_t x = 0; x < m; ++x) {
      const auto v = table[x * m + y];
      if (seen[v] != m)
        not_a_group("not-latin", {static_cast<std::int64_t>(seen[v]), static_cast<std::int64_t>(x),
                                  static_cast<std::int64_t>(y)});
      seen[v] = x;
    }
  }

  // In a Latin square the only candidate is the e with 0 * e = 0.
  Element e = 0;
  while (table[e] != 0) ++e;
  for (std::size_t x = 0; x < m; ++x) {
    if (table[e * m + x] != x)
      not_a_group("no-identity", {e, static_cast<std::int64_t>(x), table[e * m + x]});
    if (table[x * m + e] != x)
      not_a_group("no-identity", {static_cast<std::int64_t>(x), e, table[x * m + e]});
  }

  const auto bad = parallel_find_first_index(static_cast<std::uint64_t>(m) * m * m, [&](std::uint64_t i) {
    const auto z = i % m;
    const auto y = (i / m) % m;
    const auto x = i / (m * m);
    return table[table[x * m + y] * m + z] != table[x * m + table[y * m + z]];
  });
  if (bad) {
    const auto i = *bad;
    not_a_group("not-associative", {static_cast<std::int64_t>(i / (m * m)),
                                    static_cast<std::int64_t>((i / m) % m), static_cast<std::int64_t>(i % m)});
  }

  auto data = std::make_shared<FiniteGroup::Data>();
  data->order = m;
  data->identity = e;
  data->inverse.resize(m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      if (table[x * m + y] == e) {
        data->inverse[x] = static_cast<Element>(y);
        break;
      }
  data->table = std::move(table);
  data->label = std::move(label);
  return FiniteGroup(std::move(data));
}

FiniteGroup build_group_from_rows(const std::vector<std::vector<Element>>& rows, std::string label) {
  std::vector<Element> flat;
  flat.reserve(rows.size() * rows.size());
  for (const auto& row : rows) {
    if (row.size() != rows.size())
      throw Error(Errc::invalid_argument, "dimensions", {static_cast<std::int64_t>(row.size())},
                  "table is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return build_group_from_table(rows.size(), std::move(flat), std::move(label));
}

FiniteGroup cyclic_group(std::size_t m) {
  if (m == 0) throw Error(Errc::invalid_argument, "order", {0}, "cyclic group order must be positive");
  std::vector<Element> table(m * m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) table[x * m + y] = static_cast<Element>((x + y) % m);
  return build_group_from_table(m, std::move(table), "Z" + std::to_string(m));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const auto a = g.order();
  const auto b = h.order();
  const auto m = a * b;
  std::vector<Element> table(m * m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      const auto gx = static_cast<Element>(x / b), hx = static_cast<Element>(x % b);
      const auto gy = static_cast<Element>(y / b), hy = static_cast<Element>(y % b);
      table[x * m + y] = static_cast<Element>(g.mul(gx, gy) * b + h.mul(hx, hy));
    }
  std::string label;
  if (!g.label().empty() && !h.label().empty()) label = g.label() + "x" + h.label();
  return build_group_from_table(m, std::move(table), std::move(label));
}

FiniteGroup symmetric_group_3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const std::size_t m = perms.size();
  std::vector<Element> table(m * m);
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t t = 0; t < m; ++t) {
      std::array<int, 3> st{};
      for (int k = 0; k < 3; ++k) st[k] = perms[s][perms[t][k]];
      table[s * m + t] = static_cast<Element>(std::find(perms.begin(), perms.end(), st) - perms.begin());
    }
  return build_group_from_table(m, std::move(table), "S3");
}

FiniteGroup relabel(const FiniteGroup& g, std::span<const Element> perm) {
  const auto m = g.order();
  if (perm.size() != m) throw Error(Errc::invalid_argument, "size", {static_cast<std::int64_t>(perm.size())});
  std::vector<Element> table(m * m);
  for (Element x = 0; x < m; ++x)
    for (Element y = 0; y < m; ++y) table[perm[x] * m + perm[y]] = perm[g.mul(x, y)];
  return build_group_from_table(m, std::move(table), g.label());
}

std::optional<std::pair<Element, Element>> homomorphism_violation(const FiniteGroup& source,
                                                                  const FiniteGroup& target,
                                                                  std::span<const Element> table) {
  const auto m = source.order();
  for (Element x = 0; x < m; ++x)
    for (Element y = 0; y < m; ++y)
      if (table[source.mul(x, y)] != target.mul(table[x], table[y])) return std::pair{x, y};
  return std::nullopt;
}

GroupMap::GroupMap(FiniteGroup source, FiniteGroup target, std::vector<Element> table, MapKind kind)
    : source_(std::move(source)), target_(std::move(target)), table_(std::move(table)), kind_(kind) {
  if (table_.size() != source_.order())
    throw Error(Errc::invalid_argument, "size", {static_cast<std::int64_t>(table_.size())},
                "map table size does not match source order");
  for (std::size_t x = 0; x < table_.size(); ++x)
    if (table_[x] >= target_.order())
      throw Error(Errc::invalid_argument, "bad-index", {static_cast<std::int64_t>(x), table_[x]});
  if (kind_ == MapKind::automorphism && !(source_ == target_))
    throw Error(Errc::not_automorphism, "source-target-mismatch");
  if (source_.order() != target_.order())
    throw Error(Errc::not_automorphism, "not-bijective",
                {static_cast<std::int64_t>(source_.order()), static_cast<std::int64_t>(target_.order())});
  std::vector<char> hit(target_.order(), 0);
  for (std::size_t x = 0; x < table_.size(); ++x) {
    if (hit[table_[x]]) throw Error(Errc::not_automorphism, "not-bijective", {static_cast<std::int64_t>(x), table_[x]});
    hit[table_[x]] = 1;
  }
  if (kind_ != MapKind::bijection) {
    if (auto bad = homomorphism_violation(source_, target_, table_))
      throw Error(Errc::not_automorphism, "not-homomorphic", {bad->first, bad->second});
  }
}

GroupMap GroupMap::identity(const FiniteGroup& g) {
  std::vector<Element> table(g.order());
  std::iota(table.begin(), table.end(), Element{0});
  return GroupMap(g, g, std::move(table), MapKind::automorphism);
}

bool GroupMap::is_identity() const noexcept {
  for (std::size_t x = 0; x < table_.size(); ++x)
    if (table_[x] != x) return false;
  return true;
}

namespace {

MapKind composed_kind(const GroupMap& f, const GroupMap& g, const FiniteGroup& src, const FiniteGroup& dst) {
  if (f.kind() == MapKind::bijection || g.kind() == MapKind::bijection) return MapKind::bijection;
  return src == dst ? MapKind::automorphism : MapKind::isomorphism;
}

}  // namespace

GroupMap compose(const GroupMap& f, const GroupMap& g) {
  if (!(g.target() == f.source()))
    throw Error(Errc::not_composable, "target-source-mismatch");
  std::vector<Element> table(g.source().order());
  for (std::size_t x = 0; x < table.size(); ++x) table[x] = f(g(static_cast<Element>(x)));
  return GroupMap(g.source(), f.target(), std::move(table), composed_kind(f, g, g.source(), f.target()));
}

GroupMap invert(const GroupMap& f) {
  // The constructor already guarantees bijectivity for every kind.
  std::vector<Element> table(f.target().order());
  for (std::size_t x = 0; x < f.table().size(); ++x) table[f(static_cast<Element>(x))] = static_cast<Element>(x);
  return GroupMap(f.target(), f.source(), std::move(table), f.kind());
}

GroupMap power(const GroupMap& f, std::uint64_t k) {
  if (!(f.source() == f.target())) throw Error(Errc::not_composable, "not-a-self-map");
  std::vector<Element> table(f.source().order());
  std::iota(table.begin(), table.end(), Element{0});
  for (std::uint64_t step = 0; step < k; ++step)
    for (auto& v : table) v = f(v);
  return GroupMap(f.source(), f.source(), std::move(table), k == 0 ? MapKind::automorphism : f.kind());
}

GroupMap commutator(const GroupMap& f, const GroupMap& g) {
  if (!(f.source() == f.target()) || !(g.source() == g.target()) || !(f.source() == g.source()))
    throw Error(Errc::not_composable, "not-self-maps-of-one-group");
  return compose(compose(f, g), compose(invert(f), invert(g)));
}

GroupMap inner_automorphism(const FiniteGroup& g, Element u) {
  if (!g.contains(u)) throw Error(Errc::invalid_argument, "bad-index", {u});
  std::vector<Element> table(g.order());
  for (Element z = 0; z < g.order(); ++z) table[z] = g.mul(g.mul(u, z), g.inv(u));
  return GroupMap(g, g, std::move(table), MapKind::automorphism);
}

GroupMap right_translation(const FiniteGroup& g, Element u) {
  if (!g.contains(u)) throw Error(Errc::invalid_argument, "bad-index", {u});
  std::vector<Element> table(g.order());
  for (Element x = 0; x < g.order(); ++x) table[x] = g.mul(x, u);
  return GroupMap(g, g, std::move(table), MapKind::bijection);
}

}  // namespace polyad
