#include "polyad/post_cover.hpp"

#include <algorithm>

#include "polyad/error.hpp"
#include "polyad/parallel.hpp"
#include "polyad/search.hpp"

namespace polyad {

CoverGroup::CoverGroup(FiniteGroup group, NaryGroup source, Element anchor)
    : group_(std::move(group)), source_(std::move(source)), anchor_(anchor) {
  if (anchor_ >= source_.size()) throw Error(Errc::invalid_argument, "bad-index", {anchor_});
  if (group_.order() != residues() * base_size())
    throw Error(Errc::invalid_argument, "cover-order",
                {static_cast<std::int64_t>(group_.order()), static_cast<std::int64_t>(residues() * base_size())});
}

std::vector<std::string> CoverGroup::header_comments() const {
  return {"post cover n=" + std::to_string(source_.arity()) + " m=" + std::to_string(base_size()) +
              " anchor=" + std::to_string(anchor_),
          "pair codec (i,x) -> i*" + std::to_string(base_size()) + "+x"};
}

CoverGroup post_cover(const NaryGroup& g, Element anchor) {
  if (!g.verified()) throw Error(Errc::not_verified, "cover");
  if (anchor >= g.size()) throw Error(Errc::invalid_argument, "bad-index", {anchor});
  const auto skew = skew_table(g);
  const long n = g.arity();
  const long r = n - 1;
  const auto m = g.size();
  const auto order = static_cast<std::size_t>(r) * m;
  std::vector<Element> table(order * order);
  std::vector<Element> seq;
  seq.reserve(2 * n - 1);
  for (long i = 0; i < r; ++i)
    for (long j = 0; j < r; ++j) {
      const long tail = (((n - i - j - 3) % r) + r) % r;
      const long residue = (i + j + 1) % r;
      for (Element x = 0; x < m; ++x)
        for (Element y = 0; y < m; ++y) {
          seq.clear();
          seq.push_back(x);
          seq.insert(seq.end(), i, anchor);
          seq.push_back(y);
          seq.insert(seq.end(), j, anchor);
          seq.push_back(skew[anchor]);
          seq.insert(seq.end(), tail, anchor);
          const auto value = eval_long(g, seq);
          table[(i * m + x) * order + (j * m + y)] = static_cast<Element>(residue * m + value);
        }
    }
  std::string label = g.label().empty() ? "" : g.label() + "*" + std::to_string(anchor);
  return CoverGroup(build_group_from_table(order, std::move(table), std::move(label)), g, anchor);
}

EmbeddingCheck base_embedding_check(const CoverGroup& c) {
  const auto& g = c.source();
  const unsigned n = g.arity();
  const auto m = g.size();
  EmbeddingCheck result;
  result.tuples_checked = g.tuple_count();
  auto hit = parallel_find_first(result.tuples_checked, [&] {
    return [&](std::uint64_t begin, std::uint64_t end,
               const std::atomic<std::uint64_t>& best) -> std::optional<std::uint64_t> {
      std::vector<Element> x(n);
      for (std::uint64_t i = begin; i < end; ++i) {
        if ((i & 0xfff) == 0 && best.load(std::memory_order_relaxed) < begin) return std::nullopt;
        decode_tuple(i, m, x);
        Element prod = c.encode(0, x[0]);
        for (unsigned k = 1; k < n; ++k) prod = c.group().mul(prod, c.encode(0, x[k]));
        if (prod != c.encode(0, g.eval_raw(x.data()))) return i;
      }
      return std::nullopt;
    };
  });
  if (hit) {
    std::vector<Element> x(n);
    decode_tuple(*hit, m, x);
    result.failure = std::move(x);
  }
  return result;
}

RSubgroupReport r_subgroup_report(const CoverGroup& c, const Limits& limits) {
  const auto& G = c.group();
  const auto m = c.base_size();
  const auto r = c.residues();
  RSubgroupReport report;
  for (Element x = 0; x < m; ++x) report.r_elements.push_back(c.encode(r - 1, x));
  report.is_subgroup = is_subgroup(G, report.r_elements);
  if (report.is_subgroup) {
    try {
      auto q = normal_quotient(G, report.r_elements);
      report.is_normal = true;
      report.quotient_order = q.group.order();
      auto iso = isomorphism_search(q.group, cyclic_group(r), limits);
      report.quotient_cyclic = iso.has_value();
      if (iso) report.quotient_iso = std::move(iso);
    } catch (const Error& e) {
      if (e.code() != Errc::not_normal) throw;
      report.normality_witness = static_cast<Element>(e.witness().front());
    }
  }

  std::vector<Element> base;
  for (Element x = 0; x < m; ++x) base.push_back(c.encode(0, x));
  std::vector<Element> coset;
  for (auto h : report.r_elements) coset.push_back(G.mul(base.front(), h));
  std::sort(coset.begin(), coset.end());
  report.base_is_coset = coset == base;
  report.base_generates = subgroup_generated(G, base).size() == G.order();
  return report;
}

GroupMap covers_isomorphic(const NaryGroup& g, Element a, Element b, const Limits& limits) {
  const auto ca = post_cover(g, a);
  if (a == b) return GroupMap::identity(ca.group());
  const auto cb = post_cover(g, b);
  auto iso = isomorphism_search(ca.group(), cb.group(), limits);
  if (!iso) throw Error(Errc::not_isomorphic, "covers", {a, b});
  return *std::move(iso);
}

SemidirectProduct semidirect_of(const NaryGroup& g) {
  if (!g.derived_at_identity()) throw Error(Errc::not_derived_at_identity, "semidirect");
  const auto& d = g.derived();
  const std::size_t modulus = g.arity() - 1;
  return semidirect_product(modulus, d.base, CyclicAction(modulus, d.theta));
}

GroupMap semidirect_cover_iso(const CoverGroup& c, const SemidirectProduct& sd) {
  const auto& g = c.source();
  if (!g.derived_at_identity()) throw Error(Errc::not_derived_at_identity, "semidirect-cover-iso");
  const auto& d = g.derived();
  if (c.anchor() != d.base.identity()) throw Error(Errc::wrong_anchor, "semidirect-cover-iso", {c.anchor()});
  if (!(sd.base == d.base) || sd.modulus() != c.residues() || !(sd.action.theta() == d.theta))
    throw Error(Errc::invalid_argument, "semidirect-mismatch");
  const auto r = c.residues();
  const auto m = c.base_size();
  std::vector<Element> table(r * m);
  for (std::size_t i = 0; i < r; ++i)
    for (Element x = 0; x < m; ++x)
      table[sd.encode(i, x)] = c.encode((i + r - 1) % r, sd.action.act(r - 1, x));
  try {
    return GroupMap(sd.group, c.group(), std::move(table), MapKind::isomorphism);
  } catch (const Error& e) {
    throw Error(Errc::certification_failed, "semidirect-cover-iso", e.witness(), e.cause());
  }
}

std::optional<std::pair<Element, Element>> shifted_law_violation(const CoverGroup& c, const SemidirectProduct& sd) {
  const auto N = c.group().order();
  if (sd.group.order() != N) throw Error(Errc::invalid_argument, "order-mismatch");
  const auto shift = sd.generator();
  for (Element z = 0; z < N; ++z)
    for (Element w = 0; w < N; ++w)
      if (c.group().mul(z, w) != sd.group.mul(sd.group.mul(z, shift), w)) return std::pair{z, w};
  return std::nullopt;
}

}  // namespace polyad
