#include "polyad/nary_aut.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>

#include "polyad/error.hpp"
#include "polyad/search.hpp"

namespace polyad {

namespace {

const NaryGroup::Derived& require_identity_derived(const NaryGroup& g, const char* what) {
  if (!g.derived_at_identity()) throw Error(Errc::not_derived_at_identity, what);
  return g.derived();
}

bool is_idempotent(const NaryGroup& g, Element u) {
  std::vector<Element> args(g.arity(), u);
  return g.eval_raw(args.data()) == u;
}

template <typename Build>
GroupMap certified(const char* what, Build&& build) {
  try {
    return build();
  } catch (const Error& e) {
    if (e.code() != Errc::not_automorphism) throw;
    throw Error(Errc::certification_failed, what, e.witness(), e.cause());
  }
}

}  // namespace

NaryAutomorphism NaryAutomorphism::factor(const NaryGroup& g, std::vector<Element> table) {
  const auto& d = require_identity_derived(g, "factor");
  const auto& G = d.base;
  if (table.size() != G.order()) throw Error(Errc::invalid_argument, "size", {static_cast<std::int64_t>(table.size())});
  const Element u = table[G.identity()];
  std::vector<Element> phi_table(G.order());
  for (Element x = 0; x < G.order(); ++x) phi_table[x] = G.mul(table[x], G.inv(u));
  const auto phi = certified("factor-phi", [&] { return GroupMap(G, G, std::move(phi_table), MapKind::automorphism); });
  auto lambda = from_pair(g, u, phi);
  if (lambda.table_ != table) throw Error(Errc::certification_failed, "factor-table");
  return lambda;
}

NaryAutomorphism NaryAutomorphism::from_pair(const NaryGroup& g, Element u, const GroupMap& phi) {
  const auto& d = require_identity_derived(g, "from-pair");
  const auto& G = d.base;
  if (!G.contains(u)) throw Error(Errc::invalid_argument, "bad-index", {u});
  if (!is_idempotent(g, u)) throw Error(Errc::certification_failed, "u-not-idempotent", {u});
  if (!(commutator(phi, d.theta) == inner_automorphism(G, u)))
    throw Error(Errc::certification_failed, "commutator", {u});
  std::vector<Element> table(G.order());
  for (Element x = 0; x < G.order(); ++x) table[x] = G.mul(phi(x), u);
  if (auto check = is_nary_homomorphism(g, g, table); !check)
    throw Error(Errc::certification_failed, "not-nary-homomorphism",
                std::vector<std::int64_t>(check.witness.begin(), check.witness.end()));
  return NaryAutomorphism(u, phi, std::move(table));
}

bool NaryAutomorphism::is_identity() const noexcept {
  for (std::size_t x = 0; x < table_.size(); ++x)
    if (table_[x] != x) return false;
  return true;
}

NaryAutomorphism compose(const NaryGroup& g, const NaryAutomorphism& a, const NaryAutomorphism& b) {
  std::vector<Element> table(b.table().size());
  for (std::size_t x = 0; x < table.size(); ++x) table[x] = a(b(static_cast<Element>(x)));
  return NaryAutomorphism::factor(g, std::move(table));
}

std::vector<NaryAutomorphism> nary_automorphisms(const NaryGroup& g, const Limits& limits) {
  const auto& d = require_identity_derived(g, "nary-automorphisms");
  const auto& G = d.base;
  const auto auts = automorphism_group(G, limits);
  const auto theta_inv = invert(d.theta);
  std::vector<NaryAutomorphism> result;
  for (auto u : idempotents(g)) {
    const auto inner = inner_automorphism(G, u);
    for (const auto& phi : auts) {
      if (!(compose(compose(phi, d.theta), compose(invert(phi), theta_inv)) == inner)) continue;
      result.push_back(NaryAutomorphism::from_pair(g, u, phi));
    }
  }
  return result;
}

std::vector<std::vector<Element>> brute_force_nary_automorphisms(const NaryGroup& g, const Limits& limits) {
  const auto m = g.size();
  if (m > limits.brute_force_max)
    throw Error(Errc::search_bound_exceeded, "brute-force",
                {static_cast<std::int64_t>(m), static_cast<std::int64_t>(limits.brute_force_max)});
  std::vector<Element> perm(m);
  std::iota(perm.begin(), perm.end(), Element{0});
  std::vector<std::vector<Element>> result;
  do {
    if (is_nary_homomorphism(g, g, perm)) result.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return result;
}

Element orbit_product(const NaryGroup& g, std::size_t i, Element u) {
  const auto& d = g.derived();
  const auto& G = d.base;
  if (!G.contains(u)) throw Error(Errc::invalid_argument, "bad-index", {u});
  Element acc = G.identity();
  Element term = u;
  for (std::size_t k = 1; k <= i; ++k) {
    term = d.theta(term);
    acc = G.mul(acc, term);
  }
  return acc;
}

GroupMap lift_to_cover(const NaryAutomorphism& lambda, const CoverGroup& at_e) {
  const auto& g = at_e.source();
  const auto& d = require_identity_derived(g, "lift-to-cover");
  if (at_e.anchor() != d.base.identity()) throw Error(Errc::wrong_anchor, "lift-to-cover", {at_e.anchor()});
  const auto& G = d.base;
  const auto r = at_e.residues();
  std::vector<Element> table(at_e.group().order());
  for (std::size_t i = 0; i < r; ++i) {
    const auto delta = orbit_product(g, i, lambda.u());
    for (Element x = 0; x < G.order(); ++x) table[at_e.encode(i, x)] = at_e.encode(i, G.mul(lambda(x), delta));
  }
  return certified("lift-to-cover",
                   [&] { return GroupMap(at_e.group(), at_e.group(), std::move(table), MapKind::automorphism); });
}

GroupMap transport_to_anchor(const NaryAutomorphism& lambda, const CoverGroup& at_e, const CoverGroup& at_u) {
  const auto& d = require_identity_derived(at_e.source(), "transport-to-anchor");
  if (at_e.anchor() != d.base.identity()) throw Error(Errc::wrong_anchor, "transport-source", {at_e.anchor()});
  if (at_u.anchor() != lambda.u()) throw Error(Errc::wrong_anchor, "transport-target", {at_u.anchor(), lambda.u()});
  std::vector<Element> table(at_e.group().order());
  for (std::size_t i = 0; i < at_e.residues(); ++i)
    for (Element x = 0; x < at_e.base_size(); ++x) table[at_e.encode(i, x)] = at_u.encode(i, lambda(x));
  return certified("transport-to-anchor",
                   [&] { return GroupMap(at_e.group(), at_u.group(), std::move(table), MapKind::isomorphism); });
}

GroupMap rebase_to_identity(const CoverGroup& at_u, const CoverGroup& at_e) {
  const auto& g = at_u.source();
  const auto& d = require_identity_derived(g, "rebase-to-identity");
  const auto& G = d.base;
  if (at_e.anchor() != G.identity()) throw Error(Errc::wrong_anchor, "rebase-target", {at_e.anchor()});
  const Element u = at_u.anchor();
  if (!is_idempotent(g, u)) throw Error(Errc::certification_failed, "u-not-idempotent", {u});
  if (skew_table(g)[u] != u) throw Error(Errc::certification_failed, "u-not-skew-fixed", {u});
  std::vector<Element> table(at_u.group().order());
  for (std::size_t i = 0; i < at_u.residues(); ++i) {
    const auto delta = orbit_product(g, i, u);
    for (Element x = 0; x < G.order(); ++x) table[at_u.encode(i, x)] = at_e.encode(i, G.mul(x, delta));
  }
  return certified("rebase-to-identity",
                   [&] { return GroupMap(at_u.group(), at_e.group(), std::move(table), MapKind::isomorphism); });
}

CoverEmbeddingReport cover_embedding_report(const NaryGroup& g, const Limits& limits) {
  const auto start = std::chrono::steady_clock::now();
  const auto& d = require_identity_derived(g, "cover-embedding");
  const auto auts = nary_automorphisms(g, limits);
  const auto cover = post_cover(g, d.base.identity());
  const auto& C = cover.group();

  CoverEmbeddingReport report;
  report.source_count = auts.size();
  std::vector<GroupMap> lifts;
  lifts.reserve(auts.size());
  for (const auto& a : auts) lifts.push_back(lift_to_cover(a, cover));

  for (std::size_t p = 0; p < auts.size(); ++p) {
    for (std::size_t q = 0; q < auts.size(); ++q) {
      ++report.pairs_checked;
      const auto composite = compose(g, auts[p], auts[q]);
      if (!(lift_to_cover(composite, cover) == compose(lifts[p], lifts[q])) && report.homomorphism) {
        report.homomorphism = false;
        report.homomorphism_witness = std::pair{p, q};
      }
    }
  }

  std::set<std::vector<Element>> images;
  for (std::size_t p = 0; p < lifts.size(); ++p) {
    if (!images.insert(lifts[p].table()).second && report.injective) {
      report.injective = false;
      const auto it = std::find_if(lifts.begin(), lifts.end(),
                                   [&](const GroupMap& l) { return l.table() == lifts[p].table(); });
      report.collision_witness = std::pair{static_cast<std::size_t>(it - lifts.begin()), p};
    }
    report.image_tables.push_back(lifts[p].table());
  }

  // Kernel: a lift equal to the identity must come from u = e and Lambda = id.
  for (std::size_t p = 0; p < lifts.size(); ++p)
    if (lifts[p].is_identity() && (auts[p].u() != d.base.identity() || !auts[p].is_identity()))
      report.kernel_trivial = false;

  // Product form: Lambda*(i, x) = (0, Lambda(x)) * (0, u)^i in the cover.
  for (std::size_t p = 0; p < auts.size() && report.product_form; ++p) {
    const auto gen = cover.encode(0, auts[p].u());
    Element power = C.identity();
    for (std::size_t i = 0; i < cover.residues() && report.product_form; ++i) {
      for (Element x = 0; x < cover.base_size(); ++x)
        if (lifts[p](cover.encode(i, x)) != C.mul(cover.encode(0, auts[p](x)), power)) {
          report.product_form = false;
          break;
        }
      power = C.mul(power, gen);
    }
  }

  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

GroupMap lift_to_semidirect(const NaryAutomorphism& lambda, const NaryGroup& g, const SemidirectProduct& sd) {
  const auto& d = require_identity_derived(g, "lift-to-semidirect");
  const auto& G = d.base;
  if (!(sd.base == G)) throw Error(Errc::invalid_argument, "semidirect-mismatch");
  const Element u = lambda.u();
  const Element u_inv = G.inv(u);
  std::vector<Element> table(sd.group.order());
  for (std::size_t i = 0; i < sd.modulus(); ++i) {
    const auto delta = orbit_product(g, i, u);
    for (Element x = 0; x < G.order(); ++x)
      table[sd.encode(i, x)] = sd.encode(i, G.mul(G.mul(G.mul(u_inv, lambda.phi()(x)), u), delta));
  }
  return certified("lift-to-semidirect",
                   [&] { return GroupMap(sd.group, sd.group, std::move(table), MapKind::automorphism); });
}

}  // namespace polyad
