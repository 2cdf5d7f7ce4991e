#include "polyad/extension.hpp"

#include <chrono>
#include <set>

#include "polyad/error.hpp"
#include "polyad/nary_aut.hpp"
#include "polyad/nary_group.hpp"
#include "polyad/search.hpp"

namespace polyad {

namespace {

// (au)^i a^-i, which lies in the G-component.
Element twisted_power(const SemidirectProduct& hat, Element u, std::size_t i) {
  const auto& H = hat.group;
  const auto a = hat.generator();
  const auto au = H.mul(a, hat.embed(u));
  const auto value = H.mul(H.pow(au, i), H.inv(H.pow(a, i)));
  const auto [residue, x] = hat.decode(value);
  if (residue != 0) throw Error(Errc::certification_failed, "twisted-power-residue", {u, static_cast<std::int64_t>(i)});
  return x;
}

bool power_holds(const SemidirectProduct& hat, Element u) {
  const auto& H = hat.group;
  return H.pow(H.mul(hat.generator(), hat.embed(u)), hat.modulus()) == H.identity();
}

std::vector<Element> map_table(const SemidirectProduct& hat, const GroupMap& phi, Element u) {
  const auto& G = hat.base;
  const auto u_inv = G.inv(u);
  std::vector<Element> table(hat.group.order());
  for (std::size_t i = 0; i < hat.modulus(); ++i) {
    const auto t = twisted_power(hat, u, i);
    for (Element x = 0; x < G.order(); ++x)
      table[hat.encode(i, x)] = hat.encode(i, G.mul(G.mul(G.mul(u_inv, phi(x)), u), t));
  }
  return table;
}

}  // namespace

GroupMap conjugation_by_generator(const SemidirectProduct& hat) {
  const auto& H = hat.group;
  const auto a = hat.generator();
  const auto a_inv = H.inv(a);
  std::vector<Element> table(hat.base.order());
  for (Element x = 0; x < hat.base.order(); ++x) {
    const auto [residue, y] = hat.decode(H.mul(H.mul(a, hat.embed(x)), a_inv));
    if (residue != 0) throw Error(Errc::invalid_argument, "base-not-normal", {x});
    table[x] = y;
  }
  return GroupMap(hat.base, hat.base, std::move(table), MapKind::automorphism);
}

ExtensionMap extension_automorphism(const SemidirectProduct& hat, const GroupMap& phi, Element u) {
  const auto& G = hat.base;
  if (phi.kind() != MapKind::automorphism || !(phi.source() == G))
    throw Error(Errc::invalid_argument, "phi-not-automorphism");
  if (!G.contains(u)) throw Error(Errc::invalid_argument, "bad-index", {u});
  const auto theta = conjugation_by_generator(hat);
  const auto bracket = commutator(phi, theta);
  const auto inner = inner_automorphism(G, u);
  if (!(bracket == inner)) {
    Element z = 0;
    while (bracket(z) == inner(z)) ++z;
    throw Error(Errc::hypothesis_failed, "commutator", {z, bracket(z), inner(z)});
  }
  if (!power_holds(hat, u)) {
    const auto& H = hat.group;
    throw Error(Errc::hypothesis_failed, "power", {u, H.pow(H.mul(hat.generator(), hat.embed(u)), hat.modulus())});
  }
  auto table = map_table(hat, phi, u);
  try {
    return ExtensionMap{GroupMap(hat.group, hat.group, std::move(table), MapKind::automorphism), u, true, true};
  } catch (const Error& e) {
    if (e.code() != Errc::not_automorphism) throw;
    throw Error(Errc::certification_failed, "extension-automorphism", e.witness(), e.cause());
  }
}

ExtensionCensus extension_census(const SemidirectProduct& hat, const Limits& limits) {
  const auto start = std::chrono::steady_clock::now();
  const auto& G = hat.base;
  const auto theta = conjugation_by_generator(hat);
  ExtensionCensus census;
  census.modulus = hat.modulus();

  const auto auts = automorphism_group(G, limits);
  census.automorphisms_of_base = auts.size();
  std::vector<GroupMap> inner;
  for (Element u = 0; u < G.order(); ++u) inner.push_back(inner_automorphism(G, u));
  std::vector<char> power(G.order());
  for (Element u = 0; u < G.order(); ++u) power[u] = power_holds(hat, u);

  std::set<std::vector<Element>> distinct;
  for (const auto& phi : auts) {
    const auto bracket = commutator(phi, theta);
    for (Element u = 0; u < G.order(); ++u) {
      if (!power[u] || !(bracket == inner[u])) continue;
      ++census.qualifying_pairs;
      auto map = extension_automorphism(hat, phi, u);
      distinct.insert(map.map.table());
      census.map_tables.push_back(map.map.table());
    }
  }
  census.distinct_maps = distinct.size();
  census.all_distinct = census.distinct_maps == census.qualifying_pairs;

  const auto g = derive(G, theta, G.identity(), static_cast<unsigned>(hat.modulus() + 1));
  census.nary_automorphism_count = nary_automorphisms(g, limits).size();
  census.counts_match = census.nary_automorphism_count == census.qualifying_pairs;

  census.delta_matches = true;
  for (std::size_t i = 0; i < hat.modulus() && census.delta_matches; ++i)
    for (Element u = 0; u < G.order(); ++u)
      if (orbit_product(g, i, u) != twisted_power(hat, u, i)) {
        census.delta_matches = false;
        census.delta_witness = std::pair{i, u};
        break;
      }

  const auto idem = idempotents(g);
  std::vector<char> is_idem(G.order(), 0);
  for (auto u : idem) is_idem[u] = 1;
  census.idempotent_iff_power = true;
  for (Element u = 0; u < G.order(); ++u)
    if (static_cast<bool>(is_idem[u]) != static_cast<bool>(power[u])) {
      census.idempotent_iff_power = false;
      census.idempotent_witness = u;
      break;
    }

  census.closed_under_composition = true;
  for (const auto& p : census.map_tables) {
    for (const auto& q : census.map_tables) {
      std::vector<Element> pq(p.size());
      for (std::size_t z = 0; z < p.size(); ++z) pq[z] = p[q[z]];
      if (!distinct.count(pq)) {
        census.closed_under_composition = false;
        break;
      }
    }
    if (!census.closed_under_composition) break;
  }

  census.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return census;
}

}  // namespace polyad
