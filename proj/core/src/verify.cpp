#include "polyad/verify.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <set>

#include "polyad/error.hpp"
#include "polyad/extension.hpp"
#include "polyad/hosszu_gluskin.hpp"
#include "polyad/nary_aut.hpp"
#include "polyad/post_cover.hpp"

namespace polyad {

namespace {

using nlohmann::json;

json error_json(const Error& e) {
  return {{"code", std::string(errc_name(e.code()))}, {"detail", e.detail()}, {"witness", e.witness()}};
}

class Runner {
 public:
  explicit Runner(VerificationReport& report) : report_(report) {}

  /// body fills the result and returns whether the check passed.
  template <typename Body>
  void run(const std::string& name, Body&& body) {
    CheckResult result;
    result.name = name;
    const auto start = std::chrono::steady_clock::now();
    try {
      result.passed = body(result);
    } catch (const Error& e) {
      result.passed = false;
      result.detail = e.what();
      result.data["error"] = error_json(e);
    }
    result.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report_.checks.push_back(std::move(result));
  }

  void skip(const std::string& name, std::string why) {
    CheckResult result;
    result.name = name;
    result.skipped = true;
    result.passed = true;
    result.detail = std::move(why);
    report_.checks.push_back(std::move(result));
  }

 private:
  VerificationReport& report_;
};

std::vector<Element> first_mismatch(const GroupMap& a, const GroupMap& b) {
  for (Element z = 0; z < a.table().size(); ++z)
    if (a(z) != b(z)) return {z, a(z), b(z)};
  return {};
}

bool delta_identity_holds(const NaryGroup& g, bool reduce, Element u, json& witness) {
  const auto& G = g.derived().base;
  const std::size_t r = g.arity() - 1;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const auto k = reduce ? (i + j + 1) % r : i + j + 1;
      auto theta_pow = [&](Element x) { return g.theta_power(static_cast<unsigned>(i + 1), x); };
      const auto lhs = theta_pow(orbit_product(g, j, u));
      const auto rhs = G.mul(G.mul(theta_pow(G.inv(u)), G.inv(orbit_product(g, i, u))), orbit_product(g, k, u));
      if (lhs != rhs) {
        witness = {{"i", i}, {"j", j}, {"u", u}, {"reduced", reduce}, {"lhs", lhs}, {"rhs", rhs}};
        return false;
      }
    }
  return true;
}

}  // namespace

bool VerificationReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* VerificationReport::find(const std::string& name) const noexcept {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

VerificationReport verify_nary(const NaryGroup& g, const VerifyOptions& options) {
  const auto& limits = options.limits;
  VerificationReport report;
  report.subject = g.label();
  report.arity = g.arity();
  report.size = g.size();
  Runner runner(report);
  const auto m = g.size();
  const bool at_identity = g.derived_at_identity();
  const Element anchor = at_identity ? g.derived().base.identity() : 0;
  const std::string needs_identity = "requires a derived presentation with b = e";

  runner.run("axioms", [&](CheckResult& r) {
    const auto axioms = verify_nary_axioms(g, limits);
    r.data["associativity_instances"] = axioms.associativity_instances;
    r.data["solvability_instances"] = axioms.solvability_instances;
    for (const auto& f : axioms.associativity_failures)
      r.data["associativity_failures"].push_back(
          {{"shift", f.shift}, {"arguments", f.arguments}, {"left", f.left}, {"right", f.right}});
    for (const auto& f : axioms.solvability_failures)
      r.data["solvability_failures"].push_back(
          {{"position", f.position}, {"arguments", f.arguments}, {"value", f.value}});
    return axioms.ok();
  });

  runner.run("skew", [&](CheckResult& r) {
    const auto skew = skew_table(g);
    r.data["skew"] = skew.skew;
    r.data["placement_mismatches"] = skew.placement_mismatches;
    return skew.placement_mismatches.empty();
  });

  std::optional<CoverGroup> cover;
  runner.run("cover", [&](CheckResult& r) {
    auto built = post_cover(g, anchor);
    if (options.corrupt_cover) {
      const auto order = built.group().order();
      std::vector<Element> perm(order);
      std::iota(perm.begin(), perm.end(), Element{0});
      std::swap(perm.front(), perm.back());
      built = CoverGroup(relabel(built.group(), perm), g, anchor);
      r.data["corrupted"] = true;
    }
    r.data["anchor"] = anchor;
    r.data["order"] = built.group().order();
    r.data["identity"] = built.group().identity();
    cover = std::move(built);
    return true;
  });

  if (cover) {
    runner.run("base_embedding", [&](CheckResult& r) {
      const auto check = base_embedding_check(*cover);
      r.data["tuples_checked"] = check.tuples_checked;
      if (check.failure) r.data["witness"] = *check.failure;
      return check.ok();
    });
    runner.run("r_subgroup", [&](CheckResult& r) {
      const auto rep = r_subgroup_report(*cover, limits);
      r.data = {{"is_subgroup", rep.is_subgroup},       {"is_normal", rep.is_normal},
                {"quotient_order", rep.quotient_order}, {"quotient_cyclic", rep.quotient_cyclic},
                {"base_is_coset", rep.base_is_coset},   {"base_generates", rep.base_generates}};
      if (rep.normality_witness) r.data["normality_witness"] = *rep.normality_witness;
      return rep.ok();
    });
  } else {
    runner.skip("base_embedding", "cover unavailable");
    runner.skip("r_subgroup", "cover unavailable");
  }

  runner.run("cover_independence", [&](CheckResult& r) {
    std::size_t pairs = 0;
    for (Element a = 0; a < m; ++a)
      for (Element b = a + 1; b < m; ++b) {
        covers_isomorphic(g, a, b, limits);
        ++pairs;
      }
    r.data["pairs"] = pairs;
    return true;
  });

  if (!at_identity) {
    for (const auto* name : {"semidirect_iso", "automorphisms", "oracle_agreement", "cover_embedding",
                             "anchor_lemmas", "delta_identity", "semidirect_lift", "extension_census"})
      runner.skip(name, needs_identity);
  } else {
    const auto sd = semidirect_of(g);
    const auto at_e = post_cover(g, anchor);
    std::optional<GroupMap> psi;
    runner.run("semidirect_iso", [&](CheckResult& r) {
      if (!cover) throw Error(Errc::certification_failed, "cover-unavailable");
      psi = semidirect_cover_iso(*cover, sd);
      if (auto bad = shifted_law_violation(*cover, sd)) {
        r.data["shifted_law_witness"] = {bad->first, bad->second};
        return false;
      }
      return true;
    });

    std::vector<NaryAutomorphism> auts;
    runner.run("automorphisms", [&](CheckResult& r) {
      auts = nary_automorphisms(g, limits);
      r.data["count"] = auts.size();
      for (const auto& a : auts) r.data["u"].push_back(a.u());
      return !auts.empty();
    });

    if (m > limits.brute_force_max) {
      runner.skip("oracle_agreement", "carrier larger than the brute-force bound");
    } else {
      runner.run("oracle_agreement", [&](CheckResult& r) {
        const auto brute = brute_force_nary_automorphisms(g, limits);
        std::vector<std::vector<Element>> mine;
        for (const auto& a : auts) mine.push_back(a.table());
        std::sort(mine.begin(), mine.end());
        r.data["structured"] = mine.size();
        r.data["brute_force"] = brute.size();
        if (mine != brute) {
          std::vector<std::vector<Element>> only;
          std::set_symmetric_difference(mine.begin(), mine.end(), brute.begin(), brute.end(),
                                        std::back_inserter(only));
          r.data["witness"] = only.front();
          return false;
        }
        return true;
      });
    }

    runner.run("cover_embedding", [&](CheckResult& r) {
      const auto rep = cover_embedding_report(g, limits);
      r.data = {{"source_count", rep.source_count}, {"pairs_checked", rep.pairs_checked},
                {"homomorphism", rep.homomorphism}, {"injective", rep.injective},
                {"kernel_trivial", rep.kernel_trivial}, {"product_form", rep.product_form}};
      if (rep.homomorphism_witness)
        r.data["homomorphism_witness"] = {rep.homomorphism_witness->first, rep.homomorphism_witness->second};
      if (rep.collision_witness)
        r.data["collision_witness"] = {rep.collision_witness->first, rep.collision_witness->second};
      return rep.ok();
    });

    runner.run("anchor_lemmas", [&](CheckResult& r) {
      std::size_t checked = 0;
      for (std::size_t p = 0; p < auts.size(); ++p) {
        const auto& lambda = auts[p];
        const auto at_u = post_cover(g, lambda.u());
        const auto transport = transport_to_anchor(lambda, at_e, at_u);
        const auto rebase = rebase_to_identity(at_u, at_e);
        const auto lift = lift_to_cover(lambda, at_e);
        const auto composite = compose(rebase, transport);
        if (!(composite == lift)) {
          r.data["witness"] = {{"automorphism", p}, {"mismatch", first_mismatch(composite, lift)}};
          return false;
        }
        ++checked;
      }
      r.data["automorphisms_checked"] = checked;
      return true;
    });

    runner.run("delta_identity", [&](CheckResult& r) {
      const auto idem = idempotents(g);
      const std::set<Element> idem_set(idem.begin(), idem.end());
      json witness;
      for (Element u = 0; u < m; ++u) {
        if (!delta_identity_holds(g, false, u, witness) ||
            (idem_set.count(u) && !delta_identity_holds(g, true, u, witness))) {
          r.data["witness"] = witness;
          return false;
        }
      }
      r.data["idempotents"] = idem;
      r.data["triples"] = (g.arity() - 1) * (g.arity() - 1) * m;
      return true;
    });

    runner.run("semidirect_lift", [&](CheckResult& r) {
      if (!psi) throw Error(Errc::certification_failed, "semidirect-iso-unavailable");
      const auto psi_inv = invert(*psi);
      for (std::size_t p = 0; p < auts.size(); ++p) {
        const auto alpha = lift_to_semidirect(auts[p], g, sd);
        const auto conjugate = compose(psi_inv, compose(lift_to_cover(auts[p], at_e), *psi));
        if (!(alpha == conjugate)) {
          r.data["witness"] = {{"automorphism", p}, {"mismatch", first_mismatch(alpha, conjugate)}};
          return false;
        }
      }
      r.data["automorphisms_checked"] = auts.size();
      return true;
    });

    runner.run("extension_census", [&](CheckResult& r) {
      const auto census = extension_census(sd, limits);
      r.data = {{"modulus", census.modulus},
                {"automorphisms_of_base", census.automorphisms_of_base},
                {"qualifying_pairs", census.qualifying_pairs},
                {"distinct_maps", census.distinct_maps},
                {"nary_automorphism_count", census.nary_automorphism_count},
                {"counts_match", census.counts_match},
                {"all_distinct", census.all_distinct},
                {"delta_matches", census.delta_matches},
                {"idempotent_iff_power", census.idempotent_iff_power},
                {"closed_under_composition", census.closed_under_composition}};
      if (census.delta_witness) r.data["delta_witness"] = {census.delta_witness->first, census.delta_witness->second};
      if (census.idempotent_witness) r.data["idempotent_witness"] = *census.idempotent_witness;
      return census.ok();
    });
  }

  runner.run("decomposition", [&](CheckResult& r) {
    std::size_t closed = 0;
    std::size_t searched = 0;
    auto record = [&](const Decomposition& d) { ++(d.closed_form ? closed : searched); };
    for (Element a = 0; a < m; ++a) record(hosszu_gluskin_decompose(g, a, limits));
    std::mt19937_64 rng(options.seed);
    std::vector<Element> perm(m);
    for (unsigned t = 0; t < options.relabel_trials; ++t) {
      std::iota(perm.begin(), perm.end(), Element{0});
      std::shuffle(perm.begin(), perm.end(), rng);
      const auto moved = relabel(g, perm, limits);
      const auto d = hosszu_gluskin_decompose(moved, 0, limits);
      if (auto diff = first_difference(derive(d.retract, d.theta, d.b, g.arity()), moved)) {
        r.data["witness"] = {{"trial", t}, {"permutation", perm}, {"tuple", *diff}};
        return false;
      }
      record(d);
    }
    r.data["anchors"] = m;
    r.data["relabel_trials"] = options.relabel_trials;
    r.data["closed_form"] = closed;
    r.data["searched"] = searched;
    return true;
  });

  return report;
}

nlohmann::json to_json(const VerificationReport& report, bool include_timing) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    json item = {{"name", c.name}, {"status", c.skipped ? "skip" : (c.passed ? "pass" : "fail")}};
    if (!c.detail.empty()) item["detail"] = c.detail;
    if (!c.data.empty()) item["data"] = c.data;
    if (include_timing) item["elapsed_ms"] = c.elapsed_ms;
    checks.push_back(std::move(item));
  }
  return {{"schema", report_schema},
          {"subject", report.subject},
          {"arity", report.arity},
          {"size", report.size},
          {"passed", report.passed()},
          {"checks", std::move(checks)}};
}

}  // namespace polyad
