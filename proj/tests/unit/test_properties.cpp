#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "polyad/catalog.hpp"
#include "polyad/error.hpp"
#include "polyad/extension.hpp"
#include "polyad/hosszu_gluskin.hpp"
#include "polyad/nary_aut.hpp"
#include "polyad/search.hpp"
#include "polyad/subgroup.hpp"

namespace polyad {
namespace {

constexpr int trials = 25;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }

  FiniteGroup group(std::size_t max_order = 12) {
    static const std::vector<std::string> specs = {
        "cyclic:1", "cyclic:2", "cyclic:3", "cyclic:4", "cyclic:5", "cyclic:6", "cyclic:7",
        "cyclic:8", "dihedral:3", "dihedral:4", "dihedral:5", "symmetric3", "direct:cyclic:2,cyclic:2",
        "direct:cyclic:2,cyclic:4", "direct:cyclic:3,cyclic:3", "direct:cyclic:2,symmetric3"};
    while (true) {
      auto g = catalog_preset(pick(specs)).group;
      if (g.order() > max_order) continue;
      return relabel(g, permutation(g.order()));
    }
  }

  std::vector<Element> permutation(std::size_t m) {
    const auto p = oracle::random_permutation(m, rng_);
    return {p.begin(), p.end()};
  }

  /// A derived n-ary group with a random theta of small order, a random
  /// arity compatible with it, and b = e.
  NaryGroup derived(std::size_t max_order = 8, unsigned max_arity = 5) {
    while (true) {
      const auto g = group(max_order);
      const auto auts = automorphism_group(g);
      const auto& theta = pick(auts);
      std::size_t k = 1;
      while (!power(theta, k).is_identity()) ++k;
      std::vector<unsigned> arities;
      for (unsigned n = 2; n <= max_arity; ++n)
        if ((n - 1) % k == 0) arities.push_back(n);
      if (arities.empty()) continue;
      return derive(g, theta, g.identity(), pick(arities));
    }
  }

  /// Any derived n-ary group, possibly with b != e.
  NaryGroup derived_any(std::size_t max_order = 8, unsigned max_arity = 4) {
    while (true) {
      const auto g = group(max_order);
      const auto auts = automorphism_group(g);
      const auto& theta = pick(auts);
      const unsigned n = 2 + static_cast<unsigned>(below(max_arity - 1));
      std::vector<Element> bs;
      for (Element b = 0; b < g.order(); ++b)
        if (theta(b) == b && power(theta, n - 1) == inner_automorphism(g, b)) bs.push_back(b);
      if (bs.empty()) continue;
      return derive(g, theta, pick(bs), n);
    }
  }

 private:
  std::mt19937_64 rng_;
};

TEST(GroupProperties, ConstructedGroupsAreGroups) {
  Gen gen(1);
  for (int t = 0; t < trials; ++t) {
    const auto g = gen.group();
    const oracle::Table table(g.table().begin(), g.table().end());
    ASSERT_TRUE(oracle::is_group(table, g.order()));
    EXPECT_EQ(oracle::identity_of(table, g.order()), g.identity());
    for (Element x = 0; x < g.order(); ++x) {
      EXPECT_EQ(g.inv(x), oracle::inverse(table, g.order(), x));
      EXPECT_EQ(g.element_order(x), oracle::element_order(table, g.order(), x));
    }
  }
}

TEST(GroupProperties, AutomorphismGroupIsAGroup) {
  Gen gen(2);
  for (int t = 0; t < trials; ++t) {
    const auto g = gen.group(8);
    const auto auts = automorphism_group(g);
    std::set<std::vector<Element>> set;
    for (const auto& a : auts) set.insert(a.table());
    ASSERT_EQ(set.size(), auts.size());
    EXPECT_TRUE(set.count(GroupMap::identity(g).table()));
    EXPECT_TRUE(std::is_sorted(auts.begin(), auts.end()));
    for (const auto& a : auts) {
      EXPECT_TRUE(set.count(invert(a).table()));
      for (const auto& b : auts) EXPECT_TRUE(set.count(compose(a, b).table()));
    }
    if (g.order() <= 6) {
      const auto brute = oracle::automorphisms({g.table().begin(), g.table().end()}, g.order());
      EXPECT_EQ(brute.size(), auts.size());
    }
  }
}

TEST(GroupProperties, InnerAutomorphismsCompose) {
  Gen gen(3);
  for (int t = 0; t < trials; ++t) {
    const auto g = gen.group();
    const Element u = static_cast<Element>(gen.below(g.order()));
    const Element v = static_cast<Element>(gen.below(g.order()));
    EXPECT_EQ(compose(inner_automorphism(g, u), inner_automorphism(g, v)), inner_automorphism(g, g.mul(u, v)));
  }
}

TEST(GroupProperties, TrivialActionIsDirectProduct) {
  Gen gen(4);
  for (int t = 0; t < trials; ++t) {
    const auto g = gen.group(8);
    const std::size_t k = 1 + gen.below(4);
    const auto sd = semidirect_product(k, g, CyclicAction(k, GroupMap::identity(g)));
    EXPECT_EQ(sd.group, direct_product(cyclic_group(k), g));
  }
}

TEST(GroupProperties, QuotientOrder) {
  Gen gen(5);
  for (int t = 0; t < trials; ++t) {
    const auto g = gen.group();
    const std::vector<Element> seed{static_cast<Element>(gen.below(g.order()))};
    const auto h = subgroup_generated(g, seed);
    std::vector<Element> normal_closure = h;
    for (Element x = 0; x < g.order(); ++x)
      for (auto y : h) normal_closure.push_back(g.mul(g.mul(x, y), g.inv(x)));
    const auto n = subgroup_generated(g, normal_closure);
    const auto q = normal_quotient(g, n);
    EXPECT_EQ(q.group.order() * n.size(), g.order());
  }
}

TEST(GroupProperties, IsomorphismSearchFindsRelabelings) {
  Gen gen(6);
  for (int t = 0; t < trials; ++t) {
    const auto g = gen.group();
    const auto h = relabel(g, gen.permutation(g.order()));
    const auto iso = isomorphism_search(g, h);
    ASSERT_TRUE(iso.has_value());
    EXPECT_FALSE(homomorphism_violation(g, h, iso->table()).has_value());
  }
}

TEST(NaryProperties, DerivedOperationsAreNaryGroups) {
  Gen gen(7);
  for (int t = 0; t < trials; ++t) {
    const auto g = gen.derived_any(6, 4);
    const auto& d = g.derived();
    const oracle::Derived o{{d.base.table().begin(), d.base.table().end()}, d.base.order(),
                            {d.theta.table().begin(), d.theta.table().end()}, d.b, g.arity()};
    EXPECT_TRUE(oracle::is_nary_group(o, g.arity(), g.size()));
    EXPECT_TRUE(verify_nary_axioms(g).ok());
  }
}

TEST(NaryProperties, DornteNeutralSequences) {
  Gen gen(8);
  for (int t = 0; t < trials; ++t) {
    const auto g = gen.derived_any();
    const auto skew = skew_table(g);
    EXPECT_TRUE(skew.placement_mismatches.empty());
    const unsigned n = g.arity();
    for (Element a = 0; a < g.size(); ++a)
      for (Element x = 0; x < g.size(); ++x) {
        std::vector<Element> left{x}, right{skew[a]};
        left.insert(left.end(), n - 2, a);
        right.insert(right.end(), n - 2, a);
        left.push_back(skew[a]);
        right.push_back(x);
        EXPECT_EQ(eval_long(g, left), x);
        EXPECT_EQ(eval_long(g, right), x);
      }
  }
}

TEST(NaryProperties, ReducedFormula) {
  Gen gen(9);
  for (int t = 0; t < trials; ++t) {
    const auto g = gen.derived();
    const auto& d = g.derived();
    const unsigned n = g.arity();
    std::vector<Element> x(n);
    for (std::uint64_t i = 0; i < g.tuple_count(); ++i) {
      decode_tuple(i, g.size(), x);
      Element acc = x[0];
      for (unsigned k = 1; k + 1 < n; ++k) acc = d.base.mul(acc, g.theta_power(k, x[k]));
      acc = d.base.mul(acc, x[n - 1]);
      ASSERT_EQ(g.eval_raw(x.data()), acc);
    }
  }
}

TEST(NaryProperties, DecompositionRoundTrip) {
  Gen gen(10);
  for (int t = 0; t < trials; ++t) {
    const auto g = gen.derived_any();
    const auto moved = relabel(g, gen.permutation(g.size()));
    const Element anchor = static_cast<Element>(gen.below(g.size()));
    const auto d = hosszu_gluskin_decompose(moved, anchor);
    EXPECT_EQ(d.retract.identity(), skew_table(moved)[anchor]);
    EXPECT_FALSE(first_difference(derive(d.retract, d.theta, d.b, g.arity()), moved).has_value());
  }
}

TEST(NaryProperties, IdempotentCriterion) {
  Gen gen(11);
  for (int t = 0; t < trials; ++t) {
    const auto g = gen.derived();
    const auto& d = g.derived();
    const auto idem = idempotents(g);
    for (Element u = 0; u < g.size(); ++u) {
      Element acc = u;
      for (unsigned k = 1; k + 1 < g.arity(); ++k) acc = d.base.mul(acc, g.theta_power(k, u));
      EXPECT_EQ(std::binary_search(idem.begin(), idem.end(), u), acc == d.base.identity());
    }
  }
}

TEST(AutProperties, SkewFixesImageOfIdentity) {
  Gen gen(12);
  for (int t = 0; t < trials; ++t) {
    const auto g = gen.derived(6, 4);
    const auto skew = skew_table(g);
    for (const auto& a : nary_automorphisms(g)) EXPECT_EQ(skew[a.u()], a.u());
  }
}

TEST(AutProperties, LiftsAndIdentities) {
  Gen gen(13);
  for (int t = 0; t < trials; ++t) {
    const auto g = gen.derived(6, 4);
    const auto& d = g.derived();
    const auto& G = d.base;
    const auto c = post_cover(g, G.identity());
    const auto sd = semidirect_of(g);
    const auto psi = semidirect_cover_iso(c, sd);
    const auto auts = nary_automorphisms(g);
    for (const auto& a : auts) {
      const auto star = lift_to_cover(a, c);
      EXPECT_EQ(lift_to_semidirect(a, g, sd), compose(invert(psi), compose(star, psi)));
      const auto at_u = post_cover(g, a.u());
      EXPECT_EQ(compose(rebase_to_identity(at_u, c), transport_to_anchor(a, c, at_u)), star);
    }
    for (std::size_t p = 0; p < auts.size() && p < 6; ++p)
      for (std::size_t q = 0; q < auts.size() && q < 6; ++q)
        EXPECT_EQ(lift_to_cover(compose(g, auts[p], auts[q]), c),
                  compose(lift_to_cover(auts[p], c), lift_to_cover(auts[q], c)));
    // The telescoping identity holds for every u without reducing i+j+1.
    const unsigned r = g.arity() - 1;
    for (Element u = 0; u < G.order(); ++u)
      for (unsigned i = 0; i < r; ++i)
        for (unsigned j = 0; j < r; ++j) {
          const auto lhs = g.theta_power(i + 1, orbit_product(g, j, u));
          const auto rhs = G.mul(G.mul(g.theta_power(i + 1, G.inv(u)), G.inv(orbit_product(g, i, u))),
                                 orbit_product(g, i + j + 1, u));
          EXPECT_EQ(lhs, rhs);
        }
  }
}

TEST(AutProperties, ExtensionMapsPreserveComponent) {
  Gen gen(14);
  for (int t = 0; t < trials; ++t) {
    const auto g = gen.derived(6, 4);
    const auto hat = semidirect_of(g);
    const auto& G = hat.base;
    const auto theta = conjugation_by_generator(hat);
    EXPECT_EQ(theta, g.derived().theta);
    const auto census = extension_census(hat);
    EXPECT_TRUE(census.ok());
    for (const auto& phi : automorphism_group(G))
      for (Element u = 0; u < G.order(); ++u) {
        try {
          const auto m = extension_automorphism(hat, phi, u);
          for (std::size_t i = 0; i < hat.modulus(); ++i)
            for (Element x = 0; x < G.order(); ++x) EXPECT_EQ(hat.decode(m.map(hat.encode(i, x))).first, i);
          for (Element x = 0; x < G.order(); ++x)
            EXPECT_EQ(m.map(hat.embed(x)), hat.embed(G.mul(G.mul(G.inv(u), phi(x)), u)));
        } catch (const Error& e) {
          EXPECT_EQ(e.code(), Errc::hypothesis_failed);
        }
      }
  }
}

TEST(CoverProperties, StructureOnRandomAnchors) {
  Gen gen(15);
  for (int t = 0; t < trials; ++t) {
    const auto base = gen.derived_any(6, 4);
    const auto g = relabel(base, gen.permutation(base.size()));
    const Element a = static_cast<Element>(gen.below(g.size()));
    const auto c = post_cover(g, a);
    EXPECT_EQ(c.group().order(), (g.arity() - 1) * g.size());
    EXPECT_TRUE(base_embedding_check(c).ok());
    EXPECT_TRUE(r_subgroup_report(c).ok());
    const Element b = static_cast<Element>(gen.below(g.size()));
    EXPECT_NO_THROW(covers_isomorphic(g, a, b));
  }
}

TEST(Parallelism, ResultsIndependentOfThreadCount) {
  const auto z4 = cyclic_group(4);
  const auto g = materialize(derive(z4, theta_preset(z4, "neg"), 0, 3));
  std::vector<Element> values(g.table_values().begin(), g.table_values().end());
  values[values.size() / 2] = (values[values.size() / 2] + 1) % 4;
  const auto bad = NaryGroup::from_table(3, 4, values);
  auto run = [&] {
    const auto r = verify_nary_axioms(bad);
    std::vector<std::vector<Element>> out;
    for (const auto& f : r.associativity_failures) out.push_back(f.arguments);
    for (const auto& f : r.solvability_failures) out.push_back(f.arguments);
    return out;
  };
  set_thread_count(1);
  const auto serial = run();
  set_thread_count(4);
  const auto parallel = run();
  set_thread_count(0);
  EXPECT_FALSE(serial.empty());
  EXPECT_EQ(serial, parallel);
}

}  // namespace
}  // namespace polyad
