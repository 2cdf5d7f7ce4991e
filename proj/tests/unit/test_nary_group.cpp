#include <gtest/gtest.h>

#include <sstream>

#include "oracles.hpp"
#include "polyad/catalog.hpp"
#include "polyad/error.hpp"
#include "polyad/hosszu_gluskin.hpp"
#include "polyad/nary_group.hpp"
#include "polyad/nary_io.hpp"

namespace polyad {
namespace {

template <typename F>
Error capture(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "expected polyad::Error";
  return Error(Errc::invalid_argument, "none");
}

NaryGroup der(std::size_t m, const char* theta, unsigned n, Element b = 0) {
  const auto g = cyclic_group(m);
  return derive(g, theta_preset(g, theta), b, n);
}

Element f(const NaryGroup& g, std::vector<Element> args) { return eval_f(g, args); }

TEST(Derive, IdentityThetaIsSum) {
  const auto g = der(3, "id", 3);
  oracle::for_each_tuple(3, 3, [&](const std::vector<std::uint32_t>& x) {
    EXPECT_EQ(f(g, {x[0], x[1], x[2]}), (x[0] + x[1] + x[2]) % 3);
  });
  EXPECT_TRUE(g.verified());
  EXPECT_TRUE(g.derived_at_identity());
}

TEST(Derive, NegationExamples) {
  const auto g = der(3, "neg", 3);
  EXPECT_EQ(f(g, {1, 2, 0}), 2u);
  for (Element x = 0; x < 3; ++x) EXPECT_EQ(f(g, {x, 0, 0}), x);
  EXPECT_EQ(f(g, {2, 2, 2}), 2u);
}

TEST(Derive, ThetaMustFixB) {
  const auto e = capture([] { der(3, "neg", 3, 1); });
  EXPECT_EQ(e.code(), Errc::derivation_condition_failed);
  EXPECT_EQ(e.detail(), "theta-b-fixed");
  EXPECT_EQ(e.witness(), (std::vector<std::int64_t>{1, 2}));
}

TEST(Derive, ThetaPowerCondition) {
  const auto e = capture([] { der(5, "mul2", 3); });
  EXPECT_EQ(e.code(), Errc::derivation_condition_failed);
  EXPECT_EQ(e.detail(), "theta-power");
  ASSERT_EQ(e.witness().size(), 3u);
  EXPECT_NE(e.witness()[1], e.witness()[2]);
}

TEST(Derive, NonIdentityB) {
  const auto g = der(4, "id", 3, 2);
  EXPECT_FALSE(g.derived_at_identity());
  EXPECT_EQ(f(g, {1, 1, 1}), 1u);
  const auto s3 = symmetric_group_3();
  EXPECT_EQ(capture([&] { derive(s3, GroupMap::identity(s3), 1, 3); }).detail(), "theta-power");
}

TEST(EvalF, Examples) {
  EXPECT_EQ(f(der(3, "id", 3), {1, 1, 1}), 0u);
  const auto e = capture([] { f(der(3, "id", 3), {1, 1}); });
  EXPECT_EQ(e.code(), Errc::arity_mismatch);
}

TEST(EvalLong, Examples) {
  const auto g = der(3, "neg", 3);
  EXPECT_EQ(eval_long(g, std::vector<Element>{2}), 2u);
  EXPECT_EQ(eval_long(g, std::vector<Element>{1, 0, 0, 0, 2}), 0u);
  EXPECT_EQ(eval_long(g, std::vector<Element>{0, 0, 0}), 0u);
  const auto e = capture([&] { eval_long(g, std::vector<Element>{1, 2}); });
  EXPECT_EQ(e.code(), Errc::bad_length);
  EXPECT_EQ(e.witness(), (std::vector<std::int64_t>{2, 2}));
  EXPECT_EQ(capture([&] { eval_long(g, std::vector<Element>{}); }).code(), Errc::bad_length);
}

TEST(EvalF, MatchesFormulaOracle) {
  for (const auto& entry : catalog_all()) {
    const auto g = entry.nary();
    const auto m = entry.base.order();
    const oracle::Derived o{{entry.base.table().begin(), entry.base.table().end()}, m,
                            {entry.theta.table().begin(), entry.theta.table().end()}, 0, entry.arity};
    oracle::for_each_tuple(m, entry.arity, [&](const std::vector<std::uint32_t>& x) {
      ASSERT_EQ(eval_f(g, std::vector<Element>(x.begin(), x.end())), o(x)) << entry.name;
    });
  }
}

TEST(Axioms, DerivedGroupsPass) {
  for (const auto& entry : catalog_all()) {
    const auto report = verify_nary_axioms(entry.nary());
    EXPECT_TRUE(report.ok()) << entry.name;
    std::uint64_t tuples = 1;
    for (unsigned k = 0; k < 2 * entry.arity - 1; ++k) tuples *= entry.base.order();
    EXPECT_EQ(report.associativity_instances, (entry.arity - 1) * tuples) << entry.name;
  }
}

TEST(Axioms, CorruptedTableFails) {
  const auto g = materialize(der(3, "neg", 3));
  std::vector<Element> values(g.table_values().begin(), g.table_values().end());
  values[0] = 1;
  const auto bad = NaryGroup::from_table(3, 3, values);
  EXPECT_FALSE(bad.verified());
  const auto report = verify_nary_axioms(bad);
  ASSERT_FALSE(report.associativity_failures.empty());
  const auto& w = report.associativity_failures.front();
  EXPECT_EQ(w.arguments.size(), 5u);
  EXPECT_NE(w.left, w.right);
  const auto e = capture([&] { verified(bad); });
  EXPECT_EQ(e.code(), Errc::not_nary_group);
  EXPECT_EQ(capture([&] { skew_table(bad); }).code(), Errc::not_verified);
}

TEST(Axioms, NonSolvableTable) {
  // f(x,y,z) = min(x,y,z) on {0,1} is associative but not solvable.
  std::vector<Element> values(8);
  for (Element i = 0; i < 8; ++i) values[i] = (i == 7) ? 1 : 0;
  const auto g = NaryGroup::from_table(3, 2, values);
  const auto report = verify_nary_axioms(g);
  EXPECT_TRUE(report.associativity_failures.empty());
  EXPECT_FALSE(report.solvability_failures.empty());
  EXPECT_EQ(capture([&] { verified(g); }).detail(), "not-solvable");
}

TEST(Axioms, RelabeledTablePasses) {
  const auto g = der(3, "neg", 3);
  const std::vector<Element> cycle{1, 2, 0};
  const auto moved = relabel(g, cycle);
  EXPECT_FALSE(moved.is_derived());
  EXPECT_TRUE(verify_nary_axioms(moved).ok());
  oracle::for_each_tuple(3, 3, [&](const std::vector<std::uint32_t>& x) {
    EXPECT_EQ(f(moved, {cycle[x[0]], cycle[x[1]], cycle[x[2]]}), cycle[f(g, {x[0], x[1], x[2]})]);
  });
}

TEST(Axioms, Budget) {
  Limits limits;
  limits.axiom_budget = 100;
  EXPECT_EQ(capture([&] { verify_nary_axioms(der(3, "id", 3), limits); }).code(), Errc::budget_exceeded);
  limits = Limits{};
  limits.table_max = 10;
  EXPECT_EQ(capture([&] { materialize(der(3, "id", 3), limits); }).code(), Errc::budget_exceeded);
}

TEST(Skew, Examples) {
  const auto neg = skew_table(der(3, "neg", 3));
  EXPECT_EQ(neg.skew, (std::vector<Element>{0, 1, 2}));
  EXPECT_TRUE(neg.placement_mismatches.empty());
  const auto id5 = skew_table(der(5, "id", 3));
  for (Element x = 0; x < 5; ++x) EXPECT_EQ(id5[x], (5 - x) % 5);
  for (const auto& entry : catalog_all()) EXPECT_EQ(skew_table(entry.nary())[entry.base.identity()], entry.base.identity());
}

TEST(Idempotents, Examples) {
  EXPECT_EQ(idempotents(der(3, "neg", 3)), (std::vector<Element>{0, 1, 2}));
  EXPECT_EQ(idempotents(der(4, "id", 3)), (std::vector<Element>{0, 2}));
  for (const auto& entry : catalog_all()) {
    const auto idem = idempotents(entry.nary());
    EXPECT_NE(std::find(idem.begin(), idem.end(), entry.base.identity()), idem.end());
  }
}

TEST(Homomorphism, Examples) {
  const auto neg = der(3, "neg", 3);
  const std::vector<Element> id{0, 1, 2}, shift{1, 2, 0};
  EXPECT_TRUE(is_nary_homomorphism(neg, neg, id));
  EXPECT_TRUE(is_nary_homomorphism(neg, neg, shift));
  const auto id4 = der(4, "id", 3);
  const auto check = is_nary_homomorphism(id4, id4, std::vector<Element>{1, 2, 3, 0});
  EXPECT_FALSE(check.holds);
  EXPECT_EQ(check.witness, (std::vector<Element>{0, 0, 0}));
  EXPECT_EQ(capture([&] { is_nary_homomorphism(neg, neg, std::vector<Element>{0, 1, 7}); }).code(), Errc::invalid_argument);
  EXPECT_EQ(capture([&] { is_nary_homomorphism(neg, der(3, "neg", 5), id); }).code(), Errc::arity_mismatch);
}

TEST(Decompose, DerivedAtIdentityRoundTrip) {
  for (const auto& entry : catalog_all()) {
    const auto g = entry.nary();
    const auto d = hosszu_gluskin_decompose(g, entry.base.identity());
    EXPECT_TRUE(d.closed_form);
    EXPECT_EQ(d.retract, entry.base) << entry.name;
    EXPECT_EQ(d.theta, entry.theta) << entry.name;
    EXPECT_EQ(d.b, entry.base.identity());
  }
}

TEST(Decompose, RelabeledNegation) {
  const auto g = der(3, "neg", 3);
  std::mt19937_64 rng(7);
  const auto perm = oracle::random_permutation(3, rng);
  const auto moved = relabel(g, std::vector<Element>(perm.begin(), perm.end()));
  const auto d = hosszu_gluskin_decompose(moved, 0);
  EXPECT_FALSE(first_difference(derive(d.retract, d.theta, d.b, 3), moved).has_value());
}

TEST(Decompose, BinaryCase) {
  const auto s3 = symmetric_group_3();
  const auto g = derive(s3, GroupMap::identity(s3), 0, 2);
  const auto d = hosszu_gluskin_decompose(g, 0);
  EXPECT_EQ(d.retract, s3);
  EXPECT_TRUE(d.theta.is_identity());
  EXPECT_EQ(d.b, 0u);
}

TEST(Decompose, SearchPathAgrees) {
  for (const auto& entry : catalog_all()) {
    const auto g = entry.nary();
    for (Element a = 0; a < g.size(); ++a) {
      const auto d = search_decomposition(g, a);
      EXPECT_FALSE(d.closed_form);
      EXPECT_FALSE(first_difference(derive(d.retract, d.theta, d.b, g.arity()), g).has_value()) << entry.name;
    }
  }
}

TEST(Decompose, NonIdentityAnchorGivesNonTrivialB) {
  const auto g = der(4, "id", 3);
  const auto d = hosszu_gluskin_decompose(g, 1);
  EXPECT_EQ(d.retract.identity(), skew_table(g)[1]);
  EXPECT_FALSE(first_difference(derive(d.retract, d.theta, d.b, 3), g).has_value());
}

TEST(NaryIo, RoundTripDerived) {
  const auto g = der(5, "mul2", 5);
  std::stringstream ss;
  write_nary(ss, g);
  const auto back = read_nary(ss);
  EXPECT_TRUE(back.is_derived());
  EXPECT_EQ(back.arity(), 5u);
  EXPECT_FALSE(first_difference(g, back).has_value());
  std::stringstream again;
  write_nary(again, back);
  std::stringstream first;
  write_nary(first, g);
  EXPECT_EQ(first.str(), again.str());
}

TEST(NaryIo, RoundTripTable) {
  const auto g = materialize(der(3, "neg", 3));
  std::stringstream ss;
  write_nary(ss, g);
  const auto back = read_nary(ss);
  EXPECT_FALSE(back.is_derived());
  EXPECT_TRUE(back.verified());
  EXPECT_FALSE(first_difference(g, back).has_value());
}

TEST(NaryIo, Errors) {
  std::istringstream bad_header("nary 3\n");
  EXPECT_EQ(capture([&] { read_nary(bad_header); }).code(), Errc::parse_error);
  std::istringstream bad_kind("nary 3 2 sparse\n");
  EXPECT_EQ(capture([&] { read_nary(bad_kind); }).code(), Errc::parse_error);
  std::istringstream bad_table("nary 3 2 table\n0 0 0 0 0 0 0 1\n");
  EXPECT_EQ(capture([&] { read_nary(bad_table); }).code(), Errc::not_nary_group);
  std::istringstream bad_b("# comment\nnary 3 3 derived\n0 1 2\n1 2 0\n2 0 1\n0 2 1\n1\n");
  EXPECT_EQ(capture([&] { read_nary(bad_b); }).code(), Errc::derivation_condition_failed);
  std::istringstream trailing("nary 2 1 derived\n0\n0\n0\n5\n");
  EXPECT_EQ(capture([&] { read_nary(trailing); }).code(), Errc::parse_error);
}

}  // namespace
}  // namespace polyad
