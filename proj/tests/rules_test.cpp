#include <gtest/gtest.h>

#include <map>
#include <set>

#include "printers.hpp"
#include "sample_sets.hpp"
#include "sesqui/parse.hpp"
#include "sesqui/rules.hpp"
#include "sesqui/term_notation.hpp"
#include "sesqui/tree_enum.hpp"

namespace sesqui {
namespace {

using T = Term<Cell>;

class RulesTest : public ::testing::Test {
 protected:
  GlobularSet L = samples::loop_set();
  T leaf(const char* n) { return T::leaf(cell(L, n)); }
  T a = leaf("a"), f = leaf("f"), g = leaf("g"), alpha = leaf("alpha"), beta = leaf("beta");
};

TEST_F(RulesTest, NamesRoundtrip) {
  for (RuleId r : all_rules) EXPECT_EQ(rule_from_name(rule_name(r)), r);
  EXPECT_FALSE(rule_from_name("cong_u"));
  EXPECT_EQ(rule_table().size(), 14u);
}

TEST_F(RulesTest, LeftUnitBothWays) {
  auto lhs = T::comp(1, 2, T::unit(1, a), alpha);
  EXPECT_EQ(apply_rule(lhs, RuleId::L_ik, {}, Direction::L2R), alpha);
  EXPECT_EQ(apply_rule(alpha, RuleId::L_ik, {}, Direction::R2L, 1), lhs);
  // i = k inserts the unit on the target
  EXPECT_EQ(apply_rule(alpha, RuleId::L_ik, {}, Direction::R2L, 2), T::comp(2, 2, T::unit(2, g), alpha));
  EXPECT_EQ(apply_rule(alpha, RuleId::R_ki, {}, Direction::R2L, 2), T::comp(2, 2, alpha, T::unit(2, f)));
}

TEST_F(RulesTest, UnitIndexIsRequiredAndBounded) {
  for (std::optional<int> p : {std::optional<int>(), std::optional<int>(0), std::optional<int>(3)}) {
    try {
      apply_rule(alpha, RuleId::L_ik, {}, Direction::R2L, p);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::PatternMismatch);
    }
  }
}

TEST_F(RulesTest, WhiskeredUnitMovesOutward) {
  // rho_{i,k}: x o_{1,2} u_2(y) = u_2(x o_{1,1} y)
  auto lhs = T::comp(1, 2, f, T::unit(2, g));
  auto rhs = T::unit(2, T::comp(1, 1, f, g));
  EXPECT_EQ(apply_rule(lhs, RuleId::R_ik, {}, Direction::L2R), rhs);
  EXPECT_EQ(apply_rule(rhs, RuleId::R_ik, {}, Direction::R2L), lhs);
  EXPECT_EQ(apply_rule(rhs, RuleId::L_ki, {}, Direction::R2L), T::comp(2, 1, T::unit(2, f), g));
}

TEST_F(RulesTest, Associativity) {
  auto lhs = T::comp(2, 2, T::comp(2, 2, alpha, beta), alpha);
  auto rhs = T::comp(2, 2, alpha, T::comp(2, 2, beta, alpha));
  EXPECT_EQ(apply_rule(lhs, RuleId::C_kkk, {}, Direction::L2R), rhs);
  EXPECT_EQ(apply_rule(rhs, RuleId::C_kkk, {}, Direction::R2L), lhs);
}

TEST_F(RulesTest, DistributivityDuplicates) {
  auto lhs = T::comp(1, 2, f, T::comp(2, 2, alpha, beta));
  auto rhs = T::comp(2, 2, T::comp(1, 2, f, alpha), T::comp(1, 2, f, beta));
  EXPECT_EQ(apply_rule(lhs, RuleId::C_ikk, {}, Direction::L2R), rhs);
  EXPECT_EQ(apply_rule(rhs, RuleId::C_ikk, {}, Direction::R2L), lhs);
  // the copies must agree syntactically
  auto mixed = T::comp(2, 2, T::comp(1, 2, f, alpha), T::comp(1, 2, g, beta));
  try {
    apply_rule(mixed, RuleId::C_ikk, {}, Direction::R2L);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PatternMismatch);
  }
}

TEST_F(RulesTest, DistributivityRightToLeftRechecksConditions) {
  // the copies agree, but alpha cannot follow alpha
  auto bad = T::comp(2, 2, T::comp(1, 2, f, alpha), T::comp(1, 2, f, alpha));
  try {
    apply_rule(bad, RuleId::C_ikk, {}, Direction::R2L);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SideConditionFailed);
  }
}

TEST_F(RulesTest, MismatchAndAddresses) {
  auto t = T::comp(2, 2, alpha, beta);
  EXPECT_THROW(apply_rule(t, RuleId::C_kkk, {}, Direction::L2R), Error);
  EXPECT_THROW(apply_rule(t, RuleId::C_kkk, {0, 0}, Direction::L2R), Error);
  // rewriting below the root
  auto inner = T::comp(1, 2, T::unit(1, a), alpha);
  auto u = T::comp(2, 2, beta, inner);
  EXPECT_EQ(apply_rule(u, RuleId::L_ik, {1}, Direction::L2R), T::comp(2, 2, beta, alpha));
}

TEST_F(RulesTest, EveryRewritePreservesValueAndValidity) {
  auto e = enumerate_trees(L, 3, 7);
  std::map<RuleId, int> fired;
  for (auto& by_dim : e)
    for (auto& v : by_dim)
      for (const auto& t : v)
        for (const auto& r : rewrites(t)) {
          ++fired[r.rule];
          ASSERT_TRUE(is_valid(r.result)) << print_term(t) << " --" << rule_name(r.rule) << "--> " << print_term(r.result);
          EXPECT_EQ(eval_phi(r.result), eval_phi(t)) << print_term(t) << " --" << rule_name(r.rule) << "-->";
        }
  // every rule is exercised somewhere in this range except the three-level ones
  for (RuleId r : all_rules) {
    bool chain = r == RuleId::C_ijk || r == RuleId::C_ikj || r == RuleId::C_jki || r == RuleId::C_kji;
    if (!chain) EXPECT_GT(fired[r], 0) << rule_name(r);
  }
}

TEST_F(RulesTest, LeftToRightIsUndoneRightToLeft) {
  auto e = enumerate_trees(L, 3, 7);
  for (auto& by_dim : e)
    for (auto& v : by_dim)
      for (const auto& t : v)
        for (const auto& r : rewrites(t)) {
          if (r.dir != Direction::L2R || r.rule == RuleId::L_ik || r.rule == RuleId::R_ki) continue;
          auto back = apply_rule(r.result, r.rule, r.at, Direction::R2L);
          EXPECT_EQ(back, t) << rule_name(r.rule);
        }
}

TEST_F(RulesTest, ClosureExamples) {
  EXPECT_EQ(rewrite_closure(a, 9).trees, std::set<T>{a});
  auto c = rewrite_closure(f, 3);
  EXPECT_EQ(c.trees, std::set<T>{f});
  EXPECT_GT(c.escaped, 0);
  auto lhs = T::comp(2, 2, T::comp(2, 2, alpha, beta), alpha);
  auto rhs = T::comp(2, 2, alpha, T::comp(2, 2, beta, alpha));
  auto cl = rewrite_closure(lhs, 5);
  EXPECT_TRUE(cl.trees.count(lhs));
  EXPECT_TRUE(cl.trees.count(rhs));
  EXPECT_THROW(rewrite_closure(lhs, 4), Error);
}

// Small version of the desk-scale injectivity check: closures are exactly
// the evaluation fibres.
TEST_F(RulesTest, ClosureIsTheFibre) {
  const int bound = 7;
  auto e = enumerate_trees(L, 3, bound);
  std::map<Labelling, std::set<T>> fibre;
  for (auto& by_dim : e)
    for (auto& v : by_dim)
      for (const auto& t : v) fibre[eval_phi(t)].insert(t);
  for (int s = 1; s <= 5; ++s)
    for (auto& v : e[static_cast<std::size_t>(s)])
      for (const auto& t : v) EXPECT_EQ(rewrite_closure(t, bound).trees, fibre[eval_phi(t)]) << print_term(t);
}

}  // namespace
}  // namespace sesqui
