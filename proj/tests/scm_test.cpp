#include <gtest/gtest.h>

#include "support.hpp"

using namespace suffcause;
using namespace testing_support;

namespace {

ResponseTable fair_root() { return ResponseTable::uniform(0, {0, 1}); }

// D = E1 | E2 over two independent fair roots.
Scm or_model() {
  Dag g;
  for (auto n : {"E1", "E2", "D"}) g.add_node(n);
  g.add_edge("E1", "D");
  g.add_edge("E2", "D");
  return Scm(g, {fair_root(), fair_root(), ResponseTable::deterministic(2, 0b1110)});
}

std::map<std::vector<std::uint32_t>, Rational> nonzero(std::map<std::vector<std::uint32_t>, Rational> m) {
  std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
  return m;
}

}  // namespace

TEST(Equation, IdentityMechanism) {
  ResponseTable t = ResponseTable::deterministic(1, 0b10);
  EXPECT_TRUE(eval_node(t, 0, 1));
  EXPECT_FALSE(eval_node(t, 0, 0));
}

TEST(Equation, ConstantZero) {
  ResponseTable t = ResponseTable::deterministic(2, 0);
  for (std::size_t c = 0; c < 4; ++c) EXPECT_FALSE(eval_node(t, 0, c));
}

TEST(Equation, CausativeResponseState) {
  // f(1) = 1, f(0) = 0 together with the other three single-parent states
  ResponseTable t = table_of(1, {0b11, 0b10, 0b01, 0b00});
  EXPECT_TRUE(eval_node(t, 1, 1));
  EXPECT_FALSE(eval_node(t, 1, 0));
}

TEST(Equation, RejectsBadTables) {
  EXPECT_THROW(ResponseTable(1, {0b100}, {Rational(1)}), ModelError);
  EXPECT_THROW(ResponseTable(1, {0, 1}, {Rational(1, 2), Rational(5, 8)}), ModelError);
  EXPECT_THROW(ResponseTable(1, {0}, {Rational(1), Rational(0)}), ModelError);
  EXPECT_THROW(ResponseTable(7, {0}, {Rational(1)}), ModelError);
}

TEST(Joint, ConstantRoot) {
  Dag g;
  g.add_node("X");
  Scm m(g, {ResponseTable::deterministic(0, 1)});
  auto dist = joint_distribution(m);
  EXPECT_EQ(probability(dist, {{0, 1}}), 1);
}

TEST(Joint, DisjunctionOfFairBits) {
  auto dist = joint_distribution(or_model());
  EXPECT_EQ(probability(dist, {{2, 1}}), Rational(3, 4));
  EXPECT_EQ(dist.total(), 1);
}

TEST(Joint, TwoFairBitsUniform) {
  Dag g;
  g.add_node("X");
  g.add_node("Y");
  auto dist = joint_distribution(Scm(g, {fair_root(), fair_root()}));
  auto m = dist.marginal({0, 1});
  ASSERT_EQ(m.size(), 4u);
  for (const auto& [k, p] : m) EXPECT_EQ(p, Rational(1, 4));
}

TEST(Joint, BudgetEnforced) {
  EXPECT_THROW(joint_distribution(or_model(), 3), BudgetError);
  EXPECT_NO_THROW(joint_distribution(or_model(), 4));
}

TEST(Dedupe, MergesIdenticalRows) {
  ResponseTable t(0, {1, 1}, {Rational(1, 3), Rational(2, 3)});
  ResponseTable d = dedupe_states(t);
  ASSERT_EQ(d.num_states(), 1u);
  EXPECT_EQ(d.probability(0), 1);
  EXPECT_EQ(d.row(0), 1u);
}

TEST(Dedupe, DistinctRowsUnchanged) {
  ResponseTable t = table_of(1, {0b01, 0b10});
  EXPECT_EQ(dedupe_states(t), t);
}

TEST(Dedupe, EverySingleParentMechanismOnce) {
  ResponseTable t = table_of(1, {0, 1, 2, 3, 3, 2, 1, 0});
  ResponseTable d = dedupe_states(t);
  EXPECT_EQ(d.num_states(), 4u);
  for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(d.probability(j), Rational(1, 4));
}

// Substituting the equations of the marginalized nodes leaves the joint law
// of the retained nodes unchanged.
TEST(Substitute, PreservesRetainedMarginal) {
  Rng rng(5);
  int done = 0;
  for (int trial = 0; trial < 400 && done < 150; ++trial) {
    const std::size_t n = 3 + rng.below(3);
    Dag g = dag_from_mask(n, rng.below(std::uint64_t{1} << (n * (n - 1) / 2)));
    NodeSet w;
    for (std::size_t i = 0; i < n; ++i)
      if (rng.below(3) == 0) w.insert(i);
    if (w.empty() || w.size() == n || !can_marginalize(g, w)) continue;
    InstanceConstraints c;
    c.max_states = 2;
    Scm m = random_instance(g, c, rng);
    std::optional<Scm> s;
    try {
      s.emplace(substitute(m, w));
    } catch (const ModelError&) {
      continue;  // a retained node gained too many parents
    }
    auto full = joint_distribution(m);
    auto part = joint_distribution(*s);
    std::vector<std::size_t> in_full, in_part;
    for (std::size_t i = 0; i < s->graph().size(); ++i) {
      in_part.push_back(i);
      in_full.push_back(g.index(s->graph().name(i)));
    }
    ASSERT_EQ(nonzero(full.marginal(in_full)), nonzero(part.marginal(in_part))) << "trial " << trial;
    ++done;
  }
  EXPECT_GE(done, 100);
}
