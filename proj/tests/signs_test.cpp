#include <gtest/gtest.h>

#include "support.hpp"

using namespace suffcause;
using namespace testing_support;

namespace {

Dag signed_dag(std::size_t n, std::uint64_t mask, std::uint64_t sign_mask) {
  Dag g;
  for (std::size_t i = 0; i < n; ++i) g.add_node("N" + std::to_string(i));
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++k)
      if ((mask >> k) & 1) g.add_edge(i, j, (sign_mask >> k) & 1 ? EdgeSign::negative : EdgeSign::positive);
  return g;
}

}  // namespace

TEST(MonotonicEffect, Disjunction) {
  ResponseTable t = ResponseTable::deterministic(2, 0b1110);
  EXPECT_EQ(detect_monotonic_effect(t, 0), (MonotonicEffect{Sign::positive, false}));
  EXPECT_EQ(detect_monotonic_effect(t, 1), (MonotonicEffect{Sign::positive, false}));
}

TEST(MonotonicEffect, Complement) {
  EXPECT_EQ(detect_monotonic_effect(ResponseTable::deterministic(1, 0b01), 0).sign, Sign::negative);
}

TEST(MonotonicEffect, ExclusiveOr) {
  EXPECT_EQ(detect_monotonic_effect(ResponseTable::deterministic(2, 0b0110), 0).sign, Sign::undefined);
}

TEST(MonotonicEffect, IgnoredParentIsDegenerate) {
  ResponseTable t = ResponseTable::deterministic(2, 0b1010);  // output = first parent
  EXPECT_EQ(detect_monotonic_effect(t, 1), (MonotonicEffect{Sign::positive, true}));
  EXPECT_EQ(monotonic_effect_via_canonical(t, 1), (MonotonicEffect{Sign::positive, true}));
}

TEST(MonotonicEffect, ViaCanonicalTerms) {
  // the preventive state removed from the support
  ResponseTable no_prevent = table_of(1, {0b11, 0b10, 0b00});
  EXPECT_EQ(monotonic_effect_via_canonical(no_prevent, 0).sign, Sign::positive);
  ResponseTable full = table_of(1, {0b11, 0b10, 0b01, 0b00});
  EXPECT_EQ(monotonic_effect_via_canonical(full, 0).sign, Sign::undefined);
  EXPECT_EQ(monotonic_effect_via_canonical(ResponseTable::deterministic(1, 0b10), 0).sign, Sign::positive);
}

TEST(MonotonicEffect, CriteriaAgreeOnAllTwoParentSupports) {
  for (std::uint32_t support = 1; support < (1u << 16); support += 7) {
    std::vector<std::uint64_t> rows;
    for (std::uint64_t r = 0; r < 16; ++r)
      if ((support >> r) & 1) rows.push_back(r);
    ResponseTable t = table_of(2, rows);
    for (std::size_t p = 0; p < 2; ++p)
      ASSERT_EQ(detect_monotonic_effect(t, p), monotonic_effect_via_canonical(t, p)) << support;
  }
}

TEST(PathSign, Products) {
  Dag g;
  for (auto n : {"A", "B", "C", "D"}) g.add_node(n);
  g.add_edge("A", "B", EdgeSign::positive);
  g.add_edge("B", "C", EdgeSign::negative);
  g.add_edge("C", "D", EdgeSign::negative);
  EXPECT_EQ(path_sign(g, Path{{0, 1}, {true}}), Sign::positive);
  EXPECT_EQ(path_sign(g, Path{{0, 1, 2, 3}, {true, true, true}}), Sign::positive);
  EXPECT_EQ(path_sign(g, Path{{0, 1, 2}, {true, true}}), Sign::negative);
  g.set_edge_sign(2, 3, EdgeSign::none);
  EXPECT_EQ(path_sign(g, Path{{1, 2, 3}, {true, true}}), Sign::undefined);
  EXPECT_THROW(path_sign(g, Path{{1, 0}, {false}}), GraphError);
}

TEST(PathSign, SignSetsAvoidingANode) {
  Dag g;
  for (auto n : {"E", "D", "F"}) g.add_node(n);
  g.add_edge("E", "D", EdgeSign::positive);
  g.add_edge("D", "F", EdgeSign::negative);
  g.add_edge("E", "F", EdgeSign::positive);
  EXPECT_EQ(directed_path_signs(g, 0, 2), (std::set<Sign>{Sign::positive, Sign::negative}));
  EXPECT_EQ(directed_path_signs(g, 0, 2, 1), (std::set<Sign>{Sign::positive}));
  EXPECT_TRUE(directed_path_signs(g, 2, 0).empty());
}

TEST(Association, SingleEdge) {
  Dag g;
  g.add_node("X");
  g.add_node("Y");
  g.add_edge("X", "Y", EdgeSign::positive);
  EXPECT_EQ(monotonically_associated(g, 0, 1), Sign::positive);
}

TEST(Association, FamilyGraphAllPositive) {
  Dag g = fixture("family").graph;
  EXPECT_EQ(monotonically_associated(g, g.index("E1"), g.index("B1")), Sign::positive);
  EXPECT_EQ(qualitative_cov_sign(g, g.index("E1"), g.index("B1")), Sign::positive);
  EXPECT_EQ(qualitative_cov_sign(g, g.index("E1"), g.index("GP")), Sign::zero);
  EXPECT_EQ(qualitative_cov_sign(g, g.index("P2"), g.index("B1")), Sign::positive);
}

TEST(Association, OpposedCommonCause) {
  Dag g;
  for (auto n : {"C", "X", "Y"}) g.add_node(n);
  g.add_edge("C", "X", EdgeSign::positive);
  g.add_edge("C", "Y", EdgeSign::negative);
  EXPECT_EQ(monotonically_associated(g, 1, 2), Sign::negative);
}

TEST(Association, IsolatedAndUnsigned) {
  Dag g;
  for (auto n : {"X", "Y", "Z"}) g.add_node(n);
  EXPECT_EQ(qualitative_cov_sign(g, 0, 1), Sign::zero);
  g.add_edge("X", "Z");
  EXPECT_EQ(qualitative_cov_sign(g, 0, 2), Sign::undefined);
  EXPECT_EQ(cov_claim_text(Sign::undefined), "no claim");
}

// Every qualitative claim holds exactly on random parameterizations that
// respect the edge signs.
TEST(Association, ClaimsHoldOnMonotoneParameterizations) {
  Rng rng(21);
  std::size_t claims = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 3 + rng.below(3);
    const std::size_t pairs = n * (n - 1) / 2;
    Dag g = signed_dag(n, rng.below(std::uint64_t{1} << pairs), rng.below(std::uint64_t{1} << pairs));
    Scm m = random_instance(g, InstanceConstraints::from_edge_signs(g), rng);
    auto dist = joint_distribution(m);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y) {
        Sign s = qualitative_cov_sign(g, x, y);
        if (s == Sign::undefined) continue;
        Rational v = conditional_covariance(dist, x, y, {});
        ++claims;
        if (s == Sign::positive) {
          ASSERT_GE(v, 0) << trial;
        }
        if (s == Sign::negative) {
          ASSERT_LE(v, 0) << trial;
        }
        if (s == Sign::zero) {
          ASSERT_EQ(v, 0) << trial;
        }
      }
  }
  EXPECT_GT(claims, 500u);
}

TEST(EdgeSigns, MismatchReported) {
  Dag g;
  g.add_node("E");
  g.add_node("D");
  g.add_edge("E", "D", EdgeSign::positive);
  Scm m(g, {ResponseTable::deterministic(0, 1), ResponseTable::deterministic(1, 0b01)});
  auto mm = edge_sign_mismatches(m);
  ASSERT_EQ(mm.size(), 1u);
  EXPECT_NE(mm[0].find("E -> D"), std::string::npos);
  Scm ok(g, {ResponseTable::deterministic(0, 1), ResponseTable::deterministic(1, 0b11)});
  EXPECT_TRUE(edge_sign_mismatches(ok).empty());
}
