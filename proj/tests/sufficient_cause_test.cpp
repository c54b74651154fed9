#include <gtest/gtest.h>

#include "support.hpp"

using namespace suffcause;
using namespace testing_support;

namespace {

Literal pos(std::size_t p) { return Literal{p, false}; }
Literal neg(std::size_t p) { return Literal{p, true}; }

const ResponseTable kOr = ResponseTable::deterministic(2, 0b1110);
const ResponseTable kAnd = ResponseTable::deterministic(2, 0b1000);

// All four single-parent mechanisms, in the order: both 1, causative,
// preventive, both 0.
ResponseTable full_single_parent() { return table_of(1, {0b11, 0b10, 0b01, 0b00}); }

// Row of a boolean function of m parents given as a predicate on the
// parent configuration.
template <class F>
std::uint64_t row_of(std::size_t m, F f) {
  std::uint64_t row = 0;
  for (std::size_t c = 0; c < (std::size_t{1} << m); ++c)
    if (f(c)) row |= std::uint64_t{1} << c;
  return row;
}

bool bit(std::size_t c, std::size_t i) { return (c >> i) & 1; }

struct NestedEvents {
  EventSpace space{{"B", "C", "E", "F"}};
  Event b = space.event("B"), c = space.event("C"), e = space.event("E"), f = space.event("F");
  Event d = e & f;
  Event a = b | (c & e);
};

}  // namespace

TEST(EventSufficiency, CandidateListWithoutE) {
  NestedEvents x;
  std::vector<Event> cand{x.b, x.c, x.d};
  auto msc = enumerate_msc_over_events(x.a, cand);
  EXPECT_EQ(msc, (std::vector<std::vector<std::size_t>>{{0}, {1, 2}}));
  std::vector<Event> terms{x.b, x.c & x.d};
  EXPECT_FALSE(is_determinative(x.a, terms));
}

TEST(EventSufficiency, CandidateListWithE) {
  NestedEvents x;
  std::vector<Event> cand{x.b, x.c, x.d, x.e};
  auto msc = enumerate_msc_over_events(x.a, cand);
  EXPECT_EQ(msc, (std::vector<std::vector<std::size_t>>{{0}, {1, 2}, {1, 3}}));
  std::vector<Event> terms{x.b, x.c & x.d, x.c & x.e};
  EXPECT_TRUE(is_determinative(x.a, terms));
  EXPECT_FALSE(is_nonredundant(x.a, terms));
  EXPECT_EQ(reduce_to_nonredundant(x.a, terms), (std::vector<std::size_t>{0, 2}));
}

TEST(EventSufficiency, DefiningTermsAreNonredundant) {
  NestedEvents x;
  std::vector<Event> terms{x.b, x.c & x.e};
  EXPECT_TRUE(is_determinative(x.a, terms));
  EXPECT_TRUE(is_nonredundant(x.a, terms));
  EXPECT_EQ(reduce_to_nonredundant(x.a, terms), (std::vector<std::size_t>{0, 1}));
}

TEST(EventSufficiency, ConstantZeroTargetHasNoConjunctions) {
  EventSpace s({"X", "Y"});
  std::vector<Event> cand{s.event("X"), s.event("Y")};
  EXPECT_TRUE(enumerate_msc_over_events(s.never(), cand).empty());
}

// D = AB | EF with Q = BE: AQ is minimal sufficient but redundant.
TEST(EventSufficiency, RedundantTermThroughDerivedCause) {
  EventSpace s({"A", "B", "E", "F"});
  Event a = s.event("A"), b = s.event("B"), e = s.event("E"), f = s.event("F");
  Event q = b & e;
  Event d = (a & b) | (e & f);
  std::vector<Event> aq{a, q};
  EXPECT_TRUE(is_minimal_sufficient(d, aq));
  std::vector<Event> terms{a & b, a & q, e & f};
  EXPECT_TRUE(is_determinative(d, terms));
  EXPECT_FALSE(is_nonredundant(d, terms));
  EXPECT_EQ(reduce_to_nonredundant(d, terms), (std::vector<std::size_t>{0, 2}));
}

TEST(Sufficiency, DisjunctImpliesDisjunction) {
  EXPECT_TRUE(is_sufficient(kOr, make_conjunction({pos(0)})));
  EXPECT_FALSE(is_sufficient(kAnd, make_conjunction({pos(0)})));
}

TEST(Sufficiency, CoCauseCompletesTheParent) {
  ResponseTable t = full_single_parent();
  EXPECT_TRUE(is_sufficient(t, make_conjunction({pos(0)}, CoCause::of({1}))));
  EXPECT_TRUE(is_sufficient(t, make_conjunction({pos(0)}, CoCause::of({0, 1}))));
  EXPECT_FALSE(is_sufficient(t, make_conjunction({pos(0)}, CoCause::of({1, 2}))));
  EXPECT_FALSE(is_sufficient(t, make_conjunction({pos(0)})));
  EXPECT_TRUE(is_sufficient(t, make_conjunction({pos(0)}, CoCause::zero())));
}

TEST(Sufficiency, RejectsForeignParent) {
  EXPECT_THROW(is_sufficient(kOr, make_conjunction({pos(2)})), ModelError);
  EXPECT_THROW(make_conjunction({pos(0), neg(0)}), ModelError);
}

TEST(Minimality, Examples) {
  EXPECT_FALSE(is_minimal_sufficient(kOr, make_conjunction({pos(0), pos(1)})));
  EXPECT_TRUE(is_minimal_sufficient(kAnd, make_conjunction({pos(0), pos(1)})));
  // each mechanism of the two-poison story is sufficient but not minimal
  EXPECT_TRUE(is_sufficient(kOr, make_conjunction({pos(0), neg(1)})));
  EXPECT_FALSE(is_minimal_sufficient(kOr, make_conjunction({pos(0), neg(1)})));
  EXPECT_FALSE(is_minimal_sufficient(kOr, make_conjunction({neg(0), pos(1)})));
}

TEST(Minimality, CoCauseMustBeNeeded) {
  ResponseTable t = full_single_parent();
  EXPECT_TRUE(is_minimal_sufficient(t, make_conjunction({pos(0)}, CoCause::of({1}))));
  // state 0 alone is already sufficient without E
  EXPECT_FALSE(is_minimal_sufficient(t, make_conjunction({pos(0)}, CoCause::of({0}))));
}

TEST(Determinative, TableLevel) {
  // A = B | CE over parents B, C, E
  ResponseTable a = ResponseTable::deterministic(3, row_of(3, [](std::size_t c) {
    return bit(c, 0) || (bit(c, 1) && bit(c, 2));
  }));
  std::vector<Conjunction> terms{make_conjunction({pos(0)}), make_conjunction({pos(1), pos(2)})};
  EXPECT_TRUE(is_determinative(a, terms));
  EXPECT_TRUE(is_nonredundant(a, terms));
  EXPECT_FALSE(is_determinative(a, {make_conjunction({pos(0)})}));
  EXPECT_THROW(is_nonredundant(a, {make_conjunction({pos(0)})}), ModelError);
  // a non-sufficient term breaks determinativeness
  terms.push_back(make_conjunction({pos(1)}));
  EXPECT_FALSE(is_determinative(a, terms));
}

TEST(ReduceToMinimal, DropsInCanonicalOrder) {
  EXPECT_EQ(reduce_to_minimal(kOr, make_conjunction({pos(0), pos(1)})), make_conjunction({pos(0)}));
  Conjunction m = make_conjunction({pos(0), pos(1)});
  EXPECT_EQ(reduce_to_minimal(kAnd, m), m);
  ResponseTable e1 = ResponseTable::deterministic(2, 0b1010);
  EXPECT_EQ(reduce_to_minimal(e1, make_conjunction({pos(0), neg(1)})), make_conjunction({pos(0)}));
  EXPECT_THROW(reduce_to_minimal(kAnd, make_conjunction({pos(0)})), ModelError);
}

TEST(ReduceToNonredundant, KeepsEarlierTerms) {
  // D = E1 | E2 written with a redundant mechanism term
  std::vector<Conjunction> terms{make_conjunction({pos(0)}), make_conjunction({pos(1)}),
                                 make_conjunction({pos(0), neg(1)})};
  auto r = reduce_to_nonredundant(kOr, terms);
  EXPECT_EQ(r, (std::vector<Conjunction>{make_conjunction({pos(0)}), make_conjunction({pos(1)})}));
  EXPECT_TRUE(is_nonredundant(kOr, r));
  std::vector<Conjunction> already{make_conjunction({pos(0), pos(1)})};
  EXPECT_EQ(reduce_to_nonredundant(kAnd, already), already);
}

TEST(Canonical, SingleParentFullSupport) {
  ResponseTable t = full_single_parent();
  Representation r = canonical_representation(t);
  std::vector<Conjunction> want{make_conjunction({}, CoCause::of({0})), make_conjunction({pos(0)}, CoCause::of({1})),
                                make_conjunction({neg(0)}, CoCause::of({2}))};
  EXPECT_EQ(r.terms, want);
  EXPECT_EQ(format_representation(r, {"E"}), "A[0] | A[1]*E | A[2]*~E");
}

TEST(Canonical, ConstantZeroIsEmpty) {
  EXPECT_TRUE(canonical_representation(ResponseTable::deterministic(2, 0)).terms.empty());
  EXPECT_EQ(format_representation(canonical_representation(ResponseTable::deterministic(2, 0)), {"A", "B"}), "0");
}

TEST(Canonical, IdentityMechanism) {
  Representation r = canonical_representation(ResponseTable::deterministic(1, 0b10));
  EXPECT_EQ(r.terms, (std::vector<Conjunction>{make_conjunction({pos(0)})}));
}

TEST(Canonical, ConstantOneIsEmptyConjunction) {
  Representation r = canonical_representation(ResponseTable::deterministic(2, 0b1111));
  EXPECT_EQ(r.terms, (std::vector<Conjunction>{make_conjunction({})}));
  EXPECT_EQ(format_representation(r, {"A", "B"}), "1");
}

TEST(Canonical, DeterministicAndStableOrder) {
  ResponseTable t = table_of(2, {0b1110, 0b1000, 0b0110});
  Representation a = canonical_representation(t), b = canonical_representation(t);
  EXPECT_EQ(a, b);
  for (std::size_t i = 1; i < a.terms.size(); ++i) EXPECT_FALSE(term_less(a.terms[i], a.terms[i - 1]));
}

// Sampled three-parent tables: determinative with every term minimal.
TEST(Canonical, ThreeParentTablesAreDeterminativeAndMinimal) {
  Rng rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<std::uint64_t> rows;
    std::size_t k = 1 + rng.below(4);
    for (std::size_t i = 0; i < k; ++i) rows.push_back(rng.below(256));
    ResponseTable t = dedupe_states(ResponseTable(3, rows, rng.probabilities(k)));
    Representation r = canonical_representation(t);
    ASSERT_TRUE(is_determinative(t, r.terms)) << trial;
    for (const auto& c : r.terms) ASSERT_TRUE(is_minimal_sufficient(t, c)) << trial;
  }
}

// With three or more parents the canonical representation may be redundant.
// First witness among deterministic three-parent mechanisms, in row order.
TEST(Canonical, RedundantWitnessWithThreeParents) {
  std::optional<std::uint64_t> witness;
  for (std::uint64_t row = 0; row < 256 && !witness; ++row) {
    ResponseTable t = ResponseTable::deterministic(3, row);
    if (!is_nonredundant(t, canonical_representation(t).terms)) witness = row;
  }
  ASSERT_TRUE(witness);
  ResponseTable t = ResponseTable::deterministic(3, *witness);
  Representation r = canonical_representation(t);
  std::cout << "witness row " << *witness << ": " << format_representation(r, {"X", "Y", "Z"}) << "\n";
  EXPECT_EQ(*witness, 27u);
  EXPECT_EQ(format_representation(r, {"X", "Y", "Z"}), "X*~Z | ~X*~Y | ~Y*~Z");
  auto reduced = reduce_to_nonredundant(t, r.terms);
  EXPECT_TRUE(is_nonredundant(t, reduced));
  EXPECT_LT(reduced.size(), r.terms.size());
}

// No such witness exists with fewer parents.
TEST(Canonical, NonredundantUpToTwoParentsDeterministic) {
  for (std::size_t m = 0; m <= 2; ++m)
    for (std::uint64_t row = 0; row < (std::uint64_t{1} << (std::size_t{1} << m)); ++row) {
      ResponseTable t = ResponseTable::deterministic(m, row);
      EXPECT_TRUE(is_nonredundant(t, canonical_representation(t).terms)) << m << " " << row;
    }
}
