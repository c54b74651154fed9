#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conclusion.hpp"
#include "dag.hpp"
#include "error.hpp"
#include "oracle.hpp"
#include "scm.hpp"
#include "signs.hpp"
#include "sufficient_cause.hpp"

namespace suffcause {

// Substantive knowledge supplied by the user rather than read off a graph.
struct CocauseAssertion {
  std::string node;
  std::string slot;  // "1", a parent name, or "X*Y"
  bool value = false;
  bool operator==(const CocauseAssertion&) const = default;
};

struct Assertions {
  struct Cov {
    std::string x, y;
    Sign sign;  // positive: >=0, negative: <=0, zero: =0
    bool operator==(const Cov&) const = default;
  };
  struct Pair {
    std::string node, a, b;
    bool operator==(const Pair&) const = default;
  };
  std::vector<Pair> no_synergism;            // node, parent, parent
  std::vector<Cov> cov;
  std::vector<CocauseAssertion> cocause;
  std::vector<Pair> independent_cocauses;    // node, slot, slot

  bool operator==(const Assertions&) const = default;
};

// A covariance sign together with where it came from.
struct SignFact {
  Sign sign = Sign::undefined;
  std::string source;  // "graph", "oracle", "asserted"
};

inline bool implies_le(Sign s) { return s == Sign::negative || s == Sign::zero; }
inline bool implies_ge(Sign s) { return s == Sign::positive || s == Sign::zero; }

// Structural association first, then the exact distribution, then user
// assertions.
inline SignFact establish_cov_sign(const Dag& g, std::size_t x, std::size_t y, const Assertions* asserted = nullptr,
                                   const ExactDistribution* dist = nullptr) {
  Sign s = qualitative_cov_sign(g, x, y);
  if (s != Sign::undefined) return {s, "graph"};
  if (dist) {
    Rational v = conditional_covariance(*dist, dist->index(g.name(x)), dist->index(g.name(y)), {});
    return {v > 0 ? Sign::positive : v < 0 ? Sign::negative : Sign::zero, "oracle"};
  }
  if (asserted)
    for (const auto& c : asserted->cov)
      if ((c.x == g.name(x) && c.y == g.name(y)) || (c.x == g.name(y) && c.y == g.name(x)))
        return {c.sign, "asserted"};
  return {Sign::undefined, ""};
}

enum class Flag { zero, one, neither };

// What is known about a representation D = A0 | A1 E1 | A2 E2 | A3 E1 E2.
struct RepFacts {
  std::string d, e1, e2;
  std::array<Flag, 4> flags{Flag::neither, Flag::neither, Flag::neither, Flag::neither};
  bool a1_indep_a2 = false;
  bool e1_indep_e2 = false;
  bool a0_indep_a1 = false;
  bool a0_indep_a2 = false;
  SignFact parents_cov;
  std::string source;  // how flags and independences were obtained
  // Direction of each parent's effect; a negative parent is read through its
  // complement in the representation.
  std::array<Sign, 2> polarity{Sign::positive, Sign::positive};
};

namespace detail {

inline std::string slot_name(std::size_t i) { return "A" + std::to_string(i); }

inline std::string flag_text(std::size_t i, bool one) { return slot_name(i) + (one ? " == 1" : " == 0"); }

inline std::string cov_text(const RepFacts& f, Sign s) {
  std::string rel = s == Sign::negative ? "<=0" : s == Sign::positive ? ">=0" : "=0";
  return "Cov(" + f.e1 + "," + f.e2 + ") " + rel + " [" + f.parents_cov.source + "]";
}

}  // namespace detail

// The eight stratum rules for two positively acting parents. Each emitted
// conclusion lists every premise it used; rules whose premises are not
// established are skipped.
inline std::vector<SignConclusion> theorem4(const RepFacts& f) {
  std::vector<SignConclusion> out;
  const std::string base = f.e1 + " and " + f.e2 + " are the only parents of " + f.d +
                           ", both with positive monotonic effects";
  auto is = [&](std::size_t i, Flag v) { return f.flags[i] == v; };
  auto emit = [&](const char* id, std::uint32_t stratum, Relation rel, std::vector<std::string> premises) {
    premises.insert(premises.begin(), base);
    premises.push_back("co-cause facts from " + f.source);
    out.push_back(SignConclusion{stratum_cov(f.e1, f.e2, f.d, stratum), rel, std::nullopt,
                                 std::string("two-parent stratum rule (") + id + ")", std::move(premises)});
  };
  const Sign cov = f.parents_cov.sign;
  std::vector<std::string> one12, zero12;
  for (std::size_t i : {1, 2}) {
    if (is(i, Flag::one)) one12.push_back(detail::flag_text(i, true));
    if (is(i, Flag::zero)) zero12.push_back(detail::flag_text(i, false));
  }

  if (is(0, Flag::zero)) emit("i", 1, Relation::le_zero, {detail::flag_text(0, false)});
  if (is(0, Flag::zero) && f.a1_indep_a2 && f.e1_indep_e2)
    emit("ii", 0, Relation::le_zero,
         {detail::flag_text(0, false), "A1 independent of A2", f.e1 + " independent of " + f.e2});
  if (!one12.empty() && implies_le(cov)) emit("iii", 1, Relation::le_zero, {one12.front(), detail::cov_text(f, cov)});
  if (!one12.empty()) emit("iv", 0, Relation::eq_zero, {one12.front()});
  if (!zero12.empty() && implies_ge(cov)) emit("v", 1, Relation::ge_zero, {zero12.front(), detail::cov_text(f, cov)});
  // Only sound with a nonpositive marginal covariance: D == 0 with positively
  // correlated parents keeps that correlation in the D = 0 stratum.
  if (!zero12.empty() && implies_le(cov)) emit("vi", 0, Relation::le_zero, {zero12.front(), detail::cov_text(f, cov)});
  if (is(3, Flag::zero) && implies_le(cov))
    emit("vii", 1, Relation::le_zero, {detail::flag_text(3, false), detail::cov_text(f, cov)});
  if (is(3, Flag::zero) && f.a1_indep_a2 && f.e1_indep_e2 && (f.a0_indep_a1 || f.a0_indep_a2))
    emit("viii", 0, Relation::eq_zero,
         {detail::flag_text(3, false), "A1 independent of A2", f.e1 + " independent of " + f.e2,
          f.a0_indep_a1 ? "A0 independent of A1" : "A0 independent of A2"});
  return out;
}

// Parents acting negatively are relabelled by their complements. `facts`
// must describe the relabelled representation, while its covariance sign
// refers to the original parents. Each complemented parent flips the sign of
// every covariance involved.
inline std::vector<SignConclusion> theorem4_negative_analogue(RepFacts facts, std::array<Sign, 2> polarity) {
  for (Sign p : polarity)
    if (p != Sign::positive && p != Sign::negative) throw PremiseError("parent polarity must be positive or negative");
  const bool flip = (polarity[0] == Sign::negative) != (polarity[1] == Sign::negative);
  if (flip) {
    Sign& s = facts.parents_cov.sign;
    if (s == Sign::positive)
      s = Sign::negative;
    else if (s == Sign::negative)
      s = Sign::positive;
  }
  auto out = theorem4(facts);
  if (polarity[0] == Sign::positive && polarity[1] == Sign::positive) return out;
  std::string note;
  for (std::size_t i = 0; i < 2; ++i)
    if (polarity[i] == Sign::negative)
      note += (note.empty() ? "" : ", ") + (i == 0 ? facts.e1 : facts.e2) + " relabelled by its complement";
  for (auto& c : out) {
    if (flip && c.relation == Relation::le_zero)
      c.relation = Relation::ge_zero;
    else if (flip && c.relation == Relation::ge_zero)
      c.relation = Relation::le_zero;
    c.rule += " for complemented parents";
    c.premises.push_back(note);
  }
  return out;
}

// Stratum conclusions for parents of either direction.
inline std::vector<SignConclusion> stratum_conclusions(const RepFacts& f) {
  return theorem4_negative_analogue(f, f.polarity);
}

namespace detail {

inline std::size_t two_parent_slot(const Dag& g, std::size_t d, std::size_t e1, std::size_t e2,
                                   const std::string& slot) {
  if (slot == "1") return 0;
  if (slot == g.name(e1)) return 1;
  if (slot == g.name(e2)) return 2;
  if (slot == g.name(e1) + "*" + g.name(e2) || slot == g.name(e2) + "*" + g.name(e1)) return 3;
  throw PremiseError("'" + slot + "' is not a co-cause slot of '" + g.name(d) + "'");
}

inline void require_two_parents(const Dag& g, std::size_t d, std::size_t e1, std::size_t e2) {
  const auto& ps = g.parents(d);
  if (ps.size() != 2 || !((ps[0] == e1 && ps[1] == e2) || (ps[0] == e2 && ps[1] == e1)))
    throw PremiseError("'" + g.name(e1) + "' and '" + g.name(e2) + "' must be the only parents of '" + g.name(d) +
                       "'; marginalize other parents first");
}

}  // namespace detail

// Facts read from a graph and user assertions alone. Signed edges E -> D
// establish the positive monotonic effects; unrelated parents are
// independent by d-separation.
inline RepFacts facts_from_graph(const Dag& g, std::size_t d, std::size_t e1, std::size_t e2,
                                 const Assertions& asserted) {
  detail::require_two_parents(g, d, e1, e2);
  RepFacts f;
  for (std::size_t i = 0; i < 2; ++i) {
    std::size_t e = i == 0 ? e1 : e2;
    EdgeSign s = g.edge_sign(e, d);
    if (s == EdgeSign::none)
      throw PremiseError("edge " + g.name(e) + " -> " + g.name(d) + " carries no sign");
    f.polarity[i] = to_sign(s);
  }
  f.d = g.name(d);
  f.e1 = g.name(e1);
  f.e2 = g.name(e2);
  f.source = "assertions";
  for (const auto& n : asserted.no_synergism)
    if (n.node == f.d && ((n.a == f.e1 && n.b == f.e2) || (n.a == f.e2 && n.b == f.e1))) f.flags[3] = Flag::zero;
  for (const auto& c : asserted.cocause)
    if (c.node == f.d) f.flags[detail::two_parent_slot(g, d, e1, e2, c.slot)] = c.value ? Flag::one : Flag::zero;
  for (const auto& p : asserted.independent_cocauses) {
    if (p.node != f.d) continue;
    std::size_t a = detail::two_parent_slot(g, d, e1, e2, p.a), b = detail::two_parent_slot(g, d, e1, e2, p.b);
    if (a > b) std::swap(a, b);
    if (a == 1 && b == 2) f.a1_indep_a2 = true;
    if (a == 0 && b == 1) f.a0_indep_a1 = true;
    if (a == 0 && b == 2) f.a0_indep_a2 = true;
  }
  f.e1_indep_e2 = d_separated(g, {e1}, {e2}, {});
  f.parents_cov = establish_cov_sign(g, e1, e2, &asserted);
  return f;
}

// Facts evaluated exactly against a model and a representation of D over
// its two parents. Conclusions drawn from them hold relative to that
// representation.
inline RepFacts facts_from_scm(const Scm& m, std::size_t d, const Representation& rep,
                               const ExactDistribution& dist) {
  const Dag& g = m.graph();
  if (g.parents(d).size() != 2) throw PremiseError("'" + g.name(d) + "' must have exactly two parents");
  const std::size_t e1 = g.parents(d)[0], e2 = g.parents(d)[1];
  const ResponseTable& t = m.equation(d);
  std::array<Sign, 2> polarity{};
  for (std::size_t p : {0, 1}) {
    MonotonicEffect eff = detect_monotonic_effect(t, p);
    if (eff.sign == Sign::undefined)
      throw PremiseError(g.name(g.parents(d)[p]) + " does not have a monotonic effect on " + g.name(d));
    polarity[p] = eff.sign;
  }
  if (!is_determinative(t, rep.terms)) throw PremiseError("representation is not determinative");

  // co-cause indicator of each slot in each response state
  std::vector<std::array<bool, 4>> ind(t.num_states(), {false, false, false, false});
  for (const auto& term : rep.terms) {
    std::size_t slot = 0;
    for (const auto& l : term.literals) {
      if (l.complemented != (polarity[l.parent] == Sign::negative))
        throw PremiseError("representation literal disagrees with the direction of the parent's effect");
      slot |= l.parent == 0 ? 1 : 2;
    }
    for (std::size_t s = 0; s < t.num_states(); ++s)
      if (term.cocause.contains(s)) ind[s][slot] = true;
  }

  RepFacts f;
  f.d = g.name(d);
  f.e1 = g.name(e1);
  f.e2 = g.name(e2);
  f.source = "the supplied representation";
  f.polarity = polarity;
  auto mass = [&](auto pred) {
    Rational p = 0;
    for (std::size_t s = 0; s < t.num_states(); ++s)
      if (pred(ind[s])) p += t.probability(s);
    return p;
  };
  for (std::size_t i = 0; i < 4; ++i) {
    Rational p = mass([&](const auto& a) { return a[i]; });
    f.flags[i] = p == 0 ? Flag::zero : p == 1 ? Flag::one : Flag::neither;
  }
  auto indep = [&](std::size_t i, std::size_t j) {
    for (bool u : {false, true})
      for (bool v : {false, true}) {
        Rational joint = mass([&](const auto& a) { return a[i] == u && a[j] == v; });
        if (joint != mass([&](const auto& a) { return a[i] == u; }) * mass([&](const auto& a) { return a[j] == v; }))
          return false;
      }
    return true;
  };
  f.a1_indep_a2 = indep(1, 2);
  f.a0_indep_a1 = indep(0, 1);
  f.a0_indep_a2 = indep(0, 2);
  f.e1_indep_e2 =
      conditional_independent(dist, {dist.index(f.e1)}, {dist.index(f.e2)}, {});
  Rational cov = conditional_covariance(dist, dist.index(f.e1), dist.index(f.e2), {});
  f.parents_cov = {cov > 0 ? Sign::positive : cov < 0 ? Sign::negative : Sign::zero, "oracle"};
  return f;
}

struct PremiseCheck {
  std::string name;
  bool holds = false;
  std::string detail;
};

enum class Alignment { agree, oppose, both, none };

inline std::string to_string(Alignment a) {
  switch (a) {
    case Alignment::agree: return "agree";
    case Alignment::oppose: return "oppose";
    case Alignment::both: return "both";
    case Alignment::none: return "none";
  }
  return "none";
}

struct PremiseReport {
  std::string rule;  // "separated" or "common-cause"
  std::string f, g, e1, e2, d;
  std::vector<std::string> q;
  std::vector<PremiseCheck> checks;
  Alignment alignment = Alignment::both;

  bool holds() const {
    return std::all_of(checks.begin(), checks.end(), [](const PremiseCheck& c) { return c.holds; });
  }
};

namespace detail {

inline std::string set_text(const Dag& g, const NodeSet& s) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : s) {
    out += (first ? "" : ",") + g.name(i);
    first = false;
  }
  return out + "}";
}

inline PremiseCheck dsep_check(const Dag& g, const NodeSet& x, const NodeSet& y, const NodeSet& z) {
  PremiseCheck c;
  c.name = set_text(g, x) + " d-separated from " + set_text(g, y) + " given " + set_text(g, z);
  c.holds = d_separated(g, x, y, z);
  if (!c.holds)
    if (auto p = d_connecting_path(g, x, y, z)) c.detail = "open path " + g.format(*p);
  return c;
}

inline void check_roles(const Dag& g, std::size_t f, std::size_t gn, std::size_t e1, std::size_t e2, std::size_t d) {
  const auto& ps = g.parents(d);
  for (std::size_t e : {e1, e2})
    if (std::find(ps.begin(), ps.end(), e) == ps.end())
      throw PremiseError("'" + g.name(e) + "' is not a parent of '" + g.name(d) + "'");
  std::set<std::size_t> roles{f, gn, e1, e2, d};
  if (roles.size() != 5) throw PremiseError("the five roles must be distinct nodes");
}

// Directed graph with the out-edges of `from` removed, so that any path
// left between `from` and another node starts with an incoming edge.
inline Dag without_out_edges(const Dag& g, std::size_t from) {
  Dag h;
  for (std::size_t i = 0; i < g.size(); ++i) h.add_node(g.name(i));
  for (auto [a, b] : g.edges())
    if (a != from) h.add_edge(a, b, g.edge_sign(a, b));
  return h;
}

}  // namespace detail

struct MonotoneExpectation {
  bool holds = false;
  std::string via;  // which sufficient condition held, or why both failed
};

// Sufficient conditions for E[F | E, D, Q] to be nondecreasing in E.
inline MonotoneExpectation monotone_expectation_premise(const Dag& g, std::size_t f, std::size_t e, std::size_t d,
                                                        const NodeSet& q) {
  std::vector<std::string> failures;
  const NodeSet desc_e = descendants(g, e), desc_f = descendants(g, f);
  bool q_nondesc = true;
  for (std::size_t x : q)
    if (desc_e.count(x) || desc_f.count(x) || x == e || x == f) q_nondesc = false;

  // (i) F screened from D by Q and E, and positively associated with E.
  {
    NodeSet z = q;
    z.insert(e);
    bool sep = !z.count(d) && !z.count(f) && d_separated(g, {f}, {d}, z);
    Sign assoc = monotonically_associated(g, f, e);
    if (sep && (assoc == Sign::positive || assoc == Sign::zero) && q_nondesc)
      return {true, "condition (i): " + g.name(f) + " separated from " + g.name(d) + " given " +
                        detail::set_text(g, z) + ", association with " + g.name(e) + " " + to_string(assoc)};
    failures.push_back(std::string("(i) ") + (!sep ? "not separated from " + g.name(d)
                                               : !q_nondesc ? "Q holds a descendant"
                                                            : "association " + to_string(assoc)));
  }
  // (ii) F downstream of both E and D with positive E -> F paths avoiding D,
  // no F-E common cause, and every back-door path into E or D closed.
  {
    bool below = desc_e.count(f) && descendants(g, d).count(f);
    bool common = false;
    for (std::size_t c = 0; c < g.size(); ++c)
      if (is_common_cause(g, c, f, e)) common = true;
    auto signs = directed_path_signs(g, e, f, d);
    bool positive = std::all_of(signs.begin(), signs.end(), [](Sign s) { return s == Sign::positive; });
    bool back_e = d_separated(detail::without_out_edges(g, e), {e}, {f}, q);
    NodeSet zd = q;
    zd.insert(e);
    bool back_d = !q.count(d) && d_separated(detail::without_out_edges(g, d), {d}, {f}, zd);
    if (below && !common && positive && back_e && back_d && q_nondesc)
      return {true, "condition (ii): " + g.name(f) + " descends from " + g.name(e) + " and " + g.name(d) +
                        " with positive paths from " + g.name(e) + " avoiding " + g.name(d)};
    failures.push_back(std::string("(ii) ") + (!below      ? "not a descendant of both"
                                               : common    ? "shares a common cause with " + g.name(e)
                                               : !positive ? "a path from " + g.name(e) + " is not positive"
                                               : !back_e   ? "open back-door path from " + g.name(e)
                                               : !back_d   ? "open back-door path from " + g.name(d)
                                                           : "Q holds a descendant"));
  }
  return {false, failures[0] + "; " + failures[1]};
}

// Conditions under which Cov(F,G|D) has the sign of Cov(E1,E2|D) for F on
// the E1 side and G on the E2 side, with F and G not descendants of D.
inline PremiseReport check_thm5_premises(const Dag& g, std::size_t f, std::size_t gn, std::size_t e1, std::size_t e2,
                                         std::size_t d, const Assertions* asserted = nullptr) {
  detail::check_roles(g, f, gn, e1, e2, d);
  PremiseReport r{"separated", g.name(f), g.name(gn), g.name(e1), g.name(e2), g.name(d), {}, {}, Alignment::both};
  r.checks.push_back(detail::dsep_check(g, {f}, {gn}, {e1, e2, d}));
  r.checks.push_back(detail::dsep_check(g, {f}, {e2, d}, {e1}));
  r.checks.push_back(detail::dsep_check(g, {gn}, {e1, d}, {e2}));
  for (auto [x, y] : {std::pair{f, e1}, std::pair{gn, e2}}) {
    SignFact s = establish_cov_sign(g, x, y, asserted);
    r.checks.push_back(PremiseCheck{"Cov(" + g.name(x) + "," + g.name(y) + ") >=0", implies_ge(s.sign),
                                    s.source.empty() ? "not established" : to_string(s.sign) + " [" + s.source + "]"});
  }
  return r;
}

// Premises for the variant that allows descendants of D and common causes Q
// of F and G.
inline PremiseReport check_thm6_premises(const Dag& g, std::size_t f, std::size_t gn, std::size_t e1, std::size_t e2,
                                         std::size_t d, const NodeSet& q) {
  detail::check_roles(g, f, gn, e1, e2, d);
  for (std::size_t x : q)
    if (x == f || x == gn || x == e1 || x == e2 || x == d) throw PremiseError("Q may not contain a role node");
  PremiseReport r{"common-cause", g.name(f), g.name(gn), g.name(e1), g.name(e2), g.name(d), g.names_of(q), {},
                  Alignment::both};
  auto with = [&](NodeSet s) {
    s.insert(q.begin(), q.end());
    return s;
  };
  r.checks.push_back(detail::dsep_check(g, {f}, {gn}, with({e1, e2, d})));
  r.checks.push_back(detail::dsep_check(g, {f}, {e2}, with({e1, d})));
  r.checks.push_back(detail::dsep_check(g, {gn}, {e1}, with({e2, d})));
  if (!q.empty()) {
    r.checks.push_back(detail::dsep_check(g, q, {e1, e2}, {d}));
    r.checks.push_back(detail::dsep_check(g, q, {d}, {}));
  }

  std::vector<Alignment> per;
  for (std::size_t x : q) {
    PremiseCheck cc{g.name(x) + " is a common cause of " + g.name(f) + " and " + g.name(gn),
                    is_common_cause(g, x, f, gn), ""};
    r.checks.push_back(cc);
    Sign to_f = detail::uniform(directed_path_signs(g, x, f));
    Sign to_g = detail::uniform(directed_path_signs(g, x, gn));
    Sign s = to_f * to_g;
    per.push_back(s == Sign::positive ? Alignment::agree : s == Sign::negative ? Alignment::oppose : Alignment::none);
  }
  for (std::size_t a : q)
    for (std::size_t b : q) {
      if (a >= b) continue;
      NodeSet anc_a = ancestors(g, a), anc_b = ancestors(g, b);
      anc_a.insert(a);
      anc_b.insert(b);
      bool shared = false;
      for (std::size_t x : anc_a)
        if (anc_b.count(x)) shared = true;
      r.checks.push_back(PremiseCheck{g.name(a) + " and " + g.name(b) + " structurally independent", !shared,
                                      shared ? "shared ancestor" : ""});
    }
  if (!q.empty()) {
    r.alignment = per.front();
    for (Alignment a : per)
      if (a != r.alignment) r.alignment = Alignment::none;
    r.checks.push_back(PremiseCheck{"paths from each member of Q to " + g.name(f) + " and " + g.name(gn) +
                                        " have uniform signs",
                                    r.alignment != Alignment::none, to_string(r.alignment)});
  }
  MonotoneExpectation mf = monotone_expectation_premise(g, f, e1, d, q);
  MonotoneExpectation mg = monotone_expectation_premise(g, gn, e2, d, q);
  r.checks.push_back(PremiseCheck{"E[" + g.name(f) + "|" + g.name(e1) + "," + g.name(d) + ",Q] nondecreasing in " +
                                      g.name(e1),
                                  mf.holds, mf.via});
  r.checks.push_back(PremiseCheck{"E[" + g.name(gn) + "|" + g.name(e2) + "," + g.name(d) + ",Q] nondecreasing in " +
                                      g.name(e2),
                                  mg.holds, mg.via});
  return r;
}

namespace detail {

inline bool about_parents(const PremiseReport& r, const SignConclusion& inner) {
  const auto& q = inner.quantity;
  bool pair = (q.x == r.e1 && q.y == r.e2) || (q.x == r.e2 && q.y == r.e1);
  return pair && q.given.size() == 1 && q.given[0].first == r.d && inner.relation != Relation::sign_equals;
}

}  // namespace detail

// sign Cov(F,G|D=d) = sign Cov(E1,E2|D=d), available under the separated
// premises only.
inline SignConclusion sign_equality(const PremiseReport& r, std::uint32_t stratum) {
  if (r.rule != "separated" || !r.holds()) throw PremiseError("separated premises not verified");
  SignConclusion c{stratum_cov(r.f, r.g, r.d, stratum), Relation::sign_equals, stratum_cov(r.e1, r.e2, r.d, stratum),
                   "separated transfer", {}};
  for (const auto& p : r.checks) c.premises.push_back(p.name);
  return c;
}

// Carries a sign claim about Cov(E1,E2|D=d) over to Cov(F,G|D=d).
inline SignConclusion transfer_sign(const PremiseReport& r, const SignConclusion& inner) {
  if (!r.holds()) throw PremiseError(r.rule + " premises not verified");
  if (!detail::about_parents(r, inner))
    throw PremiseError("inner conclusion is not a stratum covariance of " + r.e1 + " and " + r.e2);
  const std::uint32_t stratum = inner.quantity.given[0].second;
  SignConclusion c{stratum_cov(r.f, r.g, r.d, stratum), inner.relation, std::nullopt, "", {}};
  if (r.rule == "separated") {
    c.rule = "separated transfer";
  } else {
    c.rule = "common-cause transfer";
    const Alignment a = r.alignment;
    switch (inner.relation) {
      case Relation::ge_zero:
        if (a != Alignment::agree && a != Alignment::both) throw PremiseError("Q paths do not agree in sign");
        break;
      case Relation::le_zero:
        if (a != Alignment::oppose && a != Alignment::both) throw PremiseError("Q paths do not oppose in sign");
        break;
      case Relation::eq_zero:
        if (a == Alignment::agree) c.relation = Relation::ge_zero;
        if (a == Alignment::oppose) c.relation = Relation::le_zero;
        if (a == Alignment::none) throw PremiseError("Q paths have no uniform alignment");
        break;
      case Relation::sign_equals:
        break;
    }
  }
  c.premises.push_back(format(inner) + " by " + inner.rule);
  for (const auto& p : r.checks) c.premises.push_back(p.name);
  if (!r.q.empty()) c.premises.push_back("Q paths " + to_string(r.alignment));
  return c;
}

}  // namespace suffcause
