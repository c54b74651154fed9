#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dag.hpp"
#include "error.hpp"
#include "scm.hpp"
#include "sufficient_cause.hpp"

namespace suffcause {

enum class NodeKind { base, exogenous, cocause, conjunction, disjunction };

inline std::string to_string(NodeKind k) {
  switch (k) {
    case NodeKind::base: return "base";
    case NodeKind::exogenous: return "exogenous";
    case NodeKind::cocause: return "cocause";
    case NodeKind::conjunction: return "and";
    case NodeKind::disjunction: return "or";
  }
  return "base";
}

// The base graph with the target's parents replaced by one AND node per
// term. State-dependent co-causes become nodes fed by a shared exogenous
// node standing for the target's response state.
struct ExpandedDag {
  Dag graph;
  std::size_t target = 0;
  std::size_t base_size = 0;  // base nodes keep their indices
  std::optional<std::size_t> exogenous;
  std::vector<std::optional<std::size_t>> cocauses;  // per term; empty when identically one
  std::vector<std::size_t> and_nodes;                // per term
  std::vector<NodeKind> kinds;
  Representation rep;
};

namespace detail {

inline std::string fresh_name(const Dag& g, std::string name) {
  while (g.contains(name)) name += "'";
  return name;
}

}  // namespace detail

// Structural expansion; the caller is responsible for the representation
// being determinative.
inline ExpandedDag expand(const Dag& base, std::size_t d, const Representation& rep) {
  const auto& parents = base.parents(d);
  for (const auto& term : rep.terms)
    for (const auto& l : term.literals)
      if (l.parent >= parents.size()) throw ModelError("literal refers to a foreign parent");

  ExpandedDag e;
  e.target = d;
  e.base_size = base.size();
  e.rep = rep;
  for (std::size_t i = 0; i < base.size(); ++i) e.graph.add_node(base.name(i));
  e.kinds.assign(base.size(), NodeKind::base);
  e.kinds[d] = NodeKind::disjunction;
  for (auto [a, b] : base.edges())
    if (b != d) e.graph.add_edge(a, b, base.edge_sign(a, b));

  const std::string& dn = base.name(d);
  bool any_state = false;
  for (const auto& term : rep.terms) any_state = any_state || term.cocause.kind() != CoCause::Kind::one;
  if (any_state) {
    e.exogenous = e.graph.add_node(detail::fresh_name(e.graph, "U_" + dn));
    e.kinds.push_back(NodeKind::exogenous);
  }

  for (std::size_t i = 0; i < rep.terms.size(); ++i) {
    const auto& term = rep.terms[i];
    std::string lits;
    for (const auto& l : term.literals) lits += (l.complemented ? "~" : "") + base.name(parents[l.parent]);
    std::optional<std::size_t> a;
    std::string name = lits;
    if (term.cocause.kind() != CoCause::Kind::one) {
      a = e.graph.add_node(detail::fresh_name(e.graph, "A" + std::to_string(i) + "_" + dn));
      e.kinds.push_back(NodeKind::cocause);
      e.graph.add_edge(*e.exogenous, *a);
      name = e.graph.name(*a) + (lits.empty() ? "" : "*" + lits);
    }
    if (name.empty()) name = "ONE_" + dn;
    std::size_t m = e.graph.add_node(detail::fresh_name(e.graph, name));
    e.kinds.push_back(NodeKind::conjunction);
    if (a) e.graph.add_edge(*a, m, EdgeSign::positive);
    for (const auto& l : term.literals)
      e.graph.add_edge(parents[l.parent], m, l.complemented ? EdgeSign::negative : EdgeSign::positive);
    e.graph.add_edge(m, d, EdgeSign::positive);
    e.cocauses.push_back(a);
    e.and_nodes.push_back(m);
  }
  return e;
}

inline ExpandedDag expand(const Scm& m, std::size_t d, const Representation& rep) {
  if (!is_determinative(m.equation(d), rep.terms))
    throw ModelError("representation is not determinative for '" + m.graph().name(d) + "'");
  return expand(m.graph(), d, rep);
}

// Nodes fixed by conditioning on the target's stratum: in the 0 stratum
// every AND node is 0 as well.
inline NodeSet stratum_conditioning_set(const ExpandedDag& e, std::uint32_t stratum) {
  NodeSet s{e.target};
  if (stratum == 0) s.insert(e.and_nodes.begin(), e.and_nodes.end());
  return s;
}

// True is a sound claim of independence within the stratum; false only
// means independence is not implied.
inline bool stratum_independent(const ExpandedDag& e, std::size_t x, std::size_t y, const NodeSet& z,
                                std::uint32_t stratum) {
  e.graph.name(x);
  e.graph.name(y);
  NodeSet cond = z;
  NodeSet fixed = stratum_conditioning_set(e, stratum);
  cond.insert(fixed.begin(), fixed.end());
  if (x == y) return false;
  if (cond.count(x) || cond.count(y)) return true;
  return d_separated(e.graph, {x}, {y}, cond);
}

inline NodeSet auxiliary_nodes(const ExpandedDag& e) {
  NodeSet s;
  for (std::size_t i = e.base_size; i < e.graph.size(); ++i) s.insert(i);
  return s;
}

// Extends every world of the base distribution with the auxiliary nodes:
// the exogenous node takes the target's response-state index, co-causes and
// AND nodes follow deterministically.
inline ExactDistribution expanded_distribution(const ExpandedDag& e, const Scm& m, const ExactDistribution& base) {
  const auto& parents = m.graph().parents(e.target);
  std::vector<World> worlds;
  for (const World& w : base.worlds()) {
    World x = w;
    x.values.resize(e.graph.size());
    x.states.resize(e.graph.size());
    const std::uint32_t state = w.states[e.target];
    if (e.exogenous) x.values[*e.exogenous] = state;
    bool any = false;
    for (std::size_t i = 0; i < e.rep.terms.size(); ++i) {
      const auto& term = e.rep.terms[i];
      bool on = term.cocause.contains(state);
      if (e.cocauses[i]) x.values[*e.cocauses[i]] = on;
      for (const auto& l : term.literals) on = on && (w.values[parents[l.parent]] != 0) != l.complemented;
      x.values[e.and_nodes[i]] = on;
      any = any || on;
    }
    if (any != (w.values[e.target] != 0)) throw ModelError("representation disagrees with the equation");
    worlds.push_back(std::move(x));
  }
  return ExactDistribution(e.graph.names(), std::move(worlds));
}

}  // namespace suffcause
