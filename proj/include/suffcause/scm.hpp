#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dag.hpp"
#include "error.hpp"
#include "rational.hpp"

namespace suffcause {

// Parent configurations are packed into a 64-bit row, one bit per
// configuration, so a node may have at most six parents.
inline constexpr std::size_t kMaxArity = 6;
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

inline std::uint64_t config_mask_all(std::size_t arity) {
  return arity >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (std::size_t{1} << arity)) - 1;
}

// Structural equation of a binary node with binary parents. Each response
// state is a row: bit c of row(j) is the output in state j on parent
// configuration c, where bit i of c is the value of the i-th parent. A row
// value is therefore the canonical index k in [0, 2^(2^m)) of the mechanism.
class ResponseTable {
 public:
  ResponseTable() : ResponseTable(0, {0}, {Rational(1)}) {}

  ResponseTable(std::size_t arity, std::vector<std::uint64_t> rows, std::vector<Rational> probs)
      : arity_(arity), rows_(std::move(rows)), probs_(std::move(probs)) {
    if (arity_ > kMaxArity)
      throw ModelError("at most " + std::to_string(kMaxArity) + " parents are supported");
    if (rows_.empty()) throw ModelError("a response table needs at least one state");
    if (rows_.size() != probs_.size()) throw ModelError("one probability per state is required");
    Rational total = 0;
    for (std::size_t j = 0; j < rows_.size(); ++j) {
      if (rows_[j] & ~config_mask_all(arity_))
        throw ModelError("state " + std::to_string(j) + " row exceeds 2^(2^m)");
      if (probs_[j] < 0) throw ModelError("state " + std::to_string(j) + " has negative probability");
      total += probs_[j];
    }
    if (total != 1)
      throw ModelError("state probabilities sum to " + to_string(total) + ", not 1");
  }

  static ResponseTable deterministic(std::size_t arity, std::uint64_t row) {
    return ResponseTable(arity, {row}, {Rational(1)});
  }

  // Builds a table giving every listed canonical row the same probability.
  static ResponseTable uniform(std::size_t arity, const std::vector<std::uint64_t>& rows) {
    std::vector<Rational> p(rows.size(), Rational(1) / static_cast<unsigned long>(rows.size()));
    return ResponseTable(arity, rows, std::move(p));
  }

  std::size_t arity() const { return arity_; }
  std::size_t num_states() const { return rows_.size(); }
  std::size_t num_configs() const { return std::size_t{1} << arity_; }
  std::uint64_t full_mask() const { return config_mask_all(arity_); }
  std::uint64_t row(std::size_t state) const { return rows_.at(state); }
  const std::vector<std::uint64_t>& rows() const { return rows_; }
  const Rational& probability(std::size_t state) const { return probs_.at(state); }
  const std::vector<Rational>& probabilities() const { return probs_; }

  bool output(std::size_t state, std::size_t config) const {
    if (state >= rows_.size()) throw ModelError("response state out of range");
    if (config >= num_configs()) throw ModelError("parent configuration out of range");
    return (rows_[state] >> config) & 1;
  }

  bool operator==(const ResponseTable& o) const {
    return arity_ == o.arity_ && rows_ == o.rows_ && probs_ == o.probs_;
  }

 private:
  std::size_t arity_;
  std::vector<std::uint64_t> rows_;
  std::vector<Rational> probs_;
};

inline bool eval_node(const ResponseTable& t, std::size_t state, std::size_t parent_config) {
  return t.output(state, parent_config);
}

// Merges states with identical rows, summing their probabilities; the first
// occurrence fixes the position of each distinct row.
inline ResponseTable dedupe_states(const ResponseTable& t) {
  std::vector<std::uint64_t> rows;
  std::vector<Rational> probs;
  std::map<std::uint64_t, std::size_t> seen;
  for (std::size_t j = 0; j < t.num_states(); ++j) {
    auto [it, fresh] = seen.emplace(t.row(j), rows.size());
    if (fresh) {
      rows.push_back(t.row(j));
      probs.push_back(t.probability(j));
    } else {
      probs[it->second] += t.probability(j);
    }
  }
  return ResponseTable(t.arity(), std::move(rows), std::move(probs));
}

class Scm {
 public:
  Scm(Dag graph, std::vector<ResponseTable> equations)
      : graph_(std::move(graph)), equations_(std::move(equations)) {
    if (equations_.size() != graph_.size())
      throw ModelError("every node needs exactly one equation");
    for (std::size_t i = 0; i < graph_.size(); ++i)
      if (equations_[i].arity() != graph_.parents(i).size())
        throw ModelError("equation for '" + graph_.name(i) + "' has " +
                         std::to_string(equations_[i].arity()) + " inputs but the node has " +
                         std::to_string(graph_.parents(i).size()) + " parents");
  }

  const Dag& graph() const { return graph_; }
  const ResponseTable& equation(std::size_t node) const { return equations_.at(node); }
  const ResponseTable& equation(std::string_view node) const { return equation(graph_.index(node)); }
  const std::vector<ResponseTable>& equations() const { return equations_; }

  std::size_t parent_config(std::size_t node, const std::vector<std::uint32_t>& values) const {
    std::size_t c = 0;
    const auto& ps = graph_.parents(node);
    for (std::size_t i = 0; i < ps.size(); ++i)
      if (values[ps[i]]) c |= std::size_t{1} << i;
    return c;
  }

 private:
  Dag graph_;
  std::vector<ResponseTable> equations_;
};

// One joint response-state assignment with the node values it determines.
struct World {
  std::vector<std::uint32_t> values;
  std::vector<std::uint32_t> states;
  Rational probability;
};

class ExactDistribution {
 public:
  ExactDistribution(std::vector<std::string> nodes, std::vector<World> worlds)
      : nodes_(std::move(nodes)), worlds_(std::move(worlds)) {
    for (std::size_t i = 0; i < nodes_.size(); ++i) index_.emplace(nodes_[i], i);
  }

  const std::vector<std::string>& nodes() const { return nodes_; }
  const std::vector<World>& worlds() const { return worlds_; }

  std::size_t index(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) throw UnknownNodeError(std::string(name));
    return it->second;
  }

  Rational total() const {
    Rational t = 0;
    for (const auto& w : worlds_) t += w.probability;
    return t;
  }

  // Aggregated distribution of the given nodes' values.
  std::map<std::vector<std::uint32_t>, Rational> marginal(const std::vector<std::size_t>& nodes) const {
    std::map<std::vector<std::uint32_t>, Rational> out;
    std::vector<std::uint32_t> key(nodes.size());
    for (const auto& w : worlds_) {
      for (std::size_t i = 0; i < nodes.size(); ++i) key[i] = w.values[nodes[i]];
      out[key] += w.probability;
    }
    return out;
  }

 private:
  std::vector<std::string> nodes_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::vector<World> worlds_;
};

namespace detail {

inline std::uint64_t checked_world_count(const Scm& m, std::uint64_t budget) {
  std::uint64_t count = 1;
  for (const auto& t : m.equations()) {
    std::uint64_t live = 0;
    for (const auto& p : t.probabilities())
      if (p > 0) ++live;
    if (live != 0 && count > budget / live)
      throw BudgetError("response-state space exceeds the enumeration budget of " +
                        std::to_string(budget));
    count *= live;
  }
  if (count > budget)
    throw BudgetError("response-state space exceeds the enumeration budget of " +
                      std::to_string(budget));
  return count;
}

}  // namespace detail

// Enumerates every combination of positive-probability response states and
// evaluates the nodes in topological order.
inline ExactDistribution joint_distribution(const Scm& m, std::uint64_t budget = kDefaultBudget) {
  detail::checked_world_count(m, budget);
  const Dag& g = m.graph();
  const std::size_t n = g.size();
  const auto order = g.topological_order();

  std::vector<World> worlds;
  World cur{std::vector<std::uint32_t>(n), std::vector<std::uint32_t>(n), Rational(1)};
  std::vector<Rational> mass(n + 1);
  mass[0] = 1;

  std::function<void(std::size_t)> visit = [&](std::size_t depth) {
    if (depth == n) {
      cur.probability = mass[n];
      worlds.push_back(cur);
      return;
    }
    const std::size_t node = order[depth];
    const ResponseTable& t = m.equation(node);
    const std::size_t config = m.parent_config(node, cur.values);
    for (std::size_t s = 0; s < t.num_states(); ++s) {
      if (t.probability(s) == 0) continue;
      cur.states[node] = static_cast<std::uint32_t>(s);
      cur.values[node] = t.output(s, config);
      mass[depth + 1] = mass[depth] * t.probability(s);
      visit(depth + 1);
    }
  };
  visit(0);
  return ExactDistribution(g.names(), std::move(worlds));
}

// Structural equations of the marginalized graph obtained by substituting
// the equations of the nodes in w into their retained descendants. The
// exogenous state of a retained node becomes the tuple of its own state and
// the states of the w-nodes that reach it only through w.
inline Scm substitute(const Scm& m, const NodeSet& w) {
  const Dag& g = m.graph();
  Dag mg = marginalize(g, w);
  const auto order = g.topological_order();
  std::vector<std::size_t> position(g.size());
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;

  std::vector<ResponseTable> tables;
  for (std::size_t v2 = 0; v2 < mg.size(); ++v2) {
    const std::size_t v = g.index(mg.name(v2));
    // w-nodes with a w-interior directed path into v.
    std::vector<std::size_t> feeders;
    {
      std::vector<std::size_t> stack{v};
      std::set<std::size_t> seen;
      while (!stack.empty()) {
        std::size_t n = stack.back();
        stack.pop_back();
        for (std::size_t p : g.parents(n))
          if (w.count(p) && seen.insert(p).second) stack.push_back(p);
      }
      feeders.assign(seen.begin(), seen.end());
      std::sort(feeders.begin(), feeders.end(),
                [&](std::size_t a, std::size_t b) { return position[a] < position[b]; });
    }
    std::vector<std::size_t> local = feeders;
    local.push_back(v);

    std::vector<std::size_t> new_parents;
    for (std::size_t p2 : mg.parents(v2)) new_parents.push_back(g.index(mg.name(p2)));

    std::vector<std::uint64_t> rows;
    std::vector<Rational> probs;
    std::vector<std::size_t> choice(local.size());
    std::function<void(std::size_t, const Rational&)> pick = [&](std::size_t k, const Rational& p) {
      if (k == local.size()) {
        std::uint64_t row = 0;
        std::vector<std::uint32_t> values(g.size());
        for (std::size_t c = 0; c < (std::size_t{1} << new_parents.size()); ++c) {
          for (std::size_t i = 0; i < new_parents.size(); ++i) values[new_parents[i]] = (c >> i) & 1;
          for (std::size_t i = 0; i < local.size(); ++i) {
            std::size_t node = local[i];
            values[node] = m.equation(node).output(choice[i], m.parent_config(node, values));
          }
          if (values[v]) row |= std::uint64_t{1} << c;
        }
        rows.push_back(row);
        probs.push_back(p);
        return;
      }
      const ResponseTable& t = m.equation(local[k]);
      for (std::size_t s = 0; s < t.num_states(); ++s) {
        if (t.probability(s) == 0) continue;
        choice[k] = s;
        pick(k + 1, p * t.probability(s));
      }
    };
    pick(0, Rational(1));
    tables.push_back(dedupe_states(ResponseTable(new_parents.size(), rows, probs)));
  }
  return Scm(std::move(mg), std::move(tables));
}

}  // namespace suffcause
