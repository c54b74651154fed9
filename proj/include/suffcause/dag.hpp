#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"

namespace suffcause {

enum class EdgeSign { none, positive, negative };

using NodeSet = std::set<std::size_t>;

// A path in the skeleton. forward[i] is true when the edge between nodes[i]
// and nodes[i + 1] points from nodes[i] to nodes[i + 1].
struct Path {
  std::vector<std::size_t> nodes;
  std::vector<bool> forward;

  bool directed() const {
    return std::all_of(forward.begin(), forward.end(), [](bool f) { return f; });
  }
  bool operator==(const Path&) const = default;
};

// Directed acyclic graph over named nodes. Node indices follow declaration
// order and parent/child lists are kept sorted by index, so the k-th parent
// of a node is its k-th parent in declaration order.
class Dag {
 public:
  std::size_t add_node(const std::string& name) {
    if (name.empty()) throw GraphError("empty node name");
    if (index_.count(name)) throw GraphError("duplicate node '" + name + "'");
    index_.emplace(name, names_.size());
    names_.push_back(name);
    parents_.emplace_back();
    children_.emplace_back();
    return names_.size() - 1;
  }

  void add_edge(std::size_t from, std::size_t to, EdgeSign sign = EdgeSign::none) {
    check(from);
    check(to);
    if (from == to) throw GraphError("self-loop on '" + names_[from] + "'");
    if (has_edge(from, to))
      throw GraphError("duplicate edge " + names_[from] + " -> " + names_[to]);
    if (reaches(to, from))
      throw GraphError("edge " + names_[from] + " -> " + names_[to] + " creates a cycle");
    insert_sorted(parents_[to], from);
    insert_sorted(children_[from], to);
    edges_.emplace_back(from, to);
    signs_[{from, to}] = sign;
  }

  void add_edge(std::string_view from, std::string_view to, EdgeSign sign = EdgeSign::none) {
    add_edge(index(from), index(to), sign);
  }

  void set_edge_sign(std::size_t from, std::size_t to, EdgeSign sign) {
    auto it = signs_.find({from, to});
    if (it == signs_.end()) throw GraphError("no edge to sign");
    it->second = sign;
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const {
    check(i);
    return names_[i];
  }
  const std::vector<std::string>& names() const { return names_; }

  std::size_t index(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) throw UnknownNodeError(std::string(name));
    return it->second;
  }
  bool contains(std::string_view name) const { return index_.count(std::string(name)) > 0; }

  const std::vector<std::size_t>& parents(std::size_t i) const {
    check(i);
    return parents_[i];
  }
  const std::vector<std::size_t>& children(std::size_t i) const {
    check(i);
    return children_[i];
  }

  bool has_edge(std::size_t from, std::size_t to) const { return signs_.count({from, to}) > 0; }

  EdgeSign edge_sign(std::size_t from, std::size_t to) const {
    auto it = signs_.find({from, to});
    if (it == signs_.end())
      throw GraphError("no edge " + name(from) + " -> " + name(to));
    return it->second;
  }

  // Insertion order.
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }

  // Kahn's algorithm, ties broken by declaration order.
  std::vector<std::size_t> topological_order() const {
    std::vector<std::size_t> indegree(size());
    for (std::size_t i = 0; i < size(); ++i) indegree[i] = parents_[i].size();
    std::set<std::size_t> ready;
    for (std::size_t i = 0; i < size(); ++i)
      if (indegree[i] == 0) ready.insert(i);
    std::vector<std::size_t> order;
    while (!ready.empty()) {
      std::size_t n = *ready.begin();
      ready.erase(ready.begin());
      order.push_back(n);
      for (std::size_t c : children_[n])
        if (--indegree[c] == 0) ready.insert(c);
    }
    return order;
  }

  NodeSet node_set(const std::vector<std::string>& names) const {
    NodeSet out;
    for (const auto& n : names) out.insert(index(n));
    return out;
  }

  std::vector<std::string> names_of(const NodeSet& set) const {
    std::vector<std::string> out;
    for (std::size_t i : set) out.push_back(name(i));
    return out;
  }

  std::string format(const Path& p) const {
    std::string s;
    for (std::size_t i = 0; i < p.nodes.size(); ++i) {
      if (i) s += p.forward[i - 1] ? " -> " : " <- ";
      s += name(p.nodes[i]);
    }
    return s;
  }

 private:
  void check(std::size_t i) const {
    if (i >= names_.size()) throw UnknownNodeError("#" + std::to_string(i));
  }

  static void insert_sorted(std::vector<std::size_t>& v, std::size_t x) {
    v.insert(std::lower_bound(v.begin(), v.end(), x), x);
  }

  bool reaches(std::size_t from, std::size_t to) const {
    std::vector<bool> seen(size());
    std::vector<std::size_t> stack{from};
    while (!stack.empty()) {
      std::size_t n = stack.back();
      stack.pop_back();
      if (n == to) return true;
      if (seen[n]) continue;
      seen[n] = true;
      for (std::size_t c : children_[n]) stack.push_back(c);
    }
    return false;
  }

  std::vector<std::string> names_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::vector<std::vector<std::size_t>> parents_;
  std::vector<std::vector<std::size_t>> children_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::map<std::pair<std::size_t, std::size_t>, EdgeSign> signs_;
};

namespace detail {

inline NodeSet closure(const Dag& g, std::size_t x, bool upward) {
  NodeSet out;
  std::vector<std::size_t> stack{x};
  while (!stack.empty()) {
    std::size_t n = stack.back();
    stack.pop_back();
    for (std::size_t m : upward ? g.parents(n) : g.children(n))
      if (out.insert(m).second) stack.push_back(m);
  }
  return out;
}

inline void check_members(const Dag& g, const NodeSet& s) {
  for (std::size_t i : s)
    if (i >= g.size()) throw UnknownNodeError("#" + std::to_string(i));
}

}  // namespace detail

// Proper ancestors of x (x itself excluded).
inline NodeSet ancestors(const Dag& g, std::size_t x) {
  g.name(x);
  return detail::closure(g, x, true);
}

inline NodeSet descendants(const Dag& g, std::size_t x) {
  g.name(x);
  return detail::closure(g, x, false);
}

// True when a directed path from -> ... -> to exists whose nodes (endpoints
// excluded) avoid `avoid`. A path never passes through `avoid` itself.
inline bool has_directed_path(const Dag& g, std::size_t from, std::size_t to,
                              std::optional<std::size_t> avoid = std::nullopt) {
  if (from == to) return false;
  std::vector<bool> seen(g.size());
  std::vector<std::size_t> stack{from};
  while (!stack.empty()) {
    std::size_t n = stack.back();
    stack.pop_back();
    for (std::size_t c : g.children(n)) {
      if (c == to) return true;
      if (avoid && c == *avoid) continue;
      if (!seen[c]) {
        seen[c] = true;
        stack.push_back(c);
      }
    }
  }
  return false;
}

// c is a common cause of a and b: directed paths c -> b not through a and
// c -> a not through b.
inline bool is_common_cause(const Dag& g, std::size_t c, std::size_t a, std::size_t b) {
  if (c == a || c == b || a == b) return false;
  return has_directed_path(g, c, b, a) && has_directed_path(g, c, a, b);
}

// Reachability ("Bayes ball") formulation of d-separation.
inline bool d_separated(const Dag& g, const NodeSet& x, const NodeSet& y, const NodeSet& z) {
  detail::check_members(g, x);
  detail::check_members(g, y);
  detail::check_members(g, z);
  for (std::size_t i : x)
    if (y.count(i) || z.count(i)) throw GraphError("d-separation query sets overlap");
  for (std::size_t i : y)
    if (z.count(i)) throw GraphError("d-separation query sets overlap");

  std::vector<bool> in_z(g.size()), opens_collider(g.size());
  for (std::size_t i : z) {
    in_z[i] = true;
    opens_collider[i] = true;
    for (std::size_t a : ancestors(g, i)) opens_collider[a] = true;
  }

  // visited[n][0]: arrived travelling up (from a child); [1]: travelling down.
  std::vector<std::array<bool, 2>> visited(g.size(), {false, false});
  std::deque<std::pair<std::size_t, int>> queue;
  for (std::size_t i : x) queue.emplace_back(i, 0);
  while (!queue.empty()) {
    auto [n, dir] = queue.front();
    queue.pop_front();
    if (visited[n][dir]) continue;
    visited[n][dir] = true;
    if (!in_z[n] && y.count(n)) return false;
    if (dir == 0) {
      if (in_z[n]) continue;
      for (std::size_t p : g.parents(n)) queue.emplace_back(p, 0);
      for (std::size_t c : g.children(n)) queue.emplace_back(c, 1);
    } else {
      if (!in_z[n])
        for (std::size_t c : g.children(n)) queue.emplace_back(c, 1);
      if (opens_collider[n])
        for (std::size_t p : g.parents(n)) queue.emplace_back(p, 0);
    }
  }
  return true;
}

// A simple path from any member of x to any member of y that is not blocked
// given z, searched depth-first with neighbours in declaration order.
inline std::optional<Path> d_connecting_path(const Dag& g, const NodeSet& x, const NodeSet& y,
                                             const NodeSet& z) {
  detail::check_members(g, x);
  detail::check_members(g, y);
  detail::check_members(g, z);
  std::vector<bool> in_z(g.size()), opens_collider(g.size());
  for (std::size_t i : z) {
    in_z[i] = true;
    opens_collider[i] = true;
    for (std::size_t a : ancestors(g, i)) opens_collider[a] = true;
  }

  auto neighbours = [&](std::size_t n) {
    std::vector<std::pair<std::size_t, bool>> out;  // (node, edge points away from n)
    for (std::size_t p : g.parents(n)) out.emplace_back(p, false);
    for (std::size_t c : g.children(n)) out.emplace_back(c, true);
    std::sort(out.begin(), out.end());
    return out;
  };

  Path path;
  std::vector<bool> on_path(g.size());
  std::optional<Path> found;

  auto dfs = [&](auto&& self, std::size_t n) -> bool {
    for (auto [m, away] : neighbours(n)) {
      if (on_path[m]) continue;
      if (!path.forward.empty()) {
        bool into_n = path.forward.back();
        bool collider = into_n && !away;
        if (collider ? !opens_collider[n] : in_z[n]) continue;
      }
      path.nodes.push_back(m);
      path.forward.push_back(away);
      on_path[m] = true;
      if (y.count(m)) {
        found = path;
        return true;
      }
      if (self(self, m)) return true;
      on_path[m] = false;
      path.nodes.pop_back();
      path.forward.pop_back();
    }
    return false;
  };

  for (std::size_t start : x) {
    if (in_z[start]) continue;
    path = Path{{start}, {}};
    std::fill(on_path.begin(), on_path.end(), false);
    on_path[start] = true;
    if (dfs(dfs, start)) return found;
  }
  return std::nullopt;
}

// No node of w may be a common cause of two retained nodes.
inline bool can_marginalize(const Dag& g, const NodeSet& w) {
  detail::check_members(g, w);
  std::vector<std::size_t> retained;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (!w.count(i)) retained.push_back(i);
  for (std::size_t c : w)
    for (std::size_t i = 0; i < retained.size(); ++i)
      for (std::size_t j = i + 1; j < retained.size(); ++j)
        if (is_common_cause(g, c, retained[i], retained[j])) return false;
  return true;
}

namespace detail {

inline EdgeSign compose(EdgeSign a, EdgeSign b) {
  if (a == EdgeSign::none || b == EdgeSign::none) return EdgeSign::none;
  return a == b ? EdgeSign::positive : EdgeSign::negative;
}

}  // namespace detail

// Contracts directed paths whose interior lies in w. A marginal edge keeps a
// sign only when every contributing path carries that sign.
inline Dag marginalize(const Dag& g, const NodeSet& w) {
  if (!can_marginalize(g, w))
    throw GraphError("cannot marginalize: the set contains a common cause of retained nodes");
  Dag out;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (!w.count(i)) out.add_node(g.name(i));

  for (std::size_t a = 0; a < g.size(); ++a) {
    if (w.count(a)) continue;
    std::map<std::size_t, std::set<EdgeSign>> reached;
    // (node, sign of path so far); paths only continue through w.
    std::vector<std::pair<std::size_t, EdgeSign>> stack;
    for (std::size_t c : g.children(a)) stack.emplace_back(c, g.edge_sign(a, c));
    std::set<std::pair<std::size_t, EdgeSign>> seen;
    while (!stack.empty()) {
      auto [n, s] = stack.back();
      stack.pop_back();
      if (!seen.insert({n, s}).second) continue;
      if (!w.count(n)) {
        reached[n].insert(s);
        continue;
      }
      for (std::size_t c : g.children(n)) stack.emplace_back(c, detail::compose(s, g.edge_sign(n, c)));
    }
    for (const auto& [b, signs] : reached) {
      EdgeSign s = signs.size() == 1 ? *signs.begin() : EdgeSign::none;
      out.add_edge(g.name(a), g.name(b), s);
    }
  }
  return out;
}

}  // namespace suffcause
