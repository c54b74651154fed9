#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "suffcause/model.hpp"
#include "suffcause/suffcause.hpp"

namespace testing_support {

using namespace suffcause;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline ModelFile fixture(const std::string& name) {
  return parse_model(read_file(std::string(FIXTURE_DIR) + "/" + name + ".model"));
}

inline NodeSet ids(const Dag& g, std::initializer_list<const char*> names) {
  NodeSet s;
  for (const char* n : names) s.insert(g.index(n));
  return s;
}

// Literal path-blocking definition: enumerate every simple path of the
// skeleton and test each interior node.
inline bool path_open(const Dag& g, const std::vector<std::size_t>& p, const NodeSet& z) {
  for (std::size_t i = 1; i + 1 < p.size(); ++i) {
    bool in_left = g.has_edge(p[i - 1], p[i]);
    bool in_right = g.has_edge(p[i + 1], p[i]);
    if (in_left && in_right) {
      bool opened = z.count(p[i]) > 0;
      for (std::size_t d : descendants(g, p[i])) opened = opened || z.count(d);
      if (!opened) return false;
    } else if (z.count(p[i])) {
      return false;
    }
  }
  return true;
}

inline bool brute_d_separated(const Dag& g, const NodeSet& x, const NodeSet& y, const NodeSet& z) {
  for (std::size_t a : x)
    if (y.count(a)) return false;
  std::vector<std::size_t> path;
  std::vector<bool> on(g.size());
  bool open = false;
  auto dfs = [&](auto&& self, std::size_t n) -> void {
    if (open) return;
    if (path.size() > 1 && y.count(n)) {
      if (path_open(g, path, z)) open = true;
      return;
    }
    for (std::size_t m = 0; m < g.size(); ++m) {
      if (on[m] || !(g.has_edge(n, m) || g.has_edge(m, n))) continue;
      on[m] = true;
      path.push_back(m);
      self(self, m);
      path.pop_back();
      on[m] = false;
    }
  };
  for (std::size_t a : x) {
    if (z.count(a)) continue;
    path = {a};
    on.assign(g.size(), false);
    on[a] = true;
    dfs(dfs, a);
    if (open) return false;
  }
  return true;
}

// DAG on n nodes whose edges go from lower to higher index, edge i<j present
// iff bit k of mask is set, k enumerating pairs in order.
inline Dag dag_from_mask(std::size_t n, std::uint64_t mask) {
  Dag g;
  for (std::size_t i = 0; i < n; ++i) g.add_node("N" + std::to_string(i));
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++k)
      if ((mask >> k) & 1) g.add_edge(i, j);
  return g;
}

inline ResponseTable table_of(std::size_t m, std::vector<std::uint64_t> rows) {
  return ResponseTable::uniform(m, rows);
}

}  // namespace testing_support
