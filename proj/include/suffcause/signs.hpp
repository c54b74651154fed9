#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dag.hpp"
#include "error.hpp"
#include "scm.hpp"
#include "sufficient_cause.hpp"

namespace suffcause {

enum class Sign { positive, negative, zero, undefined };

// undefined absorbs everything, then zero absorbs the rest.
inline Sign operator*(Sign a, Sign b) {
  if (a == Sign::undefined || b == Sign::undefined) return Sign::undefined;
  if (a == Sign::zero || b == Sign::zero) return Sign::zero;
  return a == b ? Sign::positive : Sign::negative;
}

inline std::string to_string(Sign s) {
  switch (s) {
    case Sign::positive: return "positive";
    case Sign::negative: return "negative";
    case Sign::zero: return "zero";
    case Sign::undefined: return "undefined";
  }
  return "undefined";
}

inline Sign to_sign(EdgeSign e) {
  switch (e) {
    case EdgeSign::positive: return Sign::positive;
    case EdgeSign::negative: return Sign::negative;
    case EdgeSign::none: return Sign::undefined;
  }
  return Sign::undefined;
}

// `degenerate` marks a parent the output never depends on; such a parent is
// reported positive.
struct MonotonicEffect {
  Sign sign = Sign::undefined;
  bool degenerate = false;

  bool operator==(const MonotonicEffect&) const = default;
};

inline MonotonicEffect detect_monotonic_effect(const ResponseTable& t, std::size_t parent) {
  if (parent >= t.arity()) throw ModelError("not a parent of the node");
  bool up = true, down = true;
  for (std::size_t j = 0; j < t.num_states(); ++j)
    for (std::size_t c = 0; c < t.num_configs(); ++c) {
      if ((c >> parent) & 1) continue;
      bool lo = t.output(j, c), hi = t.output(j, c | (std::size_t{1} << parent));
      if (lo && !hi) up = false;
      if (hi && !lo) down = false;
    }
  if (up && down) return {Sign::positive, true};
  if (up) return {Sign::positive, false};
  if (down) return {Sign::negative, false};
  return {Sign::undefined, false};
}

// Reads the direction off the canonical representation: positive when no
// term carries the complemented parent, negative when no term carries the
// plain parent.
inline MonotonicEffect monotonic_effect_via_canonical(const ResponseTable& t, std::size_t parent) {
  if (parent >= t.arity()) throw ModelError("not a parent of the node");
  bool plain = false, complemented = false;
  for (const auto& term : canonical_representation(t).terms)
    for (const auto& l : term.literals)
      if (l.parent == parent) (l.complemented ? complemented : plain) = true;
  if (!plain && !complemented) return {Sign::positive, true};
  if (!complemented) return {Sign::positive, false};
  if (!plain) return {Sign::negative, false};
  return {Sign::undefined, false};
}

inline Sign path_sign(const Dag& g, const Path& p) {
  if (!p.directed()) throw GraphError("path is not directed");
  Sign s = Sign::positive;
  for (std::size_t i = 0; i + 1 < p.nodes.size(); ++i) s = s * to_sign(g.edge_sign(p.nodes[i], p.nodes[i + 1]));
  return s;
}

// Signs of all directed paths from -> ... -> to whose interior avoids
// `avoid`. Empty when there is no such path.
inline std::set<Sign> directed_path_signs(const Dag& g, std::size_t from, std::size_t to,
                                          std::optional<std::size_t> avoid = std::nullopt) {
  g.name(from);
  g.name(to);
  if (from == to) return {};
  std::vector<std::set<Sign>> reach(g.size());
  reach[from].insert(Sign::positive);
  for (std::size_t n : g.topological_order()) {
    if (reach[n].empty() || n == to) continue;
    if (avoid && n == *avoid && n != from) continue;
    for (std::size_t c : g.children(n)) {
      Sign e = to_sign(g.edge_sign(n, c));
      for (Sign s : reach[n]) reach[c].insert(s * e);
    }
  }
  return reach[to];
}

namespace detail {

// The single sign shared by every member, or undefined.
inline Sign uniform(const std::set<Sign>& signs) {
  if (signs.size() != 1) return Sign::undefined;
  Sign s = *signs.begin();
  return s == Sign::positive || s == Sign::negative ? s : Sign::undefined;
}

}  // namespace detail

// Positive when every directed path between x and y is positive and every
// common cause reaches x and y with agreeing signs; negative when the
// directed paths are negative and the common causes reach them with opposite
// signs; zero when x and y share neither directed paths nor common causes.
inline Sign monotonically_associated(const Dag& g, std::size_t x, std::size_t y) {
  g.name(x);
  g.name(y);
  if (x == y) throw GraphError("association of a node with itself");
  std::set<Sign> direct = directed_path_signs(g, x, y);
  for (Sign s : directed_path_signs(g, y, x)) direct.insert(s);

  std::vector<Sign> causes;
  for (std::size_t c = 0; c < g.size(); ++c) {
    if (!is_common_cause(g, c, x, y)) continue;
    Sign to_x = detail::uniform(directed_path_signs(g, c, x, y));
    Sign to_y = detail::uniform(directed_path_signs(g, c, y, x));
    causes.push_back(to_x * to_y);
  }
  if (direct.empty() && causes.empty()) return Sign::zero;

  auto all = [&](Sign want) {
    for (Sign s : direct)
      if (s != want) return false;
    for (Sign s : causes)
      if (s != (want == Sign::positive ? Sign::positive : Sign::negative)) return false;
    return true;
  };
  if (all(Sign::positive)) return Sign::positive;
  if (all(Sign::negative)) return Sign::negative;
  return Sign::undefined;
}

// Qualitative covariance claim: positive means Cov >= 0, negative Cov <= 0,
// zero Cov = 0, undefined no claim.
inline Sign qualitative_cov_sign(const Dag& g, std::size_t x, std::size_t y) {
  return monotonically_associated(g, x, y);
}

inline std::string cov_claim_text(Sign s) {
  switch (s) {
    case Sign::positive: return ">=0";
    case Sign::negative: return "<=0";
    case Sign::zero: return "=0";
    case Sign::undefined: return "no claim";
  }
  return "no claim";
}

// Every declared edge sign must agree with the child's equation. Degenerate
// parents satisfy either declaration.
inline std::vector<std::string> edge_sign_mismatches(const Scm& m) {
  std::vector<std::string> out;
  const Dag& g = m.graph();
  for (auto [from, to] : g.edges()) {
    EdgeSign declared = g.edge_sign(from, to);
    if (declared == EdgeSign::none) continue;
    const auto& ps = g.parents(to);
    std::size_t pos = static_cast<std::size_t>(std::find(ps.begin(), ps.end(), from) - ps.begin());
    MonotonicEffect eff = detect_monotonic_effect(m.equation(to), pos);
    if (eff.degenerate || eff.sign == to_sign(declared)) continue;
    out.push_back("edge " + g.name(from) + " -> " + g.name(to) + " is declared " +
                  (declared == EdgeSign::positive ? "+" : "-") + " but the equation makes it " +
                  to_string(eff.sign));
  }
  return out;
}

}  // namespace suffcause
