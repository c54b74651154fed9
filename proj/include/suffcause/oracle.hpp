#pragma once

#include <algorithm>
#include <array>
#include <limits>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "conclusion.hpp"
#include "dag.hpp"
#include "error.hpp"
#include "rational.hpp"
#include "scm.hpp"
#include "signs.hpp"
#include "sufficient_cause.hpp"

namespace suffcause {

class ZeroProbabilityError : public Error {
 public:
  using Error::Error;
};

using Assignment = std::vector<std::pair<std::size_t, std::uint32_t>>;

namespace detail {

inline bool matches(const World& w, const Assignment& a) {
  for (auto [n, v] : a)
    if (w.values[n] != v) return false;
  return true;
}

}  // namespace detail

inline Rational probability(const ExactDistribution& dist, const Assignment& a) {
  Rational p = 0;
  for (const auto& w : dist.worlds())
    if (detail::matches(w, a)) p += w.probability;
  return p;
}

// E[XY|cond] - E[X|cond]E[Y|cond] within the renormalized stratum.
inline Rational conditional_covariance(const ExactDistribution& dist, std::size_t x, std::size_t y,
                                       const Assignment& cond) {
  Rational mass = 0, ex = 0, ey = 0, exy = 0;
  for (const auto& w : dist.worlds()) {
    if (!detail::matches(w, cond)) continue;
    mass += w.probability;
    if (w.values[x]) ex += w.probability;
    if (w.values[y]) ey += w.probability;
    if (w.values[x] && w.values[y]) exy += w.probability;
  }
  if (mass == 0) throw ZeroProbabilityError("conditioning event has probability zero");
  Rational cov = exy / mass - (ex / mass) * (ey / mass);
  cov.canonicalize();
  return cov;
}

inline Assignment resolve(const ExactDistribution& dist,
                          const std::vector<std::pair<std::string, std::uint32_t>>& given) {
  Assignment a;
  for (const auto& [name, v] : given) a.emplace_back(dist.index(name), v);
  return a;
}

inline Rational conditional_covariance(const ExactDistribution& dist, const CovQuantity& q) {
  return conditional_covariance(dist, dist.index(q.x), dist.index(q.y), resolve(dist, q.given));
}

// Exact check that x and y factorize given every positive-probability
// assignment of z, restricted to the stratum when one is given.
inline bool conditional_independent(const ExactDistribution& dist, const std::vector<std::size_t>& x,
                                    const std::vector<std::size_t>& y, const std::vector<std::size_t>& z,
                                    const Assignment& stratum = {}) {
  using Key = std::vector<std::uint32_t>;
  std::map<Key, Rational> pxyz, pxz, pyz, pz;
  for (const auto& w : dist.worlds()) {
    if (w.probability == 0 || !detail::matches(w, stratum)) continue;
    Key kx, ky, kz;
    for (auto n : x) kx.push_back(w.values[n]);
    for (auto n : y) ky.push_back(w.values[n]);
    for (auto n : z) kz.push_back(w.values[n]);
    Key a = kx, b = ky;
    a.insert(a.end(), kz.begin(), kz.end());
    b.insert(b.end(), kz.begin(), kz.end());
    Key all = kx;
    all.insert(all.end(), ky.begin(), ky.end());
    all.insert(all.end(), kz.begin(), kz.end());
    pxyz[all] += w.probability;
    pxz[a] += w.probability;
    pyz[b] += w.probability;
    pz[kz] += w.probability;
  }
  // Every (x, z) and (y, z) pair with positive mass must multiply out; pairs
  // absent from pxyz have mass zero and need a zero product.
  for (const auto& [kz, mz] : pz) {
    for (const auto& [ka, ma] : pxz) {
      if (!std::equal(kz.begin(), kz.end(), ka.end() - static_cast<std::ptrdiff_t>(kz.size()))) continue;
      for (const auto& [kb, mb] : pyz) {
        if (!std::equal(kz.begin(), kz.end(), kb.end() - static_cast<std::ptrdiff_t>(kz.size()))) continue;
        Key all(ka.begin(), ka.end() - static_cast<std::ptrdiff_t>(kz.size()));
        all.insert(all.end(), kb.begin(), kb.end());
        auto it = pxyz.find(all);
        Rational joint = it == pxyz.end() ? Rational(0) : it->second;
        if (joint * mz != ma * mb) return false;
      }
    }
  }
  return true;
}

// Seeded generator with draws that do not depend on the standard library's
// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw Error("empty range");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t r;
    do r = gen_();
    while (r >= limit);
    return r % n;
  }
  std::uint64_t bits() { return gen_(); }
  bool coin() { return below(2) == 1; }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v.at(below(v.size()));
  }

  // Positive integer weights normalized to exact probabilities.
  std::vector<Rational> probabilities(std::size_t n, std::uint32_t max_weight = 8) {
    std::vector<Rational> w(n);
    Rational total = 0;
    for (auto& x : w) {
      x = static_cast<unsigned long>(1 + below(max_weight));
      total += x;
    }
    for (auto& x : w) {
      x /= total;
      x.canonicalize();
    }
    return w;
  }

 private:
  std::mt19937_64 gen_;
};

struct InstanceConstraints {
  // node -> (parent, required direction)
  std::map<std::string, std::vector<std::pair<std::string, Sign>>> monotone;
  // node -> parent sets; no canonical term of the node may contain all of
  // the parents of a set as plain literals.
  std::map<std::string, std::vector<std::vector<std::string>>> forbidden;
  std::size_t max_states = 3;
  std::uint32_t max_weight = 8;
  std::size_t max_rejections = std::size_t{1} << 18;

  // Every signed edge becomes a monotonicity requirement.
  static InstanceConstraints from_edge_signs(const Dag& g) {
    InstanceConstraints c;
    for (auto [a, b] : g.edges()) {
      EdgeSign s = g.edge_sign(a, b);
      if (s != EdgeSign::none) c.monotone[g.name(b)].emplace_back(g.name(a), to_sign(s));
    }
    return c;
  }
};

namespace detail {

inline bool row_monotone(std::uint64_t row, std::size_t arity, std::size_t parent, Sign dir) {
  for (std::size_t c = 0; c < (std::size_t{1} << arity); ++c) {
    if ((c >> parent) & 1) continue;
    bool lo = (row >> c) & 1, hi = (row >> (c | (std::size_t{1} << parent))) & 1;
    if (dir == Sign::positive && lo && !hi) return false;
    if (dir == Sign::negative && hi && !lo) return false;
  }
  return true;
}

inline std::size_t parent_position(const Dag& g, std::size_t node, std::string_view parent) {
  const auto& ps = g.parents(node);
  auto it = std::find(ps.begin(), ps.end(), g.index(parent));
  if (it == ps.end()) throw ModelError("'" + std::string(parent) + "' is not a parent of '" + g.name(node) + "'");
  return static_cast<std::size_t>(it - ps.begin());
}

// Independent post-check of a drawn table against the node's constraints.
inline bool satisfies(const ResponseTable& t, const std::vector<std::pair<std::size_t, Sign>>& monotone,
                      const std::vector<std::vector<std::size_t>>& forbidden) {
  for (auto [p, dir] : monotone) {
    MonotonicEffect e = detect_monotonic_effect(t, p);
    if (!e.degenerate && e.sign != dir) return false;
  }
  if (forbidden.empty()) return true;
  for (const auto& term : canonical_representation(t).terms)
    for (const auto& set : forbidden) {
      bool all = true;
      for (std::size_t p : set)
        if (std::find(term.literals.begin(), term.literals.end(), Literal{p, false}) == term.literals.end())
          all = false;
      if (all) return false;
    }
  return true;
}

}  // namespace detail

// Draws every node's table independently: up to max_states canonical rows,
// each redrawn until it meets the monotonicity requirements, then the whole
// table redrawn until no forbidden term appears. Deterministic for a given
// generator state.
inline Scm random_instance(const Dag& g, const InstanceConstraints& c, Rng& rng) {
  std::vector<ResponseTable> tables;
  for (std::size_t n = 0; n < g.size(); ++n) {
    const std::size_t m = g.parents(n).size();
    if (m > kMaxArity) throw ModelError("node '" + g.name(n) + "' has too many parents");
    std::vector<std::pair<std::size_t, Sign>> mono;
    if (auto it = c.monotone.find(g.name(n)); it != c.monotone.end())
      for (const auto& [p, s] : it->second) mono.emplace_back(detail::parent_position(g, n, p), s);
    std::vector<std::vector<std::size_t>> forb;
    if (auto it = c.forbidden.find(g.name(n)); it != c.forbidden.end())
      for (const auto& set : it->second) {
        std::vector<std::size_t> pos;
        for (const auto& p : set) pos.push_back(detail::parent_position(g, n, p));
        forb.push_back(pos);
      }

    std::size_t rejections = 0;
    auto reject = [&] {
      if (++rejections > c.max_rejections)
        throw BudgetError("constraints for '" + g.name(n) + "' not met after " +
                          std::to_string(c.max_rejections) + " draws");
    };
    const std::uint64_t space = config_mask_all(m);
    for (;;) {
      const std::size_t k = 1 + rng.below(c.max_states);
      std::vector<std::uint64_t> rows;
      while (rows.size() < k) {
        std::uint64_t row = space == ~std::uint64_t{0} ? rng.bits() : rng.below(space + 1);
        bool ok = true;
        for (auto [p, dir] : mono) ok = ok && detail::row_monotone(row, m, p, dir);
        if (ok)
          rows.push_back(row);
        else
          reject();
      }
      ResponseTable t = dedupe_states(ResponseTable(m, rows, rng.probabilities(k, c.max_weight)));
      if (detail::satisfies(t, mono, forb)) {
        tables.push_back(std::move(t));
        break;
      }
      reject();
    }
  }
  return Scm(g, std::move(tables));
}

// Exact check of a claim. For sign equality the first quantity must be a
// nonnegative multiple of the second: same sign, or zero.
inline bool verify_claim(const ExactDistribution& dist, const SignConclusion& claim) {
  Rational v = conditional_covariance(dist, claim.quantity);
  switch (claim.relation) {
    case Relation::le_zero: return v <= 0;
    case Relation::ge_zero: return v >= 0;
    case Relation::eq_zero: return v == 0;
    case Relation::sign_equals: {
      if (!claim.other) throw ModelError("sign-equality claim without a second quantity");
      Rational w = conditional_covariance(dist, *claim.other);
      return sign(v) == 0 || sign(v) == sign(w);
    }
  }
  return false;
}

// Instances of D = A0 | A1 E1 | A2 E2 | A3 E1 E2 where D's response state is
// the tuple (A0, A1, A2, A3). The tuple distribution is a product over
// blocks of co-causes, so requested independences hold exactly.
struct CoCauseDesign {
  std::array<int, 4> fixed{-1, -1, -1, -1};  // -1 free, otherwise the constant value
  bool a1_indep_a2 = false;
  bool a0_indep_a1_or_a2 = false;
  // How E1 and E2 are coupled: independent roots, or a shared cause C with
  // agreeing (positive) or opposing (negative) effects.
  std::vector<Sign> couplings{Sign::zero, Sign::positive, Sign::negative};
};

struct CoCauseInstance {
  Scm scm;
  Representation rep;
};

inline CoCauseInstance cocause_instance(const CoCauseDesign& design, Rng& rng) {
  const Sign coupling = rng.pick(design.couplings);
  Dag g;
  std::size_t c = 0;
  if (coupling != Sign::zero) c = g.add_node("C");
  std::size_t e1 = g.add_node("E1"), e2 = g.add_node("E2"), d = g.add_node("D");
  if (coupling != Sign::zero) {
    g.add_edge(c, e1, EdgeSign::positive);
    g.add_edge(c, e2, coupling == Sign::positive ? EdgeSign::positive : EdgeSign::negative);
  }
  g.add_edge(e1, d, EdgeSign::positive);
  g.add_edge(e2, d, EdgeSign::positive);

  Dag upstream;
  if (coupling != Sign::zero) upstream.add_node("C");
  upstream.add_node("E1");
  upstream.add_node("E2");
  if (coupling != Sign::zero) {
    upstream.add_edge("C", "E1", g.edge_sign(c, e1));
    upstream.add_edge("C", "E2", g.edge_sign(c, e2));
  }
  Scm up = random_instance(upstream, InstanceConstraints::from_edge_signs(upstream), rng);

  using Blocks = std::vector<std::vector<std::size_t>>;
  std::vector<Blocks> partitions{{{0, 1, 2, 3}},  {{1}, {0, 2, 3}}, {{2}, {0, 1, 3}},
                                 {{0}, {1, 2, 3}}, {{1}, {2}, {0, 3}}, {{0}, {1}, {2}, {3}}};
  std::vector<Blocks> allowed;
  for (const auto& p : partitions) {
    auto block_of = [&](std::size_t v) {
      for (std::size_t b = 0; b < p.size(); ++b)
        if (std::find(p[b].begin(), p[b].end(), v) != p[b].end()) return b;
      return p.size();
    };
    if (design.a1_indep_a2 && block_of(1) == block_of(2)) continue;
    if (design.a0_indep_a1_or_a2 && block_of(0) == block_of(1) && block_of(0) == block_of(2)) continue;
    allowed.push_back(p);
  }
  const Blocks& blocks = rng.pick(allowed);

  std::vector<std::uint64_t> rows;
  std::vector<Rational> probs;
  std::vector<std::array<bool, 4>> tuples;
  for (;;) {
    std::vector<std::vector<Rational>> weights;
    for (const auto& b : blocks) {
      std::vector<Rational> w(std::size_t{1} << b.size());
      for (auto& x : w) x = rng.below(4) == 0 ? 0UL : static_cast<unsigned long>(1 + rng.below(8));
      weights.push_back(w);
    }
    rows.clear();
    probs.clear();
    tuples.clear();
    Rational total = 0;
    for (std::size_t t = 0; t < 16; ++t) {
      std::array<bool, 4> a{};
      for (std::size_t i = 0; i < 4; ++i) a[i] = (t >> i) & 1;
      bool ok = true;
      for (std::size_t i = 0; i < 4; ++i)
        if (design.fixed[i] >= 0 && a[i] != (design.fixed[i] == 1)) ok = false;
      if (!ok) continue;
      Rational p = 1;
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        std::size_t idx = 0;
        for (std::size_t k = 0; k < blocks[b].size(); ++k)
          if (a[blocks[b][k]]) idx |= std::size_t{1} << k;
        p *= weights[b][idx];
      }
      if (p == 0) continue;
      // Bit 0 of a configuration is E1, bit 1 is E2.
      std::uint64_t row = 0;
      for (std::size_t cfg = 0; cfg < 4; ++cfg) {
        bool x1 = cfg & 1, x2 = cfg & 2;
        if (a[0] || (a[1] && x1) || (a[2] && x2) || (a[3] && x1 && x2)) row |= std::uint64_t{1} << cfg;
      }
      rows.push_back(row);
      probs.push_back(p);
      tuples.push_back(a);
      total += p;
    }
    if (total == 0) continue;
    for (auto& p : probs) {
      p /= total;
      p.canonicalize();
    }
    break;
  }

  std::vector<ResponseTable> tables = up.equations();
  tables.emplace_back(2, rows, probs);
  Scm scm(g, std::move(tables));

  Representation rep{"D", {}};
  const std::array<std::vector<Literal>, 4> slots{
      std::vector<Literal>{}, {Literal{0, false}}, {Literal{1, false}}, {Literal{0, false}, Literal{1, false}}};
  for (std::size_t i = 0; i < 4; ++i) {
    std::vector<std::size_t> states;
    for (std::size_t s = 0; s < tuples.size(); ++s)
      if (tuples[s][i]) states.push_back(s);
    CoCause cc = states.size() == tuples.size() ? CoCause::one() : CoCause::of(states);
    rep.terms.push_back(Conjunction{slots[i], cc});
  }
  return {std::move(scm), std::move(rep)};
}

}  // namespace suffcause
