#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "error.hpp"
#include "scm.hpp"

namespace suffcause {

// A parent of the target node, possibly complemented. `parent` is the
// position of the parent in the target's declared parent list.
struct Literal {
  std::size_t parent = 0;
  bool complemented = false;

  auto operator<=>(const Literal&) const = default;
};

// The co-cause A_i of a term: identically one, identically zero, or the
// indicator that the response state lies in a set of states.
class CoCause {
 public:
  enum class Kind { one, zero, states };

  static CoCause one() { return CoCause(Kind::one, {}); }
  static CoCause zero() { return CoCause(Kind::zero, {}); }
  static CoCause of(std::vector<std::size_t> states) {
    std::sort(states.begin(), states.end());
    states.erase(std::unique(states.begin(), states.end()), states.end());
    if (states.empty()) return zero();
    return CoCause(Kind::states, std::move(states));
  }

  Kind kind() const { return kind_; }
  const std::vector<std::size_t>& states() const { return states_; }

  bool contains(std::size_t state) const {
    switch (kind_) {
      case Kind::one: return true;
      case Kind::zero: return false;
      case Kind::states: return std::binary_search(states_.begin(), states_.end(), state);
    }
    return false;
  }

  bool operator==(const CoCause&) const = default;

 private:
  CoCause(Kind k, std::vector<std::size_t> s) : kind_(k), states_(std::move(s)) {}
  Kind kind_;
  std::vector<std::size_t> states_;
};

struct Conjunction {
  std::vector<Literal> literals;  // sorted by parent, at most one per parent
  CoCause cocause = CoCause::one();

  bool operator==(const Conjunction&) const = default;
};

inline Conjunction make_conjunction(std::vector<Literal> literals, CoCause cocause = CoCause::one()) {
  std::sort(literals.begin(), literals.end());
  for (std::size_t i = 1; i < literals.size(); ++i)
    if (literals[i].parent == literals[i - 1].parent)
      throw ModelError("a parent appears twice in one conjunction");
  return Conjunction{std::move(literals), std::move(cocause)};
}

struct Representation {
  std::string target;
  std::vector<Conjunction> terms;

  bool operator==(const Representation&) const = default;
};

// Canonical term order: fewer literals first, then lexicographic literals.
inline bool term_less(const Conjunction& a, const Conjunction& b) {
  if (a.literals.size() != b.literals.size()) return a.literals.size() < b.literals.size();
  return a.literals < b.literals;
}

namespace detail {

inline void validate(const ResponseTable& t, const Conjunction& c) {
  for (std::size_t i = 0; i < c.literals.size(); ++i) {
    if (c.literals[i].parent >= t.arity()) throw ModelError("literal refers to a foreign parent");
    if (i && c.literals[i].parent <= c.literals[i - 1].parent)
      throw ModelError("conjunction literals must be distinct and sorted");
  }
  for (std::size_t s : c.cocause.states())
    if (s >= t.num_states()) throw ModelError("co-cause refers to an unknown response state");
}

// Configurations on which every literal holds.
inline std::uint64_t config_mask(const std::vector<Literal>& literals, std::size_t arity,
                                 std::size_t skip = SIZE_MAX) {
  std::uint64_t mask = config_mask_all(arity);
  for (std::size_t i = 0; i < literals.size(); ++i) {
    if (i == skip) continue;
    std::uint64_t on = 0;
    for (std::size_t c = 0; c < (std::size_t{1} << arity); ++c)
      if ((c >> literals[i].parent) & 1) on |= std::uint64_t{1} << c;
    mask &= literals[i].complemented ? ~on : on;
  }
  return mask & config_mask_all(arity);
}

inline bool covers_states(const ResponseTable& t, std::uint64_t mask, const CoCause& a) {
  for (std::size_t j = 0; j < t.num_states(); ++j)
    if (a.contains(j) && (mask & ~t.row(j))) return false;
  return true;
}

}  // namespace detail

// Whenever the co-cause and all literals hold, the output is 1.
inline bool is_sufficient(const ResponseTable& t, const Conjunction& c) {
  detail::validate(t, c);
  return detail::covers_states(t, detail::config_mask(c.literals, t.arity()), c.cocause);
}

inline bool is_minimal_sufficient(const ResponseTable& t, const Conjunction& c) {
  if (!is_sufficient(t, c)) return false;
  for (std::size_t i = 0; i < c.literals.size(); ++i)
    if (detail::covers_states(t, detail::config_mask(c.literals, t.arity(), i), c.cocause)) return false;
  if (c.cocause.kind() != CoCause::Kind::one &&
      detail::covers_states(t, detail::config_mask(c.literals, t.arity()), CoCause::one()))
    return false;
  return true;
}

// Per response state, the union of the terms active in that state must equal
// the state's row.
inline bool is_determinative(const ResponseTable& t, const std::vector<Conjunction>& terms) {
  std::vector<std::uint64_t> masks;
  for (const auto& c : terms) {
    detail::validate(t, c);
    masks.push_back(detail::config_mask(c.literals, t.arity()));
  }
  for (std::size_t j = 0; j < t.num_states(); ++j) {
    std::uint64_t covered = 0;
    for (std::size_t i = 0; i < terms.size(); ++i)
      if (terms[i].cocause.contains(j)) covered |= masks[i];
    if (covered != t.row(j)) return false;
  }
  return true;
}

inline bool is_nonredundant(const ResponseTable& t, const std::vector<Conjunction>& terms) {
  if (!is_determinative(t, terms)) throw ModelError("terms are not determinative");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    auto rest = terms;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (is_determinative(t, rest)) return false;
  }
  return true;
}

// Drops literals from last to first while the conjunction stays sufficient,
// then drops the co-cause if the literals alone suffice.
inline Conjunction reduce_to_minimal(const ResponseTable& t, Conjunction c) {
  if (!is_sufficient(t, c)) throw ModelError("conjunction is not sufficient");
  for (std::size_t i = c.literals.size(); i-- > 0;) {
    if (detail::covers_states(t, detail::config_mask(c.literals, t.arity(), i), c.cocause))
      c.literals.erase(c.literals.begin() + static_cast<std::ptrdiff_t>(i));
  }
  if (c.cocause.kind() != CoCause::Kind::one &&
      detail::covers_states(t, detail::config_mask(c.literals, t.arity()), CoCause::one()))
    c.cocause = CoCause::one();
  return c;
}

// Drops terms from last to first while the set stays determinative.
inline std::vector<Conjunction> reduce_to_nonredundant(const ResponseTable& t, std::vector<Conjunction> terms) {
  if (!is_determinative(t, terms)) throw ModelError("terms are not determinative");
  for (std::size_t i = terms.size(); i-- > 0;) {
    auto rest = terms;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (is_determinative(t, rest)) terms = std::move(rest);
  }
  return terms;
}

// For every conjunction P of parents and complements: co-cause identically
// one when P is itself a minimal sufficient cause, otherwise the disjunction
// of the state indicators W_j for which W_j P is minimal sufficient. Terms
// whose co-cause is identically zero are omitted.
inline Representation canonical_representation(const ResponseTable& t) {
  const std::size_t m = t.arity();
  Representation rep;
  std::size_t total = 1;
  for (std::size_t i = 0; i < m; ++i) total *= 3;

  for (std::size_t code = 0; code < total; ++code) {
    std::vector<Literal> lits;
    for (std::size_t i = 0, r = code; i < m; ++i, r /= 3)
      if (r % 3) lits.push_back(Literal{i, r % 3 == 2});

    const std::uint64_t mask = detail::config_mask(lits, m);
    std::vector<std::uint64_t> dropped(lits.size());
    for (std::size_t i = 0; i < lits.size(); ++i) dropped[i] = detail::config_mask(lits, m, i);

    if (detail::covers_states(t, mask, CoCause::one())) {
      bool minimal = std::none_of(dropped.begin(), dropped.end(), [&](std::uint64_t d) {
        return detail::covers_states(t, d, CoCause::one());
      });
      if (minimal) rep.terms.push_back(Conjunction{lits, CoCause::one()});
      continue;
    }

    std::vector<std::size_t> states;
    for (std::size_t j = 0; j < t.num_states(); ++j) {
      const std::uint64_t row = t.row(j);
      if (mask & ~row) continue;
      bool minimal = std::none_of(dropped.begin(), dropped.end(), [&](std::uint64_t d) { return !(d & ~row); });
      if (minimal) states.push_back(j);
    }
    if (!states.empty()) rep.terms.push_back(Conjunction{lits, CoCause::of(states)});
  }
  std::stable_sort(rep.terms.begin(), rep.terms.end(), term_less);
  return rep;
}

// Human-readable form of a term, e.g. "A[0,2]*E1*~E2" or "1".
inline std::string format_term(const Conjunction& c, const std::vector<std::string>& parent_names) {
  std::vector<std::string> parts;
  if (c.cocause.kind() == CoCause::Kind::zero) parts.push_back("0");
  if (c.cocause.kind() == CoCause::Kind::states) {
    std::string s = "A[";
    for (std::size_t i = 0; i < c.cocause.states().size(); ++i)
      s += (i ? "," : "") + std::to_string(c.cocause.states()[i]);
    parts.push_back(s + "]");
  }
  for (const auto& l : c.literals)
    parts.push_back((l.complemented ? "~" : "") + parent_names.at(l.parent));
  if (parts.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "*" : "") + parts[i];
  return out;
}

inline std::string format_representation(const Representation& r, const std::vector<std::string>& parent_names) {
  if (r.terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < r.terms.size(); ++i)
    out += (i ? " | " : "") + format_term(r.terms[i], parent_names);
  return out;
}

}  // namespace suffcause
