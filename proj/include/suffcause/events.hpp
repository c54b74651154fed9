#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace suffcause {

// Indicator of a set of worlds in a finite sample space.
class Event {
 public:
  Event() = default;
  explicit Event(std::size_t worlds, bool value = false)
      : worlds_(worlds), words_((worlds + 63) / 64, value ? ~std::uint64_t{0} : 0) {
    trim();
  }

  std::size_t worlds() const { return worlds_; }

  bool test(std::size_t w) const { return (words_[w / 64] >> (w % 64)) & 1; }
  void set(std::size_t w, bool value = true) {
    auto bit = std::uint64_t{1} << (w % 64);
    if (value)
      words_[w / 64] |= bit;
    else
      words_[w / 64] &= ~bit;
  }

  Event& operator&=(const Event& o) {
    same_space(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Event& operator|=(const Event& o) {
    same_space(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  friend Event operator&(Event a, const Event& b) { return a &= b; }
  friend Event operator|(Event a, const Event& b) { return a |= b; }
  friend Event operator~(Event a) {
    for (auto& w : a.words_) w = ~w;
    a.trim();
    return a;
  }
  bool operator==(const Event&) const = default;

  // this = 1 implies o = 1
  bool implies(const Event& o) const {
    same_space(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }

 private:
  void trim() {
    if (worlds_ % 64 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (worlds_ % 64)) - 1;
  }
  void same_space(const Event& o) const {
    if (o.worlds_ != worlds_) throw ModelError("events live in different sample spaces");
  }

  std::size_t worlds_ = 0;
  std::vector<std::uint64_t> words_;
};

// All truth assignments of a list of independent base events; world w sets
// base event i to bit i of w.
class EventSpace {
 public:
  explicit EventSpace(std::vector<std::string> base) : base_(std::move(base)) {
    if (base_.size() > 20) throw ModelError("too many base events");
  }

  std::size_t worlds() const { return std::size_t{1} << base_.size(); }
  Event always() const { return Event(worlds(), true); }
  Event never() const { return Event(worlds(), false); }

  Event event(std::string_view name) const {
    auto it = std::find(base_.begin(), base_.end(), name);
    if (it == base_.end()) throw UnknownNodeError(std::string(name));
    std::size_t bit = static_cast<std::size_t>(it - base_.begin());
    Event e(worlds());
    for (std::size_t w = 0; w < worlds(); ++w)
      if ((w >> bit) & 1) e.set(w);
    return e;
  }

 private:
  std::vector<std::string> base_;
};

namespace detail {

inline Event product(const Event& unit, std::span<const Event> factors, std::size_t skip = SIZE_MAX) {
  Event e = unit;
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (i != skip) e &= factors[i];
  return e;
}

inline Event unit_of(const Event& target) { return Event(target.worlds(), true); }

inline Event disjunction(const Event& target, std::span<const Event> terms, std::size_t skip = SIZE_MAX) {
  Event e(target.worlds());
  for (std::size_t i = 0; i < terms.size(); ++i)
    if (i != skip) e |= terms[i];
  return e;
}

}  // namespace detail

// The factors of `conj` are a sufficient conjunction for target.
inline bool is_sufficient(const Event& target, std::span<const Event> conj) {
  return detail::product(detail::unit_of(target), conj).implies(target);
}

// Sufficient and no factor can be dropped. Dropping factors only enlarges the
// product, so single drops decide minimality.
inline bool is_minimal_sufficient(const Event& target, std::span<const Event> conj) {
  if (!is_sufficient(target, conj)) return false;
  for (std::size_t i = 0; i < conj.size(); ++i)
    if (detail::product(detail::unit_of(target), conj, i).implies(target)) return false;
  return true;
}

inline bool is_determinative(const Event& target, std::span<const Event> terms) {
  return detail::disjunction(target, terms) == target;
}

inline bool is_nonredundant(const Event& target, std::span<const Event> terms) {
  if (!is_determinative(target, terms)) throw ModelError("terms are not determinative");
  for (std::size_t i = 0; i < terms.size(); ++i)
    if (detail::disjunction(target, terms, i) == target) return false;
  return true;
}

// Indices of the terms kept. Terms are offered for removal from last to
// first, so earlier terms are preferred.
inline std::vector<std::size_t> reduce_to_nonredundant(const Event& target, std::span<const Event> terms) {
  if (!is_determinative(target, terms)) throw ModelError("terms are not determinative");
  std::vector<bool> keep(terms.size(), true);
  for (std::size_t i = terms.size(); i-- > 0;) {
    keep[i] = false;
    Event e(target.worlds());
    for (std::size_t j = 0; j < terms.size(); ++j)
      if (keep[j]) e |= terms[j];
    if (e != target) keep[i] = true;
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < terms.size(); ++i)
    if (keep[i]) out.push_back(i);
  return out;
}

// Every minimal sufficient conjunction of uncomplemented candidate events,
// as sorted index lists ordered by size and then lexicographically.
inline std::vector<std::vector<std::size_t>> enumerate_msc_over_events(const Event& target,
                                                                       std::span<const Event> candidates) {
  if (candidates.empty()) throw ModelError("no candidate events");
  if (candidates.size() > 20) throw ModelError("too many candidate events");
  std::vector<std::vector<std::size_t>> out;
  const std::size_t n = candidates.size();
  for (std::uint32_t subset = 0; subset < (std::uint32_t{1} << n); ++subset) {
    std::vector<Event> conj;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if ((subset >> i) & 1) {
        conj.push_back(candidates[i]);
        idx.push_back(i);
      }
    if (is_minimal_sufficient(target, conj)) out.push_back(idx);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

}  // namespace suffcause
