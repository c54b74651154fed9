#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace suffcause {

// Cov(x, y | given), where `given` fixes node values (a stratum).
struct CovQuantity {
  std::string x;
  std::string y;
  std::vector<std::pair<std::string, std::uint32_t>> given;

  bool operator==(const CovQuantity&) const = default;
};

inline CovQuantity stratum_cov(std::string x, std::string y, std::string d, std::uint32_t stratum) {
  return CovQuantity{std::move(x), std::move(y), {{std::move(d), stratum}}};
}

inline std::string format(const CovQuantity& q) {
  std::string s = "Cov(" + q.x + "," + q.y;
  for (std::size_t i = 0; i < q.given.size(); ++i)
    s += (i ? "," : "|") + q.given[i].first + "=" + std::to_string(q.given[i].second);
  return s + ")";
}

enum class Relation { le_zero, ge_zero, eq_zero, sign_equals };

inline std::string to_string(Relation r) {
  switch (r) {
    case Relation::le_zero: return "<=0";
    case Relation::ge_zero: return ">=0";
    case Relation::eq_zero: return "=0";
    case Relation::sign_equals: return "sign-equals";
  }
  return "?";
}

// A claim about the sign of a covariance, with the rule that produced it and
// every premise the rule consumed.
struct SignConclusion {
  CovQuantity quantity;
  Relation relation = Relation::le_zero;
  std::optional<CovQuantity> other;  // only for sign_equals
  std::string rule;
  std::vector<std::string> premises;

  bool operator==(const SignConclusion&) const = default;
};

inline std::string format(const SignConclusion& c) {
  if (c.relation == Relation::sign_equals && c.other)
    return "sign " + format(c.quantity) + " = sign " + format(*c.other);
  return format(c.quantity) + " " + to_string(c.relation);
}

}  // namespace suffcause
