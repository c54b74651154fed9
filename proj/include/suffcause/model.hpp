#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cov_inference.hpp"
#include "dag.hpp"
#include "error.hpp"
#include "rational.hpp"
#include "scm.hpp"
#include "signs.hpp"
#include "sufficient_cause.hpp"

namespace suffcause {

class ParseError : public Error {
 public:
  explicit ParseError(std::vector<std::string> diagnostics)
      : Error(join(diagnostics)), diagnostics_(std::move(diagnostics)) {}
  const std::vector<std::string>& diagnostics() const { return diagnostics_; }

 private:
  static std::string join(const std::vector<std::string>& d) {
    std::string s;
    for (const auto& x : d) s += (s.empty() ? "" : "\n") + x;
    return s;
  }
  std::vector<std::string> diagnostics_;
};

struct ModelFile {
  Dag graph;
  std::vector<std::optional<ResponseTable>> equations;  // per node
  std::vector<Representation> representations;
  Assertions assertions;

  bool has_all_equations() const {
    return std::all_of(equations.begin(), equations.end(), [](const auto& e) { return e.has_value(); });
  }
  Scm scm() const {
    std::vector<ResponseTable> t;
    for (std::size_t i = 0; i < equations.size(); ++i) {
      if (!equations[i]) throw ModelError("no equation for '" + graph.name(i) + "'");
      t.push_back(*equations[i]);
    }
    return Scm(graph, std::move(t));
  }
  const Representation* representation(std::string_view node) const {
    for (const auto& r : representations)
      if (r.target == node) return &r;
    return nullptr;
  }
};

namespace detail {

inline std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

inline std::vector<std::size_t> parse_indices(const std::string& list) {
  std::vector<std::size_t> out;
  std::stringstream in(list);
  for (std::string item; std::getline(in, item, ',');) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw ModelError("malformed state list '" + list + "'");
    out.push_back(std::stoul(item));
  }
  return out;
}

}  // namespace detail

// Line-oriented model text. Every problem found is reported with its line
// number; parsing continues past errors where it can.
inline ModelFile parse_model(std::string_view text) {
  struct RawState {
    std::size_t line;
    Rational prob;
    std::optional<std::string> bits;
    std::uint64_t row = 0;
  };
  struct RawEquation {
    std::size_t line;
    std::string node;
    std::size_t declared;
    std::vector<RawState> states;
  };
  struct RawTerm {
    std::size_t line;
    std::vector<std::string> literals;
    std::optional<std::vector<std::size_t>> states;
  };
  struct RawRep {
    std::size_t line;
    std::string node;
    std::vector<RawTerm> terms;
  };

  ModelFile mf;
  std::vector<std::string> diag;
  std::vector<RawEquation> eqs;
  std::vector<RawRep> reps;
  enum class Block { none, equation, representation } block = Block::none;
  auto err = [&](std::size_t line, const std::string& msg) { diag.push_back("line " + std::to_string(line) + ": " + msg); };

  std::istringstream in{std::string(text)};
  std::size_t lineno = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    auto w = detail::split_words(raw);
    if (w.empty()) continue;
    try {
      const std::string& kw = w[0];
      if (kw == "node") {
        block = Block::none;
        if (w.size() != 2) throw ModelError("expected 'node NAME'");
        mf.graph.add_node(w[1]);
      } else if (kw == "edge") {
        block = Block::none;
        if (w.size() != 3 && w.size() != 4) throw ModelError("expected 'edge FROM TO [+|-]'");
        EdgeSign s = EdgeSign::none;
        if (w.size() == 4) {
          if (w[3] == "+")
            s = EdgeSign::positive;
          else if (w[3] == "-")
            s = EdgeSign::negative;
          else
            throw ModelError("edge sign must be + or -");
        }
        mf.graph.add_edge(w[1], w[2], s);
      } else if (kw == "equation") {
        if (w.size() != 4 || w[2] != "states") throw ModelError("expected 'equation NAME states K'");
        if (w[3].find_first_not_of("0123456789") != std::string::npos) throw ModelError("bad state count");
        eqs.push_back(RawEquation{lineno, w[1], std::stoul(w[3]), {}});
        block = Block::equation;
      } else if (kw == "state") {
        if (block != Block::equation) throw ModelError("'state' outside an equation");
        if (w.size() != 6 || w[2] != "prob" || (w[4] != "bits" && w[4] != "row"))
          throw ModelError("expected 'state IDX prob N/D bits BITSTRING' or '... row K'");
        auto& eq = eqs.back();
        if (w[1] != std::to_string(eq.states.size()))
          throw ModelError("state index " + w[1] + " out of order, expected " + std::to_string(eq.states.size()));
        RawState st{lineno, parse_rational(w[3]), std::nullopt, 0};
        if (w[4] == "bits") {
          if (w[5].find_first_not_of("01") != std::string::npos) throw ModelError("bitstring must be 0s and 1s");
          st.bits = w[5];
        } else {
          if (w[5].find_first_not_of("0123456789") != std::string::npos) throw ModelError("bad row index");
          st.row = std::stoull(w[5]);
        }
        eq.states.push_back(st);
      } else if (kw == "representation") {
        if (w.size() != 2) throw ModelError("expected 'representation NODE'");
        reps.push_back(RawRep{lineno, w[1], {}});
        block = Block::representation;
      } else if (kw == "term") {
        if (block != Block::representation) throw ModelError("'term' outside a representation");
        RawTerm t{lineno, {}, std::nullopt};
        for (std::size_t i = 1; i < w.size(); ++i) {
          if (w[i] == "states") {
            if (i + 2 != w.size()) throw ModelError("expected 'states i,j,...' at the end of the term");
            t.states = detail::parse_indices(w[i + 1]);
            break;
          }
          t.literals.push_back(w[i]);
        }
        reps.back().terms.push_back(t);
      } else if (kw == "assert") {
        block = Block::none;
        if (w.size() < 2) throw ModelError("empty assertion");
        const std::string& what = w[1];
        if (what == "no-synergism" && w.size() == 5) {
          mf.assertions.no_synergism.push_back({w[2], w[3], w[4]});
        } else if (what == "cov" && w.size() == 5) {
          Sign s = w[4] == "<=0" ? Sign::negative : w[4] == ">=0" ? Sign::positive : w[4] == "=0" ? Sign::zero
                                                                                                  : Sign::undefined;
          if (s == Sign::undefined) throw ModelError("covariance relation must be <=0, >=0 or =0");
          mf.assertions.cov.push_back({w[2], w[3], s});
        } else if (what == "cocause" && w.size() == 5) {
          if (w[4] != "one" && w[4] != "zero") throw ModelError("co-cause value must be one or zero");
          mf.assertions.cocause.push_back({w[2], w[3], w[4] == "one"});
        } else if (what == "independent-cocauses" && w.size() == 5) {
          mf.assertions.independent_cocauses.push_back({w[2], w[3], w[4]});
        } else {
          throw ModelError("unknown or malformed assertion '" + what + "'");
        }
      } else {
        throw ModelError("unknown keyword '" + kw + "'");
      }
    } catch (const Error& e) {
      err(lineno, e.what());
    }
  }

  const Dag& g = mf.graph;
  mf.equations.assign(g.size(), std::nullopt);
  for (const auto& eq : eqs) {
    try {
      if (!g.contains(eq.node)) throw UnknownNodeError(eq.node);
      const std::size_t n = g.index(eq.node);
      if (mf.equations[n]) throw ModelError("second equation for '" + eq.node + "'");
      if (eq.states.size() != eq.declared)
        throw ModelError("equation for '" + eq.node + "' declares " + std::to_string(eq.declared) + " states but lists " +
                         std::to_string(eq.states.size()));
      const std::size_t m = g.parents(n).size();
      if (m > kMaxArity) throw ModelError("'" + eq.node + "' has more than " + std::to_string(kMaxArity) + " parents");
      std::vector<std::uint64_t> rows;
      std::vector<Rational> probs;
      for (const auto& st : eq.states) {
        std::uint64_t row = st.row;
        if (st.bits) {
          if (st.bits->size() != (std::size_t{1} << m))
            throw ModelError("line " + std::to_string(st.line) + ": bitstring for '" + eq.node + "' needs " +
                             std::to_string(std::size_t{1} << m) + " characters");
          row = 0;
          for (std::size_t c = 0; c < st.bits->size(); ++c)
            if ((*st.bits)[c] == '1') row |= std::uint64_t{1} << c;
        }
        rows.push_back(row);
        probs.push_back(st.prob);
      }
      try {
        mf.equations[n] = ResponseTable(m, rows, probs);
      } catch (const ModelError& e) {
        throw ModelError("equation for '" + eq.node + "': " + e.what());
      }
      const auto& ps = g.parents(n);
      for (std::size_t i = 0; i < ps.size(); ++i) {
        EdgeSign declared = g.edge_sign(ps[i], n);
        if (declared == EdgeSign::none) continue;
        MonotonicEffect eff = detect_monotonic_effect(*mf.equations[n], i);
        if (!eff.degenerate && eff.sign != to_sign(declared))
          throw ModelError("edge " + g.name(ps[i]) + " -> " + eq.node + " is declared " +
                           (declared == EdgeSign::positive ? "+" : "-") + " but the equation makes it " +
                           to_string(eff.sign));
      }
    } catch (const Error& e) {
      err(eq.line, e.what());
    }
  }

  for (const auto& r : reps) {
    try {
      if (!g.contains(r.node)) throw UnknownNodeError(r.node);
      if (mf.representation(r.node)) throw ModelError("second representation for '" + r.node + "'");
      const std::size_t n = g.index(r.node);
      const auto& ps = g.parents(n);
      Representation rep{r.node, {}};
      for (const auto& t : r.terms) {
        std::vector<Literal> lits;
        for (const auto& tok : t.literals) {
          bool neg = !tok.empty() && tok[0] == '~';
          std::string name = neg ? tok.substr(1) : tok;
          auto it = g.contains(name) ? std::find(ps.begin(), ps.end(), g.index(name)) : ps.end();
          if (it == ps.end())
            throw ModelError("line " + std::to_string(t.line) + ": '" + name + "' is not a parent of '" + r.node + "'");
          lits.push_back(Literal{static_cast<std::size_t>(it - ps.begin()), neg});
        }
        CoCause cc = CoCause::one();
        if (t.states) {
          if (t.states->empty()) throw ModelError("line " + std::to_string(t.line) + ": empty state list");
          if (mf.equations[n])
            for (std::size_t s : *t.states)
              if (s >= mf.equations[n]->num_states())
                throw ModelError("line " + std::to_string(t.line) + ": state " + std::to_string(s) + " out of range");
          cc = CoCause::of(*t.states);
        }
        rep.terms.push_back(make_conjunction(std::move(lits), std::move(cc)));
      }
      if (mf.equations[n] && !is_determinative(*mf.equations[n], rep.terms))
        throw ModelError("representation is not determinative for '" + r.node + "'");
      mf.representations.push_back(std::move(rep));
    } catch (const Error& e) {
      err(r.line, e.what());
    }
  }

  if (!diag.empty()) throw ParseError(std::move(diag));
  return mf;
}

inline std::string serialize_term(const Dag& g, std::size_t node, const Conjunction& c) {
  std::string s = "term";
  for (const auto& l : c.literals) s += " " + std::string(l.complemented ? "~" : "") + g.name(g.parents(node)[l.parent]);
  if (c.cocause.kind() == CoCause::Kind::states) {
    s += " states ";
    for (std::size_t i = 0; i < c.cocause.states().size(); ++i)
      s += (i ? "," : "") + std::to_string(c.cocause.states()[i]);
  }
  return s;
}

// Canonical text: nodes, edges, equations, representations, assertions.
inline std::string serialize_model(const ModelFile& mf) {
  const Dag& g = mf.graph;
  std::ostringstream out;
  for (const auto& n : g.names()) out << "node " << n << "\n";
  for (auto [a, b] : g.edges()) {
    out << "edge " << g.name(a) << " " << g.name(b);
    EdgeSign s = g.edge_sign(a, b);
    if (s != EdgeSign::none) out << (s == EdgeSign::positive ? " +" : " -");
    out << "\n";
  }
  for (std::size_t n = 0; n < mf.equations.size(); ++n) {
    if (!mf.equations[n]) continue;
    const auto& t = *mf.equations[n];
    out << "equation " << g.name(n) << " states " << t.num_states() << "\n";
    for (std::size_t j = 0; j < t.num_states(); ++j) {
      std::string bits;
      for (std::size_t c = 0; c < t.num_configs(); ++c) bits += t.output(j, c) ? '1' : '0';
      out << "state " << j << " prob " << to_string(t.probability(j)) << " bits " << bits << "\n";
    }
  }
  for (const auto& r : mf.representations) {
    const std::size_t n = g.index(r.target);
    out << "representation " << r.target << "\n";
    for (const auto& t : r.terms) out << serialize_term(g, n, t) << "\n";
  }
  const auto& a = mf.assertions;
  for (const auto& x : a.no_synergism) out << "assert no-synergism " << x.node << " " << x.a << " " << x.b << "\n";
  for (const auto& x : a.cov)
    out << "assert cov " << x.x << " " << x.y << " "
        << (x.sign == Sign::negative ? "<=0" : x.sign == Sign::positive ? ">=0" : "=0") << "\n";
  for (const auto& x : a.cocause)
    out << "assert cocause " << x.node << " " << x.slot << " " << (x.value ? "one" : "zero") << "\n";
  for (const auto& x : a.independent_cocauses)
    out << "assert independent-cocauses " << x.node << " " << x.a << " " << x.b << "\n";
  return out.str();
}

}  // namespace suffcause
