#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "cov_inference.hpp"
#include "dag.hpp"
#include "expansion.hpp"
#include "model.hpp"
#include "oracle.hpp"
#include "signs.hpp"
#include "sufficient_cause.hpp"

namespace suffcause::report {

using Json = nlohmann::ordered_json;

struct Options {
  std::string command;
  std::vector<std::string> nodes;
  std::vector<std::string> x, y, z, q;
  std::optional<std::string> f, g;
  std::optional<std::uint32_t> stratum;
  std::uint64_t seed = 1;
  std::uint64_t budget = kDefaultBudget;
  std::size_t sweep = 0;
  std::optional<std::string> case_id;
  bool canonical = false;
};

struct Output {
  Json json;
  int exit = 0;
};

// Raised for bad queries (unknown nodes, missing flags); the CLI maps it to
// a usage error.
class UsageError : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline std::size_t node(const Dag& g, const std::string& name) {
  if (!g.contains(name)) throw UnknownNodeError(name);
  return g.index(name);
}

inline NodeSet nodes(const Dag& g, const std::vector<std::string>& names) {
  NodeSet s;
  for (const auto& n : names) s.insert(node(g, n));
  return s;
}

inline std::string only(const std::vector<std::string>& v, const char* flag) {
  if (v.size() != 1) throw UsageError(std::string("exactly one ") + flag + " is required");
  return v.front();
}

inline Json term_json(const Dag& g, std::size_t n, const Conjunction& c) {
  Json t;
  Json lits = Json::array();
  for (const auto& l : c.literals) lits.push_back((l.complemented ? "~" : "") + g.name(g.parents(n)[l.parent]));
  t["literals"] = lits;
  switch (c.cocause.kind()) {
    case CoCause::Kind::one: t["cocause"] = "one"; break;
    case CoCause::Kind::zero: t["cocause"] = "zero"; break;
    case CoCause::Kind::states: t["cocause"] = c.cocause.states(); break;
  }
  return t;
}

inline Json conclusion_json(const SignConclusion& c) {
  Json j;
  j["claim"] = format(c);
  j["quantity"] = format(c.quantity);
  j["relation"] = to_string(c.relation);
  if (c.other) j["other"] = format(*c.other);
  j["rule"] = c.rule;
  j["premises"] = c.premises;
  return j;
}

inline Json premise_json(const PremiseReport& r) {
  Json j;
  j["rule"] = r.rule;
  j["f"] = r.f;
  j["g"] = r.g;
  j["e1"] = r.e1;
  j["e2"] = r.e2;
  j["d"] = r.d;
  j["q"] = r.q;
  j["holds"] = r.holds();
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json x;
    x["check"] = c.name;
    x["holds"] = c.holds;
    if (!c.detail.empty()) x["detail"] = c.detail;
    checks.push_back(x);
  }
  j["checks"] = checks;
  return j;
}

inline std::string flag_name(Flag f) { return f == Flag::zero ? "zero" : f == Flag::one ? "one" : "neither"; }

inline Json facts_json(const RepFacts& f) {
  Json j;
  j["node"] = f.d;
  j["parents"] = {f.e1, f.e2};
  j["polarity"] = {to_string(f.polarity[0]), to_string(f.polarity[1])};
  Json flags;
  for (std::size_t i = 0; i < 4; ++i) flags["A" + std::to_string(i)] = flag_name(f.flags[i]);
  j["cocauses"] = flags;
  j["A1_indep_A2"] = f.a1_indep_a2;
  j["E1_indep_E2"] = f.e1_indep_e2;
  j["A0_indep_A1"] = f.a0_indep_a1;
  j["A0_indep_A2"] = f.a0_indep_a2;
  j["parents_cov"] = cov_claim_text(f.parents_cov.sign);
  j["parents_cov_source"] = f.parents_cov.source;
  j["source"] = f.source;
  return j;
}

}  // namespace detail

// Result of the covariance-sign engine for one target node.
struct CovAnalysis {
  RepFacts facts;
  std::vector<SignConclusion> stratum;    // about the two parents
  std::vector<SignConclusion> transfers;  // about F and G
  std::vector<PremiseReport> reports;
  std::vector<std::string> not_applicable;
};

inline CovAnalysis analyze_cov(const ModelFile& mf, std::size_t d, const Options& o,
                               const ExactDistribution* dist = nullptr, const Scm* scm = nullptr) {
  const Dag& g = mf.graph;
  const auto& ps = g.parents(d);
  if (ps.size() != 2)
    throw PremiseError("'" + g.name(d) + "' has " + std::to_string(ps.size()) +
                       " parents; the stratum rules need exactly two");
  CovAnalysis a;
  if (scm && dist) {
    const Representation* rep = mf.representation(g.name(d));
    Representation canon = canonical_representation(scm->equation(d));
    a.facts = facts_from_scm(*scm, d, rep ? *rep : canon, *dist);
    if (!rep) a.facts.source = "the canonical representation";
  } else {
    a.facts = facts_from_graph(g, d, ps[0], ps[1], mf.assertions);
  }
  for (auto& c : stratum_conclusions(a.facts))
    if (!o.stratum || c.quantity.given[0].second == *o.stratum) a.stratum.push_back(c);

  if (!o.f && !o.g) return a;
  if (!o.f || !o.g) throw UsageError("--f and --g go together");
  const std::size_t f = detail::node(g, *o.f), gn = detail::node(g, *o.g);
  for (std::size_t swap = 0; swap < 2; ++swap) {
    const std::size_t e1 = swap ? ps[1] : ps[0], e2 = swap ? ps[0] : ps[1];
    NodeSet q;
    if (!o.q.empty()) {
      q = detail::nodes(g, o.q);
    } else {
      for (std::size_t c = 0; c < g.size(); ++c)
        if (c != e1 && c != e2 && c != d && is_common_cause(g, c, f, gn)) q.insert(c);
    }
    PremiseReport r5 = check_thm5_premises(g, f, gn, e1, e2, d, &mf.assertions);
    PremiseReport r6 = check_thm6_premises(g, f, gn, e1, e2, d, q);
    a.reports.push_back(r5);
    a.reports.push_back(r6);
    for (const auto& inner : a.stratum) {
      for (const PremiseReport* r : {&r5, &r6}) {
        if (!r->holds()) continue;
        try {
          a.transfers.push_back(transfer_sign(*r, inner));
          if (r->rule == "separated")
            a.transfers.push_back(sign_equality(*r, inner.quantity.given[0].second));
          break;
        } catch (const PremiseError& e) {
          a.not_applicable.push_back(format(inner) + " via " + r->rule + ": " + e.what());
        }
      }
    }
    if (!r5.holds() && !r6.holds())
      a.not_applicable.push_back("pairing " + g.name(f) + "~" + g.name(e1) + ", " + g.name(gn) + "~" + g.name(e2) +
                                 ": neither premise set holds");
  }
  // sign-equality claims can repeat when both strata transfer
  std::vector<SignConclusion> unique;
  for (auto& c : a.transfers)
    if (std::find(unique.begin(), unique.end(), c) == unique.end()) unique.push_back(c);
  a.transfers = std::move(unique);
  return a;
}

inline Json analysis_json(const CovAnalysis& a) {
  Json j;
  j["facts"] = detail::facts_json(a.facts);
  Json s = Json::array(), t = Json::array(), r = Json::array();
  for (const auto& c : a.stratum) s.push_back(detail::conclusion_json(c));
  for (const auto& c : a.transfers) t.push_back(detail::conclusion_json(c));
  for (const auto& p : a.reports) r.push_back(detail::premise_json(p));
  j["conclusions"] = s;
  j["transfers"] = t;
  j["premise_reports"] = r;
  j["not_applicable"] = a.not_applicable;
  return j;
}

namespace detail {

inline std::vector<std::size_t> target_nodes(const ModelFile& mf, const Options& o, bool need_equation) {
  std::vector<std::size_t> out;
  if (!o.nodes.empty()) {
    for (const auto& n : o.nodes) out.push_back(node(mf.graph, n));
  } else {
    for (std::size_t i = 0; i < mf.graph.size(); ++i)
      if (!need_equation || mf.equations[i]) out.push_back(i);
  }
  return out;
}

inline const ResponseTable& equation_of(const ModelFile& mf, std::size_t n) {
  if (!mf.equations[n]) throw UsageError("'" + mf.graph.name(n) + "' has no equation in the model");
  return *mf.equations[n];
}

// Turns the model's signed edges and no-synergism assertions into generator
// constraints.
inline InstanceConstraints sweep_constraints(const ModelFile& mf) {
  InstanceConstraints c = InstanceConstraints::from_edge_signs(mf.graph);
  for (const auto& n : mf.assertions.no_synergism) c.forbidden[n.node].push_back({n.a, n.b});
  return c;
}

// The instance honours the co-cause assertions as read from its canonical
// representation.
inline bool honours(const ModelFile& mf, const Scm& m, const ExactDistribution& dist) {
  const Dag& g = mf.graph;
  std::set<std::string> nodes;
  for (const auto& c : mf.assertions.cocause) nodes.insert(c.node);
  for (const auto& c : mf.assertions.independent_cocauses) nodes.insert(c.node);
  for (const auto& name : nodes) {
    const std::size_t d = g.index(name);
    if (g.parents(d).size() != 2) return false;
    RepFacts f;
    try {
      f = facts_from_scm(m, d, canonical_representation(m.equation(d)), dist);
    } catch (const PremiseError&) {
      return false;
    }
    const std::size_t e1 = g.parents(d)[0], e2 = g.parents(d)[1];
    for (const auto& c : mf.assertions.cocause)
      if (c.node == name &&
          f.flags[suffcause::detail::two_parent_slot(g, d, e1, e2, c.slot)] != (c.value ? Flag::one : Flag::zero))
        return false;
    for (const auto& p : mf.assertions.independent_cocauses) {
      if (p.node != name) continue;
      std::size_t a = suffcause::detail::two_parent_slot(g, d, e1, e2, p.a),
                  b = suffcause::detail::two_parent_slot(g, d, e1, e2, p.b);
      if (a > b) std::swap(a, b);
      if (a == 1 && b == 2 && !f.a1_indep_a2) return false;
      if (a == 0 && b == 1 && !f.a0_indep_a1) return false;
      if (a == 0 && b == 2 && !f.a0_indep_a2) return false;
    }
  }
  return true;
}

}  // namespace detail

inline Output canonical(const ModelFile& mf, const Options& o) {
  Output out;
  out.json["command"] = "canonical";
  Json list = Json::array();
  for (std::size_t n : detail::target_nodes(mf, o, true)) {
    const ResponseTable& t = detail::equation_of(mf, n);
    Representation r = canonical_representation(t);
    Json j;
    j["node"] = mf.graph.name(n);
    std::vector<std::string> names;
    for (std::size_t p : mf.graph.parents(n)) names.push_back(mf.graph.name(p));
    j["text"] = format_representation(r, names);
    Json terms = Json::array();
    for (const auto& c : r.terms) terms.push_back(detail::term_json(mf.graph, n, c));
    j["terms"] = terms;
    j["determinative"] = is_determinative(t, r.terms);
    j["nonredundant"] = r.terms.empty() || is_nonredundant(t, r.terms);
    list.push_back(j);
  }
  out.json["representations"] = list;
  return out;
}

inline Output expand_cmd(const ModelFile& mf, const Options& o) {
  Output out;
  const std::size_t d = detail::node(mf.graph, detail::only(o.nodes, "--node"));
  const Representation* given = mf.representation(mf.graph.name(d));
  Representation rep;
  std::string source;
  if (given && !o.canonical) {
    rep = *given;
    source = "model";
  } else {
    rep = canonical_representation(detail::equation_of(mf, d));
    rep.target = mf.graph.name(d);
    source = "canonical";
  }
  if (mf.equations[d] && !is_determinative(*mf.equations[d], rep.terms))
    throw ModelError("representation is not determinative for '" + mf.graph.name(d) + "'");
  ExpandedDag e = expand(mf.graph, d, rep);
  out.json["command"] = "expand";
  out.json["node"] = mf.graph.name(d);
  out.json["representation"] = source;
  Json nodes = Json::array(), edges = Json::array();
  for (std::size_t i = 0; i < e.graph.size(); ++i) {
    Json n;
    n["name"] = e.graph.name(i);
    n["kind"] = to_string(e.kinds[i]);
    nodes.push_back(n);
  }
  for (auto [a, b] : e.graph.edges()) {
    EdgeSign s = e.graph.edge_sign(a, b);
    edges.push_back(e.graph.name(a) + " -> " + e.graph.name(b) +
                    (s == EdgeSign::positive ? " +" : s == EdgeSign::negative ? " -" : ""));
  }
  out.json["nodes"] = nodes;
  out.json["edges"] = edges;
  out.json["stratum0_conditioning"] = e.graph.names_of(stratum_conditioning_set(e, 0));
  return out;
}

inline Output dsep(const ModelFile& mf, const Options& o) {
  Output out;
  const Dag& g = mf.graph;
  NodeSet x = detail::nodes(g, o.x), y = detail::nodes(g, o.y), z = detail::nodes(g, o.z);
  if (x.empty() || y.empty()) throw UsageError("--x and --y are required");
  bool sep = d_separated(g, x, y, z);
  out.json["command"] = "dsep";
  out.json["x"] = g.names_of(x);
  out.json["y"] = g.names_of(y);
  out.json["z"] = g.names_of(z);
  out.json["separated"] = sep;
  if (!sep) out.json["witness"] = g.format(*d_connecting_path(g, x, y, z));
  out.exit = sep ? 0 : 1;
  return out;
}

inline Output stratum_ci(const ModelFile& mf, const Options& o) {
  Output out;
  const Dag& g = mf.graph;
  const std::size_t d = detail::node(g, detail::only(o.nodes, "--node"));
  if (!o.stratum) throw UsageError("--stratum is required");
  const Representation* given = mf.representation(g.name(d));
  Representation rep;
  if (given && !o.canonical) {
    rep = *given;
  } else {
    rep = canonical_representation(detail::equation_of(mf, d));
    rep.target = g.name(d);
  }
  if (mf.equations[d] && !is_determinative(*mf.equations[d], rep.terms))
    throw ModelError("representation is not determinative for '" + g.name(d) + "'");
  ExpandedDag e = expand(g, d, rep);
  const std::size_t x = detail::node(e.graph, detail::only(o.x, "--x"));
  const std::size_t y = detail::node(e.graph, detail::only(o.y, "--y"));
  NodeSet z = detail::nodes(e.graph, o.z);
  bool indep = stratum_independent(e, x, y, z, *o.stratum);
  out.json["command"] = "stratum-ci";
  out.json["node"] = g.name(d);
  out.json["stratum"] = *o.stratum;
  out.json["x"] = e.graph.name(x);
  out.json["y"] = e.graph.name(y);
  out.json["z"] = e.graph.names_of(z);
  NodeSet cond = z;
  for (std::size_t s : stratum_conditioning_set(e, *o.stratum)) cond.insert(s);
  out.json["conditioning"] = e.graph.names_of(cond);
  out.json["verdict"] = indep ? "independent" : "not implied independent";
  if (!indep)
    if (auto p = d_connecting_path(e.graph, {x}, {y}, cond)) out.json["witness"] = e.graph.format(*p);
  out.exit = indep ? 0 : 1;
  return out;
}

inline Output signs_cmd(const ModelFile& mf, const Options& o) {
  Output out;
  const Dag& g = mf.graph;
  out.json["command"] = "signs";
  Json effects = Json::array();
  for (std::size_t n : detail::target_nodes(mf, o, true)) {
    if (!mf.equations[n]) continue;
    for (std::size_t i = 0; i < g.parents(n).size(); ++i) {
      MonotonicEffect a = detect_monotonic_effect(*mf.equations[n], i);
      MonotonicEffect b = monotonic_effect_via_canonical(*mf.equations[n], i);
      Json j;
      j["edge"] = g.name(g.parents(n)[i]) + " -> " + g.name(n);
      j["effect"] = to_string(a.sign);
      j["degenerate"] = a.degenerate;
      j["canonical_agrees"] = a == b;
      effects.push_back(j);
    }
  }
  out.json["effects"] = effects;
  Json assoc = Json::array();
  std::vector<std::size_t> ns = detail::target_nodes(mf, o, false);
  for (std::size_t i = 0; i < ns.size(); ++i)
    for (std::size_t k = i + 1; k < ns.size(); ++k) {
      Sign s = monotonically_associated(g, ns[i], ns[k]);
      Json j;
      j["pair"] = g.name(ns[i]) + "," + g.name(ns[k]);
      j["association"] = to_string(s);
      j["cov"] = cov_claim_text(s);
      assoc.push_back(j);
    }
  out.json["associations"] = assoc;
  return out;
}

inline Output covsign(const ModelFile& mf, const Options& o) {
  Output out;
  const std::size_t d = detail::node(mf.graph, detail::only(o.nodes, "--node"));
  std::optional<Scm> scm;
  std::optional<ExactDistribution> dist;
  if (mf.has_all_equations()) {
    scm = mf.scm();
    dist = joint_distribution(*scm, o.budget);
  }
  out.json["command"] = "covsign";
  try {
    CovAnalysis a = analyze_cov(mf, d, o, dist ? &*dist : nullptr, scm ? &*scm : nullptr);
    Json j = analysis_json(a);
    for (auto it = j.begin(); it != j.end(); ++it) out.json[it.key()] = it.value();
    bool answered = o.f ? !a.transfers.empty() : !a.stratum.empty();
    out.exit = answered ? 0 : 1;
  } catch (const PremiseError& e) {
    out.json["not_applicable"] = {e.what()};
    out.exit = 1;
  }
  return out;
}

// Checks every conclusion of the engine against the model's own
// distribution when it has one, and against a constrained random sweep.
inline Output oracle_check_model(const ModelFile& mf, const Options& o) {
  Output out;
  const std::size_t d = detail::node(mf.graph, detail::only(o.nodes, "--node"));
  out.json["command"] = "oracle-check";
  out.json["node"] = mf.graph.name(d);
  out.json["seed"] = o.seed;
  std::size_t checked = 0, failed = 0;
  Json failures = Json::array();
  auto check_all = [&](const std::vector<SignConclusion>& claims, const ExactDistribution& dist, const std::string& where) {
    for (const auto& c : claims) {
      ++checked;
      if (!verify_claim(dist, c)) {
        ++failed;
        Json f;
        f["claim"] = format(c);
        f["instance"] = where;
        f["value"] = to_string(conditional_covariance(dist, c.quantity));
        failures.push_back(f);
      }
    }
  };

  if (mf.has_all_equations()) {
    Scm scm = mf.scm();
    ExactDistribution dist = joint_distribution(scm, o.budget);
    CovAnalysis a = analyze_cov(mf, d, o, &dist, &scm);
    check_all(a.stratum, dist, "model");
    check_all(a.transfers, dist, "model");
    out.json["model_conclusions"] = a.stratum.size() + a.transfers.size();
  }
  std::size_t sweep = o.sweep ? o.sweep : (mf.has_all_equations() ? 0 : 100);
  if (sweep) {
    CovAnalysis a = analyze_cov(mf, d, o);
    out.json["conclusions"] = analysis_json(a)["conclusions"];
    out.json["transfers"] = analysis_json(a)["transfers"];
    Rng rng(o.seed);
    InstanceConstraints c = detail::sweep_constraints(mf);
    std::size_t accepted = 0, rejected = 0;
    while (accepted < sweep) {
      Scm m = random_instance(mf.graph, c, rng);
      ExactDistribution dist = joint_distribution(m, o.budget);
      if (!detail::honours(mf, m, dist)) {
        if (++rejected > 1000 * sweep) throw BudgetError("could not draw instances honouring the assertions");
        continue;
      }
      std::vector<SignConclusion> live;
      for (const auto* list : {&a.stratum, &a.transfers})
        for (const auto& x : *list)
          if (probability(dist, resolve(dist, x.quantity.given)) > 0) live.push_back(x);
      check_all(live, dist, "sweep #" + std::to_string(accepted));
      ++accepted;
    }
    out.json["sweep"] = accepted;
    out.json["rejected"] = rejected;
  }
  out.json["checked"] = checked;
  out.json["failed"] = failed;
  out.json["failures"] = failures;
  out.exit = failed ? 1 : 0;
  return out;
}

// Cases of the two-parent stratum rules, drawn from the co-cause generator.
inline CoCauseDesign design_for_case(const std::string& id, Rng& rng) {
  CoCauseDesign d;
  if (id == "i") {
    d.fixed[0] = 0;
  } else if (id == "ii") {
    d.fixed[0] = 0;
    d.a1_indep_a2 = true;
    d.couplings = {Sign::zero};
  } else if (id == "iii") {
    d.fixed[rng.coin() ? 1 : 2] = 1;
    d.couplings = {Sign::zero, Sign::negative};
  } else if (id == "iv") {
    d.fixed[rng.coin() ? 1 : 2] = 1;
  } else if (id == "v") {
    d.fixed[rng.coin() ? 1 : 2] = 0;
    d.couplings = {Sign::zero, Sign::positive};
  } else if (id == "vi") {
    d.fixed[rng.coin() ? 1 : 2] = 0;
    d.couplings = {Sign::zero, Sign::negative};
  } else if (id == "vii") {
    d.fixed[3] = 0;
    d.couplings = {Sign::zero, Sign::negative};
  } else if (id == "viii") {
    d.fixed[3] = 0;
    d.a1_indep_a2 = true;
    d.a0_indep_a1_or_a2 = true;
    d.couplings = {Sign::zero};
  } else {
    throw UsageError("unknown case '" + id + "'");
  }
  return d;
}

struct CaseSweep {
  std::size_t instances = 0;
  std::size_t emitted = 0;  // instances where the engine produced the case
  std::size_t checked = 0;  // ... and its stratum had positive probability
  std::size_t failed = 0;
  std::vector<std::string> failures;
};

// Draws instances meeting a case's premises, runs the engine on the facts of
// each and verifies every conclusion it emits.
inline CaseSweep sweep_case(const std::string& id, std::size_t n, std::uint64_t seed) {
  CaseSweep s;
  Rng rng(seed);
  const std::string rule = "two-parent stratum rule (" + id + ")";
  while (s.instances < n) {
    CoCauseDesign design = design_for_case(id, rng);
    CoCauseInstance inst = cocause_instance(design, rng);
    ExactDistribution dist = joint_distribution(inst.scm);
    const std::size_t d = inst.scm.graph().index("D");
    RepFacts facts = facts_from_scm(inst.scm, d, inst.rep, dist);
    ++s.instances;
    bool seen = false, checked = false;
    for (const auto& c : theorem4(facts)) {
      seen = seen || c.rule == rule;
      if (probability(dist, resolve(dist, c.quantity.given)) == 0) continue;
      checked = checked || c.rule == rule;
      if (!verify_claim(dist, c)) {
        ++s.failed;
        s.failures.push_back("instance " + std::to_string(s.instances) + ": " + format(c) + " by " + c.rule +
                             " but value is " + to_string(conditional_covariance(dist, c.quantity)));
      }
    }
    if (seen) ++s.emitted;
    if (checked) ++s.checked;
  }
  return s;
}

inline Output oracle_check_case(const Options& o) {
  Output out;
  std::size_t n = o.sweep ? o.sweep : 200;
  CaseSweep s = sweep_case(*o.case_id, n, o.seed);
  out.json["command"] = "oracle-check";
  out.json["case"] = *o.case_id;
  out.json["seed"] = o.seed;
  out.json["instances"] = s.instances;
  out.json["case_emitted"] = s.emitted;
  out.json["case_checked"] = s.checked;
  out.json["failed"] = s.failed;
  out.json["failures"] = s.failures;
  out.exit = s.failed || s.emitted != s.instances ? 1 : 0;
  return out;
}

inline Output run(const std::optional<ModelFile>& mf, const Options& o) {
  if (o.command == "oracle-check" && o.case_id) return oracle_check_case(o);
  if (!mf) throw UsageError("a model file is required");
  if (o.command == "canonical") return canonical(*mf, o);
  if (o.command == "expand") return expand_cmd(*mf, o);
  if (o.command == "dsep") return dsep(*mf, o);
  if (o.command == "stratum-ci") return stratum_ci(*mf, o);
  if (o.command == "signs") return signs_cmd(*mf, o);
  if (o.command == "covsign") return covsign(*mf, o);
  if (o.command == "oracle-check") return oracle_check_model(*mf, o);
  throw UsageError("unknown command '" + o.command + "'");
}

// Indented key: value text for humans.
inline void write_text(std::string& out, const Json& j, int indent = 0) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar = [](const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
  };
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const Json& v = it.value();
      if (v.is_structured() && !v.empty()) {
        out += pad + it.key() + ":\n";
        write_text(out, v, indent + 2);
      } else {
        out += pad + it.key() + ": " + (v.is_structured() ? std::string(v.is_array() ? "[]" : "{}") : scalar(v)) + "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_structured() && !v.empty()) {
        out += pad + "-\n";
        write_text(out, v, indent + 2);
      } else {
        out += pad + "- " + scalar(v) + "\n";
      }
    }
  } else {
    out += pad + scalar(j) + "\n";
  }
}

inline std::string render(const Output& o, bool json) {
  if (json) return o.json.dump(2) + "\n";
  std::string s;
  write_text(s, o.json);
  return s;
}

}  // namespace suffcause::report
