#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "suffcause/report.hpp"

namespace sr = suffcause::report;

namespace {

std::vector<std::string> split_list(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::stringstream in(item);
    for (std::string part; std::getline(in, part, ',');)
      if (!part.empty()) out.push_back(part);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sufficient-cause analysis of binary causal DAGs"};
  app.require_subcommand(1);

  sr::Options o;
  std::string model_path, format = "text";
  std::vector<std::string> nodes, x, y, z, q;
  std::string f, g, case_id;
  int stratum = -1;

  auto common = [&](CLI::App* sub, bool model_required) {
    auto* m = sub->add_option("model", model_path, "model file");
    if (model_required) m->required();
    sub->add_option("--seed", o.seed, "generator seed");
    sub->add_option("--budget", o.budget, "enumeration budget in weighted worlds");
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };

  auto* canonical = app.add_subcommand("canonical", "canonical representation of nodes");
  common(canonical, true);
  canonical->add_option("--node", nodes, "nodes to report (default: all with equations)");

  auto* expand = app.add_subcommand("expand", "graph with sufficient-cause structure");
  common(expand, true);
  expand->add_option("--node", nodes, "target node")->required();
  expand->add_flag("--canonical", o.canonical, "ignore the model's representation");

  auto* dsep = app.add_subcommand("dsep", "d-separation query");
  common(dsep, true);
  dsep->add_option("--x", x, "first node set")->required();
  dsep->add_option("--y", y, "second node set")->required();
  dsep->add_option("--z", z, "conditioning set");

  auto* sci = app.add_subcommand("stratum-ci", "independence within a stratum of a node");
  common(sci, true);
  sci->add_option("--node", nodes, "stratified node")->required();
  sci->add_option("--x", x, "first node")->required();
  sci->add_option("--y", y, "second node")->required();
  sci->add_option("--z", z, "extra conditioning set");
  sci->add_option("--stratum", stratum, "0 or 1")->required()->check(CLI::Range(0, 1));
  sci->add_flag("--canonical", o.canonical, "ignore the model's representation");

  auto* signs = app.add_subcommand("signs", "monotonic effects and associations");
  common(signs, true);
  signs->add_option("--node", nodes, "restrict to these nodes");

  auto* covsign = app.add_subcommand("covsign", "signs of stratum covariances");
  common(covsign, true);
  covsign->add_option("--node", nodes, "conditioning node with two parents")->required();
  covsign->add_option("--stratum", stratum, "0 or 1")->check(CLI::Range(0, 1));
  covsign->add_option("--f", f, "node on the first parent's side");
  covsign->add_option("--g", g, "node on the second parent's side");
  covsign->add_option("--q", q, "common causes of F and G");

  auto* oracle = app.add_subcommand("oracle-check", "verify conclusions against exact distributions");
  common(oracle, false);
  oracle->add_option("--node", nodes, "conditioning node");
  oracle->add_option("--stratum", stratum, "0 or 1")->check(CLI::Range(0, 1));
  oracle->add_option("--f", f, "node on the first parent's side");
  oracle->add_option("--g", g, "node on the second parent's side");
  oracle->add_option("--q", q, "common causes of F and G");
  oracle->add_option("--sweep", o.sweep, "number of random instances");
  oracle->add_option("--case", case_id, "stratum rule case i..viii")
      ->check(CLI::IsMember({"i", "ii", "iii", "iv", "v", "vi", "vii", "viii"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  o.command = app.get_subcommands().front()->get_name();
  o.nodes = split_list(nodes);
  o.x = split_list(x);
  o.y = split_list(y);
  o.z = split_list(z);
  o.q = split_list(q);
  if (!f.empty()) o.f = f;
  if (!g.empty()) o.g = g;
  if (stratum >= 0) o.stratum = static_cast<std::uint32_t>(stratum);
  if (!case_id.empty()) o.case_id = case_id;

  try {
    std::optional<suffcause::ModelFile> mf;
    if (!model_path.empty()) {
      std::ifstream in(model_path);
      if (!in) {
        std::cerr << "error: cannot open " << model_path << "\n";
        return 2;
      }
      std::stringstream buf;
      buf << in.rdbuf();
      mf = suffcause::parse_model(buf.str());
    }
    sr::Output out = sr::run(mf, o);
    std::cout << sr::render(out, format == "json");
    return out.exit;
  } catch (const suffcause::ParseError& e) {
    for (const auto& d : e.diagnostics()) std::cerr << model_path << ": " << d << "\n";
    return 2;
  } catch (const sr::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const suffcause::UnknownNodeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const suffcause::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
