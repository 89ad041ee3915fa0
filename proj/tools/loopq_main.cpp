// Command-line driver: classify identities over the twist quadruples, rerun
// the full table search against the checked-in golden data, build concrete
// doubled loops, and list admissible star maps.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "loopq/fail.hpp"
#include "loopq/loop_table.hpp"
#include "loopq/search.hpp"
#include "loopq/symbolic.hpp"

using namespace loopq;

namespace {

std::string default_golden_dir() { return std::string(LOOPQ_DATA_DIR) + "/golden"; }

StarMap resolve_star(const GroupPtr& g, const std::string& selector) {
  if (selector == "inverse") return inversion_star(g);
  if (selector == "identity") return identity_star(g);
  size_t k = std::stoul(selector);
  auto maps = enumerate_star_maps(g);
  if (k >= maps.size())
    fail("star index " + selector + " out of range (group has " +
         std::to_string(maps.size()) + " admissible maps)");
  return maps[k];
}

LoopIdentity resolve_identity(const std::string& variety, const std::string& identity) {
  if (!variety.empty()) return builtin(variety);
  return parse_identity(identity);
}

int cmd_classify(const std::string& variety, const std::string& identity,
                 const std::string& quadruple, bool trace, const std::string& format) {
  LoopIdentity psi = resolve_identity(variety, identity);
  if (!check_strictly_balanced(psi))
    throw NotStrictlyBalanced("identity \"" + format_identity(psi) +
                              "\" is not strictly balanced");
  if (!quadruple.empty()) {
    MultQuadruple q = parse_quadruple(quadruple);
    std::vector<EvalTrace> traces;
    IdentitySet psi_set = collect_identities(psi, q, trace ? &traces : nullptr);
    ConditionExpr cond = classify_set(psi_set);
    if (trace) {
      for (const EvalTrace& t : traces)
        std::cout << "f=" << format_assignment(t.f, psi.vars) << " : "
                  << format_word(t.lhs_raw) << " = " << format_word(t.rhs_raw) << " -> "
                  << format_identity(t.canonical) << "\n";
    }
    if (format == "json") {
      nlohmann::ordered_json j;
      j["identity"] = format_identity(psi);
      j["triple"] = format_triple(q);
      j["condition"] = cond.display();
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << cond.display() << "\n";
    }
    return 0;
  }
  auto grid = enumerate_quadruples();
  std::vector<ConditionExpr> conds;
  for (const MultQuadruple& q : grid)
    conds.push_back(classify_set(collect_identities(psi, q)));
  if (format == "json") {
    nlohmann::ordered_json j;
    j["identity"] = format_identity(psi);
    j["cells"] = nlohmann::ordered_json::array();
    for (size_t i = 0; i < grid.size(); ++i)
      j["cells"].push_back({{"triple", format_triple(grid[i])},
                            {"condition", conds[i].display()}});
    std::cout << j.dump(2) << "\n";
  } else {
    for (size_t i = 0; i < grid.size(); ++i)
      std::cout << format_triple(grid[i]) << " : " << conds[i].display() << "\n";
  }
  return 0;
}

int cmd_search(const std::string& golden_dir, const std::string& format, bool structural,
               int workers) {
  auto goldens = load_golden_dir(golden_dir);
  auto results = run_full_search(WitnessBattery::standard(), workers);
  DiffReport report = diff_against_golden(results, goldens);
  if (format == "table")
    std::cout << format_results_table(results, goldens);
  else
    std::cout << format_report(report, format == "json" ? ReportFormat::kJson
                                                        : ReportFormat::kHuman,
                               structural);
  return report.ok() ? 0 : 1;
}

int cmd_build(const std::string& group, const std::string& star_sel, Elem g0,
              const std::string& quadruple, const std::string& checks,
              const std::string& out_path) {
  GroupPtr g = load_group(group);
  StarMap star = resolve_star(g, star_sel);
  MultQuadruple q = parse_quadruple(quadruple);
  LoopTable t = build_loop(g, star, g0, q);
  std::cout << "order: " << t.order() << "\n";
  std::cout << "loop: " << (is_loop(t) ? "yes" : "no") << "\n";
  if (!checks.empty()) {
    std::istringstream names(checks);
    std::string name;
    while (std::getline(names, name, ',')) {
      const LoopIdentity& psi = builtin(name);
      std::cout << name << ": " << (check_identity(t, psi) ? "yes" : "no") << "\n";
    }
  }
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) fail("cannot write \"" + out_path + "\"");
    write_cayley(out, t);
    std::cout << "wrote " << out_path << "\n";
  }
  return 0;
}

int cmd_stars(const std::string& group) {
  GroupPtr g = load_group(group);
  auto maps = enumerate_star_maps(g);
  for (size_t k = 0; k < maps.size(); ++k) {
    std::cout << k << ": [";
    for (size_t i = 0; i < maps[k].map.size(); ++i) {
      if (i) std::cout << ' ';
      std::cout << maps[k].map[i];
    }
    std::cout << "] " << (maps[k].nonidentical ? "nonidentical" : "identical");
    std::cout << "  g0 candidates:";
    for (const CentralElement& c : g0_candidates(g, maps[k])) std::cout << ' ' << c.index;
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Doubled-loop constructions Q(G,*,g0,a,b,g,d): build, classify, search"};
  app.require_subcommand(1);

  auto* classify = app.add_subcommand("classify", "classify an identity over quadruples");
  std::string variety, identity, quadruple, cformat = "text";
  bool trace = false;
  classify->add_option("--variety", variety, "builtin identity name");
  classify->add_option("--identity", identity, "identity source, e.g. \"x(yx)=(xy)x\"");
  classify->add_option("--quadruple", quadruple, "triple \"b,g,d\" (alpha = xy)");
  classify->add_flag("--trace", trace, "print one line per coset assignment");
  classify->add_option("--format", cformat, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* search = app.add_subcommand("search", "rerun the table search and diff");
  std::string golden_dir = default_golden_dir(), sformat = "human";
  bool structural = false;
  int workers = 0;
  search->add_option("--golden", golden_dir, "golden table directory");
  search->add_option("--format", sformat, "human|json|table")
      ->check(CLI::IsMember({"human", "json", "table"}));
  search->add_flag("--structural", structural, "also report structural comparison");
  search->add_option("--workers", workers, "worker threads (default: LOOPQ_WORKERS)");

  auto* build = app.add_subcommand("build", "build a concrete doubled table");
  std::string group, star_sel = "inverse", checks, out_path;
  Elem g0 = 0;
  build->add_option("--group", group, "group descriptor or Cayley file")->required();
  build->add_option("--star", star_sel, "inverse|identity|<index into stars list>");
  build->add_option("--g0", g0, "central star-fixed element index (default 0)");
  build->add_option("--quadruple", quadruple, "triple \"b,g,d\" or \"a,b,g,d\"")->required();
  build->add_option("--check", checks, "comma-separated identity names to verify");
  build->add_option("--out", out_path, "write the Cayley table here");

  auto* stars = app.add_subcommand("stars", "list admissible star maps of a group");
  stars->add_option("--group", group, "group descriptor or Cayley file")->required();

  auto* enumq = app.add_subcommand("enumerate-quadruples", "list the 64-triple search grid");

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify->parsed()) {
      if (variety.empty() == identity.empty()) {
        std::cerr << "classify: give exactly one of --variety, --identity\n";
        return 2;
      }
      return cmd_classify(variety, identity, quadruple, trace, cformat);
    }
    if (search->parsed()) return cmd_search(golden_dir, sformat, structural, workers);
    if (build->parsed()) return cmd_build(group, star_sel, g0, quadruple, checks, out_path);
    if (stars->parsed()) return cmd_stars(group);
    if (enumq->parsed()) {
      for (const MultQuadruple& q : enumerate_quadruples())
        std::cout << format_triple(q) << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
