#include "loopq/search.hpp"

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "loopq/fail.hpp"
#include "loopq/symbolic.hpp"

namespace loopq {

std::vector<MultQuadruple> enumerate_quadruples() {
  static const int beta_parts[] = {0, 2, 4, 5};   // xy, x*y, yx, yx*
  static const int gamma_parts[] = {0, 4};        // xy, yx
  std::vector<MultQuadruple> out;
  out.reserve(64);
  for (int b : beta_parts)
    for (int g : gamma_parts)
      for (int d = 0; d < kThetaParts; ++d)
        out.push_back({ThetaElem{}, theta_from_part_index(b), theta_from_part_index(g),
                       theta_from_part_index(d, 1)});
  return out;
}

VarietyResult run_variety_search(const std::string& variety, const WitnessBattery& battery) {
  const LoopIdentity& psi = builtin(variety);
  VarietyResult res;
  res.variety = variety;
  for (const MultQuadruple& q : enumerate_quadruples())
    res.conditions.push_back(classify_set(collect_identities(psi, q), battery));
  return res;
}

std::map<std::string, VarietyResult> run_full_search(const WitnessBattery& battery,
                                                     int workers,
                                                     const std::vector<std::string>& varieties) {
  if (workers <= 0) {
    if (const char* env = std::getenv("LOOPQ_WORKERS")) workers = std::atoi(env);
    if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers <= 0) workers = 1;
  }
  workers = std::min<int>(workers, static_cast<int>(varieties.size()));
  std::vector<VarietyResult> slots(varieties.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= varieties.size()) return;
      slots[i] = run_variety_search(varieties[i], battery);
    }
  };
  std::vector<std::thread> pool;
  for (int i = 1; i < workers; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::map<std::string, VarietyResult> out;
  for (size_t i = 0; i < varieties.size(); ++i) out[varieties[i]] = std::move(slots[i]);
  return out;
}

namespace {

std::string trim(std::string s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  size_t b = s.find_last_not_of(" \t\r\n");
  return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

}  // namespace

GoldenTable parse_golden(std::istream& in, const std::string& source_name) {
  GoldenTable g;
  std::string line;
  GoldenBlock* block = nullptr;
  while (std::getline(in, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.rfind("variety:", 0) == 0) {
      g.variety = trim(line.substr(8));
    } else if (line.rfind("inherits:", 0) == 0) {
      std::istringstream names(line.substr(9));
      std::string n;
      while (std::getline(names, n, ',')) {
        n = trim(n);
        if (!n.empty()) g.inherits.push_back(n);
      }
    } else if (line.rfind("block:", 0) == 0) {
      g.blocks.push_back({parse_condition(line.substr(6)), {}});
      block = &g.blocks.back();
    } else {
      if (!block) fail(source_name + ": triple before any block");
      std::istringstream toks(line);
      std::string t;
      while (toks >> t) {
        MultQuadruple q = parse_quadruple(t);
        if (!in_search_grid(q))
          fail(source_name + ": triple " + t + " outside the search grid");
        block->triples.push_back(q);
      }
    }
  }
  if (g.variety.empty()) fail(source_name + ": missing variety");
  return g;
}

GoldenTable load_golden_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open golden table \"" + path + "\"");
  return parse_golden(in, path);
}

std::map<std::string, GoldenTable> load_golden_dir(const std::string& dir) {
  std::map<std::string, GoldenTable> out;
  if (!std::filesystem::is_directory(dir)) fail("not a golden directory: \"" + dir + "\"");
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".gold") continue;
    GoldenTable g = load_golden_file(entry.path().string());
    out[g.variety] = std::move(g);
  }
  if (out.empty()) fail("no golden tables found in \"" + dir + "\"");
  return out;
}

ThetaElem pc_collapse(const ThetaElem& t) {
  if (!t.swap) return t;
  return {t.g0_exp, false, t.star_second, t.star_first};
}

MultQuadruple pc_collapse(const MultQuadruple& q) {
  return {pc_collapse(q.alpha), pc_collapse(q.beta), pc_collapse(q.gamma),
          pc_collapse(q.delta)};
}

namespace {

const GoldenTable& table_or_fail(const std::map<std::string, GoldenTable>& tables,
                                 const std::string& variety) {
  auto it = tables.find(variety);
  if (it == tables.end()) fail("missing golden table for \"" + variety + "\"");
  return it->second;
}

bool triple_listed(const std::vector<MultQuadruple>& triples, const MultQuadruple& q,
                   bool collapsed) {
  for (const MultQuadruple& t : triples) {
    if (collapsed ? pc_collapse(t) == pc_collapse(q) : t == q) return true;
  }
  return false;
}

}  // namespace

bool golden_holds(const std::map<std::string, GoldenTable>& tables, const std::string& variety,
                  const MultQuadruple& q, const WitnessMember& m) {
  const GoldenTable& g = table_or_fail(tables, variety);
  for (const GoldenBlock& b : g.blocks)
    if (condition_holds(b.condition, m) && triple_listed(b.triples, q, m.sig_pc)) return true;
  for (const std::string& inh : g.inherits)
    if (golden_holds(tables, inh, q, m)) return true;
  return false;
}

std::vector<ConditionExpr> golden_disjuncts(const std::map<std::string, GoldenTable>& tables,
                                            const std::string& variety,
                                            const MultQuadruple& q) {
  const GoldenTable& g = table_or_fail(tables, variety);
  std::vector<ConditionExpr> out;
  for (const GoldenBlock& b : g.blocks) {
    if (triple_listed(b.triples, q, false)) {
      out.push_back(b.condition);
    } else if (triple_listed(b.triples, q, true)) {
      ConditionExpr c = b.condition;
      c.pc = true;
      c.normalize();
      drop_provable_raws(c);
      out.push_back(std::move(c));
    }
  }
  for (const std::string& inh : g.inherits)
    for (ConditionExpr c : golden_disjuncts(tables, inh, q)) out.push_back(std::move(c));
  return out;
}

namespace {

// X implies Y, decided structurally; Y's verbatim conjuncts may be literal
// members of X or provable from X's atoms.
bool cond_implies(const ConditionExpr& x, const ConditionExpr& y) {
  if (x.never || y.always()) return true;
  bool xpb = x.pb || x.pc, ypb = y.pb || y.pc;
  if ((y.pc && !x.pc) || (ypb && !xpb) || (y.ps && !x.ps)) return false;
  ConditionExpr x_atoms = ConditionExpr::make_atoms(x.pc, x.pb, x.ps);
  for (const GroupIdentity& r : y.raws) {
    bool literal = std::find(x.raws.begin(), x.raws.end(), r) != x.raws.end();
    if (!literal && !condition_implies_identity(x_atoms, r)) return false;
  }
  return true;
}

std::vector<ConditionExpr> reduce_disjuncts(std::vector<ConditionExpr> ds) {
  std::sort(ds.begin(), ds.end());
  ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
  std::vector<ConditionExpr> out;
  for (size_t i = 0; i < ds.size(); ++i) {
    bool absorbed = false;
    for (size_t j = 0; j < ds.size() && !absorbed; ++j)
      absorbed = i != j && cond_implies(ds[i], ds[j]) && !(cond_implies(ds[j], ds[i]) && j > i);
    if (!absorbed) out.push_back(ds[i]);
  }
  return out;
}

std::string display_disjuncts(const std::vector<ConditionExpr>& ds) {
  if (ds.empty()) return "never";
  std::string s;
  for (const ConditionExpr& c : ds) {
    if (!s.empty()) s += " | ";
    s += c.display();
  }
  return s;
}

}  // namespace

DiffReport diff_against_golden(const std::map<std::string, VarietyResult>& results,
                               const std::map<std::string, GoldenTable>& goldens,
                               const WitnessBattery& battery) {
  if (goldens.empty()) fail("diff: empty golden set");
  DiffReport report;
  const std::vector<MultQuadruple> grid = enumerate_quadruples();
  for (const std::string& variety : table_varieties()) {
    auto rit = results.find(variety);
    if (rit == results.end()) continue;
    const VarietyResult& res = rit->second;
    table_or_fail(goldens, variety);
    for (size_t i = 0; i < grid.size(); ++i) {
      CellDiff cell;
      cell.variety = variety;
      cell.quad = grid[i];
      cell.computed = res.conditions[i];
      bool semantic = true;
      for (const WitnessMember& m : battery.members)
        if (condition_holds(cell.computed, m) != golden_holds(goldens, variety, grid[i], m)) {
          semantic = false;
          break;
        }
      cell.semantic_match = semantic;

      std::vector<ConditionExpr> ds = golden_disjuncts(goldens, variety, grid[i]);
      const GoldenTable& own = goldens.at(variety);
      for (const GoldenBlock& b : own.blocks)
        if (triple_listed(b.triples, grid[i], false) || triple_listed(b.triples, grid[i], true))
          ++cell.block_hits;
      std::vector<ConditionExpr> reduced = reduce_disjuncts(std::move(ds));
      cell.golden_display = display_disjuncts(reduced);
      if (reduced.empty()) {
        cell.structural_single = true;
        cell.structural_match = cell.computed == ConditionExpr::make_false();
      } else if (reduced.size() == 1) {
        cell.structural_single = true;
        cell.structural_match = cell.computed == reduced.front();
      }
      if (!cell.semantic_match) ++report.mismatches;
      if (cell.structural_single && !cell.structural_match) ++report.structural_mismatches;
      report.cells.push_back(std::move(cell));
    }
  }
  if (report.cells.empty()) fail("diff: no varieties in common between results and goldens");
  return report;
}

std::string format_report(const DiffReport& report, ReportFormat format, bool structural) {
  if (format == ReportFormat::kJson) {
    nlohmann::ordered_json j;
    j["cells"] = nlohmann::ordered_json::array();
    for (const CellDiff& c : report.cells) {
      j["cells"].push_back({{"variety", c.variety},
                            {"triple", format_triple(c.quad)},
                            {"computed", c.computed.display()},
                            {"golden", c.golden_display},
                            {"match", c.semantic_match},
                            {"structural_match", c.structural_match}});
    }
    j["mismatches"] = report.mismatches;
    j["structural_mismatches"] = report.structural_mismatches;
    j["ok"] = report.ok();
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  std::string variety;
  for (const CellDiff& c : report.cells) {
    if (c.variety != variety) {
      variety = c.variety;
      os << "== " << variety << " ==\n";
    }
    os << "  " << format_triple(c.quad) << "  computed: " << c.computed.display()
       << "  golden: " << c.golden_display;
    if (!c.semantic_match)
      os << "  MISMATCH";
    else if (structural && !c.structural_match)
      os << (c.structural_single ? "  structural-mismatch" : "  unreduced-disjunction");
    if (c.block_hits > 1) os << "  [in " << c.block_hits << " blocks]";
    os << "\n";
  }
  os << (report.ok() ? "OK" : "FAIL") << ": " << report.mismatches << " mismatch(es) in "
     << report.cells.size() << " cells";
  if (structural) os << ", " << report.structural_mismatches << " structural";
  os << "\n";
  return os.str();
}

std::string format_results_table(const std::map<std::string, VarietyResult>& results,
                                 const std::map<std::string, GoldenTable>& goldens,
                                 const WitnessBattery& battery) {
  const std::vector<MultQuadruple> grid = enumerate_quadruples();
  std::ostringstream os;
  for (const std::string& variety : table_varieties()) {
    auto rit = results.find(variety);
    if (rit == results.end()) continue;
    const VarietyResult& res = rit->second;
    const std::vector<std::string>* inherits = nullptr;
    if (auto git = goldens.find(variety); git != goldens.end()) inherits = &git->second.inherits;

    os << "== " << variety << " ==\n";
    if (inherits && !inherits->empty()) {
      os << "inherits:";
      for (const std::string& inh : *inherits) os << " " << inh;
      os << "\n";
    }
    // Skip cells already accounted for by an inherited variety on every
    // battery member, and commutative-only cells that merely collapse onto
    // another listed triple.
    auto grid_index = [&](const MultQuadruple& q) -> size_t {
      for (size_t j = 0; j < grid.size(); ++j)
        if (grid[j] == q) return j;
      return grid.size();
    };
    auto covered = [&](size_t i) {
      const ConditionExpr& c = res.conditions[i];
      for (const WitnessMember& m : battery.members) {
        if (!condition_holds(c, m)) continue;
        bool accounted = false;
        if (inherits) {
          for (const std::string& inh : *inherits) {
            auto iit = results.find(inh);
            if (iit != results.end() && condition_holds(iit->second.conditions[i], m))
              accounted = true;
          }
        }
        if (!accounted && c.pc && m.sig_pc) {
          size_t j = grid_index(pc_collapse(grid[i]));
          if (j < grid.size() && j != i && condition_holds(res.conditions[j], m))
            accounted = true;
        }
        if (!accounted) return false;
      }
      return true;
    };
    std::map<std::string, std::vector<std::string>> blocks;  // display -> triples
    for (size_t i = 0; i < grid.size(); ++i) {
      const ConditionExpr& c = res.conditions[i];
      if (c.never || covered(i)) continue;
      std::string name =
          c.pc ? format_triple(pc_collapse(grid[i])) : format_triple(grid[i]);
      auto& list = blocks[c.display()];
      if (std::find(list.begin(), list.end(), name) == list.end()) list.push_back(name);
    }
    static const std::vector<std::string> order = {"always", "PC",    "PB",
                                                   "PS",     "PC&PS", "PB&PS"};
    auto rank = [&](const std::string& d) {
      auto it = std::find(order.begin(), order.end(), d);
      return it == order.end() ? order.size() : static_cast<size_t>(it - order.begin());
    };
    std::vector<std::string> keys;
    for (const auto& [k, v] : blocks) keys.push_back(k);
    std::sort(keys.begin(), keys.end(), [&](const std::string& a, const std::string& b) {
      return std::pair(rank(a), a) < std::pair(rank(b), b);
    });
    for (const std::string& k : keys) {
      os << k << ":\n";
      for (const std::string& t : blocks[k]) os << "  " << t << "\n";
    }
  }
  return os.str();
}

}  // namespace loopq
