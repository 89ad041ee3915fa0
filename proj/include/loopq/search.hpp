#pragma once

// The 64-quadruple search grid, the symbolic classification of every named
// variety over it, and the comparison against the checked-in result tables.

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "loopq/classify.hpp"
#include "loopq/terms.hpp"
#include "loopq/theta.hpp"

namespace loopq {

// alpha = xy, beta in {xy, x*y, yx, yx*}, gamma in {xy, yx}, delta over all
// eight parts with g0 exponent 1; lexicographic in (beta, gamma, delta).
std::vector<MultQuadruple> enumerate_quadruples();

struct VarietyResult {
  std::string variety;
  std::vector<ConditionExpr> conditions;  // parallel to enumerate_quadruples()
};

VarietyResult run_variety_search(const std::string& variety,
                                 const WitnessBattery& battery = WitnessBattery::standard());

// All searchable varieties (or the given subset), optionally in parallel;
// workers <= 0 reads LOOPQ_WORKERS, defaulting to the hardware count.
std::map<std::string, VarietyResult> run_full_search(
    const WitnessBattery& battery = WitnessBattery::standard(), int workers = 0,
    const std::vector<std::string>& varieties = table_varieties());

struct GoldenBlock {
  ConditionExpr condition;
  std::vector<MultQuadruple> triples;
};

struct GoldenTable {
  std::string variety;
  std::vector<std::string> inherits;
  std::vector<GoldenBlock> blocks;
};

GoldenTable parse_golden(std::istream& in, const std::string& source_name);
GoldenTable load_golden_file(const std::string& path);
std::map<std::string, GoldenTable> load_golden_dir(const std::string& dir);

// On a commutative group the swap maps act like their unswapped partners, so
// table entries are only named up to this collapse there.
ThetaElem pc_collapse(const ThetaElem& t);
MultQuadruple pc_collapse(const MultQuadruple& q);

// Semantic truth of the golden tables at (variety, q) on one witness.
bool golden_holds(const std::map<std::string, GoldenTable>& tables, const std::string& variety,
                  const MultQuadruple& q, const WitnessMember& m);

// The matching golden disjuncts at (variety, q): exact block matches
// contribute their condition, collapse-only matches contribute it
// strengthened by PC, inherited varieties contribute recursively.
std::vector<ConditionExpr> golden_disjuncts(const std::map<std::string, GoldenTable>& tables,
                                            const std::string& variety, const MultQuadruple& q);

struct CellDiff {
  std::string variety;
  MultQuadruple quad;
  ConditionExpr computed;
  std::string golden_display;
  bool semantic_match = false;
  bool structural_match = false;
  bool structural_single = false;  // golden disjunction reduced to one condition
  int block_hits = 0;              // own-table blocks matching this quadruple
};

struct DiffReport {
  std::vector<CellDiff> cells;  // grid order: variety-major, quadruple-minor
  int mismatches = 0;
  int structural_mismatches = 0;

  bool ok() const { return mismatches == 0; }
};

DiffReport diff_against_golden(const std::map<std::string, VarietyResult>& results,
                               const std::map<std::string, GoldenTable>& goldens,
                               const WitnessBattery& battery = WitnessBattery::standard());

enum class ReportFormat { kHuman, kJson, kTable };

std::string format_report(const DiffReport& report, ReportFormat format,
                          bool structural = false);

// Publication-shaped rendering of computed results: per variety, blocks of
// triples grouped by condition, with commutative blocks collapsed and cells
// already implied by inherited varieties omitted.
std::string format_results_table(const std::map<std::string, VarietyResult>& results,
                                 const std::map<std::string, GoldenTable>& goldens,
                                 const WitnessBattery& battery = WitnessBattery::standard());

}  // namespace loopq
