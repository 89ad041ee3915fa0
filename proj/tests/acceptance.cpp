// Acceptance suite: one verdict line per criterion.  Exit status is zero
// exactly when every criterion passes.

#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "loopq/loop_table.hpp"
#include "loopq/search.hpp"
#include "loopq/symbolic.hpp"

using namespace loopq;

namespace {

int g_failures = 0;
int g_criterion_failures = 0;

#define EXPECT(cond)                                                         \
  do {                                                                       \
    if (!(cond)) {                                                           \
      ++g_criterion_failures;                                                \
      std::cout << "    FAILED: " #cond " (" << __FILE__ << ":" << __LINE__  \
                << ")\n";                                                    \
    }                                                                        \
  } while (0)

void criterion(int number, const std::string& name, const std::function<void()>& body) {
  g_criterion_failures = 0;
  try {
    body();
  } catch (const std::exception& e) {
    ++g_criterion_failures;
    std::cout << "    EXCEPTION: " << e.what() << "\n";
  }
  std::cout << "criterion " << number << " (" << name << "): "
            << (g_criterion_failures == 0 ? "PASS" : "FAIL") << "\n";
  g_failures += g_criterion_failures;
}

const MultQuadruple kChein = parse_quadruple("yx,xy*,g0y*x");
const MultQuadruple kDbj = parse_quadruple("xy,y*x,g0xy*");

bool same_map(const FiniteGroup& g, const StarMap& s, Elem g0, const ThetaElem& a,
              const ThetaElem& b) {
  for (Elem x = 0; x < g.order; ++x)
    for (Elem y = 0; y < g.order; ++y)
      if (eval_theta_concrete(g, s, g0, a, x, y) != eval_theta_concrete(g, s, g0, b, x, y))
        return false;
  return true;
}

}  // namespace

int main() {
  const WitnessBattery& battery = WitnessBattery::standard();
  const std::vector<MultQuadruple> grid = enumerate_quadruples();
  const std::string golden_dir = std::string(LOOPQ_DATA_DIR) + "/golden";

  criterion(1, "golden reproduction, 15 tables x 64 quadruples", [&] {
    auto results = run_full_search(battery);
    auto goldens = load_golden_dir(golden_dir);
    EXPECT(goldens.size() == 15);
    DiffReport report = diff_against_golden(results, goldens, battery);
    EXPECT(report.cells.size() == 960);
    EXPECT(report.mismatches == 0);
    std::cout << "    " << report.cells.size() << " cells, " << report.mismatches
              << " mismatches (structural: " << report.structural_mismatches << ")\n";
  });

  criterion(2, "doubling with the inverse twist", [&] {
    GroupPtr s3 = load_group("symmetric:3");
    LoopTable m = build_loop(s3, inversion_star(s3), 0, kChein);
    EXPECT(m.order() == 12);
    EXPECT(is_loop(m));
    EXPECT(check_identity(m, builtin("moufang")));
    EXPECT(!check_identity(m, builtin("assoc")));
    GroupPtr c4 = load_group("cyclic:4");
    LoopTable a = build_loop(c4, inversion_star(c4), 0, kChein);
    EXPECT(check_identity(a, builtin("assoc")));
  });

  criterion(3, "flexible-algebra doubling across the battery", [&] {
    for (const WitnessMember& w : battery.members) {
      LoopTable t = build_loop(w.group, w.star, w.g0, kDbj);
      EXPECT(is_loop(t));
      EXPECT(check_identity(t, builtin("flex")));
      bool is_c = check_identity(t, builtin("c"));
      EXPECT(is_c == w.sig_pb);
      bool is_assoc = check_identity(t, builtin("assoc"));
      bool is_moufang = check_identity(t, builtin("moufang"));
      EXPECT(is_assoc == w.sig_pc);
      EXPECT(is_moufang == w.sig_pc);
      if (is_c) EXPECT(is_diassociative(t));
    }
  });

  criterion(4, "brute force equals symbolic classification everywhere", [&] {
    int agreements = 0;
    for (const auto& [name, psi] : builtin_identities()) {
      for (const MultQuadruple& q : grid) {
        ConditionExpr cond = classify_set(collect_identities(psi, q), battery);
        for (const WitnessMember& w : battery.members) {
          LoopTable t = build_loop(w.group, w.star, w.g0, q);
          bool brute = check_identity(t, psi);
          bool symbolic = condition_holds(cond, w);
          if (brute == symbolic)
            ++agreements;
          else {
            ++g_criterion_failures;
            std::cout << "    disagreement: " << name << " " << format_triple(q) << " on "
                      << w.label << " brute=" << brute << " symbolic=" << symbolic << "\n";
          }
        }
      }
    }
    EXPECT(agreements >= 5 * 64 * 16);
    std::cout << "    " << agreements << " agreements\n";
  });

  criterion(5, "explicit-map isomorphisms", [&] {
    // g0-shifted quadruples: g -> t^-1 g on dihedral:4 with g0 of order 2
    GroupPtr d4 = load_group("dihedral:4");
    StarMap d4inv = inversion_star(d4);
    const int n = d4->order;
    for (int shift : {1, 2}) {
      for (const MultQuadruple& base : {kChein, parse_quadruple("xy,yx,g0yx")}) {
        MultQuadruple shifted = base;
        shifted.alpha.g0_exp += shift;
        shifted.beta.g0_exp += shift;
        shifted.gamma.g0_exp += shift;
        shifted.delta.g0_exp += shift;
        Elem tinv = d4->inv[d4->power(2, shift)];
        std::vector<Elem> f(2 * n);
        for (Elem g = 0; g < n; ++g) {
          f[g] = d4->mul(tinv, g);
          f[n + g] = n + d4->mul(tinv, g);
        }
        EXPECT(check_isomorphism(build_loop(d4, d4inv, 2, base),
                                 build_loop(d4, d4inv, 2, shifted), f));
      }
    }
    // transposition: the opposite table is the table of the swapped quadruple
    for (const MultQuadruple& q : {kChein, kDbj}) {
      GroupPtr s3 = load_group("symmetric:3");
      LoopTable t = build_loop(s3, inversion_star(s3), 0, q);
      EXPECT(opposite(t).table ==
             build_loop(s3, inversion_star(s3), 0, opposite_quadruple(q)).table);
    }
    // star-twisted quadruples: g -> g, gu -> g*u, all beta and gamma pairs
    const std::pair<const char*, const char*> beta_pairs[] = {
        {"xy", "yx*"}, {"yx", "x*y"}, {"x*y", "yx"}, {"yx*", "xy"}};
    const std::pair<const char*, const char*> gamma_pairs[] = {
        {"xy", "y*x"}, {"yx", "xy*"}, {"xy*", "yx"}, {"y*x", "xy"}};
    for (const auto& [group, g0] : {std::pair{"dihedral:4", 2}, {"cyclic:8", 4}}) {
      GroupPtr g = load_group(group);
      StarMap star = inversion_star(g);
      std::vector<Elem> f(2 * g->order);
      for (Elem x = 0; x < g->order; ++x) {
        f[x] = x;
        f[g->order + x] = g->order + star(x);
      }
      for (const auto& [b, b2] : beta_pairs)
        for (const auto& [c, c2] : gamma_pairs) {
          ThetaElem delta = theta_parse("g0yx*");
          MultQuadruple q1{ThetaElem{}, theta_parse(b), theta_parse(c), delta};
          MultQuadruple q2{ThetaElem{}, theta_parse(b2), theta_parse(c2),
                           theta_compose(theta_parse("x*y*"), delta)};
          EXPECT(check_isomorphism(build_loop(g, star, g0, q1),
                                   build_loop(g, star, g0, q2), f));
        }
    }
  });

  criterion(6, "exhaustive loop criterion on cyclic:4", [&] {
    GroupPtr c4 = load_group("cyclic:4");
    StarMap star = inversion_star(c4);
    auto in_set = [&](const ThetaElem& t, std::initializer_list<const char*> names) {
      for (const char* n : names)
        if (same_map(*c4, star, 2, t, theta_parse(n))) return true;
      return false;
    };
    int loops = 0;
    for (int pa = 0; pa < kThetaParts; ++pa)
      for (int pb = 0; pb < kThetaParts; ++pb)
        for (int pg = 0; pg < kThetaParts; ++pg)
          for (int pd = 0; pd < kThetaParts; ++pd)
            for (int ed : {0, 1}) {
              MultQuadruple q{theta_from_part_index(pa), theta_from_part_index(pb),
                              theta_from_part_index(pg), theta_from_part_index(pd, ed)};
              LoopTable t = build_loop(c4, star, 2, q);
              bool expect = in_set(q.alpha, {"xy", "yx"}) &&
                            in_set(q.beta, {"xy", "x*y", "yx", "yx*"}) &&
                            in_set(q.gamma, {"xy", "xy*", "yx", "y*x"});
              EXPECT(is_loop(t) == expect);
              if (is_loop(t)) ++loops;
            }
    std::cout << "    " << loops << " of 8192 twist choices give loops\n";
  });

  criterion(7, "structural properties of the twist machinery", [&] {
    // the swap/star maps: order 8, nonabelian, two elements of order 4
    std::set<ThetaElem> theta;
    for (int p = 0; p < kThetaParts; ++p) theta.insert(theta_from_part_index(p));
    bool abelian = true;
    int order4 = 0;
    for (const ThetaElem& a : theta) {
      for (const ThetaElem& b : theta)
        if (theta_compose(a, b) != theta_compose(b, a)) abelian = false;
      ThetaElem p = a;
      int ord = 1;
      while (p != ThetaElem{}) {
        p = theta_compose(p, a);
        ++ord;
      }
      if (ord == 4) ++order4;
    }
    EXPECT(theta.size() == 8);
    EXPECT(!abelian);
    EXPECT(order4 == 2);

    // star maps: g* g = g g* central, on every enumerated map
    for (const WitnessMember& w : battery.members) {
      for (const StarMap& s : enumerate_star_maps(w.group)) {
        for (Elem a = 0; a < w.group->order; ++a) {
          Elem l = w.group->mul(s(a), a), r = w.group->mul(a, s(a));
          EXPECT(l == r);
          EXPECT(is_central(*w.group, r));
        }
      }
    }

    // delta usage is balanced for every builtin and assignment
    for (const auto& [name, psi] : builtin_identities()) {
      const size_t nv = psi.vars.size();
      for (unsigned mask = 0; mask < (1u << nv); ++mask) {
        CosetAssignment f;
        int k = 0;
        for (size_t j = 0; j < nv; ++j)
          f[psi.vars[j]] = (mask >> j) & 1 ? Coset::Gu : Coset::G;
        for (int leaf : leaf_sequence(psi.lhs))
          if (f[leaf] == Coset::Gu) ++k;
        EXPECT(delta_usage(psi.lhs, f) == delta_usage(psi.rhs, f));
        EXPECT(delta_usage(psi.lhs, f) == k / 2);
      }
    }

    // an unshifted alpha forces the neutral element to be 0
    GroupPtr c4 = load_group("cyclic:4");
    StarMap c4inv = inversion_star(c4);
    for (int pa = 0; pa < kThetaParts; ++pa)
      for (int pb = 0; pb < kThetaParts; ++pb)
        for (int pg = 0; pg < kThetaParts; ++pg) {
          MultQuadruple q{theta_from_part_index(pa), theta_from_part_index(pb),
                          theta_from_part_index(pg), theta_from_part_index(5, 1)};
          auto e = neutral_element(build_loop(c4, c4inv, 2, q));
          EXPECT(!e || *e == 0);
        }

    // identical star on the Klein group: every choice yields an abelian group
    GroupPtr klein = load_group("cyclic:2xcyclic:2");
    StarMap id_star = identity_star(klein);
    LoopIdentity comm = parse_identity("xy=yx");
    for (int pa = 0; pa < kThetaParts; ++pa)
      for (int pb = 0; pb < kThetaParts; ++pb)
        for (int pg = 0; pg < kThetaParts; ++pg)
          for (int pd = 0; pd < kThetaParts; ++pd) {
            MultQuadruple q{theta_from_part_index(pa), theta_from_part_index(pb),
                            theta_from_part_index(pg), theta_from_part_index(pd, 1)};
            LoopTable t = build_loop(klein, id_star, 1, q);
            EXPECT(is_loop(t));
            EXPECT(check_identity(t, builtin("assoc")));
            EXPECT(check_identity_witness(t, comm) == std::nullopt);
          }

    // two-sided inverses across the whole grid on two members
    for (const char* member : {"dihedral:4", "symmetric:3"}) {
      GroupPtr g = load_group(member);
      StarMap star = inversion_star(g);
      for (const MultQuadruple& q : grid)
        EXPECT(has_two_sided_inverses(build_loop(g, star, 0, q)));
    }
  });

  criterion(8, "variety memberships respect the inclusion lattice", [&] {
    const std::vector<std::pair<const char*, const char*>> edges = {
        {"assoc", "extra"},      {"extra", "moufang"},   {"extra", "c"},
        {"moufang", "leftbol"},  {"moufang", "rightbol"}, {"moufang", "flex"},
        {"c", "lc"},             {"c", "rc"},            {"leftbol", "leftalt"},
        {"rightbol", "rightalt"}, {"lc", "leftalt"},     {"lc", "leftnuc"},
        {"lc", "midnuc"},        {"rc", "rightalt"},     {"rc", "rightnuc"},
        {"rc", "midnuc"}};
    for (const WitnessMember& w : battery.members) {
      for (const MultQuadruple& q : grid) {
        LoopTable t = build_loop(w.group, w.star, w.g0, q);
        std::map<std::string, bool> member;
        for (const std::string& v : table_varieties())
          member[v] = check_identity(t, builtin(v));
        for (const auto& [stronger, weaker] : edges)
          if (member[stronger] && !member[weaker]) {
            ++g_criterion_failures;
            std::cout << "    broken edge " << stronger << " -> " << weaker << " at "
                      << format_triple(q) << " on " << w.label << "\n";
          }
      }
    }
  });

  criterion(9, "canonical patterns classify as stated", [&] {
    auto classify_str = [](const char* src) {
      return classify_identity(canonicalize(parse_word_identity(src))).display();
    };
    EXPECT(classify_str("x = x*") == "never");
    EXPECT(classify_str("x x y = y x x") == "PB");
    EXPECT(classify_str("x y x* = x* y x") == "PB");
    EXPECT(classify_str("x x* y = x* y x") == "PC");
    EXPECT(classify_str("x y = y x") == "PC");
    EXPECT(classify_str("x x y = y x* x*") == "PB&PS");
    GroupIdentity six = canonicalize(parse_word_identity("g0 x z* y* y* = g0 y* y* x z*"));
    EXPECT(format_identity(six) == "x z* y* y* = y* y* x z*");
    EXPECT(classify_identity(six).display() == "PB");
  });

  std::cout << (g_failures == 0 ? "ACCEPTANCE: all criteria pass"
                                : "ACCEPTANCE: FAILURES PRESENT")
            << "\n";
  return g_failures == 0 ? 0 : 1;
}
