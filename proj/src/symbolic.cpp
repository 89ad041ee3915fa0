#include "loopq/symbolic.hpp"

#include <cassert>

namespace loopq {

SymbolicValue evaluate_term(const Term& t, const CosetAssignment& f,
                            const MultQuadruple& q) {
  if (t->leaf()) {
    auto it = f.find(t->var);
    if (it == f.end()) fail("evaluate_term: assignment not total");
    return {it->second, GroupWord{0, {{t->var, false}}}};
  }
  SymbolicValue l = evaluate_term(t->left, f, q);
  SymbolicValue r = evaluate_term(t->right, f, q);
  const ThetaElem* map = nullptr;
  Coset out;
  if (l.coset == Coset::G && r.coset == Coset::G) {
    map = &q.alpha;
    out = Coset::G;
  } else if (l.coset == Coset::G && r.coset == Coset::Gu) {
    map = &q.beta;
    out = Coset::Gu;
  } else if (l.coset == Coset::Gu && r.coset == Coset::G) {
    map = &q.gamma;
    out = Coset::Gu;
  } else {
    map = &q.delta;
    out = Coset::G;
  }
  return {out, delta_eval(theta_apply(*map, {std::move(l.word), std::move(r.word)}))};
}

namespace {

// (resulting coset, number of delta uses)
std::pair<Coset, int> delta_count(const Term& t, const CosetAssignment& f) {
  if (t->leaf()) return {f.at(t->var), 0};
  auto [cl, nl] = delta_count(t->left, f);
  auto [cr, nr] = delta_count(t->right, f);
  if (cl == Coset::Gu && cr == Coset::Gu) return {Coset::G, nl + nr + 1};
  Coset out = (cl == Coset::Gu || cr == Coset::Gu) ? Coset::Gu : Coset::G;
  return {out, nl + nr};
}

}  // namespace

int delta_usage(const Term& t, const CosetAssignment& f) {
  return delta_count(t, f).second;
}

std::string format_assignment(const CosetAssignment& f, const std::vector<int>& vars) {
  std::string s;
  for (int v : vars) s += (f.at(v) == Coset::G) ? 'G' : 'u';
  return s;
}

IdentitySet collect_identities(const LoopIdentity& psi, const MultQuadruple& q,
                               std::vector<EvalTrace>* trace) {
  if (!check_strictly_balanced(psi))
    throw NotStrictlyBalanced("identity \"" + format_identity(psi) +
                              "\" is not strictly balanced");
  IdentitySet out;
  const size_t k = psi.vars.size();
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    CosetAssignment f;
    for (size_t j = 0; j < k; ++j)
      f[psi.vars[j]] = (mask >> j) & 1 ? Coset::Gu : Coset::G;
    SymbolicValue l = evaluate_term(psi.lhs, f, q);
    SymbolicValue r = evaluate_term(psi.rhs, f, q);
    // Strict balance forces both sides into the same coset.
    assert(l.coset == r.coset);
    GroupIdentity id = canonicalize({l.word, r.word});
    if (trace) trace->push_back({f, l.word, r.word, id});
    out.identities.insert(std::move(id));
  }
  return out;
}

}  // namespace loopq
