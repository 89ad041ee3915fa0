#include "loopq/loop_table.hpp"

#include <algorithm>
#include <ostream>
#include <set>

#include "loopq/fail.hpp"

namespace loopq {

Elem eval_theta_concrete(const FiniteGroup& g, const StarMap& star, Elem g0,
                         const ThetaElem& t, Elem a, Elem b) {
  if (t.swap) std::swap(a, b);
  if (t.star_first) a = star(a);
  if (t.star_second) b = star(b);
  return g.mul(g.power(g0, t.g0_exp), g.mul(a, b));
}

LoopTable build_loop(GroupPtr g, const StarMap& star, Elem g0, const MultQuadruple& q) {
  const FiniteGroup& G = *g;
  if (star.group.get() != g.get()) fail("build_loop: star map belongs to a different group");
  if (!is_central(G, g0))
    fail("build_loop: g0=" + std::to_string(g0) + " is not central in " + G.name);
  if (star(g0) != g0)
    fail("build_loop: g0=" + std::to_string(g0) + " is not star-fixed in " + G.name);

  LoopTable t;
  t.group_order = G.order;
  t.group = std::move(g);
  t.star = star;
  t.g0 = g0;
  t.quad = q;
  const int n = G.order, m = 2 * n;
  t.table.resize(static_cast<size_t>(m) * m);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      t.table[static_cast<size_t>(a) * m + b] = eval_theta_concrete(G, star, g0, q.alpha, a, b);
      t.table[static_cast<size_t>(a) * m + (n + b)] =
          n + eval_theta_concrete(G, star, g0, q.beta, a, b);
      t.table[static_cast<size_t>(n + a) * m + b] =
          n + eval_theta_concrete(G, star, g0, q.gamma, a, b);
      t.table[static_cast<size_t>(n + a) * m + (n + b)] =
          eval_theta_concrete(G, star, g0, q.delta, a, b);
    }
  }
  // Any twist quadruple yields a quasigroup; verify anyway.
  std::vector<char> seen(static_cast<size_t>(m));
  for (Elem a = 0; a < m; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem b = 0; b < m; ++b) seen[static_cast<size_t>(t.mul(a, b))] = 1;
    for (char s : seen)
      if (!s) fail("build_loop: table is not a Latin square (row)");
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem b = 0; b < m; ++b) seen[static_cast<size_t>(t.mul(b, a))] = 1;
    for (char s : seen)
      if (!s) fail("build_loop: table is not a Latin square (column)");
  }
  return t;
}

bool is_loop(const LoopTable& t) {
  for (Elem a = 0; a < t.order(); ++a)
    if (t.mul(0, a) != a || t.mul(a, 0) != a) return false;
  return true;
}

std::optional<Elem> neutral_element(const LoopTable& t) {
  for (Elem e = 0; e < t.order(); ++e) {
    bool ok = true;
    for (Elem a = 0; a < t.order() && ok; ++a)
      ok = t.mul(e, a) == a && t.mul(a, e) == a;
    if (ok) return e;
  }
  return std::nullopt;
}

namespace {

Elem eval_term(const Term& t, const std::vector<Elem>& val, const LoopTable& L,
               const std::vector<int>& vars) {
  if (t->leaf()) {
    for (size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == t->var) return val[i];
    fail("check_identity: unbound variable");
  }
  return L.mul(eval_term(t->left, val, L, vars), eval_term(t->right, val, L, vars));
}

}  // namespace

std::optional<std::vector<Elem>> check_identity_witness(const LoopTable& t,
                                                        const LoopIdentity& psi) {
  const size_t k = psi.vars.size();
  std::vector<Elem> val(k, 0);
  for (;;) {
    if (eval_term(psi.lhs, val, t, psi.vars) != eval_term(psi.rhs, val, t, psi.vars))
      return val;
    size_t i = 0;
    while (i < k && ++val[i] == t.order()) val[i++] = 0;
    if (i == k) return std::nullopt;
  }
}

bool check_identity(const LoopTable& t, const LoopIdentity& psi) {
  return !check_identity_witness(t, psi).has_value();
}

LoopTable opposite(const LoopTable& t) {
  LoopTable o = t;
  o.quad = opposite_quadruple(t.quad);
  const int m = t.order();
  for (Elem a = 0; a < m; ++a)
    for (Elem b = 0; b < m; ++b)
      o.table[static_cast<size_t>(a) * m + b] = t.table[static_cast<size_t>(b) * m + a];
  return o;
}

MultQuadruple opposite_quadruple(const MultQuadruple& q) {
  // Swap the arguments first, then apply the original map; the mixed-coset
  // maps trade places.
  const ThetaElem sw{0, true, false, false};
  return {theta_compose(q.alpha, sw), theta_compose(q.gamma, sw),
          theta_compose(q.beta, sw), theta_compose(q.delta, sw)};
}

bool check_isomorphism(const LoopTable& a, const LoopTable& b, const std::vector<Elem>& f) {
  if (a.order() != b.order()) fail("check_isomorphism: size mismatch");
  if (f.size() != static_cast<size_t>(a.order())) fail("check_isomorphism: map size mismatch");
  const int m = a.order();
  for (Elem x = 0; x < m; ++x)
    for (Elem y = 0; y < m; ++y)
      if (f[static_cast<size_t>(a.mul(x, y))] !=
          b.mul(f[static_cast<size_t>(x)], f[static_cast<size_t>(y)]))
        return false;
  return true;
}

bool has_two_sided_inverses(const LoopTable& t) {
  for (Elem a = 0; a < t.order(); ++a) {
    bool found = false;
    for (Elem b = 0; b < t.order() && !found; ++b)
      found = t.mul(a, b) == 0 && t.mul(b, a) == 0;
    if (!found) return false;
  }
  return true;
}

namespace {

Elem left_divide(const LoopTable& t, Elem a, Elem b) {
  for (Elem z = 0; z < t.order(); ++z)
    if (t.mul(a, z) == b) return z;
  fail("left division failed");
}

Elem right_divide(const LoopTable& t, Elem b, Elem a) {
  for (Elem z = 0; z < t.order(); ++z)
    if (t.mul(z, a) == b) return z;
  fail("right division failed");
}

}  // namespace

bool is_diassociative(const LoopTable& t) {
  const int m = t.order();
  for (Elem a = 0; a < m; ++a) {
    for (Elem b = a; b < m; ++b) {
      std::set<Elem> s{a, b};
      bool grew = true;
      while (grew) {
        grew = false;
        std::vector<Elem> cur(s.begin(), s.end());
        for (Elem x : cur)
          for (Elem y : cur) {
            grew |= s.insert(t.mul(x, y)).second;
            grew |= s.insert(left_divide(t, x, y)).second;
            grew |= s.insert(right_divide(t, y, x)).second;
          }
      }
      std::vector<Elem> sub(s.begin(), s.end());
      for (Elem x : sub)
        for (Elem y : sub)
          for (Elem z : sub)
            if (t.mul(t.mul(x, y), z) != t.mul(x, t.mul(y, z))) return false;
    }
  }
  return true;
}

void write_cayley(std::ostream& os, const LoopTable& t) {
  os << "# Q(" << t.group->name << ", g0=" << t.g0 << ", " << format_triple(t.quad)
     << "), alpha=" << theta_format(t.quad.alpha) << "\n";
  os << "# elements 0.." << t.group_order - 1 << " = G, " << t.group_order << ".."
     << t.order() - 1 << " = Gu\n";
  os << t.order() << "\n";
  for (Elem a = 0; a < t.order(); ++a) {
    for (Elem b = 0; b < t.order(); ++b) {
      if (b) os << ' ';
      os << t.mul(a, b);
    }
    os << "\n";
  }
}

}  // namespace loopq
