#pragma once

// Concrete doubled multiplication tables on G + Gu: elements 0..n-1 are G,
// n..2n-1 are Gu with gu at index n+g.  Includes the brute-force identity
// checker that serves as the independent oracle for the symbolic pipeline.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "loopq/group.hpp"
#include "loopq/terms.hpp"
#include "loopq/theta.hpp"

namespace loopq {

// Concrete value of a twist map followed by evaluation: g0^n * a' * b'.
Elem eval_theta_concrete(const FiniteGroup& g, const StarMap& star, Elem g0,
                         const ThetaElem& t, Elem a, Elem b);

struct LoopTable {
  int group_order = 0;
  std::vector<Elem> table;  // (2n)x(2n), row-major
  // provenance
  GroupPtr group;
  StarMap star;
  Elem g0 = 0;
  MultQuadruple quad;

  int order() const { return 2 * group_order; }
  Elem mul(Elem a, Elem b) const { return table[a * order() + b]; }
};

// Validates admissibility of (star, g0) and asserts the Latin-square property
// of the result (it holds for every twist quadruple).
LoopTable build_loop(GroupPtr g, const StarMap& star, Elem g0, const MultQuadruple& q);

// True iff element 0 is a two-sided neutral element.
bool is_loop(const LoopTable& t);

// The two-sided neutral element if one exists (it need not be 0 when alpha
// carries a g0 shift).
std::optional<Elem> neutral_element(const LoopTable& t);

bool check_identity(const LoopTable& t, const LoopIdentity& psi);

// First failing valuation, in the order of psi.vars, if any.
std::optional<std::vector<Elem>> check_identity_witness(const LoopTable& t,
                                                        const LoopIdentity& psi);

LoopTable opposite(const LoopTable& t);

// The quadruple whose table is the transpose of the one built from q.
MultQuadruple opposite_quadruple(const MultQuadruple& q);

bool check_isomorphism(const LoopTable& a, const LoopTable& b, const std::vector<Elem>& f);

bool has_two_sided_inverses(const LoopTable& t);

// Every subloop generated by two elements (closed under multiplication and
// both divisions) is associative.
bool is_diassociative(const LoopTable& t);

void write_cayley(std::ostream& os, const LoopTable& t);

}  // namespace loopq
