#pragma once

// Symbolic evaluation of loop-identity terms over G and the coset Gu: each
// subterm carries the coset it lands in and a formal group word for its
// G-component.  Running all coset assignments of a strictly balanced identity
// yields the set of group identities the construction imposes on G.

#include <map>
#include <string>
#include <vector>

#include "loopq/fail.hpp"
#include "loopq/terms.hpp"
#include "loopq/theta.hpp"
#include "loopq/words.hpp"

namespace loopq {

enum class Coset { G, Gu };

// Total assignment of variables to cosets.
using CosetAssignment = std::map<int, Coset>;

struct SymbolicValue {
  Coset coset = Coset::G;
  GroupWord word;
};

struct NotStrictlyBalanced : Error {
  using Error::Error;
};

SymbolicValue evaluate_term(const Term& t, const CosetAssignment& f,
                            const MultQuadruple& q);

// Number of (Gu, Gu) multiplications performed while evaluating t under f;
// always floor(k/2) for k the number of Gu-leaves.
int delta_usage(const Term& t, const CosetAssignment& f);

struct EvalTrace {
  CosetAssignment f;
  GroupWord lhs_raw, rhs_raw;
  GroupIdentity canonical;
};

std::string format_assignment(const CosetAssignment& f, const std::vector<int>& vars);

// The collected identity set: one canonical group identity per coset
// assignment, deduplicated.  Rejects identities that are not strictly
// balanced.  Assignments are enumerated in binary-counter order over the
// ordered variable set.
IdentitySet collect_identities(const LoopIdentity& psi, const MultQuadruple& q,
                               std::vector<EvalTrace>* trace = nullptr);

}  // namespace loopq
