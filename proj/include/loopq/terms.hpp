#pragma once

// Loop-identity terms over one binary operation: binary trees with variable
// leaves, a parser for the juxtaposition syntax, and the named identities the
// search runs on.

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace loopq {

struct TermNode;
using Term = std::shared_ptr<const TermNode>;

struct TermNode {
  int var = -1;  // leaf when >= 0
  Term left, right;
  bool leaf() const { return var >= 0; }
};

Term make_leaf(int var);
Term make_node(Term left, Term right);

// Left-to-right leaf sequence.
std::vector<int> leaf_sequence(const Term& t);

struct LoopIdentity {
  Term lhs, rhs;
  std::vector<int> vars;  // ordered by first occurrence in the source
  std::string name;       // builtin name if any, else empty
};

// identity := term '=' term
// term     := primary+            (juxtaposition, left-associative)
// primary  := letter | '(' term ')'
LoopIdentity parse_identity(std::string_view src);

std::string format_term(const Term& t);
std::string format_identity(const LoopIdentity& id);

// Same left-to-right leaf sequences on both sides.
bool check_strictly_balanced(const LoopIdentity& id);

// The sixteen named identities, keyed by their lowercase names.
const std::map<std::string, LoopIdentity>& builtin_identities();
const LoopIdentity& builtin(const std::string& name);

// The fourteen varieties with published result tables plus "rif", in report
// order.
const std::vector<std::string>& table_varieties();

}  // namespace loopq
