#pragma once

// Formal group words over starred variables, with the central star-fixed
// element g0 kept as a hoisted exponent, and the canonical form used to
// compare word identities.

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace loopq {

struct Letter {
  int var = 0;  // variable id; displayed as 'a' + var
  bool starred = false;
  auto operator<=>(const Letter&) const = default;
};

// g0^k * l1 l2 ... lm.  g0 commutes with everything and g0* = g0, so a single
// integer exponent at the front loses nothing.
struct GroupWord {
  int g0_exp = 0;
  std::vector<Letter> letters;
  auto operator<=>(const GroupWord&) const = default;
  bool empty() const { return g0_exp == 0 && letters.empty(); }
};

// (v1 v2 ... vk)* = vk* ... v1*; the g0 exponent is unchanged.
GroupWord star_word(const GroupWord& w);

GroupWord concat(const GroupWord& a, const GroupWord& b);

struct GroupIdentity {
  GroupWord lhs, rhs;
  auto operator<=>(const GroupIdentity&) const = default;
  bool trivial() const { return lhs == rhs; }
};

// Canonical form:
//  - v*v rewritten to vv*,
//  - adjacent central pairs vv* pulled to the front (right after g0^k) and
//    sorted by variable,
//  - the two steps iterated to a fixpoint,
//  - common g0 powers and common end letters of the two sides cancelled,
//  - sides ordered lexicographically.
// Idempotent and value-preserving in every admissible (G, *, g0).
GroupIdentity canonicalize(const GroupIdentity& id);

// Delete every letter whose variable is in vars, then canonicalize.
GroupIdentity substitute_unit(const GroupIdentity& id, const std::set<int>& vars);

// For each variable occurring starred in all of its occurrences (across both
// sides), flip its star flags; v -> v* is a bijection of G, so this is a
// sound change of variable.  Result is re-canonicalized.
GroupIdentity star_rename(const GroupIdentity& id);

std::vector<int> identity_vars(const GroupIdentity& id);

// Display syntax: optional "g0" / "g0^k" prefix, then space-separated letters
// with a trailing '*' for starred ones, e.g. "g0 x z* y* y*".
std::string format_word(const GroupWord& w);
std::string format_identity(const GroupIdentity& id);
GroupWord parse_word(std::string_view src);
GroupIdentity parse_word_identity(std::string_view src);

struct IdentitySet {
  std::set<GroupIdentity> identities;
  bool all_trivial() const;
};

}  // namespace loopq
