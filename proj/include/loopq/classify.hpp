#pragma once

// Deciding what a canonical group identity says about (G, *): never holds,
// always holds, or holds exactly when G is commutative (PC), when squares are
// central (PB), when squares are star-fixed (PS), or a conjunction of those.
// Identities outside that vocabulary are reported verbatim and checked by
// brute force.

#include <map>
#include <string>
#include <vector>

#include "loopq/group.hpp"
#include "loopq/words.hpp"

namespace loopq {

struct ConditionExpr {
  bool never = false;
  bool pc = false, pb = false, ps = false;
  std::vector<GroupIdentity> raws;  // extra verbatim conjuncts

  auto operator<=>(const ConditionExpr&) const = default;
  bool always() const { return !never && !pc && !pb && !ps && raws.empty(); }
  bool atoms_only() const { return raws.empty(); }

  static ConditionExpr make_true() { return {}; }
  static ConditionExpr make_false() { return {.never = true}; }
  static ConditionExpr make_raw(GroupIdentity id);
  static ConditionExpr make_atoms(bool pc, bool pb, bool ps);

  // PC absorbs PB; FALSE absorbs everything; raws sorted and deduplicated.
  void normalize();
  ConditionExpr conjoin(const ConditionExpr& other) const;

  // "never", "always", "PC", "PB&PS", "raw: x y = y x", ...
  std::string display() const;
};

ConditionExpr parse_condition(std::string_view text);

struct WitnessMember {
  std::string label;
  GroupPtr group;
  StarMap star;
  Elem g0 = 0;
  bool sig_pc = false, sig_pb = false, sig_ps = false;
};

struct WitnessBattery {
  std::vector<WitnessMember> members;

  // c4, c8, d4, q8, m16, s3 with the inversion star and a central star-fixed
  // g0 of maximal order; covers the five realizable probe signatures.
  static const WitnessBattery& standard();
};

WitnessMember make_witness(std::string label, const std::string& descriptor, Elem g0);

// Brute force over all valuations of the identity's variables.
bool identity_holds_in(const GroupIdentity& id, const FiniteGroup& g, const StarMap& star,
                       Elem g0);

ConditionExpr classify_identity(const GroupIdentity& id,
                                const WitnessBattery& battery = WitnessBattery::standard());

ConditionExpr classify_set(const IdentitySet& psi,
                           const WitnessBattery& battery = WitnessBattery::standard());

bool condition_holds(const ConditionExpr& c, const WitnessMember& m);
bool condition_holds(const ConditionExpr& c, const FiniteGroup& g, const StarMap& star, Elem g0);

// True when the identity is derivable from the atoms of c by sound
// rewriting (so c, ignoring its own raws, forces the identity).
bool condition_implies_identity(const ConditionExpr& c, const GroupIdentity& id);

// Remove verbatim conjuncts already provable from the atoms.
void drop_provable_raws(ConditionExpr& c);

std::map<std::string, bool> signature_probe(const GroupIdentity& id,
                                            const WitnessBattery& battery);

}  // namespace loopq
