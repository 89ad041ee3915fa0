#pragma once

// Finite groups as Cayley tables with element 0 the neutral element, star
// maps (involutory antiautomorphisms with central gg*), and the structural
// predicates the classification conditions are built from.

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace loopq {

using Elem = int;

struct FiniteGroup {
  int order = 0;
  std::vector<Elem> table;  // row-major: table[g*order + h] = g*h
  std::string name;
  std::vector<Elem> inv;

  Elem mul(Elem a, Elem b) const { return table[a * order + b]; }
  Elem power(Elem g, int n) const;
  int elem_order(Elem g) const;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Validates the table (neutral element, Latin square, associativity),
// re-indexing first if the neutral element is not at index 0.  Reports the
// first violating entry or triple on failure.
GroupPtr group_from_table(int n, std::vector<Elem> table, std::string name);

// Named families: cyclic:n, dihedral:n (order 2n), quaternion:8, modular:16,
// symmetric:3, and direct products joined with 'x'
// (e.g. "cyclic:2xcyclic:4").  Anything else is read as a Cayley file path.
GroupPtr load_group(const std::string& descriptor);

// Cayley file: first data line n, then n rows of n entries; '#' starts a
// comment line.
GroupPtr read_cayley_file(const std::string& path);

std::vector<Elem> center(const FiniteGroup& g);
bool is_central(const FiniteGroup& g, Elem z);

struct StarMap {
  GroupPtr group;
  std::vector<Elem> map;
  bool nonidentical = false;

  Elem operator()(Elem g) const { return map[g]; }
};

// Validates: involutory, (gh)* = h*g*, and g g* central for every g.
StarMap make_star(GroupPtr g, std::vector<Elem> map);
StarMap inversion_star(const GroupPtr& g);
StarMap identity_star(const GroupPtr& g);  // only valid on abelian groups

// All admissible star maps, in lexicographic order of the map array.  The
// inversion map is always among them.  Full bijection search for |G| <= 8,
// automorphism-composed-with-inversion search above.
std::vector<StarMap> enumerate_star_maps(const GroupPtr& g);

struct CentralElement {
  GroupPtr group;
  Elem index = 0;
};

// Central star-fixed elements; always contains the neutral element.
std::vector<CentralElement> g0_candidates(const GroupPtr& g, const StarMap& star);

bool predicate_pc(const FiniteGroup& g);                       // commutative
bool predicate_pb(const FiniteGroup& g);                       // all squares central
bool predicate_ps(const FiniteGroup& g, const StarMap& star);  // (gg)* = gg

// All automorphisms, found by extending generator images.
std::vector<std::vector<Elem>> enumerate_automorphisms(const FiniteGroup& g);

}  // namespace loopq
