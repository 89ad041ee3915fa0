#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>

#include "loopq/fail.hpp"
#include "loopq/group.hpp"
#include "test_support.hpp"

using namespace loopq;
using loopq::test::naive_center;

namespace {

// Independent enumeration: every bijection, filtered by the definition.
std::vector<std::vector<Elem>> star_maps_by_bijection(const FiniteGroup& g) {
  std::vector<Elem> perm(static_cast<size_t>(g.order));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<Elem>> out;
  do {
    bool ok = true;
    for (Elem a = 0; a < g.order && ok; ++a)
      ok = perm[static_cast<size_t>(perm[static_cast<size_t>(a)])] == a;
    for (Elem a = 0; a < g.order && ok; ++a)
      for (Elem b = 0; b < g.order && ok; ++b)
        ok = perm[static_cast<size_t>(g.mul(a, b))] ==
             g.mul(perm[static_cast<size_t>(b)], perm[static_cast<size_t>(a)]);
    for (Elem a = 0; a < g.order && ok; ++a) {
      Elem z = g.mul(a, perm[static_cast<size_t>(a)]);
      for (Elem b = 0; b < g.order && ok; ++b) ok = g.mul(z, b) == g.mul(b, z);
    }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::string write_temp(const std::string& content) {
  std::string path = std::string(std::tmpnam(nullptr)) + ".tbl";
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("named groups") {
  CHECK(load_group("cyclic:1")->order == 1);
  GroupPtr d4 = load_group("dihedral:4");
  CHECK(d4->order == 8);
  CHECK(center(*d4).size() == 2);
  CHECK(center(*d4) == naive_center(*d4));

  GroupPtr s3 = load_group("symmetric:3");
  CHECK(s3->order == 6);
  CHECK(center(*s3) == std::vector<Elem>{0});

  GroupPtr q8 = load_group("quaternion:8");
  CHECK(q8->order == 8);
  CHECK(center(*q8) == std::vector<Elem>({0, 2}));
  int order4 = 0;
  for (Elem a = 0; a < 8; ++a)
    if (q8->elem_order(a) == 4) ++order4;
  CHECK(order4 == 6);  // distinguishes it from dihedral:4

  GroupPtr m16 = load_group("modular:16");
  CHECK(m16->order == 16);
  CHECK(center(*m16) == std::vector<Elem>({0, 2, 4, 6}));
  CHECK(m16->elem_order(1) == 8);

  GroupPtr klein = load_group("cyclic:2xcyclic:2");
  CHECK(klein->order == 4);
  CHECK(predicate_pc(*klein));
  for (Elem a = 0; a < 4; ++a) CHECK(klein->elem_order(a) <= 2);

  CHECK_THROWS(load_group("frobnicate:5"));
  CHECK_THROWS(load_group("symmetric:4"));
}

TEST_CASE("cayley file loading") {
  GroupPtr s3 = load_group("symmetric:3");
  std::string body = "6\n# symmetric group on three letters\n";
  for (Elem a = 0; a < 6; ++a) {
    for (Elem b = 0; b < 6; ++b) body += std::to_string(s3->mul(a, b)) + " ";
    body += "\n";
  }
  std::string path = write_temp(body);
  GroupPtr loaded = load_group(path);
  CHECK(loaded->order == 6);
  CHECK(loaded->table == s3->table);
  std::remove(path.c_str());

  // a Latin square with neutral element but a non-associative triple:
  // the cyclic table of order 6 with one intercalate flipped
  GroupPtr c6 = load_group("cyclic:6");
  std::vector<Elem> t = c6->table;
  std::swap(t[1 * 6 + 2], t[1 * 6 + 5]);
  std::swap(t[4 * 6 + 2], t[4 * 6 + 5]);
  std::string bad = "6\n";
  for (Elem a = 0; a < 6; ++a) {
    for (Elem b = 0; b < 6; ++b) bad += std::to_string(t[a * 6 + b]) + " ";
    bad += "\n";
  }
  path = write_temp(bad);
  CHECK_THROWS_WITH_AS(load_group(path), doctest::Contains("triple"), Error);
  std::remove(path.c_str());

  // a single corrupted entry is caught by the Latin-square check
  std::string corrupt = body;
  corrupt[corrupt.find("\n2") + 1] = '3';
  path = write_temp(corrupt);
  CHECK_THROWS_AS(load_group(path), Error);
  std::remove(path.c_str());

  // neutral element away from index 0 gets re-indexed
  std::string shifted = "3\n2 0 1\n0 1 2\n1 2 0\n";  // cyclic of order 3, e at 1
  path = write_temp(shifted);
  GroupPtr c3 = load_group(path);
  CHECK(c3->mul(0, 0) == 0);
  CHECK(c3->mul(1, 1) == 2);
  std::remove(path.c_str());

  CHECK_THROWS(read_cayley_file("/nonexistent/table"));
}

TEST_CASE("star map validation") {
  GroupPtr c4 = load_group("cyclic:4");
  StarMap inv = inversion_star(c4);
  CHECK(inv.nonidentical);
  StarMap id = identity_star(c4);
  CHECK(!id.nonidentical);
  CHECK_THROWS(identity_star(load_group("symmetric:3")));
  CHECK_THROWS(make_star(c4, {1, 2, 3, 0}));
}

TEST_CASE("enumerate_star_maps matches the bijection oracle") {
  for (const char* d : {"cyclic:2", "cyclic:4", "symmetric:3", "dihedral:4",
                        "quaternion:8", "cyclic:2xcyclic:2"}) {
    GroupPtr g = load_group(d);
    auto expected = star_maps_by_bijection(*g);
    std::sort(expected.begin(), expected.end());
    auto got = enumerate_star_maps(g);
    REQUIRE(got.size() == expected.size());
    for (size_t i = 0; i < got.size(); ++i) CHECK(got[i].map == expected[i]);
  }
}

TEST_CASE("enumerate_star_maps spot values") {
  auto c4 = enumerate_star_maps(load_group("cyclic:4"));
  CHECK(c4.size() == 2);  // identity map and inversion
  CHECK(std::count_if(c4.begin(), c4.end(), [](const StarMap& s) { return s.nonidentical; }) == 1);

  auto s3 = enumerate_star_maps(load_group("symmetric:3"));
  REQUIRE(s3.size() == 1);
  CHECK(s3[0].map == load_group("symmetric:3")->inv);

  auto c2 = enumerate_star_maps(load_group("cyclic:2"));
  REQUIRE(c2.size() == 1);
  CHECK(!c2[0].nonidentical);
}

TEST_CASE("automorphism path agrees with bijection search above order 8") {
  GroupPtr m16 = load_group("modular:16");
  auto maps = enumerate_star_maps(m16);  // uses the automorphism route
  CHECK(!maps.empty());
  bool has_inv = false;
  for (const StarMap& s : maps) has_inv |= s.map == m16->inv;
  CHECK(has_inv);
  // automorphisms of the Klein group: all 6 permutations of the involutions
  CHECK(enumerate_automorphisms(*load_group("cyclic:2xcyclic:2")).size() == 6);
  CHECK(enumerate_automorphisms(*load_group("symmetric:3")).size() == 6);
  CHECK(enumerate_automorphisms(*load_group("cyclic:8")).size() == 4);
}

TEST_CASE("every enumerated star map satisfies the derived law") {
  // involution, antiautomorphism, and g*g = gg* central
  for (const char* d : {"cyclic:8", "dihedral:4", "quaternion:8", "modular:16"}) {
    GroupPtr g = load_group(d);
    for (const StarMap& s : enumerate_star_maps(g)) {
      for (Elem a = 0; a < g->order; ++a) {
        CHECK(s(s(a)) == a);
        Elem left = g->mul(s(a), a), right = g->mul(a, s(a));
        CHECK(left == right);
        CHECK(is_central(*g, right));
      }
    }
  }
}

TEST_CASE("g0 candidates") {
  GroupPtr s3 = load_group("symmetric:3");
  auto c1 = g0_candidates(s3, inversion_star(s3));
  REQUIRE(c1.size() == 1);
  CHECK(c1[0].index == 0);

  GroupPtr d4 = load_group("dihedral:4");
  auto c2 = g0_candidates(d4, inversion_star(d4));
  REQUIRE(c2.size() == 2);
  CHECK(c2[0].index == 0);
  CHECK(c2[1].index == 2);

  // powers of a candidate are candidates
  GroupPtr c8 = load_group("cyclic:8");
  StarMap inv = inversion_star(c8);
  auto cand = g0_candidates(c8, inv);
  for (const CentralElement& c : cand)
    for (int n = 0; n < 8; ++n) {
      Elem p = c8->power(c.index, n);
      bool found = false;
      for (const CentralElement& d : cand) found |= d.index == p;
      CHECK(found);
    }
}

TEST_CASE("structural predicates") {
  GroupPtr c8 = load_group("cyclic:8");
  CHECK(predicate_pc(*c8));
  CHECK(predicate_pb(*c8));
  CHECK(!predicate_ps(*c8, inversion_star(c8)));

  GroupPtr d4 = load_group("dihedral:4");
  CHECK(!predicate_pc(*d4));
  CHECK(predicate_pb(*d4));
  CHECK(predicate_ps(*d4, inversion_star(d4)));

  GroupPtr s3 = load_group("symmetric:3");
  CHECK(!predicate_pc(*s3));
  CHECK(!predicate_pb(*s3));
  CHECK(!predicate_ps(*s3, inversion_star(s3)));
}

TEST_CASE("commutative groups always have central squares") {
  for (const char* d : {"cyclic:1", "cyclic:2", "cyclic:3", "cyclic:4", "cyclic:8",
                        "cyclic:16", "cyclic:2xcyclic:2", "cyclic:2xcyclic:4",
                        "dihedral:3", "dihedral:4", "quaternion:8", "modular:16"}) {
    GroupPtr g = load_group(d);
    if (predicate_pc(*g)) CHECK(predicate_pb(*g));
  }
}
