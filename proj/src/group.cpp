#include "loopq/group.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "loopq/fail.hpp"

namespace loopq {

Elem FiniteGroup::power(Elem g, int n) const {
  int o = elem_order(g);
  int k = ((n % o) + o) % o;
  Elem r = 0;
  for (int i = 0; i < k; ++i) r = mul(r, g);
  return r;
}

int FiniteGroup::elem_order(Elem g) const {
  Elem r = g;
  int n = 1;
  while (r != 0) {
    r = mul(r, g);
    ++n;
  }
  return n;
}

namespace {

void validate_table(const FiniteGroup& g) {
  const int n = g.order;
  for (Elem a = 0; a < n; ++a) {
    if (g.mul(0, a) != a || g.mul(a, 0) != a)
      fail("group " + g.name + ": element 0 is not a neutral element (g=" +
           std::to_string(a) + ")");
  }
  std::vector<char> seen(static_cast<size_t>(n));
  for (Elem a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem b = 0; b < n; ++b) {
      Elem p = g.mul(a, b);
      if (p < 0 || p >= n || seen[static_cast<size_t>(p)])
        fail("group " + g.name + ": row " + std::to_string(a) + " is not a permutation");
      seen[static_cast<size_t>(p)] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem b = 0; b < n; ++b) {
      Elem p = g.mul(b, a);
      if (seen[static_cast<size_t>(p)])
        fail("group " + g.name + ": column " + std::to_string(a) + " is not a permutation");
      seen[static_cast<size_t>(p)] = 1;
    }
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          fail("group " + g.name + ": not associative at triple (" + std::to_string(a) +
               "," + std::to_string(b) + "," + std::to_string(c) + ")");
}

std::vector<Elem> derive_inverses(const FiniteGroup& g) {
  std::vector<Elem> inv(static_cast<size_t>(g.order), -1);
  for (Elem a = 0; a < g.order; ++a) {
    for (Elem b = 0; b < g.order; ++b) {
      if (g.mul(a, b) == 0 && g.mul(b, a) == 0) {
        inv[static_cast<size_t>(a)] = b;
        break;
      }
    }
    if (inv[static_cast<size_t>(a)] < 0)
      fail("group " + g.name + ": element " + std::to_string(a) + " has no two-sided inverse");
  }
  return inv;
}

}  // namespace

GroupPtr group_from_table(int n, std::vector<Elem> table, std::string name) {
  if (n <= 0 || table.size() != static_cast<size_t>(n) * static_cast<size_t>(n))
    fail("group " + name + ": table size does not match order");
  for (Elem v : table)
    if (v < 0 || v >= n) fail("group " + name + ": entry out of range");

  // Locate the two-sided neutral element and re-index it to 0 if necessary.
  Elem e = -1;
  for (Elem cand = 0; cand < n; ++cand) {
    bool ok = true;
    for (Elem a = 0; a < n && ok; ++a)
      ok = table[static_cast<size_t>(cand) * n + a] == a &&
           table[static_cast<size_t>(a) * n + cand] == a;
    if (ok) {
      e = cand;
      break;
    }
  }
  if (e < 0) fail("group " + name + ": no neutral element");
  if (e != 0) {
    std::vector<Elem> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[0], perm[static_cast<size_t>(e)]);  // perm is its own inverse
    std::vector<Elem> t2(table.size());
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        t2[static_cast<size_t>(a) * n + b] =
            perm[static_cast<size_t>(table[static_cast<size_t>(perm[static_cast<size_t>(a)]) * n +
                                           perm[static_cast<size_t>(b)]])];
    table = std::move(t2);
  }

  auto g = std::make_shared<FiniteGroup>();
  g->order = n;
  g->table = std::move(table);
  g->name = std::move(name);
  validate_table(*g);
  g->inv = derive_inverses(*g);
  return g;
}

namespace {

GroupPtr make_cyclic(int n) {
  std::vector<Elem> t(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<size_t>(a) * n + b] = (a + b) % n;
  return group_from_table(n, std::move(t), "cyclic:" + std::to_string(n));
}

// Elements 0..n-1 are rotations r^i, n..2n-1 are reflections s r^i.
GroupPtr make_dihedral(int n) {
  int m = 2 * n;
  std::vector<Elem> t(static_cast<size_t>(m) * m);
  auto idx = [&](int a, int b) -> Elem& { return t[static_cast<size_t>(a) * m + b]; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      idx(i, j) = (i + j) % n;                    // r^i r^j
      idx(i, n + j) = n + ((j - i + n) % n);      // r^i (s r^j) = s r^(j-i)
      idx(n + i, j) = n + ((i + j) % n);          // (s r^i) r^j
      idx(n + i, n + j) = (j - i + n) % n;        // (s r^i)(s r^j) = r^(j-i)
    }
  return group_from_table(m, std::move(t), "dihedral:" + std::to_string(n));
}

// a of order 4, b with b^2 = a^2 and b a b^-1 = a^-1; elements a^i, b a^i.
GroupPtr make_quaternion() {
  int m = 8;
  std::vector<Elem> t(64);
  auto idx = [&](int a, int b) -> Elem& { return t[static_cast<size_t>(a) * m + b]; };
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      idx(i, j) = (i + j) % 4;
      idx(i, 4 + j) = 4 + ((j - i + 4) % 4);      // a^i (b a^j) = b a^(j-i)
      idx(4 + i, j) = 4 + ((i + j) % 4);
      idx(4 + i, 4 + j) = (2 + j - i + 4) % 4;    // (b a^i)(b a^j) = a^(2+j-i)
    }
  return group_from_table(m, std::move(t), "quaternion:8");
}

// a of order 8, b of order 2, b a b = a^5; elements a^i, b a^i.
GroupPtr make_modular16() {
  int m = 16;
  std::vector<Elem> t(256);
  auto idx = [&](int a, int b) -> Elem& { return t[static_cast<size_t>(a) * m + b]; };
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      idx(i, j) = (i + j) % 8;
      idx(i, 8 + j) = 8 + ((5 * i + j) % 8);      // a^i b = b a^(5i)
      idx(8 + i, j) = 8 + ((i + j) % 8);
      idx(8 + i, 8 + j) = (5 * i + j) % 8;
    }
  return group_from_table(m, std::move(t), "modular:16");
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
  int n = a->order * b->order;
  std::vector<Elem> t(static_cast<size_t>(n) * n);
  auto enc = [&](Elem x, Elem y) { return x * b->order + y; };
  for (Elem x1 = 0; x1 < a->order; ++x1)
    for (Elem y1 = 0; y1 < b->order; ++y1)
      for (Elem x2 = 0; x2 < a->order; ++x2)
        for (Elem y2 = 0; y2 < b->order; ++y2)
          t[static_cast<size_t>(enc(x1, y1)) * n + enc(x2, y2)] =
              enc(a->mul(x1, x2), b->mul(y1, y2));
  return group_from_table(n, std::move(t), a->name + "x" + b->name);
}

GroupPtr load_named(const std::string& name, int param) {
  if (name == "cyclic") {
    if (param < 1) fail("cyclic:n needs n >= 1");
    return make_cyclic(param);
  }
  if (name == "dihedral") {
    if (param < 1) fail("dihedral:n needs n >= 1");
    return make_dihedral(param);
  }
  if (name == "quaternion") {
    if (param != 8) fail("only quaternion:8 is available");
    return make_quaternion();
  }
  if (name == "modular") {
    if (param != 16) fail("only modular:16 is available");
    return make_modular16();
  }
  if (name == "symmetric") {
    if (param != 3) fail("only symmetric:3 is available");
    auto g = make_dihedral(3);
    auto copy = std::make_shared<FiniteGroup>(*g);
    copy->name = "symmetric:3";
    return copy;
  }
  fail("unknown group family \"" + name + "\"");
}

bool looks_like_descriptor(const std::string& s) {
  return s.find(':') != std::string::npos &&
         s.find('/') == std::string::npos && s.find('\\') == std::string::npos &&
         s.find('.') == std::string::npos;
}

}  // namespace

GroupPtr load_group(const std::string& descriptor) {
  if (!looks_like_descriptor(descriptor)) return read_cayley_file(descriptor);
  GroupPtr acc;
  size_t pos = 0;
  while (pos < descriptor.size()) {
    size_t colon = descriptor.find(':', pos);
    if (colon == std::string::npos) fail("bad group descriptor \"" + descriptor + "\"");
    std::string name = descriptor.substr(pos, colon - pos);
    size_t end = colon + 1;
    while (end < descriptor.size() && std::isdigit(static_cast<unsigned char>(descriptor[end])))
      ++end;
    if (end == colon + 1) fail("bad group descriptor \"" + descriptor + "\"");
    int param = std::stoi(descriptor.substr(colon + 1, end - colon - 1));
    GroupPtr g = load_named(name, param);
    acc = acc ? direct_product(acc, g) : g;
    if (end == descriptor.size()) break;
    if (descriptor[end] != 'x') fail("bad group descriptor \"" + descriptor + "\"");
    pos = end + 1;
  }
  if (!acc) fail("empty group descriptor");
  return acc;
}

GroupPtr read_cayley_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open Cayley file \"" + path + "\"");
  std::vector<Elem> values;
  std::string line;
  while (std::getline(in, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    Elem v;
    while (ls >> v) values.push_back(v);
  }
  if (values.empty()) fail("Cayley file \"" + path + "\": empty");
  int n = values[0];
  if (n <= 0 || values.size() != 1 + static_cast<size_t>(n) * static_cast<size_t>(n))
    fail("Cayley file \"" + path + "\": expected " + std::to_string(n) + "^2 entries");
  return group_from_table(n, {values.begin() + 1, values.end()}, path);
}

std::vector<Elem> center(const FiniteGroup& g) {
  std::vector<Elem> z;
  for (Elem a = 0; a < g.order; ++a)
    if (is_central(g, a)) z.push_back(a);
  return z;
}

bool is_central(const FiniteGroup& g, Elem z) {
  for (Elem a = 0; a < g.order; ++a)
    if (g.mul(z, a) != g.mul(a, z)) return false;
  return true;
}

StarMap make_star(GroupPtr g, std::vector<Elem> map) {
  if (map.size() != static_cast<size_t>(g->order)) fail("star map: wrong size");
  StarMap s;
  s.group = std::move(g);
  s.map = std::move(map);
  const FiniteGroup& G = *s.group;
  for (Elem a = 0; a < G.order; ++a) {
    if (s.map[static_cast<size_t>(s.map[static_cast<size_t>(a)])] != a)
      fail("star map on " + G.name + ": not involutory at g=" + std::to_string(a));
  }
  for (Elem a = 0; a < G.order; ++a)
    for (Elem b = 0; b < G.order; ++b)
      if (s.map[static_cast<size_t>(G.mul(a, b))] !=
          G.mul(s.map[static_cast<size_t>(b)], s.map[static_cast<size_t>(a)]))
        fail("star map on " + G.name + ": (gh)* != h*g* at (" + std::to_string(a) + "," +
             std::to_string(b) + ")");
  for (Elem a = 0; a < G.order; ++a)
    if (!is_central(G, G.mul(a, s.map[static_cast<size_t>(a)])))
      fail("star map on " + G.name + ": g g* not central at g=" + std::to_string(a));
  s.nonidentical = false;
  for (Elem a = 0; a < G.order; ++a)
    if (s.map[static_cast<size_t>(a)] != a) s.nonidentical = true;
  return s;
}

StarMap inversion_star(const GroupPtr& g) { return make_star(g, g->inv); }

StarMap identity_star(const GroupPtr& g) {
  std::vector<Elem> id(static_cast<size_t>(g->order));
  std::iota(id.begin(), id.end(), 0);
  return make_star(g, std::move(id));
}

namespace {

bool admissible_star(const FiniteGroup& g, const std::vector<Elem>& m) {
  for (Elem a = 0; a < g.order; ++a)
    if (m[static_cast<size_t>(m[static_cast<size_t>(a)])] != a) return false;
  for (Elem a = 0; a < g.order; ++a)
    for (Elem b = 0; b < g.order; ++b)
      if (m[static_cast<size_t>(g.mul(a, b))] !=
          g.mul(m[static_cast<size_t>(b)], m[static_cast<size_t>(a)]))
        return false;
  for (Elem a = 0; a < g.order; ++a)
    if (!is_central(g, g.mul(a, m[static_cast<size_t>(a)]))) return false;
  return true;
}

std::vector<Elem> minimal_generators(const FiniteGroup& g) {
  std::vector<Elem> gens;
  std::set<Elem> span{0};
  auto close = [&](std::set<Elem> s) {
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<Elem> cur(s.begin(), s.end());
      for (Elem a : cur)
        for (Elem b : cur)
          if (s.insert(g.mul(a, b)).second) grew = true;
    }
    return s;
  };
  while (static_cast<int>(span.size()) < g.order) {
    Elem next = 0;
    while (span.count(next)) ++next;
    gens.push_back(next);
    auto s = span;
    s.insert(next);
    span = close(std::move(s));
  }
  return gens;
}

// Extend partial generator images to full homomorphisms by product closure.
void extend_automorphisms(const FiniteGroup& g, const std::vector<Elem>& gens, size_t k,
                          std::vector<Elem>& phi, std::vector<std::vector<Elem>>& out) {
  const int n = g.order;
  if (k == gens.size()) {
    std::vector<char> hit(static_cast<size_t>(n), 0);
    for (Elem a = 0; a < n; ++a) {
      if (phi[static_cast<size_t>(a)] < 0) return;  // not total: gens did not close
      hit[static_cast<size_t>(phi[static_cast<size_t>(a)])] = 1;
    }
    for (char h : hit)
      if (!h) return;
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        if (phi[static_cast<size_t>(g.mul(a, b))] !=
            g.mul(phi[static_cast<size_t>(a)], phi[static_cast<size_t>(b)]))
          return;
    out.push_back(phi);
    return;
  }
  Elem gen = gens[k];
  int ord = g.elem_order(gen);
  for (Elem img = 0; img < n; ++img) {
    if (g.elem_order(img) != ord) continue;
    std::vector<Elem> next = phi;
    next[static_cast<size_t>(gen)] = img;
    // close under products of already-defined values
    bool ok = true, grew = true;
    while (grew && ok) {
      grew = false;
      for (Elem a = 0; a < n && ok; ++a) {
        if (next[static_cast<size_t>(a)] < 0) continue;
        for (Elem b = 0; b < n; ++b) {
          if (next[static_cast<size_t>(b)] < 0) continue;
          Elem ab = g.mul(a, b);
          Elem im = g.mul(next[static_cast<size_t>(a)], next[static_cast<size_t>(b)]);
          if (next[static_cast<size_t>(ab)] < 0) {
            next[static_cast<size_t>(ab)] = im;
            grew = true;
          } else if (next[static_cast<size_t>(ab)] != im) {
            ok = false;
            break;
          }
        }
      }
    }
    if (ok) extend_automorphisms(g, gens, k + 1, next, out);
  }
}

}  // namespace

std::vector<std::vector<Elem>> enumerate_automorphisms(const FiniteGroup& g) {
  std::vector<Elem> gens = minimal_generators(g);
  std::vector<Elem> phi(static_cast<size_t>(g.order), -1);
  phi[0] = 0;
  std::vector<std::vector<Elem>> out;
  extend_automorphisms(g, gens, 0, phi, out);
  return out;
}

std::vector<StarMap> enumerate_star_maps(const GroupPtr& g) {
  std::vector<std::vector<Elem>> candidates;
  const FiniteGroup& G = *g;
  if (G.order <= 8) {
    std::vector<Elem> perm(static_cast<size_t>(G.order));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      if (admissible_star(G, perm)) candidates.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
  } else {
    // Every antiautomorphism is an automorphism composed with inversion.
    for (const auto& phi : enumerate_automorphisms(G)) {
      std::vector<Elem> m(static_cast<size_t>(G.order));
      for (Elem a = 0; a < G.order; ++a)
        m[static_cast<size_t>(a)] = phi[static_cast<size_t>(G.inv[static_cast<size_t>(a)])];
      if (admissible_star(G, m)) candidates.push_back(std::move(m));
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  }
  std::sort(candidates.begin(), candidates.end());
  std::vector<StarMap> out;
  out.reserve(candidates.size());
  for (auto& m : candidates) out.push_back(make_star(g, std::move(m)));
  return out;
}

std::vector<CentralElement> g0_candidates(const GroupPtr& g, const StarMap& star) {
  std::vector<CentralElement> out;
  for (Elem z : center(*g))
    if (star(z) == z) out.push_back({g, z});
  return out;
}

bool predicate_pc(const FiniteGroup& g) {
  for (Elem a = 0; a < g.order; ++a)
    for (Elem b = 0; b < g.order; ++b)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

bool predicate_pb(const FiniteGroup& g) {
  for (Elem a = 0; a < g.order; ++a)
    if (!is_central(g, g.mul(a, a))) return false;
  return true;
}

bool predicate_ps(const FiniteGroup& g, const StarMap& star) {
  for (Elem a = 0; a < g.order; ++a) {
    Elem sq = g.mul(a, a);
    if (star(sq) != sq) return false;
  }
  return true;
}

}  // namespace loopq
