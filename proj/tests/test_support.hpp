#pragma once

// Shared test helpers: deterministic random words/identities and small
// independent oracles kept apart from the library implementation.

#include <random>
#include <vector>

#include "loopq/group.hpp"
#include "loopq/words.hpp"

namespace loopq::test {

inline GroupWord random_word(std::mt19937& rng, int max_len = 6, int max_var = 3,
                             int max_g0 = 2) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> var(0, max_var - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> g0(-max_g0, max_g0);
  GroupWord w;
  w.g0_exp = g0(rng);
  int n = len(rng);
  for (int i = 0; i < n; ++i) w.letters.push_back({23 + var(rng), coin(rng) == 1});
  return w;
}

inline GroupIdentity random_identity(std::mt19937& rng) {
  return {random_word(rng), random_word(rng)};
}

// Brute-force truth of a word identity, independent of the classifier.
inline bool oracle_identity_holds(const GroupIdentity& id, const FiniteGroup& g,
                                  const StarMap& star, Elem g0) {
  std::vector<int> vars = identity_vars(id);
  std::vector<Elem> val(vars.size(), 0);
  auto eval = [&](const GroupWord& w) {
    Elem acc = g.power(g0, w.g0_exp);
    for (const Letter& l : w.letters) {
      Elem v = 0;
      for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == l.var) v = val[i];
      acc = g.mul(acc, l.starred ? star(v) : v);
    }
    return acc;
  };
  for (;;) {
    if (eval(id.lhs) != eval(id.rhs)) return false;
    size_t i = 0;
    while (i < vars.size() && ++val[i] == g.order) val[i++] = 0;
    if (i == vars.size()) return true;
  }
}

inline std::vector<Elem> naive_center(const FiniteGroup& g) {
  std::vector<Elem> z;
  for (Elem a = 0; a < g.order; ++a) {
    bool central = true;
    for (Elem b = 0; b < g.order && central; ++b) central = g.mul(a, b) == g.mul(b, a);
    if (central) z.push_back(a);
  }
  return z;
}

}  // namespace loopq::test
