#include "loopq/words.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "loopq/fail.hpp"

namespace loopq {

GroupWord star_word(const GroupWord& w) {
  GroupWord out;
  out.g0_exp = w.g0_exp;
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.letters.push_back({it->var, !it->starred});
  return out;
}

GroupWord concat(const GroupWord& a, const GroupWord& b) {
  GroupWord out = a;
  out.g0_exp += b.g0_exp;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

namespace {

// Rewrite v*v -> vv*, extract adjacent vv* pairs into a central multiset,
// iterate to a fixpoint, then re-emit the pairs sorted right after g0^k.
GroupWord normalize_word(GroupWord w) {
  std::vector<int> pairs;
  auto& ls = w.letters;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < ls.size(); ++i) {
      if (ls[i].var == ls[i + 1].var && ls[i].starred && !ls[i + 1].starred) {
        ls[i].starred = false;
        ls[i + 1].starred = true;
        changed = true;
      }
    }
    for (size_t i = 0; i + 1 < ls.size(); ++i) {
      if (ls[i].var == ls[i + 1].var && !ls[i].starred && ls[i + 1].starred) {
        pairs.push_back(ls[i].var);
        ls.erase(ls.begin() + static_cast<long>(i), ls.begin() + static_cast<long>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  std::sort(pairs.begin(), pairs.end());
  std::vector<Letter> out;
  out.reserve(2 * pairs.size() + ls.size());
  for (int v : pairs) {
    out.push_back({v, false});
    out.push_back({v, true});
  }
  out.insert(out.end(), ls.begin(), ls.end());
  w.letters = std::move(out);
  return w;
}

void cancel_ends(GroupWord& a, GroupWord& b) {
  int m = std::min(a.g0_exp, b.g0_exp);
  a.g0_exp -= m;
  b.g0_exp -= m;
  size_t pre = 0;
  while (pre < a.letters.size() && pre < b.letters.size() &&
         a.letters[pre] == b.letters[pre])
    ++pre;
  size_t la = a.letters.size() - pre, lb = b.letters.size() - pre;
  size_t suf = 0;
  while (suf < la && suf < lb &&
         a.letters[a.letters.size() - 1 - suf] == b.letters[b.letters.size() - 1 - suf])
    ++suf;
  a.letters.erase(a.letters.end() - static_cast<long>(suf), a.letters.end());
  b.letters.erase(b.letters.end() - static_cast<long>(suf), b.letters.end());
  a.letters.erase(a.letters.begin(), a.letters.begin() + static_cast<long>(pre));
  b.letters.erase(b.letters.begin(), b.letters.begin() + static_cast<long>(pre));
}

}  // namespace

GroupIdentity canonicalize(const GroupIdentity& id) {
  GroupIdentity cur = id;
  for (;;) {
    GroupIdentity before = cur;
    cur.lhs = normalize_word(std::move(cur.lhs));
    cur.rhs = normalize_word(std::move(cur.rhs));
    cancel_ends(cur.lhs, cur.rhs);
    if (cur == before) break;
  }
  if (cur.rhs < cur.lhs) std::swap(cur.lhs, cur.rhs);
  return cur;
}

GroupIdentity substitute_unit(const GroupIdentity& id, const std::set<int>& vars) {
  auto strip = [&](const GroupWord& w) {
    GroupWord out;
    out.g0_exp = w.g0_exp;
    for (const Letter& l : w.letters)
      if (!vars.count(l.var)) out.letters.push_back(l);
    return out;
  };
  return canonicalize({strip(id.lhs), strip(id.rhs)});
}

GroupIdentity star_rename(const GroupIdentity& id) {
  std::set<int> seen, plain;
  auto scan = [&](const GroupWord& w) {
    for (const Letter& l : w.letters) {
      seen.insert(l.var);
      if (!l.starred) plain.insert(l.var);
    }
  };
  scan(id.lhs);
  scan(id.rhs);
  GroupIdentity out = id;
  auto flip = [&](GroupWord& w) {
    for (Letter& l : w.letters)
      if (seen.count(l.var) && !plain.count(l.var)) l.starred = !l.starred;
  };
  flip(out.lhs);
  flip(out.rhs);
  return canonicalize(out);
}

std::vector<int> identity_vars(const GroupIdentity& id) {
  std::set<int> vs;
  for (const Letter& l : id.lhs.letters) vs.insert(l.var);
  for (const Letter& l : id.rhs.letters) vs.insert(l.var);
  return {vs.begin(), vs.end()};
}

std::string format_word(const GroupWord& w) {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << ' ';
    first = false;
  };
  if (w.g0_exp == 1) {
    sep();
    os << "g0";
  } else if (w.g0_exp != 0) {
    sep();
    os << "g0^" << w.g0_exp;
  }
  for (const Letter& l : w.letters) {
    sep();
    os << static_cast<char>('a' + l.var);
    if (l.starred) os << '*';
  }
  if (first) os << "1";
  return os.str();
}

std::string format_identity(const GroupIdentity& id) {
  return format_word(id.lhs) + " = " + format_word(id.rhs);
}

GroupWord parse_word(std::string_view src) {
  GroupWord w;
  size_t i = 0;
  auto skip = [&] {
    while (i < src.size() && std::isspace(static_cast<unsigned char>(src[i]))) ++i;
  };
  skip();
  while (i < src.size()) {
    if (src.compare(i, 2, "g0") == 0) {
      i += 2;
      int exp = 1;
      if (i < src.size() && src[i] == '^') {
        ++i;
        size_t j = i;
        if (j < src.size() && (src[j] == '-' || src[j] == '+')) ++j;
        while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
        if (j == i) fail("word: missing exponent after g0^");
        exp = std::stoi(std::string(src.substr(i, j - i)));
        i = j;
      }
      w.g0_exp += exp;
    } else if (src[i] == '1') {
      ++i;  // neutral element, contributes nothing
    } else if (std::isalpha(static_cast<unsigned char>(src[i]))) {
      Letter l{src[i] - 'a', false};
      ++i;
      if (i < src.size() && src[i] == '*') {
        l.starred = true;
        ++i;
      }
      w.letters.push_back(l);
    } else {
      fail("word: unexpected character '" + std::string(1, src[i]) + "' in \"" +
           std::string(src) + "\"");
    }
    skip();
  }
  return w;
}

GroupIdentity parse_word_identity(std::string_view src) {
  size_t eq = src.find('=');
  if (eq == std::string_view::npos) fail("word identity: missing '=' in \"" + std::string(src) + "\"");
  return {parse_word(src.substr(0, eq)), parse_word(src.substr(eq + 1))};
}

bool IdentitySet::all_trivial() const {
  return std::all_of(identities.begin(), identities.end(),
                     [](const GroupIdentity& id) { return id.trivial(); });
}

}  // namespace loopq
