#include "loopq/classify.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "loopq/fail.hpp"

namespace loopq {

ConditionExpr ConditionExpr::make_raw(GroupIdentity id) {
  ConditionExpr c;
  c.raws.push_back(std::move(id));
  return c;
}

ConditionExpr ConditionExpr::make_atoms(bool pc, bool pb, bool ps) {
  ConditionExpr c;
  c.pc = pc;
  c.pb = pb;
  c.ps = ps;
  c.normalize();
  return c;
}

void ConditionExpr::normalize() {
  if (never) {
    pc = pb = ps = false;
    raws.clear();
    return;
  }
  if (pc) pb = false;  // commutativity already puts all squares in the center
  std::sort(raws.begin(), raws.end());
  raws.erase(std::unique(raws.begin(), raws.end()), raws.end());
}

ConditionExpr ConditionExpr::conjoin(const ConditionExpr& other) const {
  ConditionExpr c = *this;
  c.never = c.never || other.never;
  c.pc = c.pc || other.pc;
  c.pb = c.pb || other.pb;
  c.ps = c.ps || other.ps;
  c.raws.insert(c.raws.end(), other.raws.begin(), other.raws.end());
  c.normalize();
  return c;
}

std::string ConditionExpr::display() const {
  if (never) return "never";
  if (always()) return "always";
  std::string s;
  auto add = [&](const std::string& part) {
    if (!s.empty()) s += "&";
    s += part;
  };
  if (pc) add("PC");
  if (pb) add("PB");
  if (ps) add("PS");
  for (const GroupIdentity& id : raws) add("raw: " + format_identity(id));
  return s;
}

ConditionExpr parse_condition(std::string_view text) {
  auto trim = [](std::string_view v) {
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
    return v;
  };
  std::string_view t = trim(text);
  if (t == "never") return ConditionExpr::make_false();
  if (t == "always") return ConditionExpr::make_true();
  ConditionExpr c;
  size_t pos = 0;
  while (pos <= t.size()) {
    size_t amp = t.find('&', pos);
    std::string_view part = trim(t.substr(pos, amp - pos));
    if (part == "PC")
      c.pc = true;
    else if (part == "PB")
      c.pb = true;
    else if (part == "PS")
      c.ps = true;
    else if (part.substr(0, 4) == "raw:")
      c.raws.push_back(canonicalize(parse_word_identity(part.substr(4))));
    else
      fail("condition: unknown term \"" + std::string(part) + "\"");
    if (amp == std::string_view::npos) break;
    pos = amp + 1;
  }
  c.normalize();
  return c;
}

WitnessMember make_witness(std::string label, const std::string& descriptor, Elem g0) {
  WitnessMember m;
  m.label = std::move(label);
  m.group = load_group(descriptor);
  m.star = inversion_star(m.group);
  m.g0 = g0;
  if (!is_central(*m.group, g0) || m.star(g0) != g0)
    fail("witness " + m.label + ": inadmissible g0");
  m.sig_pc = predicate_pc(*m.group);
  m.sig_pb = predicate_pb(*m.group);
  m.sig_ps = predicate_ps(*m.group, m.star);
  return m;
}

const WitnessBattery& WitnessBattery::standard() {
  static const WitnessBattery battery = [] {
    WitnessBattery b;
    b.members.push_back(make_witness("c4", "cyclic:4", 2));
    b.members.push_back(make_witness("c8", "cyclic:8", 4));
    b.members.push_back(make_witness("d4", "dihedral:4", 2));
    b.members.push_back(make_witness("q8", "quaternion:8", 2));
    b.members.push_back(make_witness("m16", "modular:16", 4));
    b.members.push_back(make_witness("s3", "symmetric:3", 0));
    std::set<std::string> sigs;
    for (const WitnessMember& m : b.members) {
      if (!m.star.nonidentical) fail("witness battery: identical star at " + m.label);
      sigs.insert(std::string() + (m.sig_pc ? 'C' : 'c') + (m.sig_pb ? 'B' : 'b') +
                  (m.sig_ps ? 'S' : 's'));
    }
    for (const char* need : {"CBS", "CBs", "cBS", "cBs", "cbs"})
      if (!sigs.count(need)) fail(std::string("witness battery: missing signature ") + need);
    return b;
  }();
  return battery;
}

namespace {

Elem eval_word(const GroupWord& w, const FiniteGroup& g, const StarMap& star, Elem g0,
               const std::vector<Elem>& val, const std::vector<int>& vars) {
  Elem acc = g.power(g0, w.g0_exp);
  for (const Letter& l : w.letters) {
    Elem v = -1;
    for (size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == l.var) v = val[i];
    if (v < 0) fail("eval_word: unbound variable");
    acc = g.mul(acc, l.starred ? star(v) : v);
  }
  return acc;
}

}  // namespace

bool identity_holds_in(const GroupIdentity& id, const FiniteGroup& g, const StarMap& star,
                       Elem g0) {
  std::vector<int> vars = identity_vars(id);
  std::vector<Elem> val(vars.size(), 0);
  for (;;) {
    if (eval_word(id.lhs, g, star, g0, val, vars) !=
        eval_word(id.rhs, g, star, g0, val, vars))
      return false;
    size_t i = 0;
    while (i < vars.size() && ++val[i] == g.order) val[i++] = 0;
    if (i == vars.size()) return true;
  }
}

bool condition_holds(const ConditionExpr& c, const FiniteGroup& g, const StarMap& star,
                     Elem g0) {
  // The condition vocabulary is calibrated to stars that move something;
  // with the identity star even "never" identities like x = x* would hold.
  if (!star.nonidentical) fail("condition_holds: needs a nonidentical star map");
  if (c.never) return false;
  if (c.pc && !predicate_pc(g)) return false;
  if (c.pb && !predicate_pb(g)) return false;
  if (c.ps && !predicate_ps(g, star)) return false;
  for (const GroupIdentity& id : c.raws)
    if (!identity_holds_in(id, g, star, g0)) return false;
  return true;
}

bool condition_holds(const ConditionExpr& c, const WitnessMember& m) {
  if (c.never) return false;
  if (c.pc && !m.sig_pc) return false;
  if (c.pb && !m.sig_pb) return false;
  if (c.ps && !m.sig_ps) return false;
  for (const GroupIdentity& id : c.raws)
    if (!identity_holds_in(id, *m.group, m.star, m.g0)) return false;
  return true;
}

std::map<std::string, bool> signature_probe(const GroupIdentity& id,
                                            const WitnessBattery& battery) {
  std::map<std::string, bool> out;
  for (const WitnessMember& m : battery.members)
    out[m.label] = identity_holds_in(id, *m.group, m.star, m.g0);
  return out;
}

namespace {

// --- pattern matching, modulo variable renaming and side swap -------------

// Rename variables by first occurrence so that structurally equal identities
// compare equal.
GroupIdentity rename_canonical(const GroupWord& a, const GroupWord& b) {
  std::map<int, int> ren;
  auto rn = [&](const GroupWord& w) {
    GroupWord out;
    out.g0_exp = w.g0_exp;
    for (const Letter& l : w.letters) {
      auto [it, fresh] = ren.emplace(l.var, static_cast<int>(ren.size()));
      (void)fresh;
      out.letters.push_back({it->second, l.starred});
    }
    return out;
  };
  GroupWord l = rn(a);
  GroupWord r = rn(b);
  return {std::move(l), std::move(r)};
}

bool matches(const GroupIdentity& id, const GroupIdentity& pattern) {
  GroupIdentity p1 = rename_canonical(pattern.lhs, pattern.rhs);
  GroupIdentity p2 = rename_canonical(pattern.rhs, pattern.lhs);
  GroupIdentity c1 = rename_canonical(id.lhs, id.rhs);
  GroupIdentity c2 = rename_canonical(id.rhs, id.lhs);
  return c1 == p1 || c1 == p2 || c2 == p1 || c2 == p2;
}

struct BasePattern {
  GroupIdentity id;
  ConditionExpr cond;
};

const std::vector<BasePattern>& base_patterns() {
  static const std::vector<BasePattern> pats = [] {
    std::vector<BasePattern> v;
    auto add = [&](const char* src, ConditionExpr c) {
      v.push_back({canonicalize(parse_word_identity(src)), std::move(c)});
    };
    add("x = x*", ConditionExpr::make_false());
    add("x y = y x", ConditionExpr::make_atoms(true, false, false));
    add("x x* y = x* y x", ConditionExpr::make_atoms(true, false, false));
    add("x x y = y x x", ConditionExpr::make_atoms(false, true, false));
    add("x y x* = x* y x", ConditionExpr::make_atoms(false, true, false));
    add("x x = x* x*", ConditionExpr::make_atoms(false, false, true));
    add("x x y = y x* x*", ConditionExpr::make_atoms(false, true, true));
    return v;
  }();
  return pats;
}

// --- sufficiency: condition-sound rewriting reachability -------------------

// Letter-sequence rewrites, each valid in every admissible (G, *) under the
// given atoms:
//  always: v*v <-> vv*, adjacent vv* pair is central (moves anywhere)
//  PB:     adjacent vv (same star) is central; v..v* may trade stars across
//          any middle segment
//  PC:     adjacent letters commute
//  PS:     adjacent vv <-> v*v*
//  PB&PS:  v..v with equal stars may flip both across any middle segment
//          (g* M g* g = g* M (g*g) = (gg*) g* M = g (gg) M = g M g g,
//          then cancel g on the right)
bool reachable_under(const ConditionExpr& cond, const std::vector<Letter>& from,
                     const std::vector<Letter>& to) {
  if (from.size() != to.size()) return false;
  const bool pc = cond.pc, pb = cond.pb || cond.pc, ps = cond.ps;
  std::set<std::vector<Letter>> seen{from};
  std::deque<std::vector<Letter>> queue{from};
  constexpr size_t kStateCap = 200000;
  auto push = [&](std::vector<Letter> w) {
    if (seen.size() < kStateCap && seen.insert(w).second) queue.push_back(std::move(w));
  };
  while (!queue.empty()) {
    std::vector<Letter> w = std::move(queue.front());
    queue.pop_front();
    if (w == to) return true;
    const size_t n = w.size();
    auto move_pair = [&](size_t i) {
      std::vector<Letter> rest;
      rest.reserve(n);
      for (size_t k = 0; k < n; ++k)
        if (k != i && k != i + 1) rest.push_back(w[k]);
      for (size_t j = 0; j + 2 <= n; ++j) {
        std::vector<Letter> nw(rest.begin(), rest.begin() + static_cast<long>(j));
        nw.push_back(w[i]);
        nw.push_back(w[i + 1]);
        nw.insert(nw.end(), rest.begin() + static_cast<long>(j), rest.end());
        push(std::move(nw));
      }
    };
    for (size_t i = 0; i + 1 < n; ++i) {
      const Letter &a = w[i], &b = w[i + 1];
      if (a.var == b.var && a.starred != b.starred) {
        auto nw = w;
        std::swap(nw[i], nw[i + 1]);
        push(std::move(nw));
        move_pair(i);
      }
      if (a.var == b.var && a.starred == b.starred) {
        if (pb) move_pair(i);
        if (ps) {
          auto nw = w;
          nw[i].starred = !nw[i].starred;
          nw[i + 1].starred = !nw[i + 1].starred;
          push(std::move(nw));
        }
      }
      if (pc) {
        auto nw = w;
        std::swap(nw[i], nw[i + 1]);
        push(std::move(nw));
      }
    }
    if (pb) {
      for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
          if (w[i].var == w[j].var &&
              (w[i].starred != w[j].starred || ps)) {
            auto nw = w;
            nw[i].starred = !nw[i].starred;
            nw[j].starred = !nw[j].starred;
            push(std::move(nw));
          }
    }
  }
  return false;
}

bool proves_sufficiency(const ConditionExpr& cond, const GroupIdentity& id) {
  if (id.lhs.g0_exp != id.rhs.g0_exp) return false;
  return reachable_under(cond, id.lhs.letters, id.rhs.letters);
}

std::vector<bool> battery_profile(const ConditionExpr& c, const WitnessBattery& battery) {
  std::vector<bool> out;
  out.reserve(battery.members.size());
  for (const WitnessMember& m : battery.members) out.push_back(condition_holds(c, m));
  return out;
}

std::vector<bool> battery_profile(const GroupIdentity& id, const WitnessBattery& battery) {
  std::vector<bool> out;
  out.reserve(battery.members.size());
  for (const WitnessMember& m : battery.members)
    out.push_back(identity_holds_in(id, *m.group, m.star, m.g0));
  return out;
}

}  // namespace

ConditionExpr classify_identity(const GroupIdentity& raw_id, const WitnessBattery& battery) {
  GroupIdentity id = canonicalize(raw_id);
  if (id.trivial()) return ConditionExpr::make_true();

  // Specializations: unit substitution over every variable subset, then the
  // star change of variable.  Each one is a consequence of id.
  std::vector<int> vars = identity_vars(id);
  std::vector<GroupIdentity> specs;
  for (unsigned mask = 0; mask < (1u << vars.size()); ++mask) {
    std::set<int> subst;
    for (size_t j = 0; j < vars.size(); ++j)
      if ((mask >> j) & 1) subst.insert(vars[j]);
    GroupIdentity sp = star_rename(substitute_unit(id, subst));
    if (!sp.trivial()) specs.push_back(std::move(sp));
  }

  // Necessary atoms from the base patterns.
  ConditionExpr necessary;
  for (const GroupIdentity& sp : specs) {
    for (const BasePattern& p : base_patterns()) {
      if (!matches(sp, p.id)) continue;
      if (p.cond.never) {
        // A specialization no group with a nonidentical star satisfies.
        return ConditionExpr::make_false();
      }
      necessary = necessary.conjoin(p.cond);
    }
  }

  // Candidate conditions, weakest first; each must extend the necessary
  // atoms, match the identity's brute-force profile, and be strong enough to
  // rewrite one side into the other.
  static const std::vector<ConditionExpr> candidates = {
      ConditionExpr::make_atoms(false, false, true),   // PS
      ConditionExpr::make_atoms(false, true, false),   // PB
      ConditionExpr::make_atoms(true, false, false),   // PC
      ConditionExpr::make_atoms(false, true, true),    // PB&PS
      ConditionExpr::make_atoms(true, false, true),    // PC&PS
  };
  auto extends = [](const ConditionExpr& c, const ConditionExpr& base) {
    bool cpb = c.pb || c.pc, bpb = base.pb || base.pc;
    return (!base.pc || c.pc) && (!bpb || cpb) && (!base.ps || c.ps);
  };
  std::vector<bool> profile = battery_profile(id, battery);
  for (const ConditionExpr& c : candidates) {
    if (!extends(c, necessary)) continue;
    if (battery_profile(c, battery) != profile) continue;
    if (proves_sufficiency(c, id)) return c;
  }
  return ConditionExpr::make_raw(id);
}

bool condition_implies_identity(const ConditionExpr& c, const GroupIdentity& id) {
  return proves_sufficiency(c, id);
}

void drop_provable_raws(ConditionExpr& c) {
  if (c.never || c.raws.empty()) return;
  ConditionExpr atoms = ConditionExpr::make_atoms(c.pc, c.pb, c.ps);
  std::erase_if(c.raws,
                [&](const GroupIdentity& id) { return proves_sufficiency(atoms, id); });
}

ConditionExpr classify_set(const IdentitySet& psi, const WitnessBattery& battery) {
  ConditionExpr acc = ConditionExpr::make_true();
  for (const GroupIdentity& id : psi.identities) {
    acc = acc.conjoin(classify_identity(id, battery));
    if (acc.never) break;
  }
  drop_provable_raws(acc);
  return acc;
}

}  // namespace loopq
