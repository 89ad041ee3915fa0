#include "loopq/theta.hpp"

#include <sstream>

#include "loopq/fail.hpp"

namespace loopq {

ThetaElem theta_from_part_index(int idx, int g0_exp) {
  if (idx < 0 || idx >= kThetaParts) fail("theta: part index out of range");
  return {g0_exp, (idx & 4) != 0, (idx & 2) != 0, (idx & 1) != 0};
}

ThetaElem theta_parse(std::string_view token) {
  const std::string src(token);
  size_t i = 0;
  int exp = 0;
  if (token.compare(0, 2, "g0") == 0) {
    i = 2;
    exp = 1;
    if (i < token.size() && token[i] == '^') {
      ++i;
      size_t j = i;
      if (j < token.size() && (token[j] == '-' || token[j] == '+')) ++j;
      while (j < token.size() && std::isdigit(static_cast<unsigned char>(token[j]))) ++j;
      if (j == i) fail("theta token: missing exponent in \"" + src + "\"");
      exp = std::stoi(std::string(token.substr(i, j - i)));
      i = j;
    }
  }
  auto letter = [&](char& out, bool& star) {
    if (i >= token.size() || (token[i] != 'x' && token[i] != 'y'))
      fail("theta token: expected letter x or y in \"" + src + "\"");
    out = token[i++];
    star = false;
    if (i < token.size() && token[i] == '*') {
      star = true;
      ++i;
    }
  };
  char c1, c2;
  bool s1, s2;
  letter(c1, s1);
  letter(c2, s2);
  if (i != token.size()) fail("theta token: trailing characters in \"" + src + "\"");
  if (c1 == c2) fail("theta token: repeated letter in \"" + src + "\"");
  return {exp, c1 == 'y', s1, s2};
}

std::string theta_format(const ThetaElem& t) {
  std::ostringstream os;
  if (t.g0_exp == 1)
    os << "g0";
  else if (t.g0_exp != 0)
    os << "g0^" << t.g0_exp;
  os << (t.swap ? 'y' : 'x');
  if (t.star_first) os << '*';
  os << (t.swap ? 'x' : 'y');
  if (t.star_second) os << '*';
  return os.str();
}

ThetaElem theta_compose(const ThetaElem& a, const ThetaElem& b) {
  ThetaElem c;
  c.g0_exp = a.g0_exp + b.g0_exp;
  c.swap = a.swap != b.swap;
  if (a.swap) {
    c.star_first = a.star_first != b.star_second;
    c.star_second = a.star_second != b.star_first;
  } else {
    c.star_first = a.star_first != b.star_first;
    c.star_second = a.star_second != b.star_second;
  }
  return c;
}

std::pair<GroupWord, GroupWord> theta_apply(const ThetaElem& t,
                                            std::pair<GroupWord, GroupWord> pair) {
  if (t.swap) std::swap(pair.first, pair.second);
  if (t.star_first) pair.first = star_word(pair.first);
  if (t.star_second) pair.second = star_word(pair.second);
  pair.first.g0_exp += t.g0_exp;
  return pair;
}

GroupWord delta_eval(const std::pair<GroupWord, GroupWord>& pair) {
  return concat(pair.first, pair.second);
}

MultQuadruple parse_quadruple(std::string_view triple) {
  std::string s(triple);
  std::erase_if(s, [](char c) { return c == '(' || c == ')' || std::isspace(static_cast<unsigned char>(c)); });
  std::vector<std::string> toks;
  size_t start = 0;
  while (true) {
    size_t comma = s.find(',', start);
    toks.push_back(s.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  MultQuadruple q;
  q.alpha = ThetaElem{};
  if (toks.size() == 3) {
    q.beta = theta_parse(toks[0]);
    q.gamma = theta_parse(toks[1]);
    q.delta = theta_parse(toks[2]);
  } else if (toks.size() == 4) {
    q.alpha = theta_parse(toks[0]);
    q.beta = theta_parse(toks[1]);
    q.gamma = theta_parse(toks[2]);
    q.delta = theta_parse(toks[3]);
  } else {
    fail("quadruple: expected \"b,g,d\" or \"a,b,g,d\", got \"" + std::string(triple) + "\"");
  }
  return q;
}

std::string format_triple(const MultQuadruple& q) {
  return "(" + theta_format(q.beta) + "," + theta_format(q.gamma) + "," +
         theta_format(q.delta) + ")";
}

bool in_loop_sets(const MultQuadruple& q) {
  if (q.alpha != ThetaElem{}) return false;
  int b = q.beta.part_index(), g = q.gamma.part_index();
  bool beta_ok = q.beta.g0_exp == 0 && (b == 0 || b == 2 || b == 4 || b == 5);
  bool gamma_ok = q.gamma.g0_exp == 0 && (g == 0 || g == 1 || g == 4 || g == 6);
  return beta_ok && gamma_ok;
}

bool in_search_grid(const MultQuadruple& q) {
  if (!in_loop_sets(q)) return false;
  int g = q.gamma.part_index();
  return (g == 0 || g == 4) && q.delta.g0_exp == 1;
}

}  // namespace loopq
