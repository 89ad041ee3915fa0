#include "loopq/terms.hpp"

#include <cctype>

#include "loopq/fail.hpp"

namespace loopq {

Term make_leaf(int var) {
  auto n = std::make_shared<TermNode>();
  n->var = var;
  return n;
}

Term make_node(Term left, Term right) {
  auto n = std::make_shared<TermNode>();
  n->left = std::move(left);
  n->right = std::move(right);
  return n;
}

std::vector<int> leaf_sequence(const Term& t) {
  std::vector<int> out;
  auto walk = [&](auto&& self, const Term& n) -> void {
    if (n->leaf()) {
      out.push_back(n->var);
      return;
    }
    self(self, n->left);
    self(self, n->right);
  };
  walk(walk, t);
  return out;
}

namespace {

struct Parser {
  std::string_view src;
  size_t pos = 0;

  void skip() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }
  bool at_end() { return pos >= src.size(); }
  char peek() { return src[pos]; }

  Term primary() {
    skip();
    if (at_end()) fail("identity: unexpected end of input in \"" + std::string(src) + "\"");
    char c = peek();
    if (c == '(') {
      ++pos;
      Term t = term();
      skip();
      if (at_end() || peek() != ')')
        fail("identity: unbalanced parentheses in \"" + std::string(src) + "\"");
      ++pos;
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      ++pos;
      return make_leaf(std::tolower(static_cast<unsigned char>(c)) - 'a');
    }
    fail("identity: unexpected character '" + std::string(1, c) + "' in \"" +
         std::string(src) + "\"");
  }

  Term term() {
    Term acc = primary();
    for (;;) {
      skip();
      if (at_end() || peek() == ')' || peek() == '=') return acc;
      acc = make_node(acc, primary());
    }
  }
};

}  // namespace

LoopIdentity parse_identity(std::string_view src) {
  size_t eq = src.find('=');
  if (eq == std::string_view::npos)
    fail("identity: missing '=' in \"" + std::string(src) + "\"");
  Parser pl{src.substr(0, eq)};
  pl.skip();
  if (pl.at_end()) fail("identity: empty left side in \"" + std::string(src) + "\"");
  Term lhs = pl.term();
  pl.skip();
  if (!pl.at_end()) fail("identity: unbalanced parentheses in \"" + std::string(src) + "\"");
  Parser pr{src.substr(eq + 1)};
  pr.skip();
  if (pr.at_end()) fail("identity: empty right side in \"" + std::string(src) + "\"");
  Term rhs = pr.term();
  pr.skip();
  if (!pr.at_end()) fail("identity: unbalanced parentheses in \"" + std::string(src) + "\"");

  LoopIdentity id;
  id.lhs = std::move(lhs);
  id.rhs = std::move(rhs);
  for (int v : leaf_sequence(id.lhs)) {
    if (std::find(id.vars.begin(), id.vars.end(), v) == id.vars.end()) id.vars.push_back(v);
  }
  for (int v : leaf_sequence(id.rhs)) {
    if (std::find(id.vars.begin(), id.vars.end(), v) == id.vars.end()) id.vars.push_back(v);
  }
  return id;
}

std::string format_term(const Term& t) {
  if (t->leaf()) return std::string(1, static_cast<char>('a' + t->var));
  auto wrap = [](const Term& n) {
    std::string s = format_term(n);
    return n->leaf() ? s : "(" + s + ")";
  };
  return wrap(t->left) + wrap(t->right);
}

std::string format_identity(const LoopIdentity& id) {
  return format_term(id.lhs) + "=" + format_term(id.rhs);
}

bool check_strictly_balanced(const LoopIdentity& id) {
  return leaf_sequence(id.lhs) == leaf_sequence(id.rhs);
}

const std::map<std::string, LoopIdentity>& builtin_identities() {
  static const std::map<std::string, LoopIdentity> table = [] {
    std::map<std::string, LoopIdentity> m;
    auto add = [&](const std::string& name, std::string_view src) {
      LoopIdentity id = parse_identity(src);
      id.name = name;
      m.emplace(name, std::move(id));
    };
    add("assoc", "x(yz)=(xy)z");
    add("extra", "x(y(zx))=((xy)z)x");
    add("moufang", "x(y(xz))=((xy)x)z");
    add("midmoufang", "(xy)(zx)=(x(yz))x");
    add("c", "((xy)y)z=x(y(yz))");
    add("leftbol", "x(y(xz))=(x(yx))z");
    add("rightbol", "((zx)y)x=z((xy)x)");
    add("lc", "(xx)(yz)=(x(xy))z");
    add("rc", "x((yz)z)=(xy)(zz)");
    add("flex", "x(yx)=(xy)x");
    add("leftalt", "x(xy)=(xx)y");
    add("rightalt", "x(yy)=(xy)y");
    add("leftnuc", "((xx)y)z=(xx)(yz)");
    add("midnuc", "(x(yy))z=x((yy)z)");
    add("rightnuc", "(xy)(zz)=x(y(zz))");
    add("rif", "(xy)(z(xy))=((x(yz))x)y");
    return m;
  }();
  return table;
}

const LoopIdentity& builtin(const std::string& name) {
  const auto& m = builtin_identities();
  auto it = m.find(name);
  if (it == m.end()) fail("unknown identity \"" + name + "\"");
  return it->second;
}

const std::vector<std::string>& table_varieties() {
  static const std::vector<std::string> order = {
      "assoc",   "extra",    "moufang", "c",        "leftbol",
      "rightbol", "lc",      "rc",      "flex",     "leftalt",
      "rightalt", "leftnuc", "midnuc",  "rightnuc", "rif"};
  return order;
}

}  // namespace loopq
