#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "loopq/terms.hpp"

using namespace loopq;

TEST_CASE("parse_identity") {
  LoopIdentity c = parse_identity("((xy)y)z=x(y(yz))");
  CHECK(c.vars == std::vector<int>({23, 24, 25}));
  CHECK(leaf_sequence(c.lhs) == std::vector<int>({23, 24, 24, 25}));
  CHECK(leaf_sequence(c.rhs) == std::vector<int>({23, 24, 24, 25}));

  LoopIdentity flex = parse_identity("x(yx)=(xy)x");
  CHECK(leaf_sequence(flex.lhs) == std::vector<int>({23, 24, 23}));

  // juxtaposition is left-associative: xyz parses as (xy)z
  LoopIdentity assoc = parse_identity("xyz=x(yz)");
  CHECK(format_identity(assoc) == "(xy)z=x(yz)");

  CHECK_THROWS(parse_identity("((xy)y=x"));
  CHECK_THROWS(parse_identity("=x"));
  CHECK_THROWS(parse_identity("x(y#)=xy"));
  CHECK_THROWS(parse_identity("xy"));
}

TEST_CASE("check_strictly_balanced") {
  CHECK(check_strictly_balanced(parse_identity("((xy)y)z=x(y(yz))")));
  CHECK(check_strictly_balanced(parse_identity("x(yx)=(xy)x")));
  CHECK(!check_strictly_balanced(parse_identity("xy=yx")));
  CHECK(!check_strictly_balanced(parse_identity("x(xy)=(xy)y")));
}

TEST_CASE("builtins") {
  const auto& m = builtin_identities();
  CHECK(m.size() == 16);
  for (const auto& [name, id] : m) {
    CHECK(check_strictly_balanced(id));
    // format/parse round trip preserves structure
    LoopIdentity re = parse_identity(format_identity(id));
    CHECK(format_identity(re) == format_identity(id));
    CHECK(re.vars == id.vars);
  }
  CHECK(format_identity(builtin("moufang")) == "x(y(xz))=((xy)x)z");
  CHECK(format_identity(builtin("c")) == "((xy)y)z=x(y(yz))");
  CHECK(format_identity(builtin("assoc")) == "x(yz)=(xy)z");
  CHECK(format_identity(builtin("leftalt")) == "x(xy)=(xx)y");
  CHECK_THROWS(builtin("zorplex"));
  CHECK(table_varieties().size() == 15);
  for (const std::string& v : table_varieties()) CHECK(m.count(v) == 1);
}
