#include <doctest.h>

#include "polycat/errors.hpp"
#include "polycat/term.hpp"

using namespace polycat;

TEST_CASE("higher indices bind tighter, equal indices associate left") {
  auto t = parse_term("a *0 b *1 c *0 d");
  REQUIRE(t.kind() == Term::Kind::Comp);
  CHECK(t.index() == 0);
  CHECK(t.lhs().index() == 0);
  CHECK(t.lhs().rhs().index() == 1);
  CHECK(to_string(t) == "a *0 b *1 c *0 d");
  CHECK(parse_term("(a *0 b) *1 c") ==
        Term::comp(1, Term::comp(0, Term::gen("a"), Term::gen("b")), Term::gen("c")));
}

TEST_CASE("printing inserts the minimal parentheses and round-trips") {
  for (const char* text :
       {"a", "id(x)", "(a *0 b) *1 c", "a *0 (b *0 c)", "a *1 (b *1 c)",
        "a *1 b *0 c", "a *1 (b *0 c)", "id(id(x)) *2 alpha", "(mu *0 id(one)) *1 mu"}) {
    CAPTURE(text);
    auto t = parse_term(text);
    CHECK(to_string(t) == text);
    CHECK(parse_term(to_string(t)) == t);
  }
  CHECK(to_string(parse_term("((a))")) == "a");
}

TEST_CASE("identifiers stop at reserved characters and arrows") {
  CHECK(to_string(parse_term("µ′ *0 η")) == "µ′ *0 η");
  CHECK(parse_term("id").name() == "id");
  CHECK_THROWS_AS(parse_term("a->b"), ParseError);
}

TEST_CASE("parse errors report line and column in code points") {
  try {
    parse_term("η *0 ", 4, 10);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() == 15);
  }
  CHECK_THROWS_AS(parse_term(""), ParseError);
  CHECK_THROWS_AS(parse_term("a *"), ParseError);
  CHECK_THROWS_AS(parse_term("(a"), ParseError);
  CHECK_THROWS_AS(parse_term("a b"), ParseError);
}
