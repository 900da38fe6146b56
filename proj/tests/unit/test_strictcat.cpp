#include <doctest.h>

#include "corpus.hpp"
#include "polycat/errors.hpp"
#include "polycat/strictcat.hpp"

using namespace polycat;

TEST_CASE("corpus categories satisfy every axiom") {
  for (const auto& e : corpus::one_categories()) {
    CAPTURE(e.name);
    CHECK(check_axioms(e.cat).ok());
  }
  for (const auto& e : corpus::two_categories()) {
    CAPTURE(e.name);
    CHECK(check_axioms(e.cat).ok());
  }
}

TEST_CASE("corrupted tables fail with the broken axiom's label") {
  for (const auto& c : corpus::corrupted()) {
    CAPTURE(c.name);
    auto r = check_axioms(c.cat);
    CHECK_FALSE(r.ok());
    CHECK(r.has_label(c.label));
  }
}

TEST_CASE("a missing composite is a domain error, not an axiom violation") {
  GlobularSet x(1);
  x.add("x");
  x.add(1, "e", "x", "x");
  x.add(1, "a", "x", "x");
  FiniteStrictCat c(x);
  c.set_identity(0, "x", "e");
  c.set_comp(0, 1, "e", "e", "e");
  c.set_comp(0, 1, "e", "a", "a");
  c.set_comp(0, 1, "a", "e", "a");
  auto r = check_axioms(c);
  CHECK(r.has_label("domain"));
  CHECK_THROWS_AS(c.compose(0, 1, x.id(1, "a"), x.id(1, "a")), DomainError);
}

TEST_CASE("compositions follow diagrammatic order") {
  auto arrow = corpus::one_categories()[4].cat;
  const auto& x = arrow.carrier();
  auto f = x.id(1, "f");
  auto ida = x.id(1, "id(a)");
  CHECK(arrow.composable(0, 1, ida, f));
  CHECK_FALSE(arrow.composable(0, 1, f, ida));
  CHECK(arrow.compose(0, 1, ida, f) == f);
}

TEST_CASE("truncation and inclusion") {
  for (const auto& e : corpus::one_categories()) {
    CAPTURE(e.name);
    auto lifted = sc_include(e.cat, 3);
    CHECK(check_axioms(lifted).ok());
    CHECK(sc_truncate(lifted, 1) == e.cat);
    CHECK(lifted.carrier().size(3) == e.cat.carrier().size(1));
  }
}

TEST_CASE("co-inclusion cells are parallel pairs composed by the case split") {
  auto z2 = corpus::one_categories()[1].cat;
  auto c = sc_coinclude(z2, 2);
  const auto& x = c.carrier();
  CHECK(x.size(2) == 4);
  auto id = [&](const char* n) { return x.id(2, n); };
  // Vertical composition keeps the outer components.
  CHECK(c.compose(1, 2, id("(g0,g1)"), id("(g1,g0)")) == id("(g0,g0)"));
  // Horizontal composition is componentwise.
  CHECK(c.compose(0, 2, id("(g0,g1)"), id("(g1,g1)")) == id("(g1,g0)"));
  CHECK(c.identity(1, x.id(1, "g1")) == id("(g1,g1)"));
}

TEST_CASE("the counit of truncation is a functor") {
  for (const auto& e : corpus::two_categories()) {
    CAPTURE(e.name);
    auto f = sc_counit(e.cat, 1);
    CHECK(check_functor(f, sc_include(sc_truncate(e.cat, 1), 2), e.cat).ok());
  }
}

TEST_CASE("terminal category has one cell per dimension") {
  auto t = terminal_category(3);
  for (std::size_t k = 0; k <= 3; ++k) CHECK(t.carrier().size(k) == 1);
  CHECK(check_axioms(t).ok());
}
