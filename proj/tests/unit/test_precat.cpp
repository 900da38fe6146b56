#include <doctest.h>

#include "corpus.hpp"
#include "polycat/errors.hpp"
#include "polycat/precat.hpp"

using namespace polycat;

TEST_CASE("theta outputs are precategories satisfying (E)") {
  for (const auto& e : corpus::two_categories()) {
    CAPTURE(e.name);
    auto p = theta(e.cat);
    CHECK(check_precategory_axioms(p).ok());
    CHECK(check_condition_E(p).ok());
  }
}

TEST_CASE("theta and theta_bar are mutually inverse on the corpus") {
  for (const auto& e : corpus::two_categories()) {
    CAPTURE(e.name);
    auto p = theta(e.cat);
    CHECK(theta_bar(p) == e.cat);
    CHECK(theta_bar(p, Expansion::Alternative) == e.cat);
    CHECK(theta(theta_bar(p)) == p);
  }
}

TEST_CASE("theta turns horizontal composition into whiskered composites") {
  auto c = corpus::two_categories()[1].cat;  // scalars
  auto p = theta(c);
  const auto& x = c.carrier();
  auto a1 = x.id(2, "a1");
  auto a = x.id(1, "a");
  // a1 *0 a is defined in the precategory as a1 o_0 1_2(a).
  CHECK(p.star(2, 1, a1, a) == c.compose(0, 2, a1, c.identity(1, a)));
}

TEST_CASE("a precategory without exchange fails (E) and has no theta_bar") {
  auto p = corpus::left_zero_precat();
  CHECK(check_precategory_axioms(p).ok());
  auto r = check_condition_E(p);
  CHECK_FALSE(r.ok());
  CHECK(r.has_label("E"));
  CHECK_THROWS_AS(theta_bar(p), DomainError);
}

TEST_CASE("a broken unit in a precategory is reported") {
  auto p = corpus::left_zero_precat();
  p.set_pcomp(2, 2, 0, 1, 2);  // 1 * a = b
  CHECK(check_precategory_axioms(p).has_label("P-iii"));
}
