#include <doctest.h>

#include "corpus.hpp"
#include "polycat/errors.hpp"
#include "polycat/io.hpp"
#include "polycat/polygraph.hpp"

using namespace polycat;

namespace {

Polygraph pm() { return read_polygraph(corpus::fixture("pseudomonoid.pol")); }

Polygraph globe() {
  Polygraph p(1, "globe");
  p.add("x");
  p.add("y");
  p.add(1, "f", "x", "y");
  return p;
}

}  // namespace

TEST_CASE("the pseudomonoid polygraph validates") {
  auto p = pm();
  CHECK(p.dim() == 3);
  CHECK(p.generators(2).size() == 2);
  CHECK(validate_polygraph(p).ok());
  CHECK(p.find("eta")->dim == 2);
}

TEST_CASE("generator names are unique across dimensions") {
  Polygraph p(1);
  p.add("x");
  CHECK_THROWS_AS(p.add(1, "x", "x", "x"), StructuralError);
  CHECK_THROWS_AS(p.add(2, "g", "x", "x"), DimensionError);
}

TEST_CASE("validation reports typing and boundary failures") {
  Polygraph bad(2);
  bad.add("x");
  bad.add("y");
  bad.add(1, "f", "x", "y");
  bad.add(2, "loop", "f *0 f", "f");
  CHECK(validate_polygraph(bad).has_label("typing"));

  Polygraph skew(2);
  skew.add("x");
  skew.add("y");
  skew.add(1, "f", "x", "y");
  skew.add(1, "g", "y", "y");
  skew.add(2, "alpha", "f", "g");
  CHECK(validate_polygraph(skew).has_label("boundary"));

  Polygraph low(2);
  low.add("x");
  low.add(1, "f", "x", "x");
  low.add(2, "beta", "x", "x");
  CHECK(validate_polygraph(low).has_label("dimension"));

  Polygraph unknown(1);
  unknown.add("x");
  unknown.add(1, "f", "x", "z");
  CHECK_THROWS_AS(validate_polygraph(unknown), StructuralError);
}

TEST_CASE("truncation keeps the lower generators") {
  auto t = truncate_pol(pm(), 1);
  CHECK(t.dim() == 1);
  CHECK(t.generators(1).size() == 1);
  CHECK(truncate_pol(pm(), 3) == pm());
}

TEST_CASE("relabelling renames inside boundaries") {
  auto r = relabel(pm(), {{"mu", "m"}, {"one", "u"}});
  CHECK(r.find("m").has_value());
  CHECK(to_string(*r.generator(3, 2).source) == "(m *0 id(u)) *1 m");
  CHECK(validate_polygraph(r).ok());
  CHECK(isomorphic(r, pm()));
}

TEST_CASE("morphisms must preserve boundaries") {
  CHECK(check_pol_morphism(identity_pol_morphism(pm())).ok());
  Polygraph two(1);
  two.add("x");
  two.add(1, "f", "x", "x");
  two.add(1, "g", "x", "x");
  PolMorphism swap{two, two, {{0}, {1, 0}}};
  CHECK(check_pol_morphism(swap).ok());

  auto g = globe();
  PolMorphism collapse{g, g, {{0, 0}, {0}}};
  CHECK_FALSE(check_pol_morphism(collapse).ok());
}

TEST_CASE("coproducts and pushouts are computed dimensionwise") {
  auto c = coproduct(pm(), globe());
  CHECK(c.generators(0).size() == 3);
  CHECK(c.generators(1).size() == 2);
  CHECK(c.generators(3).size() == 3);
  CHECK(c.find("l.mu").has_value());
  CHECK(c.find("r.f").has_value());
  CHECK(validate_polygraph(c).ok());

  // Glue two globes along their source point.
  Polygraph point(0);
  point.add("p");
  PolMorphism f{point, globe(), {{0}}};
  PolMorphism g{point, globe(), {{0}}};
  auto v = pushout(f, g);
  CHECK(v.generators(0).size() == 3);
  CHECK(v.generators(1).size() == 2);
  CHECK(to_string(*v.generator(1, 1).source) == "l.x");
  CHECK(validate_polygraph(v).ok());
}

TEST_CASE("isomorphism ignores names but not structure") {
  auto g = globe();
  auto h = relabel(g, {{"x", "a"}, {"y", "b"}, {"f", "h"}});
  CHECK(isomorphic(g, h));
  Polygraph loop(1);
  loop.add("x");
  loop.add("y");
  loop.add(1, "f", "x", "x");
  CHECK_FALSE(isomorphic(g, loop));
}

TEST_CASE("cellular extension over a polygraph") {
  CellularExtension e{truncate_pol(pm(), 1), {{"mu", parse_term("one *0 one"),
                                               parse_term("one")}}};
  auto ctx = free_extension_terms(e);
  CHECK(ctx.base_dim() == 1);
  auto t = ctx.infer(parse_term("(mu *0 one) *1 mu"));
  CHECK(t.dim == 2);
  CHECK(t.source == "one *0 one *0 one");
  CHECK(t.target == "one");
  CHECK(ctx.generators(2) == std::vector<std::string>{"mu"});
  CHECK(ctx.cells(1, 2) == std::vector<std::string>{"id(x)", "one", "one *0 one"});
  CHECK_THROWS_AS(ctx.infer(parse_term("mu *1 mu")), TypingError);

  CellularExtension skew{truncate_pol(pm(), 1), {{"bad", parse_term("x"),
                                                  parse_term("one")}}};
  CHECK_THROWS_AS(free_extension_terms(skew), StructuralError);
}

TEST_CASE("cellular extension over a finite strict category") {
  auto z2 = corpus::one_categories()[1].cat;
  CellularExtension e{z2, {{"s", parse_term("g1"), parse_term("g1")}}};
  auto ctx = free_extension_terms(e);
  auto t = ctx.infer(parse_term("s *1 s"));
  CHECK(t.dim == 2);
  CHECK(t.source == "g1");
  auto h = ctx.infer(parse_term("s *0 s"));
  CHECK(h.source == "g0");
  CHECK(ctx.cells(1, 5) == std::vector<std::string>{"g0", "g1"});
  CHECK(std::get<FiniteStrictCat>(ctx.truncation()) == z2);
}
