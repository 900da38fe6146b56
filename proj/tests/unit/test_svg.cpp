#include <doctest.h>

#include <regex>

#include "corpus.hpp"
#include "polycat/io.hpp"
#include "polycat/svg.hpp"

using namespace polycat;

namespace {

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

std::string draw(const FreeCategory& c, const std::string& term) {
  return render_svg(c, std::get<Diagram>(c.normalize(c.infer(parse_term(term))).data));
}

}  // namespace

TEST_CASE("escaping") {
  CHECK(xml_escape("a<b&\"c'>") == "a&lt;b&amp;&quot;c&apos;&gt;");
}

TEST_CASE("a single multiplication") {
  FreeCategory c(read_polygraph(corpus::fixture("pseudomonoid.pol")));
  auto svg = draw(c, "mu");
  CHECK(count(svg, "class=\"node\"") == 1);
  CHECK(count(svg, "class=\"source\"") == 2);
  CHECK(count(svg, "class=\"target\"") == 1);
  // Two wires in, one wire out, centred between the inputs.
  CHECK(count(svg, "class=\"wire\"") == 3);
  CHECK(svg.find("cx=\"70\" cy=\"60\" r=\"12\"") != std::string::npos);
  CHECK(svg.find("width=\"140\" height=\"120\"") != std::string::npos);
}

TEST_CASE("equal cells render to the same bytes") {
  FreeCategory c(read_polygraph(corpus::fixture("pseudomonoid.pol")));
  auto a = draw(c, "(mu *0 id(one *0 one)) *1 (id(one) *0 mu)");
  auto b = draw(c, "(id(one *0 one) *0 mu) *1 (mu *0 id(one))");
  CHECK(a == b);
  CHECK(count(a, "class=\"node\"") == 2);
}

TEST_CASE("identity diagrams are plain wires") {
  FreeCategory c(read_polygraph(corpus::fixture("adjunction.pol")));
  auto svg = draw(c, "id(l *0 r)");
  CHECK(count(svg, "class=\"node\"") == 0);
  CHECK(count(svg, "class=\"wire\"") == 2);
  auto unit = draw(c, "unit");
  CHECK(count(unit, "class=\"source\"") == 0);
  CHECK(count(unit, "class=\"target\"") == 2);
}

TEST_CASE("coordinates are integers") {
  FreeCategory c(read_polygraph(corpus::fixture("adjunction.pol")));
  auto svg = draw(c, "(unit *0 l) *1 (l *0 counit)");
  CHECK_FALSE(std::regex_search(svg, std::regex("=\"-?[0-9]+\\.[0-9]")));
}
