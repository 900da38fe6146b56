#include "corpus.hpp"

#include <array>
#include <map>
#include <stdexcept>

#include "polycat/errors.hpp"
#include "polycat/freecat.hpp"
#include "polycat/precat.hpp"

using namespace polycat;

namespace corpus {

std::string fixture(const std::string& file) {
  return std::string(POLYCAT_FIXTURES) + "/" + file;
}

FiniteStrictCat finite_free_category(const Polygraph& p, std::size_t bound) {
  FreeCategory c(p);
  const std::size_t n = p.dim();
  std::vector<std::vector<FreeCell>> cells(n + 1);
  for (std::size_t k = 0; k <= n; ++k) cells[k] = enumerate_cells(c, k, bound);
  auto index = [&](std::size_t k, const FreeCell& u) -> CellId {
    FreeCell nf = c.normalize(u);
    for (std::size_t j = 0; j < cells[k].size(); ++j) {
      if (cells[k][j] == nf) return static_cast<CellId>(j);
    }
    throw std::runtime_error("cell " + c.to_string(u) + " is outside the bound");
  };
  GlobularSet x(n);
  for (std::size_t k = 0; k <= n; ++k) {
    for (const auto& u : cells[k]) {
      if (k == 0) {
        x.add(c.to_string(u));
      } else {
        x.add(k, c.to_string(u), index(k - 1, c.boundary(Side::Source, u)),
              index(k - 1, c.boundary(Side::Target, u)));
      }
    }
  }
  FiniteStrictCat out(x);
  for (std::size_t k = 0; k < n; ++k) {
    for (CellId u = 0; u < cells[k].size(); ++u) {
      out.set_identity(k, u, index(k + 1, c.identity(cells[k][u])));
    }
  }
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < k; ++i) {
      for (CellId u = 0; u < cells[k].size(); ++u) {
        for (CellId v = 0; v < cells[k].size(); ++v) {
          if (!out.composable(i, k, u, v)) continue;
          out.set_comp(i, k, u, v, index(k, c.compose(i, cells[k][u], cells[k][v])));
        }
      }
    }
  }
  return out;
}

namespace {

Polygraph graph(const std::vector<std::string>& objects,
                const std::vector<std::array<std::string, 3>>& arrows) {
  Polygraph p(1);
  for (const auto& o : objects) p.add(o);
  for (const auto& [f, s, t] : arrows) p.add(1, f, Term::gen(s), Term::gen(t));
  return p;
}

// One object, 1-cells e and a forming Z/2, and two 2-cells on each 1-cell
// forming Z/2 under both compositions.
FiniteStrictCat scalar_category() {
  GlobularSet x(2);
  x.add("x");
  x.add(1, "e", "x", "x");
  x.add(1, "a", "x", "x");
  for (const char* u : {"e", "a"}) {
    x.add(2, std::string(u) + "0", u, u);
    x.add(2, std::string(u) + "1", u, u);
  }
  FiniteStrictCat c(x);
  c.set_identity(0, "x", "e");
  c.set_identity(1, "e", "e0");
  c.set_identity(1, "a", "a0");
  const std::vector<std::string> one = {"e", "a"};
  for (int u = 0; u < 2; ++u) {
    for (int v = 0; v < 2; ++v) {
      c.set_comp(0, 1, one[u], one[v], one[u ^ v]);
      for (int s = 0; s < 2; ++s) {
        for (int t = 0; t < 2; ++t) {
          auto cell = [&](int w, int r) { return one[w] + std::to_string(r); };
          c.set_comp(0, 2, cell(u, s), cell(v, t), cell(u ^ v, s ^ t));
          if (u == v) c.set_comp(1, 2, cell(u, s), cell(u, t), cell(u, s ^ t));
        }
      }
    }
  }
  return c;
}

FiniteStrictCat z_mod(std::size_t n) {
  std::vector<std::string> elems;
  std::vector<std::size_t> table;
  for (std::size_t a = 0; a < n; ++a) elems.push_back("g" + std::to_string(a));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table.push_back((a + b) % n);
  }
  return monoid_category("x", elems, table, 0);
}

FiniteStrictCat with_comp(FiniteStrictCat c, std::size_t i, std::size_t k,
                          const std::string& u, const std::string& v,
                          const std::string& w) {
  c.set_comp(i, k, u, v, w);
  return c;
}

}  // namespace

std::vector<Entry> one_categories() {
  std::vector<Entry> out;
  out.push_back({"terminal", terminal_category(1)});
  out.push_back({"Z/2", z_mod(2)});
  out.push_back({"Z/3", z_mod(3)});
  out.push_back({"idempotent", monoid_category("x", {"1", "p"}, {0, 1, 1, 1}, 0)});
  out.push_back({"arrow", finite_free_category(graph({"a", "b"}, {{"f", "a", "b"}}), 3)});
  out.push_back({"parallel",
                 finite_free_category(graph({"a", "b"}, {{"f", "a", "b"}, {"g", "a", "b"}}), 3)});
  out.push_back({"path", finite_free_category(
                             graph({"a", "b", "c"}, {{"f", "a", "b"}, {"g", "b", "c"}}), 3)});
  return out;
}

std::vector<Entry> two_categories() {
  std::vector<Entry> out;
  out.push_back({"terminal", terminal_category(2)});
  out.push_back({"scalars", scalar_category()});
  for (const auto& e : one_categories()) {
    if (e.name == "Z/2" || e.name == "arrow" || e.name == "parallel" || e.name == "Z/3") {
      out.push_back({"coinclude " + e.name, sc_coinclude(e.cat, 2)});
    }
    if (e.name == "path" || e.name == "idempotent") {
      out.push_back({"include " + e.name, sc_include(e.cat, 2)});
    }
  }
  Polygraph p2(2);
  for (const auto& o : {"a", "b"}) p2.add(o);
  p2.add(1, "f", "a", "b");
  p2.add(1, "g", "a", "b");
  p2.add(2, "alpha", "f", "g");
  FiniteStrictCat free2 = finite_free_category(p2, 3);
  out.push_back({"free alpha", free2});
  out.push_back({"truncated free alpha", sc_include(sc_truncate(free2, 1), 2)});
  out.push_back({"truncated coinclude", sc_truncate(sc_coinclude(z_mod(2), 3), 2)});
  return out;
}

std::vector<Corrupted> corrupted() {
  std::vector<Corrupted> out;
  FiniteStrictCat arrow = one_categories()[4].cat;
  {
    FiniteStrictCat c = arrow;
    c.set_identity(0, "a", "f");
    out.push_back({"identity with a wrong boundary", c, "S-i"});
  }
  out.push_back({"composite with a wrong target",
                 with_comp(arrow, 0, 1, "id(a)", "f", "id(a)"), "S-ii"});
  out.push_back({"unit that does not act as one",
                 monoid_category("x", {"1", "p"}, {1, 1, 1, 1}, 0), "S-iii"});
  out.push_back({"non-associative monoid",
                 monoid_category("x", {"1", "a", "b"}, {0, 1, 2, 1, 2, 2, 2, 1, 1}, 0),
                 "S-iv"});
  out.push_back({"identity not preserved by composition",
                 with_comp(scalar_category(), 0, 2, "e0", "e0", "e1"), "S-v"});
  out.push_back({"exchange broken",
                 with_comp(scalar_category(), 0, 2, "a1", "a1", "e1"), "S-vi"});
  return out;
}

// One object, one 1-cell i, and 2-cells {1, a, b} on i under the
// non-commutative monoid with ab = a, ba = b. Whiskering by i is trivial,
// so condition (E) would force the monoid to commute.
FinitePrecat left_zero_precat() {
  GlobularSet x(2);
  x.add("x");
  x.add(1, "i", "x", "x");
  for (const char* n : {"1", "a", "b"}) x.add(2, n, "i", "i");
  FinitePrecat p(x);
  p.set_identity(0, 0, 0);
  p.set_identity(1, 0, 0);
  p.set_pcomp(1, 1, 0, 0, 0);
  for (CellId u = 0; u < 3; ++u) {
    p.set_pcomp(2, 1, u, 0, u);
    p.set_pcomp(1, 2, 0, u, u);
    for (CellId v = 0; v < 3; ++v) p.set_pcomp(2, 2, u, v, u == 0 ? v : u);
  }
  return p;
}

}  // namespace corpus
