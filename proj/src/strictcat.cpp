#include "polycat/strictcat.hpp"

#include <map>
#include <string>

#include "polycat/errors.hpp"

namespace polycat {

FiniteStrictCat::FiniteStrictCat(GlobularSet carrier)
    : carrier_(std::move(carrier)) {
  const std::size_t n = carrier_.dim();
  identity_.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    identity_[k].assign(carrier_.size(k), kUndefined);
  }
  comp_.resize(n + 1);
  for (std::size_t k = 1; k <= n; ++k) {
    comp_[k].assign(k, std::vector<CellId>(table_size(k), kUndefined));
  }
}

std::size_t FiniteStrictCat::table_size(std::size_t k) const {
  return carrier_.size(k) * carrier_.size(k);
}

void FiniteStrictCat::set_identity(std::size_t k, CellId u, CellId unit) {
  if (k >= dim()) throw DimensionError("no identities above the top dimension");
  if (u >= carrier_.size(k) || unit >= carrier_.size(k + 1)) {
    throw StructuralError("identity entry refers to an undeclared cell");
  }
  identity_[k][u] = unit;
}

void FiniteStrictCat::set_identity(std::size_t k, std::string_view u,
                                   std::string_view unit) {
  set_identity(k, carrier_.id(k, u), carrier_.id(k + 1, unit));
}

CellId FiniteStrictCat::identity(std::size_t k, CellId u) const {
  if (k >= dim()) throw DimensionError("no identities above the top dimension");
  return identity_[k].at(u);
}

CellId FiniteStrictCat::unit(std::size_t l, std::size_t k, CellId u) const {
  if (l < k || l > dim()) {
    throw DimensionError("cannot lift a " + std::to_string(k) +
                         "-cell to dimension " + std::to_string(l));
  }
  for (std::size_t m = k; m < l && u != kUndefined; ++m) u = identity(m, u);
  return u;
}

void FiniteStrictCat::set_comp(std::size_t i, std::size_t k, CellId u,
                               CellId v, CellId w) {
  if (i >= k || k > dim()) {
    throw DimensionError("no composition o_" + std::to_string(i) + " on " +
                         std::to_string(k) + "-cells");
  }
  const std::size_t n = carrier_.size(k);
  if (u >= n || v >= n || w >= n) {
    throw StructuralError("composition entry refers to an undeclared cell");
  }
  comp_[k][i][u * n + v] = w;
}

void FiniteStrictCat::set_comp(std::size_t i, std::size_t k,
                               std::string_view u, std::string_view v,
                               std::string_view w) {
  set_comp(i, k, carrier_.id(k, u), carrier_.id(k, v), carrier_.id(k, w));
}

std::optional<CellId> FiniteStrictCat::comp(std::size_t i, std::size_t k,
                                            CellId u, CellId v) const {
  if (i >= k || k > dim()) {
    throw DimensionError("no composition o_" + std::to_string(i) + " on " +
                         std::to_string(k) + "-cells");
  }
  const std::size_t n = carrier_.size(k);
  CellId w = comp_[k][i].at(u * n + v);
  if (w == kUndefined) return std::nullopt;
  return w;
}

CellId FiniteStrictCat::compose(std::size_t i, std::size_t k, CellId u,
                                CellId v) const {
  auto w = comp(i, k, u, v);
  if (!w) {
    throw DomainError(carrier_.name(k, u) + " o_" + std::to_string(i) + " " +
                      carrier_.name(k, v) + " is undefined");
  }
  return *w;
}

CellId FiniteStrictCat::boundary(Side side, std::size_t i, std::size_t k,
                                 CellId u) const {
  return iterated_boundary(carrier_, side, static_cast<int>(i),
                           Cell{static_cast<int>(k), u})
      .id;
}

bool FiniteStrictCat::composable(std::size_t i, std::size_t k, CellId u,
                                 CellId v) const {
  return boundary(Side::Target, i, k, u) == boundary(Side::Source, i, k, v);
}

namespace {

std::string idx(std::size_t i) { return std::to_string(i); }

class AxiomChecker {
 public:
  AxiomChecker(const FiniteStrictCat& c, Report& report)
      : c_(c), x_(c.carrier()), report_(report) {}

  void run() {
    auto glob = validate_globular(x_);
    for (const auto& v : glob.violations) {
      report_.errors.push_back({"globular", {v.cell}, "at i=" + idx(v.i)});
    }
    if (!glob.ok()) return;
    build_buckets();
    check_domains();
    check_identity_boundaries();
    check_composite_boundaries();
    check_units();
    check_associativity();
    check_identity_functoriality();
    check_exchange();
  }

 private:
  std::string name(std::size_t k, CellId u) const {
    return u == kUndefined ? std::string("<undefined>") : x_.name(k, u);
  }

  void violation(const char* label, std::vector<std::string> witness,
                 std::string detail) {
    report_.violations.push_back(
        {label, std::move(witness), std::move(detail)});
  }

  // by_source_[k][i][c]: k-cells whose i-source is c.
  void build_buckets() {
    by_source_.resize(c_.dim() + 1);
    for (std::size_t k = 1; k <= c_.dim(); ++k) {
      by_source_[k].resize(k);
      for (std::size_t i = 0; i < k; ++i) {
        by_source_[k][i].resize(x_.size(i));
        for (CellId u = 0; u < x_.size(k); ++u) {
          by_source_[k][i][c_.boundary(Side::Source, i, k, u)].push_back(u);
        }
      }
    }
  }

  // k-cells v that are i-composable after u.
  const std::vector<CellId>& after(std::size_t i, std::size_t k,
                                   CellId u) const {
    return by_source_[k][i][c_.boundary(Side::Target, i, k, u)];
  }

  std::optional<CellId> comp(std::size_t i, std::size_t k, CellId u,
                             CellId v) const {
    if (u == kUndefined || v == kUndefined) return std::nullopt;
    return c_.comp(i, k, u, v);
  }

  void check_domains() {
    for (std::size_t k = 0; k < c_.dim(); ++k) {
      for (CellId u = 0; u < x_.size(k); ++u) {
        CellId e = c_.identity(k, u);
        if (e == kUndefined) {
          report_.errors.push_back(
              {"domain", {name(k, u)}, "identity 1_" + idx(k + 1) + " undefined"});
        }
      }
    }
    for (std::size_t k = 1; k <= c_.dim(); ++k) {
      for (std::size_t i = 0; i < k; ++i) {
        for (CellId u = 0; u < x_.size(k); ++u) {
          for (CellId v = 0; v < x_.size(k); ++v) {
            bool defined = c_.comp(i, k, u, v).has_value();
            bool composable = c_.composable(i, k, u, v);
            if (defined != composable) {
              report_.errors.push_back(
                  {"domain",
                   {name(k, u), name(k, v)},
                   std::string(defined ? "defined on non-composable pair"
                                       : "undefined on composable pair") +
                       " for o_" + idx(i) + " in dimension " + idx(k)});
            }
          }
        }
      }
    }
  }

  void check_identity_boundaries() {
    for (std::size_t k = 0; k < c_.dim(); ++k) {
      for (CellId u = 0; u < x_.size(k); ++u) {
        CellId e = c_.identity(k, u);
        if (e == kUndefined) continue;
        if (x_.source(k + 1, e) != u || x_.target(k + 1, e) != u) {
          violation("S-i", {name(k, u), name(k + 1, e)},
                    "boundary of 1_" + idx(k + 1) + " is not the cell");
        }
      }
    }
  }

  void check_composite_boundaries() {
    for (std::size_t k = 1; k <= c_.dim(); ++k) {
      for (std::size_t i = 0; i < k; ++i) {
        for (CellId u = 0; u < x_.size(k); ++u) {
          for (CellId v : after(i, k, u)) {
            auto w = comp(i, k, u, v);
            if (!w) continue;
            for (Side side : {Side::Source, Side::Target}) {
              CellId actual = x_.boundary(side, k, *w);
              std::optional<CellId> expected;
              if (i + 1 == k) {
                expected = x_.boundary(side, k, side == Side::Source ? u : v);
              } else {
                expected = comp(i, k - 1, x_.boundary(side, k, u),
                                x_.boundary(side, k, v));
              }
              if (expected && *expected != actual) {
                violation("S-ii", {name(k, u), name(k, v)},
                          std::string(side == Side::Source ? "source" : "target") +
                              " of o_" + idx(i) + " composite in dimension " +
                              idx(k));
              }
            }
          }
        }
      }
    }
  }

  void check_units() {
    for (std::size_t k = 1; k <= c_.dim(); ++k) {
      for (std::size_t i = 0; i < k; ++i) {
        for (CellId u = 0; u < x_.size(k); ++u) {
          CellId left = c_.unit(k, i, c_.boundary(Side::Source, i, k, u));
          CellId right = c_.unit(k, i, c_.boundary(Side::Target, i, k, u));
          auto lu = comp(i, k, left, u);
          auto ur = comp(i, k, u, right);
          if ((lu && *lu != u) || (ur && *ur != u)) {
            violation("S-iii", {name(k, u)},
                      "unit law for o_" + idx(i) + " in dimension " + idx(k));
          }
        }
      }
    }
  }

  void check_associativity() {
    for (std::size_t k = 1; k <= c_.dim(); ++k) {
      for (std::size_t i = 0; i < k; ++i) {
        for (CellId u = 0; u < x_.size(k); ++u) {
          for (CellId v : after(i, k, u)) {
            auto uv = comp(i, k, u, v);
            for (CellId w : after(i, k, v)) {
              auto vw = comp(i, k, v, w);
              if (!uv || !vw) continue;
              auto lhs = comp(i, k, *uv, w);
              auto rhs = comp(i, k, u, *vw);
              if (lhs && rhs && *lhs != *rhs) {
                violation("S-iv", {name(k, u), name(k, v), name(k, w)},
                          "o_" + idx(i) + " in dimension " + idx(k));
              }
            }
          }
        }
      }
    }
  }

  void check_identity_functoriality() {
    for (std::size_t k = 1; k < c_.dim(); ++k) {
      for (std::size_t i = 0; i < k; ++i) {
        for (CellId u = 0; u < x_.size(k); ++u) {
          for (CellId v : after(i, k, u)) {
            auto uv = comp(i, k, u, v);
            if (!uv) continue;
            CellId lhs = c_.identity(k, *uv);
            auto rhs = comp(i, k + 1, c_.identity(k, u), c_.identity(k, v));
            if (lhs != kUndefined && rhs && lhs != *rhs) {
              violation("S-v", {name(k, u), name(k, v)},
                        "1_" + idx(k + 1) + " of an o_" + idx(i) + " composite");
            }
          }
        }
      }
    }
  }

  void check_exchange() {
    for (std::size_t k = 2; k <= c_.dim(); ++k) {
      for (std::size_t j = 1; j < k; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
          for (CellId u = 0; u < x_.size(k); ++u) {
            for (CellId v : after(i, k, u)) {
              auto uv = comp(i, k, u, v);
              if (!uv) continue;
              for (CellId u2 : after(j, k, u)) {
                auto uu2 = comp(j, k, u, u2);
                if (!uu2) continue;
                for (CellId v2 : after(j, k, v)) {
                  auto vv2 = comp(j, k, v, v2);
                  auto u2v2 = comp(i, k, u2, v2);
                  if (!vv2 || !u2v2) continue;
                  auto lhs = comp(j, k, *uv, *u2v2);
                  auto rhs = comp(i, k, *uu2, *vv2);
                  if (lhs && rhs && *lhs != *rhs) {
                    violation("S-vi",
                              {name(k, u), name(k, u2), name(k, v), name(k, v2)},
                              "exchange of o_" + idx(i) + " and o_" + idx(j) +
                                  " in dimension " + idx(k));
                  }
                }
              }
            }
          }
        }
      }
    }
  }

  const FiniteStrictCat& c_;
  const GlobularSet& x_;
  Report& report_;
  std::vector<std::vector<std::vector<std::vector<CellId>>>> by_source_;
};

}  // namespace

Report check_axioms(const FiniteStrictCat& c) {
  Report report;
  AxiomChecker(c, report).run();
  return report;
}

FiniteStrictCat sc_truncate(const FiniteStrictCat& c, std::size_t k) {
  FiniteStrictCat out(truncate(c.carrier(), k));
  for (std::size_t m = 0; m < k; ++m) {
    for (CellId u = 0; u < c.carrier().size(m); ++u) {
      out.set_identity(m, u, c.identity(m, u));
    }
  }
  for (std::size_t m = 1; m <= k; ++m) {
    const auto n = static_cast<CellId>(c.carrier().size(m));
    for (std::size_t i = 0; i < m; ++i) {
      for (CellId u = 0; u < n; ++u) {
        for (CellId v = 0; v < n; ++v) {
          if (auto w = c.comp(i, m, u, v)) out.set_comp(i, m, u, v, *w);
        }
      }
    }
  }
  return out;
}

namespace {

// Copies identities and compositions of c up to its own dimension.
void copy_structure(const FiniteStrictCat& c, FiniteStrictCat& out) {
  const std::size_t k = c.dim();
  for (std::size_t m = 0; m < k; ++m) {
    for (CellId u = 0; u < c.carrier().size(m); ++u) {
      out.set_identity(m, u, c.identity(m, u));
    }
  }
  for (std::size_t m = 1; m <= k; ++m) {
    const auto n = static_cast<CellId>(c.carrier().size(m));
    for (std::size_t i = 0; i < m; ++i) {
      for (CellId u = 0; u < n; ++u) {
        for (CellId v = 0; v < n; ++v) {
          if (auto w = c.comp(i, m, u, v)) out.set_comp(i, m, u, v, *w);
        }
      }
    }
  }
}

}  // namespace

FiniteStrictCat sc_include(const FiniteStrictCat& c, std::size_t l) {
  const std::size_t k = c.dim();
  if (l < k) {
    throw DimensionError("cannot include a strict " + idx(k) +
                         "-category into dimension " + idx(l));
  }
  const GlobularSet& x = c.carrier();
  GlobularSet carrier = include(x, l);
  for (std::size_t m = k + 1; m <= l; ++m) {
    for (CellId u = 0; u < x.size(k); ++u) carrier.add(m, x.name(k, u), u, u);
  }
  FiniteStrictCat out(std::move(carrier));
  copy_structure(c, out);
  const auto n = static_cast<CellId>(x.size(k));
  for (std::size_t m = k; m < l; ++m) {
    for (CellId u = 0; u < n; ++u) out.set_identity(m, u, u);
  }
  for (std::size_t m = k + 1; m <= l; ++m) {
    for (std::size_t i = 0; i < m; ++i) {
      for (CellId u = 0; u < n; ++u) {
        if (i >= k) {
          out.set_comp(i, m, u, u, u);
          continue;
        }
        for (CellId v = 0; v < n; ++v) {
          if (auto w = c.comp(i, k, u, v)) out.set_comp(i, m, u, v, *w);
        }
      }
    }
  }
  return out;
}

FiniteStrictCat sc_coinclude(const FiniteStrictCat& c, std::size_t l) {
  const std::size_t k = c.dim();
  if (l < k) {
    throw DimensionError("cannot co-include a strict " + idx(k) +
                         "-category into dimension " + idx(l));
  }
  const GlobularSet& x = c.carrier();
  FiniteStrictCat out(coinclude(x, l));
  copy_structure(c, out);
  if (l == k) return out;

  const GlobularSet& y = out.carrier();
  const auto pairs = static_cast<CellId>(y.size(k + 1));
  std::map<std::pair<CellId, CellId>, CellId> pair_index;
  for (CellId p = 0; p < pairs; ++p) {
    pair_index[{y.source(k + 1, p), y.target(k + 1, p)}] = p;
  }
  for (CellId u = 0; u < x.size(k); ++u) {
    out.set_identity(k, u, pair_index.at({u, u}));
  }
  for (std::size_t m = k + 1; m < l; ++m) {
    for (CellId p = 0; p < pairs; ++p) out.set_identity(m, p, p);
  }
  for (std::size_t m = k + 1; m <= l; ++m) {
    for (std::size_t i = 0; i < m; ++i) {
      for (CellId p = 0; p < pairs; ++p) {
        for (CellId q = 0; q < pairs; ++q) {
          if (!out.composable(i, m, p, q)) continue;
          CellId u = y.source(k + 1, p), v = y.target(k + 1, p);
          CellId u2 = y.source(k + 1, q), v2 = y.target(k + 1, q);
          if (i < k) {
            CellId a = c.compose(i, k, u, u2);
            CellId b = c.compose(i, k, v, v2);
            out.set_comp(i, m, p, q, pair_index.at({a, b}));
          } else {
            out.set_comp(i, m, p, q, pair_index.at({u, v2}));
          }
        }
      }
    }
  }
  return out;
}

Report check_functor(const NFunctor& f, const FiniteStrictCat& c,
                     const FiniteStrictCat& d) {
  if (!(f.map.source == c.carrier()) || !(f.map.target == d.carrier())) {
    throw StructuralError("functor carriers do not match the categories");
  }
  Report report;
  if (!check_morphism(f.map)) {
    report.errors.push_back({"morphism", {}, "not a morphism of globular sets"});
    return report;
  }
  const auto& x = c.carrier();
  const auto& y = d.carrier();
  const auto& map = f.map.maps;
  for (std::size_t k = 0; k < c.dim(); ++k) {
    for (CellId u = 0; u < x.size(k); ++u) {
      CellId lhs = map[k + 1].at(c.identity(k, u));
      if (lhs != d.identity(k, map[k][u])) {
        report.violations.push_back(
            {"identity", {x.name(k, u)}, "F(1 u) != 1 F(u)"});
      }
    }
  }
  for (std::size_t k = 1; k <= c.dim(); ++k) {
    for (std::size_t i = 0; i < k; ++i) {
      for (CellId u = 0; u < x.size(k); ++u) {
        for (CellId v = 0; v < x.size(k); ++v) {
          auto w = c.comp(i, k, u, v);
          if (!w) continue;
          auto image = d.comp(i, k, map[k][u], map[k][v]);
          if (!image || *image != map[k][*w]) {
            report.violations.push_back(
                {"composition",
                 {x.name(k, u), x.name(k, v)},
                 "F(u o_" + idx(i) + " v) = " + y.name(k, map[k][*w])});
          }
        }
      }
    }
  }
  return report;
}

NFunctor sc_counit(const FiniteStrictCat& c, std::size_t k) {
  FiniteStrictCat source = sc_include(sc_truncate(c, k), c.dim());
  GlobMorphism map{source.carrier(), c.carrier(), {}};
  for (std::size_t m = 0; m <= c.dim(); ++m) {
    auto& level = map.maps.emplace_back(source.carrier().size(m));
    for (CellId u = 0; u < level.size(); ++u) {
      level[u] = m <= k ? u : c.unit(m, k, u);
    }
  }
  return NFunctor{std::move(map)};
}

FiniteStrictCat terminal_category(std::size_t n) {
  GlobularSet x(n);
  x.add("*");
  for (std::size_t k = 1; k <= n; ++k) x.add(k, "*", 0, 0);
  FiniteStrictCat c(std::move(x));
  for (std::size_t k = 0; k < n; ++k) c.set_identity(k, 0, 0);
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < k; ++i) c.set_comp(i, k, 0, 0, 0);
  }
  return c;
}

FiniteStrictCat monoid_category(std::string_view object,
                                const std::vector<std::string>& elements,
                                const std::vector<std::size_t>& table,
                                std::size_t unit) {
  const std::size_t n = elements.size();
  if (table.size() != n * n || unit >= n) {
    throw StructuralError("monoid table does not match its elements");
  }
  GlobularSet x(1);
  x.add(std::string(object));
  for (const auto& e : elements) x.add(1, e, 0, 0);
  FiniteStrictCat c(std::move(x));
  c.set_identity(0, 0, static_cast<CellId>(unit));
  for (CellId a = 0; a < n; ++a) {
    for (CellId b = 0; b < n; ++b) {
      auto w = table[a * n + b];
      if (w >= n) throw StructuralError("monoid table entry out of range");
      c.set_comp(0, 1, a, b, static_cast<CellId>(w));
    }
  }
  return c;
}

}  // namespace polycat
