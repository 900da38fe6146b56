#include "polycat/precat.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

#include "polycat/errors.hpp"

namespace polycat {

namespace {
std::string idx(std::size_t i) { return std::to_string(i); }
}  // namespace

FinitePrecat::FinitePrecat(GlobularSet carrier) : carrier_(std::move(carrier)) {
  const std::size_t n = carrier_.dim();
  identity_.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    identity_[k].assign(carrier_.size(k), kUndefined);
  }
  pcomp_.resize(n + 1);
  for (std::size_t k = 1; k <= n; ++k) {
    pcomp_[k].resize(n + 1);
    for (std::size_t l = 1; l <= n; ++l) {
      pcomp_[k][l].assign(carrier_.size(k) * carrier_.size(l), kUndefined);
    }
  }
}

void FinitePrecat::check_dims(std::size_t k, std::size_t l) const {
  if (k == 0 || l == 0 || k > dim() || l > dim()) {
    throw DimensionError("no precategory composition between " + idx(k) +
                         "-cells and " + idx(l) + "-cells");
  }
}

void FinitePrecat::set_identity(std::size_t k, CellId u, CellId unit) {
  if (k >= dim()) throw DimensionError("no identities above the top dimension");
  if (u >= carrier_.size(k) || unit >= carrier_.size(k + 1)) {
    throw StructuralError("identity entry refers to an undeclared cell");
  }
  identity_[k][u] = unit;
}

CellId FinitePrecat::identity(std::size_t k, CellId u) const {
  if (k >= dim()) throw DimensionError("no identities above the top dimension");
  return identity_[k].at(u);
}

CellId FinitePrecat::unit(std::size_t l, std::size_t k, CellId u) const {
  if (l < k || l > dim()) {
    throw DimensionError("cannot lift a " + idx(k) + "-cell to dimension " +
                         idx(l));
  }
  for (std::size_t m = k; m < l && u != kUndefined; ++m) u = identity(m, u);
  return u;
}

void FinitePrecat::set_pcomp(std::size_t k, std::size_t l, CellId u, CellId v,
                             CellId w) {
  check_dims(k, l);
  if (u >= carrier_.size(k) || v >= carrier_.size(l) ||
      w >= carrier_.size(std::max(k, l))) {
    throw StructuralError("composition entry refers to an undeclared cell");
  }
  pcomp_[k][l][u * carrier_.size(l) + v] = w;
}

std::optional<CellId> FinitePrecat::pcomp(std::size_t k, std::size_t l,
                                          CellId u, CellId v) const {
  check_dims(k, l);
  CellId w = pcomp_[k][l].at(u * carrier_.size(l) + v);
  if (w == kUndefined) return std::nullopt;
  return w;
}

CellId FinitePrecat::star(std::size_t k, std::size_t l, CellId u,
                          CellId v) const {
  auto w = pcomp(k, l, u, v);
  if (!w) {
    throw DomainError(carrier_.name(k, u) + " *_" + idx(std::min(k, l) - 1) +
                      " " + carrier_.name(l, v) + " is undefined");
  }
  return *w;
}

CellId FinitePrecat::boundary(Side side, std::size_t i, std::size_t k,
                              CellId u) const {
  return iterated_boundary(carrier_, side, static_cast<int>(i),
                           Cell{static_cast<int>(k), u})
      .id;
}

bool FinitePrecat::composable(std::size_t k, std::size_t l, CellId u,
                              CellId v) const {
  std::size_t i = std::min(k, l) - 1;
  return boundary(Side::Target, i, k, u) == boundary(Side::Source, i, l, v);
}

namespace {

class PrecatChecker {
 public:
  PrecatChecker(const FinitePrecat& p, Report& report)
      : p_(p), x_(p.carrier()), report_(report) {}

  void run() {
    auto glob = validate_globular(x_);
    for (const auto& v : glob.violations) {
      report_.errors.push_back({"globular", {v.cell}, "at i=" + idx(v.i)});
    }
    if (!glob.ok()) return;
    check_domains();
    check_identity_boundaries();
    check_composite_boundaries();
    check_units();
    check_identity_compatibility();
    check_associativity();
    check_distributivity();
  }

 private:
  std::size_t n() const { return p_.dim(); }
  std::string name(std::size_t k, CellId u) const {
    return u == kUndefined ? std::string("<undefined>") : x_.name(k, u);
  }

  // Partial star that propagates undefinedness.
  std::optional<CellId> star(std::size_t k, std::size_t l,
                             std::optional<CellId> u,
                             std::optional<CellId> v) const {
    if (!u || !v || *u == kUndefined || *v == kUndefined) return std::nullopt;
    return p_.pcomp(k, l, *u, *v);
  }

  void violation(const char* label, std::vector<std::string> witness,
                 std::string detail) {
    report_.violations.push_back({label, std::move(witness), std::move(detail)});
  }

  void check_domains() {
    for (std::size_t k = 0; k < n(); ++k) {
      for (CellId u = 0; u < x_.size(k); ++u) {
        if (p_.identity(k, u) == kUndefined) {
          report_.errors.push_back(
              {"domain", {name(k, u)}, "identity 1_" + idx(k + 1) + " undefined"});
        }
      }
    }
    for (std::size_t k = 1; k <= n(); ++k) {
      for (std::size_t l = 1; l <= n(); ++l) {
        for (CellId u = 0; u < x_.size(k); ++u) {
          for (CellId v = 0; v < x_.size(l); ++v) {
            bool defined = p_.pcomp(k, l, u, v).has_value();
            if (defined != p_.composable(k, l, u, v)) {
              report_.errors.push_back(
                  {"domain",
                   {name(k, u), name(l, v)},
                   std::string(defined ? "defined on non-composable pair"
                                       : "undefined on composable pair") +
                       " in dimensions (" + idx(k) + "," + idx(l) + ")"});
            }
          }
        }
      }
    }
  }

  void check_identity_boundaries() {
    for (std::size_t k = 0; k < n(); ++k) {
      for (CellId u = 0; u < x_.size(k); ++u) {
        CellId e = p_.identity(k, u);
        if (e == kUndefined) continue;
        if (x_.source(k + 1, e) != u || x_.target(k + 1, e) != u) {
          violation("P-i", {name(k, u)}, "boundary of 1_" + idx(k + 1));
        }
      }
    }
  }

  void check_composite_boundaries() {
    for (std::size_t k = 1; k <= n(); ++k) {
      for (std::size_t l = 1; l <= n(); ++l) {
        const std::size_t m = std::max(k, l);
        for (CellId u = 0; u < x_.size(k); ++u) {
          for (CellId v = 0; v < x_.size(l); ++v) {
            auto w = p_.pcomp(k, l, u, v);
            if (!w) continue;
            for (Side side : {Side::Source, Side::Target}) {
              CellId actual = x_.boundary(side, m, *w);
              std::optional<CellId> expected;
              if (k == l) {
                expected = x_.boundary(side, m, side == Side::Source ? u : v);
              } else if (k > l) {
                expected = star(k - 1, l, x_.boundary(side, k, u), v);
              } else {
                expected = star(k, l - 1, u, x_.boundary(side, l, v));
              }
              if (expected && *expected != actual) {
                violation("P-ii", {name(k, u), name(l, v)},
                          std::string(side == Side::Source ? "source" : "target") +
                              " of a composite in dimensions (" + idx(k) + "," +
                              idx(l) + ")");
              }
            }
          }
        }
      }
    }
  }

  void check_units() {
    for (std::size_t k = 1; k <= n(); ++k) {
      for (std::size_t i = 0; i < k; ++i) {
        for (CellId u = 0; u < x_.size(k); ++u) {
          CellId left = p_.unit(i + 1, i, p_.boundary(Side::Source, i, k, u));
          CellId right = p_.unit(i + 1, i, p_.boundary(Side::Target, i, k, u));
          auto lu = star(i + 1, k, left, u);
          auto ur = star(k, i + 1, u, right);
          if ((lu && *lu != u) || (ur && *ur != u)) {
            violation("P-iii", {name(k, u)},
                      "unit law for *_" + idx(i) + " in dimension " + idx(k));
          }
        }
      }
    }
  }

  // 1(w) *_i v = 1(w *_i v) and v *_i 1(w) = 1(v *_i w), w of dimension
  // j >= i + 1, v of dimension i + 1.
  void check_identity_compatibility() {
    for (std::size_t i = 0; i + 1 < n(); ++i) {
      for (std::size_t j = i + 1; j < n(); ++j) {
        for (CellId w = 0; w < x_.size(j); ++w) {
          CellId e = p_.identity(j, w);
          for (CellId v = 0; v < x_.size(i + 1); ++v) {
            auto lhs = star(j + 1, i + 1, e, v);
            auto inner = star(j, i + 1, w, v);
            if (lhs && inner && *lhs != p_.identity(j, *inner)) {
              violation("P-iii", {name(j, w), name(i + 1, v)},
                        "identity compatibility on the left");
            }
            lhs = star(i + 1, j + 1, v, e);
            inner = star(i + 1, j, v, w);
            if (lhs && inner && *lhs != p_.identity(j, *inner)) {
              violation("P-iii", {name(i + 1, v), name(j, w)},
                        "identity compatibility on the right");
            }
          }
        }
      }
    }
  }

  void check_associativity() {
    for (std::size_t a = 1; a <= n(); ++a) {
      for (std::size_t b = 1; b <= n(); ++b) {
        for (std::size_t c = 1; c <= n(); ++c) {
          const std::size_t i = std::min(a, b) - 1;
          const std::size_t ab = std::max(a, b), bc = std::max(b, c);
          if (std::min(ab, c) - 1 != i || std::min(b, c) - 1 != i ||
              std::min(a, bc) - 1 != i) {
            continue;
          }
          for (CellId u = 0; u < x_.size(a); ++u) {
            for (CellId v = 0; v < x_.size(b); ++v) {
              auto uv = p_.pcomp(a, b, u, v);
              if (!uv) continue;
              for (CellId w = 0; w < x_.size(c); ++w) {
                auto vw = p_.pcomp(b, c, v, w);
                if (!vw) continue;
                auto lhs = star(ab, c, uv, w);
                auto rhs = star(a, bc, u, vw);
                if (lhs && rhs && *lhs != *rhs) {
                  violation("P-iv", {name(a, u), name(b, v), name(c, w)},
                            "*_" + idx(i) + " in dimensions (" + idx(a) + "," +
                                idx(b) + "," + idx(c) + ")");
                }
              }
            }
          }
        }
      }
    }
  }

  void check_distributivity() {
    for (std::size_t i = 0; i + 2 <= n(); ++i) {
      for (std::size_t j = i + 1; j < n(); ++j) {
        for (std::size_t b = j + 1; b <= n(); ++b) {
          for (std::size_t c = j + 1; c <= n(); ++c) {
            if (std::min(b, c) != j + 1) continue;
            distribute(i, b, c);
          }
        }
      }
    }
  }

  void distribute(std::size_t i, std::size_t b, std::size_t c) {
    const std::size_t a = i + 1, bc = std::max(b, c);
    for (CellId v = 0; v < x_.size(b); ++v) {
      for (CellId v2 = 0; v2 < x_.size(c); ++v2) {
        auto vv = p_.pcomp(b, c, v, v2);
        if (!vv) continue;
        for (CellId u = 0; u < x_.size(a); ++u) {
          auto lhs = star(a, bc, u, vv);
          auto rhs = star(b, c, star(a, b, u, v), star(a, c, u, v2));
          if (lhs && rhs && *lhs != *rhs) {
            violation("P-v", {name(a, u), name(b, v), name(c, v2)},
                      "left distributivity of *_" + idx(i));
          }
          lhs = star(bc, a, vv, u);
          rhs = star(b, c, star(b, a, v, u), star(c, a, v2, u));
          if (lhs && rhs && *lhs != *rhs) {
            violation("P-v", {name(b, v), name(c, v2), name(a, u)},
                      "right distributivity of *_" + idx(i));
          }
        }
      }
    }
  }

  const FinitePrecat& p_;
  const GlobularSet& x_;
  Report& report_;
};

}  // namespace

Report check_precategory_axioms(const FinitePrecat& p) {
  Report report;
  PrecatChecker(p, report).run();
  return report;
}

Report check_condition_E(const FinitePrecat& p) {
  Report report;
  const auto& x = p.carrier();
  const std::size_t n = p.dim();
  auto star = [&](std::size_t k, std::size_t l, std::optional<CellId> u,
                  std::optional<CellId> v) -> std::optional<CellId> {
    if (!u || !v) return std::nullopt;
    return p.pcomp(k, l, *u, *v);
  };
  for (std::size_t k = 2; k <= n; ++k) {
    for (std::size_t l = 2; l <= n; ++l) {
      const std::size_t i = std::min(k, l) - 1;
      for (CellId u = 0; u < x.size(k); ++u) {
        for (CellId v = 0; v < x.size(l); ++v) {
          if (p.boundary(Side::Target, i - 1, k, u) !=
              p.boundary(Side::Source, i - 1, l, v)) {
            continue;
          }
          CellId su = p.boundary(Side::Source, i, k, u);
          CellId tu = p.boundary(Side::Target, i, k, u);
          CellId sv = p.boundary(Side::Source, i, l, v);
          CellId tv = p.boundary(Side::Target, i, l, v);
          auto lhs = star(k, l, star(k, i, u, sv), star(i, l, tu, v));
          auto rhs = star(k, l, star(i, l, su, v), star(k, i, u, tv));
          std::vector<std::string> witness{x.name(k, u), x.name(l, v)};
          if (!lhs || !rhs) {
            report.errors.push_back(
                {"domain", witness, "a side of the exchange condition is undefined"});
          } else if (*lhs != *rhs) {
            report.violations.push_back(
                {"E", witness,
                 "at i=" + idx(i) + ": " + x.name(std::max(k, l), *lhs) +
                     " != " + x.name(std::max(k, l), *rhs)});
          }
        }
      }
    }
  }
  return report;
}

FinitePrecat theta(const FiniteStrictCat& c) {
  FinitePrecat p(c.carrier());
  const auto& x = c.carrier();
  const std::size_t n = c.dim();
  for (std::size_t k = 0; k < n; ++k) {
    for (CellId u = 0; u < x.size(k); ++u) p.set_identity(k, u, c.identity(k, u));
  }
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t l = 1; l <= n; ++l) {
      const std::size_t i = std::min(k, l) - 1, m = std::max(k, l);
      for (CellId u = 0; u < x.size(k); ++u) {
        for (CellId v = 0; v < x.size(l); ++v) {
          if (!p.composable(k, l, u, v)) continue;
          p.set_pcomp(k, l, u, v,
                      c.compose(i, m, c.unit(m, k, u), c.unit(m, l, v)));
        }
      }
    }
  }
  return p;
}

namespace {

class ThetaBar {
 public:
  ThetaBar(const FinitePrecat& p, Expansion e) : p_(p), expansion_(e) {}

  CellId comp(std::size_t i, std::size_t k, CellId u, CellId v) {
    if (i + 1 == k) return p_.star(k, k, u, v);
    auto key = std::make_tuple(i, k, u, v);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    CellId a, b;
    if (expansion_ == Expansion::Primary) {
      a = p_.star(k, i + 1, u, p_.boundary(Side::Source, i + 1, k, v));
      b = p_.star(i + 1, k, p_.boundary(Side::Target, i + 1, k, u), v);
    } else {
      a = p_.star(i + 1, k, p_.boundary(Side::Source, i + 1, k, u), v);
      b = p_.star(k, i + 1, u, p_.boundary(Side::Target, i + 1, k, v));
    }
    CellId w = comp(i + 1, k, a, b);
    memo_.emplace(key, w);
    return w;
  }

 private:
  const FinitePrecat& p_;
  Expansion expansion_;
  std::map<std::tuple<std::size_t, std::size_t, CellId, CellId>, CellId> memo_;
};

}  // namespace

FiniteStrictCat theta_bar(const FinitePrecat& p, Expansion expansion) {
  auto e = check_condition_E(p);
  if (!e.ok()) {
    const auto& first = e.errors.empty() ? e.violations.front() : e.errors.front();
    throw DomainError("precategory does not satisfy the exchange condition: " +
                      to_string(first));
  }
  FiniteStrictCat c(p.carrier());
  const auto& x = p.carrier();
  const std::size_t n = p.dim();
  for (std::size_t k = 0; k < n; ++k) {
    for (CellId u = 0; u < x.size(k); ++u) c.set_identity(k, u, p.identity(k, u));
  }
  ThetaBar builder(p, expansion);
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < k; ++i) {
      for (CellId u = 0; u < x.size(k); ++u) {
        for (CellId v = 0; v < x.size(k); ++v) {
          if (!c.composable(i, k, u, v)) continue;
          c.set_comp(i, k, u, v, builder.comp(i, k, u, v));
        }
      }
    }
  }
  return c;
}

}  // namespace polycat
