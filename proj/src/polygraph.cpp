#include "polycat/polygraph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "polycat/errors.hpp"
#include "polycat/freecat.hpp"

namespace polycat {

Polygraph::Polygraph(std::size_t dim, std::string name)
    : name_(std::move(name)), gens_(dim + 1) {}

void Polygraph::insert(std::size_t k, Generator g) {
  if (k > dim()) {
    throw DimensionError("generator '" + g.name + "' of dimension " +
                         std::to_string(k) + " exceeds polygraph dimension " +
                         std::to_string(dim()));
  }
  if (g.name.empty()) throw StructuralError("empty generator name");
  if (index_.contains(g.name)) {
    throw StructuralError("duplicate generator '" + g.name + "'");
  }
  index_.emplace(g.name, GenRef{k, gens_[k].size()});
  gens_[k].push_back(std::move(g));
}

void Polygraph::add(std::string name) {
  insert(0, Generator{std::move(name), std::nullopt, std::nullopt});
}

void Polygraph::add(std::size_t k, std::string name, Term source, Term target) {
  if (k == 0) throw DimensionError("0-generators have no boundary");
  insert(k, Generator{std::move(name), std::move(source), std::move(target)});
}

void Polygraph::add(std::size_t k, std::string name, std::string_view source,
                    std::string_view target) {
  add(k, std::move(name), parse_term(source), parse_term(target));
}

const std::vector<Generator>& Polygraph::generators(std::size_t k) const {
  if (k > dim()) {
    throw DimensionError("polygraph has dimension " + std::to_string(dim()));
  }
  return gens_[k];
}

std::optional<GenRef> Polygraph::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

// Equality of typed cells: canonical forms up to dimension 2, syntactic above.
bool same_cell(const FreeCategory& c, const FreeCell& a, const FreeCell& b) {
  if (a.dim() != b.dim()) return false;
  if (a.dim() <= 2) return c.equal(a, b);
  return a == b;
}

void require_known(const Polygraph& p, const Term& t, std::size_t below,
                   const std::string& owner) {
  switch (t.kind()) {
    case Term::Kind::Gen: {
      auto ref = p.find(t.name());
      if (!ref || ref->dim >= below) {
        throw StructuralError("boundary of '" + owner + "' mentions " +
                              (ref ? "higher-dimensional" : "unknown") +
                              " generator '" + t.name() + "'");
      }
      return;
    }
    case Term::Kind::Id:
      require_known(p, t.arg(), below, owner);
      return;
    case Term::Kind::Comp:
      require_known(p, t.lhs(), below, owner);
      require_known(p, t.rhs(), below, owner);
      return;
  }
}

Term rename(const Term& t,
            const std::function<std::string(const std::string&)>& f) {
  switch (t.kind()) {
    case Term::Kind::Gen:
      return Term::gen(f(t.name()));
    case Term::Kind::Id:
      return Term::id(rename(t.arg(), f));
    case Term::Kind::Comp:
      return Term::comp(t.index(), rename(t.lhs(), f), rename(t.rhs(), f));
  }
  return t;
}

Polygraph pad(const Polygraph& p, std::size_t n) {
  if (n <= p.dim()) return p;
  Polygraph out(n, p.name());
  for (std::size_t k = 0; k <= p.dim(); ++k) {
    for (const auto& g : p.generators(k)) {
      if (k == 0) {
        out.add(g.name);
      } else {
        out.add(k, g.name, *g.source, *g.target);
      }
    }
  }
  return out;
}

}  // namespace

Report validate_polygraph(const Polygraph& p) {
  Report report;
  for (std::size_t k = 1; k <= p.dim(); ++k) {
    for (const auto& g : p.generators(k)) {
      require_known(p, *g.source, k, g.name);
      require_known(p, *g.target, k, g.name);
    }
  }
  for (std::size_t k = 1; k <= p.dim(); ++k) {
    // Lower dimensions are valid here, so their free category exists.
    FreeCategory lower(truncate_pol(p, k - 1));
    for (const auto& g : p.generators(k)) {
      FreeCell s, t;
      try {
        s = lower.infer(*g.source);
        t = lower.infer(*g.target);
      } catch (const TypingError& e) {
        report.violations.push_back({"typing", {g.name}, e.what()});
        continue;
      }
      if (s.dim() != k - 1 || t.dim() != k - 1) {
        report.violations.push_back(
            {"dimension", {g.name},
             "boundaries have dimensions " + std::to_string(s.dim()) + " and " +
                 std::to_string(t.dim()) + ", expected " + std::to_string(k - 1)});
        continue;
      }
      if (k < 2) continue;
      for (Side side : {Side::Source, Side::Target}) {
        FreeCell a = lower.boundary(side, s);
        FreeCell b = lower.boundary(side, t);
        if (!same_cell(lower, a, b)) {
          report.violations.push_back(
              {"boundary", {g.name},
               std::string(side == Side::Source ? "sources" : "targets") +
                   " of the boundaries differ: " + lower.to_string(a) + " vs " +
                   lower.to_string(b)});
        }
      }
    }
    if (!report.violations.empty()) break;
  }
  return report;
}

Polygraph truncate_pol(const Polygraph& p, std::size_t k) {
  if (k > p.dim()) {
    throw DimensionError("cannot truncate a " + std::to_string(p.dim()) +
                         "-polygraph to dimension " + std::to_string(k));
  }
  Polygraph out(k, p.name());
  for (std::size_t j = 0; j <= k; ++j) {
    for (const auto& g : p.generators(j)) {
      if (j == 0) {
        out.add(g.name);
      } else {
        out.add(j, g.name, *g.source, *g.target);
      }
    }
  }
  return out;
}

Polygraph relabel(const Polygraph& p,
                  const std::unordered_map<std::string, std::string>& names) {
  auto f = [&](const std::string& n) {
    auto it = names.find(n);
    return it == names.end() ? n : it->second;
  };
  Polygraph out(p.dim(), p.name());
  for (std::size_t k = 0; k <= p.dim(); ++k) {
    for (const auto& g : p.generators(k)) {
      if (k == 0) {
        out.add(f(g.name));
      } else {
        out.add(k, f(g.name), rename(*g.source, f), rename(*g.target, f));
      }
    }
  }
  return out;
}

PolMorphism identity_pol_morphism(const Polygraph& p) {
  PolMorphism f{p, p, {}};
  for (std::size_t k = 0; k <= p.dim(); ++k) {
    auto& level = f.maps.emplace_back(p.generators(k).size());
    std::iota(level.begin(), level.end(), 0);
  }
  return f;
}

namespace {

void check_shape(const PolMorphism& f) {
  if (f.source.dim() > f.target.dim() || f.maps.size() != f.source.dim() + 1) {
    throw StructuralError("morphism maps do not match the polygraph dimensions");
  }
  for (std::size_t k = 0; k <= f.source.dim(); ++k) {
    if (f.maps[k].size() != f.source.generators(k).size()) {
      throw StructuralError("morphism is not total in dimension " +
                            std::to_string(k));
    }
    for (auto image : f.maps[k]) {
      if (image >= f.target.generators(k).size()) {
        throw StructuralError("morphism image out of range in dimension " +
                              std::to_string(k));
      }
    }
  }
}

std::function<std::string(const std::string&)> image_names(const PolMorphism& f) {
  return [&f](const std::string& n) {
    auto ref = f.source.find(n);
    if (!ref) throw StructuralError("unknown generator '" + n + "'");
    return f.target.generator(ref->dim, f.maps[ref->dim][ref->index]).name;
  };
}

}  // namespace

Report check_pol_morphism(const PolMorphism& f) {
  check_shape(f);
  Report report;
  FreeCategory target(f.target);
  auto names = image_names(f);
  for (std::size_t k = 1; k <= f.source.dim(); ++k) {
    for (std::size_t g = 0; g < f.source.generators(k).size(); ++g) {
      const auto& gen = f.source.generator(k, g);
      const auto& img = f.target.generator(k, f.maps[k][g]);
      bool ok = same_cell(target, target.infer(rename(*gen.source, names)),
                          target.infer(*img.source)) &&
                same_cell(target, target.infer(rename(*gen.target, names)),
                          target.infer(*img.target));
      if (!ok) {
        report.violations.push_back(
            {"boundary", {gen.name, img.name},
             "image of the boundary is not the boundary of the image"});
      }
    }
  }
  return report;
}

Polygraph pushout(const PolMorphism& f, const PolMorphism& g) {
  check_shape(f);
  check_shape(g);
  if (!(f.source == g.source)) {
    throw StructuralError("pushout legs have different domains");
  }
  const Polygraph& r = f.source;
  const std::size_t n = std::max(f.target.dim(), g.target.dim());
  const Polygraph p = pad(f.target, n);
  const Polygraph q = pad(g.target, n);

  std::unordered_map<std::string, std::string> left, right;
  std::vector<std::vector<std::size_t>> order(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    const std::size_t np = p.generators(k).size();
    const std::size_t total = np + q.generators(k).size();
    std::vector<std::size_t> parent(total);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    if (k <= r.dim()) {
      for (std::size_t e = 0; e < r.generators(k).size(); ++e) {
        std::size_t a = root(f.maps[k][e]), b = root(np + g.maps[k][e]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    // Elements are scanned P first, so a class is named after its first
    // element of P whenever it has one.
    std::unordered_map<std::size_t, std::string> name_of_root;
    for (std::size_t x = 0; x < total; ++x) {
      std::size_t rt = root(x);
      auto it = name_of_root.find(rt);
      if (it == name_of_root.end()) {
        std::string nm = x < np ? "l." + p.generator(k, x).name
                                : "r." + q.generator(k, x - np).name;
        it = name_of_root.emplace(rt, nm).first;
        order[k].push_back(x);
      }
      if (x < np) {
        left[p.generator(k, x).name] = it->second;
      } else {
        right[q.generator(k, x - np).name] = it->second;
      }
    }
  }
  Polygraph out(n, p.name() + "+" + q.name());
  for (std::size_t k = 0; k <= n; ++k) {
    const std::size_t np = p.generators(k).size();
    for (std::size_t x : order[k]) {
      const bool from_p = x < np;
      const Generator& gen = from_p ? p.generator(k, x) : q.generator(k, x - np);
      const auto& names = from_p ? left : right;
      auto f_names = [&names](const std::string& nm) { return names.at(nm); };
      if (k == 0) {
        out.add(names.at(gen.name));
      } else {
        out.add(k, names.at(gen.name), rename(*gen.source, f_names),
                rename(*gen.target, f_names));
      }
    }
  }
  return out;
}

Polygraph coproduct(const Polygraph& p, const Polygraph& q) {
  Polygraph empty(0);
  PolMorphism f{empty, p, {{}}};
  PolMorphism g{empty, q, {{}}};
  return pushout(f, g);
}

bool isomorphic(const Polygraph& p, const Polygraph& q) {
  if (p.dim() != q.dim()) return false;
  for (std::size_t k = 0; k <= p.dim(); ++k) {
    if (p.generators(k).size() != q.generators(k).size()) return false;
  }
  FreeCategory cq(q);
  std::unordered_map<std::string, std::string> names;
  std::function<bool(std::size_t, std::size_t, std::vector<bool>&)> search =
      [&](std::size_t k, std::size_t g, std::vector<bool>& used) -> bool {
    if (k > p.dim()) return true;
    if (g == p.generators(k).size()) {
      std::vector<bool> fresh(k + 1 <= p.dim() ? q.generators(k + 1).size() : 0);
      return search(k + 1, 0, fresh);
    }
    const auto& gen = p.generator(k, g);
    auto f = [&](const std::string& nm) { return names.at(nm); };
    for (std::size_t h = 0; h < used.size(); ++h) {
      if (used[h]) continue;
      const auto& img = q.generator(k, h);
      if (k > 0) {
        try {
          if (!same_cell(cq, cq.infer(rename(*gen.source, f)), cq.infer(*img.source)) ||
              !same_cell(cq, cq.infer(rename(*gen.target, f)), cq.infer(*img.target))) {
            continue;
          }
        } catch (const TypingError&) {
          continue;
        }
      }
      used[h] = true;
      names[gen.name] = img.name;
      if (search(k, g + 1, used)) return true;
      used[h] = false;
      names.erase(gen.name);
    }
    return false;
  };
  std::vector<bool> used(q.generators(0).size());
  return search(0, 0, used);
}

// --- cellular extensions -------------------------------------------------

struct ExtensionContext::Impl {
  explicit Impl(CellularExtension e) : extension(std::move(e)) {}

  CellularExtension extension;
  std::size_t k = 0;
  // Polygraph base: the base with the extension generators on top.
  std::unique_ptr<FreeCategory> free;
  // Strict base: the boundaries of each extension generator.
  std::vector<std::pair<CellId, CellId>> strict_gens;
};

namespace {

// A value over a finite strict k-category: a base cell, or a (k+1)-cell
// known through its boundary.
struct StrictValue {
  std::size_t dim = 0;
  CellId cell = 0;
  CellId source = 0;
  CellId target = 0;
  bool unit = false;
};

class StrictTyper {
 public:
  StrictTyper(const FiniteStrictCat& c, const std::vector<ExtensionGenerator>& gens,
              const std::vector<std::pair<CellId, CellId>>& bounds)
      : c_(c), gens_(gens), bounds_(bounds) {}

  StrictValue infer(const Term& t) const {
    const std::size_t k = c_.dim();
    switch (t.kind()) {
      case Term::Kind::Gen: {
        for (std::size_t s = 0; s < gens_.size(); ++s) {
          if (gens_[s].name == t.name()) {
            if (s >= bounds_.size()) {
              throw StructuralError("generator '" + t.name() + "' used in a boundary");
            }
            return StrictValue{k + 1, 0, bounds_[s].first, bounds_[s].second, false};
          }
        }
        for (std::size_t j = k + 1; j-- > 0;) {
          if (auto id = c_.carrier().find(j, t.name())) return StrictValue{j, *id};
        }
        throw StructuralError("unknown cell '" + t.name() + "'");
      }
      case Term::Kind::Id: {
        StrictValue v = infer(t.arg());
        return lift(v, v.dim + 1);
      }
      case Term::Kind::Comp: {
        StrictValue a = infer(t.lhs()), b = infer(t.rhs());
        const std::size_t m = std::max(a.dim, b.dim), i = t.index();
        if (i >= m) {
          throw TypingError("composition *" + std::to_string(i) +
                            " needs a cell of dimension above " + std::to_string(i));
        }
        return compose(i, lift(a, m), lift(b, m));
      }
    }
    throw StructuralError("malformed term");
  }

  std::string name(std::size_t dim, CellId u) const {
    return c_.carrier().name(dim, u);
  }

 private:
  StrictValue lift(StrictValue v, std::size_t m) const {
    const std::size_t k = c_.dim();
    if (m > k + 1) {
      throw DimensionError("terms above dimension " + std::to_string(k + 1) +
                           " are outside the extension");
    }
    if (v.dim < m && m <= k) return StrictValue{m, c_.unit(m, v.dim, v.cell)};
    if (v.dim < m) {
      CellId u = c_.unit(k, v.dim, v.cell);
      return StrictValue{k + 1, 0, u, u, true};
    }
    return v;
  }

  CellId boundary(Side side, std::size_t i, const StrictValue& v) const {
    const std::size_t k = c_.dim();
    if (v.dim <= k) return c_.boundary(side, i, v.dim, v.cell);
    CellId b = side == Side::Source ? v.source : v.target;
    return i == k ? b : c_.boundary(side, i, k, b);
  }

  StrictValue compose(std::size_t i, const StrictValue& a,
                      const StrictValue& b) const {
    const std::size_t k = c_.dim(), m = a.dim;
    CellId left = boundary(Side::Target, i, a), right = boundary(Side::Source, i, b);
    if (left != right) {
      throw TypingError("cannot compose at " + std::to_string(i) + ": " +
                        name(i, left) + " vs " + name(i, right));
    }
    if (m <= k) return StrictValue{m, c_.compose(i, m, a.cell, b.cell)};
    if (i == k) return StrictValue{m, 0, a.source, b.target, a.unit && b.unit};
    return StrictValue{m, 0, c_.compose(i, k, a.source, b.source),
                       c_.compose(i, k, a.target, b.target), a.unit && b.unit};
  }

  const FiniteStrictCat& c_;
  const std::vector<ExtensionGenerator>& gens_;
  const std::vector<std::pair<CellId, CellId>>& bounds_;
};

}  // namespace

ExtensionContext::ExtensionContext(CellularExtension e) {
  auto impl = std::make_shared<Impl>(std::move(e));
  const auto& ext = impl->extension;
  if (const auto* base = std::get_if<Polygraph>(&ext.base)) {
    impl->k = base->dim();
    Polygraph presentation = pad(*base, impl->k + 1);
    for (const auto& g : ext.generators) {
      presentation.add(impl->k + 1, g.name, g.source, g.target);
    }
    try {
      impl->free = std::make_unique<FreeCategory>(std::move(presentation));
    } catch (const TypingError& err) {
      throw StructuralError(std::string("invalid extension generator: ") + err.what());
    }
  } else {
    const auto& c = std::get<FiniteStrictCat>(ext.base);
    impl->k = c.dim();
    for (const auto& g : ext.generators) {
      StrictTyper typer(c, ext.generators, impl->strict_gens);
      StrictValue s, t;
      try {
        s = typer.infer(g.source);
        t = typer.infer(g.target);
      } catch (const Error& err) {
        throw StructuralError("boundary of '" + g.name + "' is not a base cell: " +
                              err.what());
      }
      if (s.dim != impl->k || t.dim != impl->k) {
        throw StructuralError("boundary of '" + g.name + "' is not a " +
                              std::to_string(impl->k) + "-cell of the base");
      }
      if (impl->k > 0) {
        const auto& x = c.carrier();
        if (x.source(impl->k, s.cell) != x.source(impl->k, t.cell) ||
            x.target(impl->k, s.cell) != x.target(impl->k, t.cell)) {
          throw StructuralError("boundaries of '" + g.name + "' are not parallel");
        }
      }
      impl->strict_gens.emplace_back(s.cell, t.cell);
    }
  }
  impl_ = std::move(impl);
}

std::size_t ExtensionContext::base_dim() const { return impl_->k; }

const std::variant<FiniteStrictCat, Polygraph>& ExtensionContext::truncation()
    const {
  return impl_->extension.base;
}

const CellularExtension& ExtensionContext::extension() const {
  return impl_->extension;
}

ExtensionContext::Typed ExtensionContext::infer(const Term& t) const {
  Typed out;
  if (impl_->free) {
    const FreeCategory& c = *impl_->free;
    FreeCell cell = c.infer(t);
    out.dim = cell.dim();
    if (out.dim > 0) {
      auto print = [&](const FreeCell& b) {
        return b.dim() <= 2 ? c.to_string(c.normalize(b)) : c.to_string(b);
      };
      out.source = print(c.boundary(Side::Source, cell));
      out.target = print(c.boundary(Side::Target, cell));
    }
    return out;
  }
  const auto& c = std::get<FiniteStrictCat>(impl_->extension.base);
  StrictTyper typer(c, impl_->extension.generators, impl_->strict_gens);
  StrictValue v = typer.infer(t);
  out.dim = v.dim;
  if (v.dim == 0) return out;
  if (v.dim <= impl_->k) {
    out.source = typer.name(v.dim - 1, c.carrier().source(v.dim, v.cell));
    out.target = typer.name(v.dim - 1, c.carrier().target(v.dim, v.cell));
  } else {
    out.source = typer.name(impl_->k, v.source);
    out.target = typer.name(impl_->k, v.target);
  }
  return out;
}

std::vector<std::string> ExtensionContext::cells(std::size_t j,
                                                 std::size_t bound) const {
  if (j > impl_->k) {
    throw DimensionError("cells above the base dimension are not enumerated");
  }
  std::vector<std::string> out;
  if (impl_->free) {
    for (const auto& cell : enumerate_cells(*impl_->free, j, bound)) {
      out.push_back(impl_->free->to_string(cell));
    }
    return out;
  }
  const auto& x = std::get<FiniteStrictCat>(impl_->extension.base).carrier();
  return x.names(j);
}

std::vector<std::string> ExtensionContext::generators(std::size_t j) const {
  std::vector<std::string> out;
  if (j > impl_->k + 1) return out;
  if (j == impl_->k + 1) {
    for (const auto& g : impl_->extension.generators) out.push_back(g.name);
    return out;
  }
  if (impl_->free) {
    for (const auto& g : impl_->free->polygraph().generators(j)) out.push_back(g.name);
    return out;
  }
  return std::get<FiniteStrictCat>(impl_->extension.base).carrier().names(j);
}

ExtensionContext free_extension_terms(const CellularExtension& e) {
  return ExtensionContext(e);
}

}  // namespace polycat
