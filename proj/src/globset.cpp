#include "polycat/globset.hpp"

#include "polycat/errors.hpp"

namespace polycat {

GlobularSet::GlobularSet(std::size_t dim)
    : names_(dim + 1), index_(dim + 1), src_(dim + 1), tgt_(dim + 1) {}

void GlobularSet::check_dim(std::size_t k) const {
  if (k > dim()) {
    throw DimensionError("dimension " + std::to_string(k) +
                         " exceeds globular set dimension " +
                         std::to_string(dim()));
  }
}

std::size_t GlobularSet::size(std::size_t k) const {
  check_dim(k);
  return names_[k].size();
}

std::size_t GlobularSet::total_size() const {
  std::size_t n = 0;
  for (const auto& level : names_) n += level.size();
  return n;
}

CellId GlobularSet::add(std::string name) {
  if (index_[0].contains(name)) {
    throw StructuralError("duplicate 0-cell '" + name + "'");
  }
  auto id = static_cast<CellId>(names_[0].size());
  index_[0].emplace(name, id);
  names_[0].push_back(std::move(name));
  return id;
}

CellId GlobularSet::add(std::size_t k, std::string name,
                        std::string_view source, std::string_view target) {
  if (k == 0) {
    throw DimensionError("0-cells have no boundary");
  }
  check_dim(k);
  auto s = find(k - 1, source);
  auto t = find(k - 1, target);
  if (!s || !t) {
    throw StructuralError("cell '" + name + "' refers to undeclared " +
                          std::to_string(k - 1) + "-cell '" +
                          std::string(!s ? source : target) + "'");
  }
  return add(k, std::move(name), *s, *t);
}

CellId GlobularSet::add(std::size_t k, std::string name, CellId source,
                        CellId target) {
  if (k == 0) {
    throw DimensionError("0-cells have no boundary");
  }
  check_dim(k);
  if (source >= names_[k - 1].size() || target >= names_[k - 1].size()) {
    throw StructuralError("cell '" + name + "' refers to an undeclared " +
                          std::to_string(k - 1) + "-cell");
  }
  if (index_[k].contains(name)) {
    throw StructuralError("duplicate " + std::to_string(k) + "-cell '" +
                          name + "'");
  }
  auto id = static_cast<CellId>(names_[k].size());
  index_[k].emplace(name, id);
  names_[k].push_back(std::move(name));
  src_[k].push_back(source);
  tgt_[k].push_back(target);
  return id;
}

const std::vector<std::string>& GlobularSet::names(std::size_t k) const {
  check_dim(k);
  return names_[k];
}

const std::string& GlobularSet::name(std::size_t k, CellId id) const {
  check_dim(k);
  if (id >= names_[k].size()) {
    throw StructuralError("no " + std::to_string(k) + "-cell with id " +
                          std::to_string(id));
  }
  return names_[k][id];
}

std::string GlobularSet::name(Cell c) const {
  if (c.is_star()) return "*";
  return name(static_cast<std::size_t>(c.dim), c.id);
}

std::optional<CellId> GlobularSet::find(std::size_t k,
                                        std::string_view name) const {
  if (k > dim()) return std::nullopt;
  auto it = index_[k].find(std::string(name));
  if (it == index_[k].end()) return std::nullopt;
  return it->second;
}

CellId GlobularSet::id(std::size_t k, std::string_view name) const {
  auto found = find(k, name);
  if (!found) {
    throw StructuralError("undeclared " + std::to_string(k) + "-cell '" +
                          std::string(name) + "'");
  }
  return *found;
}

CellId GlobularSet::source(std::size_t k, CellId u) const {
  if (k == 0) throw DimensionError("0-cells have no source");
  check_dim(k);
  return src_[k].at(u);
}

CellId GlobularSet::target(std::size_t k, CellId u) const {
  if (k == 0) throw DimensionError("0-cells have no target");
  check_dim(k);
  return tgt_[k].at(u);
}

GlobReport validate_globular(const GlobularSet& x) {
  GlobReport report;
  for (std::size_t i = 0; i + 2 <= x.dim(); ++i) {
    for (CellId u = 0; u < x.size(i + 2); ++u) {
      CellId s = x.source(i + 2, u);
      CellId t = x.target(i + 2, u);
      if (x.source(i + 1, s) != x.source(i + 1, t)) {
        report.violations.push_back(
            {i, x.name(i + 2, u), GlobViolation::Equation::SourceSquare});
      }
      if (x.target(i + 1, s) != x.target(i + 1, t)) {
        report.violations.push_back(
            {i, x.name(i + 2, u), GlobViolation::Equation::TargetSquare});
      }
    }
  }
  return report;
}

Cell iterated_boundary(const GlobularSet& x, Side side, int i, Cell u) {
  if (i < -1 || i > u.dim) {
    throw DimensionError("cannot take the " + std::to_string(i) +
                         "-boundary of a " + std::to_string(u.dim) + "-cell");
  }
  if (i == -1) return Cell::star();
  while (u.dim > i) {
    u = Cell{u.dim - 1,
             x.boundary(side, static_cast<std::size_t>(u.dim), u.id)};
  }
  return u;
}

bool are_composable(const GlobularSet& x, std::size_t i,
                    std::span<const Cell> cells) {
  for (const Cell& c : cells) {
    if (c.dim <= static_cast<int>(i)) {
      throw DimensionError("cell '" + x.name(c) + "' of dimension " +
                           std::to_string(c.dim) + " is not above " +
                           std::to_string(i));
    }
  }
  auto level = static_cast<int>(i);
  for (std::size_t j = 0; j + 1 < cells.size(); ++j) {
    if (iterated_boundary(x, Side::Target, level, cells[j]) !=
        iterated_boundary(x, Side::Source, level, cells[j + 1])) {
      return false;
    }
  }
  return true;
}

bool are_parallel(const GlobularSet& x, Cell u, Cell v) {
  if (u.dim != v.dim) {
    throw DimensionError("cells of dimensions " + std::to_string(u.dim) +
                         " and " + std::to_string(v.dim) +
                         " cannot be parallel");
  }
  if (u.dim == 0) return true;
  auto k = static_cast<std::size_t>(u.dim);
  return x.source(k, u.id) == x.source(k, v.id) &&
         x.target(k, u.id) == x.target(k, v.id);
}

namespace {

void copy_levels(const GlobularSet& from, GlobularSet& to, std::size_t upto) {
  for (const auto& n : from.names(0)) to.add(n);
  for (std::size_t k = 1; k <= upto; ++k) {
    for (CellId u = 0; u < from.size(k); ++u) {
      to.add(k, from.name(k, u), from.source(k, u), from.target(k, u));
    }
  }
}

}  // namespace

GlobularSet truncate(const GlobularSet& x, std::size_t m) {
  if (m > x.dim()) {
    throw DimensionError("cannot truncate a " + std::to_string(x.dim()) +
                         "-globular set to dimension " + std::to_string(m));
  }
  GlobularSet out(m);
  copy_levels(x, out, m);
  return out;
}

GlobularSet include(const GlobularSet& x, std::size_t n) {
  if (n < x.dim()) {
    throw DimensionError("cannot include a " + std::to_string(x.dim()) +
                         "-globular set into dimension " + std::to_string(n));
  }
  GlobularSet out(n);
  copy_levels(x, out, x.dim());
  return out;
}

std::string pair_name(std::string_view u, std::string_view v) {
  std::string out = "(";
  out += u;
  out += ',';
  out += v;
  out += ')';
  return out;
}

GlobularSet coinclude(const GlobularSet& x, std::size_t n) {
  const std::size_t m = x.dim();
  if (n < m) {
    throw DimensionError("cannot co-include a " + std::to_string(m) +
                         "-globular set into dimension " + std::to_string(n));
  }
  GlobularSet out(n);
  copy_levels(x, out, m);
  if (n == m) return out;

  std::vector<std::pair<CellId, CellId>> pairs;
  const int top = static_cast<int>(m);
  for (CellId u = 0; u < x.size(m); ++u) {
    for (CellId v = 0; v < x.size(m); ++v) {
      if (are_parallel(x, Cell{top, u}, Cell{top, v})) pairs.emplace_back(u, v);
    }
  }
  for (std::size_t i = m + 1; i <= n; ++i) {
    for (CellId p = 0; p < pairs.size(); ++p) {
      auto [u, v] = pairs[p];
      auto name = pair_name(x.name(m, u), x.name(m, v));
      if (i == m + 1) {
        out.add(i, std::move(name), u, v);
      } else {
        out.add(i, std::move(name), p, p);
      }
    }
  }
  return out;
}

bool check_morphism(const GlobMorphism& f) {
  const auto& x = f.source;
  const auto& y = f.target;
  if (x.dim() != y.dim() || f.maps.size() != x.dim() + 1) return false;
  for (std::size_t k = 0; k <= x.dim(); ++k) {
    if (f.maps[k].size() != x.size(k)) return false;
    for (CellId image : f.maps[k]) {
      if (image >= y.size(k)) return false;
    }
  }
  for (std::size_t k = 1; k <= x.dim(); ++k) {
    for (CellId u = 0; u < x.size(k); ++u) {
      CellId image = f.maps[k][u];
      if (y.source(k, image) != f.maps[k - 1][x.source(k, u)] ||
          y.target(k, image) != f.maps[k - 1][x.target(k, u)]) {
        return false;
      }
    }
  }
  return true;
}

GlobMorphism identity_morphism(const GlobularSet& x) {
  GlobMorphism f{x, x, {}};
  for (std::size_t k = 0; k <= x.dim(); ++k) {
    auto& level = f.maps.emplace_back(x.size(k));
    for (CellId u = 0; u < level.size(); ++u) level[u] = u;
  }
  return f;
}

GlobMorphism truncate(const GlobMorphism& f, std::size_t m) {
  GlobMorphism out{truncate(f.source, m), truncate(f.target, m), {}};
  out.maps.assign(f.maps.begin(), f.maps.begin() + static_cast<long>(m) + 1);
  return out;
}

GlobMorphism counit(const GlobularSet& x, std::size_t m) {
  GlobMorphism f{include(truncate(x, m), x.dim()), x, {}};
  for (std::size_t k = 0; k <= x.dim(); ++k) {
    auto& level = f.maps.emplace_back(f.source.size(k));
    for (CellId u = 0; u < level.size(); ++u) level[u] = u;
  }
  return f;
}

}  // namespace polycat
