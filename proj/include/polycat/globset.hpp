#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace polycat {

using CellId = std::uint32_t;

enum class Side { Source, Target };

/// A cell of a globular set, addressed by dimension and position in the
/// carrier. Dimension -1 is the conventional boundary of 0-cells.
struct Cell {
  int dim = 0;
  CellId id = 0;

  static constexpr Cell star() { return Cell{-1, 0}; }
  constexpr bool is_star() const { return dim < 0; }

  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

/// A finite n-globular set. Carriers are ordered by insertion and addressed
/// by name; source and target maps are total by construction.
class GlobularSet {
 public:
  explicit GlobularSet(std::size_t dim = 0);

  std::size_t dim() const { return names_.size() - 1; }
  std::size_t size(std::size_t k) const;
  std::size_t total_size() const;

  /// Adds a 0-cell.
  CellId add(std::string name);
  /// Adds a (k)-cell with the given (k-1)-dimensional boundary names.
  /// Throws StructuralError for duplicates or undeclared boundaries.
  CellId add(std::size_t k, std::string name, std::string_view source,
             std::string_view target);
  CellId add(std::size_t k, std::string name, CellId source, CellId target);

  const std::vector<std::string>& names(std::size_t k) const;
  const std::string& name(std::size_t k, CellId id) const;
  std::string name(Cell c) const;
  std::optional<CellId> find(std::size_t k, std::string_view name) const;
  CellId id(std::size_t k, std::string_view name) const;
  Cell cell(std::size_t k, std::string_view name) const {
    return Cell{static_cast<int>(k), id(k, name)};
  }

  /// Boundary of a k-cell (k >= 1), a (k-1)-cell.
  CellId source(std::size_t k, CellId u) const;
  CellId target(std::size_t k, CellId u) const;
  CellId boundary(Side side, std::size_t k, CellId u) const {
    return side == Side::Source ? source(k, u) : target(k, u);
  }

  bool operator==(const GlobularSet& other) const {
    return names_ == other.names_ && src_ == other.src_ && tgt_ == other.tgt_;
  }

 private:
  void check_dim(std::size_t k) const;

  std::vector<std::vector<std::string>> names_;
  std::vector<std::unordered_map<std::string, CellId>> index_;
  // src_[k][u] is the source of the k-cell u; src_[0] is empty.
  std::vector<std::vector<CellId>> src_;
  std::vector<std::vector<CellId>> tgt_;
};

struct GlobViolation {
  enum class Equation { SourceSquare, TargetSquare };
  std::size_t i = 0;  // the lower index of the failing equation
  std::string cell;
  Equation equation = Equation::SourceSquare;
};

struct GlobReport {
  std::vector<GlobViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks both globularity equations at every dimension.
GlobReport validate_globular(const GlobularSet& x);

/// Iterated source or target down to dimension i (i may be -1).
Cell iterated_boundary(const GlobularSet& x, Side side, int i, Cell u);

bool are_composable(const GlobularSet& x, std::size_t i,
                    std::span<const Cell> cells);
bool are_parallel(const GlobularSet& x, Cell u, Cell v);

GlobularSet truncate(const GlobularSet& x, std::size_t m);
GlobularSet include(const GlobularSet& x, std::size_t n);

/// Right adjoint to truncation: above dim(x) the cells are the ordered pairs
/// of parallel top cells, named "(u,v)".
GlobularSet coinclude(const GlobularSet& x, std::size_t n);
std::string pair_name(std::string_view u, std::string_view v);

struct GlobMorphism {
  GlobularSet source;
  GlobularSet target;
  // maps[k][u] is the image of the k-cell u of source.
  std::vector<std::vector<CellId>> maps;

  bool operator==(const GlobMorphism&) const = default;
};

/// True when the maps are total and commute with sources and targets.
bool check_morphism(const GlobMorphism& f);
GlobMorphism identity_morphism(const GlobularSet& x);
GlobMorphism truncate(const GlobMorphism& f, std::size_t m);

/// The canonical morphism include(truncate(x, m), dim x) -> x.
GlobMorphism counit(const GlobularSet& x, std::size_t m);

}  // namespace polycat
