#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string_view>
#include <vector>

#include "polycat/globset.hpp"
#include "polycat/report.hpp"

namespace polycat {

inline constexpr CellId kUndefined = std::numeric_limits<CellId>::max();

/// A finite strict n-category. Identities and compositions are explicit
/// tables so that their domains can be audited: comp(i, k, u, v) must be
/// defined exactly when u and v are i-composable k-cells.
class FiniteStrictCat {
 public:
  explicit FiniteStrictCat(GlobularSet carrier);

  const GlobularSet& carrier() const { return carrier_; }
  std::size_t dim() const { return carrier_.dim(); }

  /// Sets 1_{k+1}(u) for the k-cell u.
  void set_identity(std::size_t k, CellId u, CellId unit);
  void set_identity(std::size_t k, std::string_view u, std::string_view unit);
  /// 1_{k+1}(u), or kUndefined when the table entry is missing.
  CellId identity(std::size_t k, CellId u) const;
  /// Iterated identity 1_l(u) of the k-cell u, for k <= l.
  CellId unit(std::size_t l, std::size_t k, CellId u) const;

  void set_comp(std::size_t i, std::size_t k, CellId u, CellId v, CellId w);
  void set_comp(std::size_t i, std::size_t k, std::string_view u,
                std::string_view v, std::string_view w);
  std::optional<CellId> comp(std::size_t i, std::size_t k, CellId u,
                             CellId v) const;
  /// Like comp, but throws DomainError when the entry is undefined.
  CellId compose(std::size_t i, std::size_t k, CellId u, CellId v) const;

  /// tgt_i(u) == src_i(v) for k-cells u, v.
  bool composable(std::size_t i, std::size_t k, CellId u, CellId v) const;
  CellId boundary(Side side, std::size_t i, std::size_t k, CellId u) const;

  bool operator==(const FiniteStrictCat&) const = default;

 private:
  std::size_t table_size(std::size_t k) const;

  GlobularSet carrier_;
  std::vector<std::vector<CellId>> identity_;
  // comp_[k][i] is a size(k) x size(k) row-major table.
  std::vector<std::vector<std::vector<CellId>>> comp_;
};

/// Exhaustively checks (S-i) to (S-vi). Violations are labelled
/// "S-i" ... "S-vi"; domain problems are reported as errors.
Report check_axioms(const FiniteStrictCat& c);

FiniteStrictCat sc_truncate(const FiniteStrictCat& c, std::size_t k);
FiniteStrictCat sc_include(const FiniteStrictCat& c, std::size_t l);
/// Right adjoint to truncation; the cells above dim(c) are pairs of
/// parallel top cells.
FiniteStrictCat sc_coinclude(const FiniteStrictCat& c, std::size_t l);

struct NFunctor {
  GlobMorphism map;
};

Report check_functor(const NFunctor& f, const FiniteStrictCat& c,
                     const FiniteStrictCat& d);

/// Counit sc_include(sc_truncate(c, k), dim c) -> c, sending a k-cell seen
/// in dimension m > k to its iterated identity 1_m(u).
NFunctor sc_counit(const FiniteStrictCat& c, std::size_t k);

/// The strict n-category with exactly one cell in each dimension.
FiniteStrictCat terminal_category(std::size_t n);

/// The one-object 1-category whose hom-monoid has the given elements,
/// multiplication table (row-major, first argument major) and unit.
FiniteStrictCat monoid_category(std::string_view object,
                                const std::vector<std::string>& elements,
                                const std::vector<std::size_t>& table,
                                std::size_t unit);

}  // namespace polycat
