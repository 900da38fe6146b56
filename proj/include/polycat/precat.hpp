#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "polycat/globset.hpp"
#include "polycat/report.hpp"
#include "polycat/strictcat.hpp"

namespace polycat {

// A finite precategory. The operation u *_i v takes a k-cell and an
// l-cell with i = min(k, l) - 1 and lands in dimension max(k, l).
class FinitePrecat {
 public:
  explicit FinitePrecat(GlobularSet carrier);

  const GlobularSet& carrier() const { return carrier_; }
  std::size_t dim() const { return carrier_.dim(); }

  void set_identity(std::size_t k, CellId u, CellId unit);
  CellId identity(std::size_t k, CellId u) const;
  CellId unit(std::size_t l, std::size_t k, CellId u) const;

  void set_pcomp(std::size_t k, std::size_t l, CellId u, CellId v, CellId w);
  std::optional<CellId> pcomp(std::size_t k, std::size_t l, CellId u,
                              CellId v) const;
  // Throws DomainError when undefined.
  CellId star(std::size_t k, std::size_t l, CellId u, CellId v) const;

  bool composable(std::size_t k, std::size_t l, CellId u, CellId v) const;
  CellId boundary(Side side, std::size_t i, std::size_t k, CellId u) const;

  bool operator==(const FinitePrecat&) const = default;

 private:
  void check_dims(std::size_t k, std::size_t l) const;

  GlobularSet carrier_;
  std::vector<std::vector<CellId>> identity_;
  // pcomp_[k][l] is a size(k) x size(l) row-major table, for k, l >= 1.
  std::vector<std::vector<std::vector<CellId>>> pcomp_;
};

// Labels: "P-i" identity boundaries, "P-ii" composite boundaries,
// "P-iii" units and identity compatibility, "P-iv" associativity,
// "P-v" distributivity of lower over higher composition.
Report check_precategory_axioms(const FinitePrecat& p);

// Violations are labelled "E".
Report check_condition_E(const FinitePrecat& p);

FinitePrecat theta(const FiniteStrictCat& c);

enum class Expansion { Primary, Alternative };

// Throws DomainError if p does not satisfy condition (E).
FiniteStrictCat theta_bar(const FinitePrecat& p,
                          Expansion expansion = Expansion::Primary);

}  // namespace polycat
