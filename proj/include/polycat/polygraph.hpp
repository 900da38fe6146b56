#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "polycat/report.hpp"
#include "polycat/strictcat.hpp"
#include "polycat/term.hpp"

namespace polycat {

struct Generator {
  std::string name;
  // Absent for 0-generators.
  std::optional<Term> source;
  std::optional<Term> target;

  bool operator==(const Generator&) const = default;
};

struct GenRef {
  std::size_t dim;
  std::size_t index;
};

/// Generators of each dimension with boundaries written as terms over the
/// lower dimensions. Names are unique across all dimensions so that terms
/// can refer to generators by name alone.
class Polygraph {
 public:
  explicit Polygraph(std::size_t dim = 0, std::string name = {});

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  std::size_t dim() const { return gens_.size() - 1; }

  void add(std::string name);
  void add(std::size_t k, std::string name, Term source, Term target);
  /// Parses both boundary terms.
  void add(std::size_t k, std::string name, std::string_view source,
           std::string_view target);

  const std::vector<Generator>& generators(std::size_t k) const;
  const Generator& generator(std::size_t k, std::size_t index) const {
    return generators(k).at(index);
  }
  std::optional<GenRef> find(std::string_view name) const;

  bool operator==(const Polygraph& other) const {
    return name_ == other.name_ && gens_ == other.gens_;
  }

 private:
  void insert(std::size_t k, Generator g);

  std::string name_;
  std::vector<std::vector<Generator>> gens_;
  std::unordered_map<std::string, GenRef> index_;
};

/// Typechecks every boundary and checks that the source and target of each
/// generator are parallel. Throws StructuralError when a boundary mentions
/// an unknown generator or one of too high a dimension.
Report validate_polygraph(const Polygraph& p);

Polygraph truncate_pol(const Polygraph& p, std::size_t k);

/// Renames generators everywhere, including inside boundary terms.
Polygraph relabel(const Polygraph& p,
                  const std::unordered_map<std::string, std::string>& names);

/// Per-dimension generator maps. Each generator is sent to a generator of
/// the same dimension.
struct PolMorphism {
  Polygraph source;
  Polygraph target;
  std::vector<std::vector<std::size_t>> maps;
};

/// Checks that the image of each generator's boundary is the boundary of
/// its image, comparing normal forms up to dimension 2 and syntactic forms
/// above.
Report check_pol_morphism(const PolMorphism& f);
PolMorphism identity_pol_morphism(const Polygraph& p);

/// Disjoint union. Generators of p are prefixed "l.", those of q "r.".
Polygraph coproduct(const Polygraph& p, const Polygraph& q);

/// Pushout of f: R -> P and g: R -> Q, computed dimensionwise. A glued
/// class is named "l.<name>" after its first generator of P, or "r.<name>"
/// when it contains no generator of P.
Polygraph pushout(const PolMorphism& f, const PolMorphism& g);

/// Bijection of generators preserving dimension and boundaries, found by
/// backtracking. Intended for small polygraphs.
bool isomorphic(const Polygraph& p, const Polygraph& q);

struct ExtensionGenerator {
  std::string name;
  Term source;
  Term target;
};

/// A k-dimensional base (a finite strict category or a free category on a
/// polygraph) with (k+1)-generators between parallel k-cells.
struct CellularExtension {
  std::variant<FiniteStrictCat, Polygraph> base;
  std::vector<ExtensionGenerator> generators;
};

/// Typing context for (k+1)-terms over a cellular extension. Base cells
/// and extension generators are referred to by name; over a finite strict
/// category a name denotes the cell of highest dimension carrying it.
class ExtensionContext {
 public:
  struct Typed {
    std::size_t dim = 0;
    std::string source;  // empty in dimension 0
    std::string target;
  };

  explicit ExtensionContext(CellularExtension e);

  std::size_t base_dim() const;
  /// Types a term of dimension at most k+1. Throws TypingError for
  /// non-composable composites.
  Typed infer(const Term& t) const;
  /// The k-truncation of the extension. Equals the base.
  const std::variant<FiniteStrictCat, Polygraph>& truncation() const;
  const CellularExtension& extension() const;
  /// Cells of dimension j <= k of the context, printed. Over a polygraph
  /// these are the enumerated free cells within `bound`.
  std::vector<std::string> cells(std::size_t j, std::size_t bound) const;
  /// Generator names of dimension j, including the extension generators
  /// when j = k+1. Over a strict category the base cells act as generators.
  std::vector<std::string> generators(std::size_t j) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

/// Throws StructuralError when a generator boundary is not a base cell or
/// the boundaries are not parallel.
ExtensionContext free_extension_terms(const CellularExtension& e);

}  // namespace polycat
