#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "polycat/globset.hpp"
#include "polycat/polygraph.hpp"
#include "polycat/term.hpp"

namespace polycat {

// Generators are referred to by their index within their dimension.

struct Point {
  CellId gen = 0;
  bool operator==(const Point&) const = default;
};

/// A 1-cell: a composable word of 1-generators from `source` to `target`.
struct Word {
  CellId source = 0;
  CellId target = 0;
  std::vector<CellId> gens;
  bool operator==(const Word&) const = default;
};

/// One layer of a 2-cell: the generator `gen` applied inside the 1-cell
/// word `context`, to the subword starting at `offset`.
struct Whisker {
  std::size_t offset = 0;
  CellId gen = 0;
  std::vector<CellId> context;
  bool operator==(const Whisker&) const = default;
};

/// A 2-cell as a vertical stack of whiskers, bottom first.
struct Diagram {
  Word source;
  Word target;
  std::vector<Whisker> layers;
  bool operator==(const Diagram&) const = default;
};

struct FreeCell;

/// A cell of dimension >= 3, kept as a syntactic term whose 2-dimensional
/// parts are canonical. Equality on these is syntactic.
struct Higher {
  std::size_t dim = 3;
  Term term = Term::gen("");
  std::shared_ptr<const FreeCell> source;
  std::shared_ptr<const FreeCell> target;
  bool operator==(const Higher& other) const;
};

struct FreeCell {
  std::variant<Point, Word, Diagram, Higher> data;

  std::size_t dim() const;
  bool operator==(const FreeCell&) const = default;
};

/// (offset, generator) pairs; the layered form of a diagram.
using Layers = std::vector<std::pair<std::size_t, CellId>>;

/// The free strict category on a polygraph, restricted to what is needed to
/// type terms and decide equality up to dimension 2.
class FreeCategory {
 public:
  /// Largest exchange class explored when normalizing a diagram whose
  /// layers can be exchanged in two ways.
  static constexpr std::size_t kClassBudget = 2'000'000;

  /// Throws StructuralError or TypingError if a generator boundary is
  /// ill-formed.
  explicit FreeCategory(Polygraph p);

  const Polygraph& polygraph() const { return p_; }
  std::size_t dim() const { return p_.dim(); }
  const std::string& name(std::size_t k, CellId gen) const;

  FreeCell generator(std::size_t k, CellId gen) const;
  /// The layered value of a term. 2-cells are not put in canonical form.
  FreeCell infer(const Term& t) const;

  FreeCell identity(const FreeCell& u) const;
  FreeCell lift(const FreeCell& u, std::size_t m) const;
  /// Pads the lower-dimensional argument with identities.
  FreeCell compose(std::size_t i, const FreeCell& u, const FreeCell& v) const;
  FreeCell boundary(Side side, const FreeCell& u) const;
  FreeCell boundary(Side side, std::size_t i, const FreeCell& u) const;

  Diagram canonical(const Diagram& d) const;
  /// Canonical form for dimension <= 2; throws UnsupportedDimension above.
  FreeCell normalize(const FreeCell& u) const;
  /// Decides equality for dimension <= 2.
  bool equal(const FreeCell& u, const FreeCell& v) const;

  Term term_of(const FreeCell& u) const;
  std::string to_string(const FreeCell& u) const;
  std::string to_string(const Word& w) const;

  std::size_t source_length(CellId gen2) const { return lengths_[gen2].first; }
  std::size_t target_length(CellId gen2) const { return lengths_[gen2].second; }
  const Word& source_word(CellId gen2) const { return boundaries2_[gen2].first; }
  const Word& target_word(CellId gen2) const { return boundaries2_[gen2].second; }

  /// All results of exchanging two adjacent layers, lower first. Empty when
  /// the layers are dependent.
  std::vector<std::pair<std::pair<std::size_t, CellId>,
                        std::pair<std::size_t, CellId>>>
  exchanges(std::pair<std::size_t, CellId> lower,
            std::pair<std::size_t, CellId> upper) const;

  /// Builds a diagram from a source word and (offset, generator) layers,
  /// checking that each layer matches its context.
  Diagram diagram(const Word& source, const Layers& layers) const;
  static Layers layers_of(const Diagram& d);

 private:
  FreeCell normalize_any(const FreeCell& u) const;
  bool same(const FreeCell& u, const FreeCell& v) const;
  FreeCell compose_same(std::size_t i, const FreeCell& u,
                        const FreeCell& v) const;
  Diagram horizontal(const Diagram& u, const Diagram& v) const;
  Layers canonical_layers(const Layers& layers,
                          std::map<Layers, Layers>& memo) const;
  Layers least_in_class(const Layers& layers) const;
  bool key_less(const Layers& a, const Layers& b) const;
  [[noreturn]] void mismatch(std::size_t i, const FreeCell& left,
                             const FreeCell& right) const;

  Polygraph p_;
  std::vector<std::vector<FreeCell>> gen_cells_;
  std::vector<std::pair<Word, Word>> boundaries2_;
  std::vector<std::pair<std::size_t, std::size_t>> lengths_;
  // Position of each 2-generator in name order; the tie-break of the
  // canonical order.
  std::vector<std::size_t> rank2_;
};

struct Typing {
  std::size_t dim = 0;
  FreeCell cell;
  std::optional<FreeCell> source;  // absent in dimension 0
  std::optional<FreeCell> target;
};

Typing infer_type(const Polygraph& p, const Term& t);
FreeCell normalize(const Polygraph& p, const Term& t);
/// False when dimensions or boundaries differ. Throws UnsupportedDimension
/// above dimension 2.
bool decide_equal(const Polygraph& p, const Term& a, const Term& b);

enum class Verdict { Equal, NotEqual, Indeterminate };

/// Breadth-first closure of a's layered form under single exchanges, up to
/// `bound` visited states.
Verdict oracle_equal(const FreeCategory& c, const FreeCell& a,
                     const FreeCell& b, std::size_t bound);
Verdict oracle_equal(const Polygraph& p, const Term& a, const Term& b,
                     std::size_t bound);

struct EnumerateOptions {
  /// Longest source word considered in dimension 2; defaults to the bound.
  std::optional<std::size_t> word_max;
  /// Keep only 2-cells with these boundaries.
  std::optional<std::pair<Word, Word>> boundary;
};

/// Distinct cells in canonical form: 0-generators in dimension 0, words up
/// to length `max` in dimension 1, diagrams with at most `max` layers in
/// dimension 2.
std::vector<FreeCell> enumerate_cells(const FreeCategory& c, std::size_t dim,
                                      std::size_t max,
                                      const EnumerateOptions& options = {});
std::vector<FreeCell> enumerate_cells(const Polygraph& p, std::size_t dim,
                                      std::size_t max,
                                      const EnumerateOptions& options = {});

}  // namespace polycat
