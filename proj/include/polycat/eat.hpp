#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "polycat/report.hpp"

namespace polycat {

/// A term over a many-sorted signature. Variables are positional: var(0)
/// is x1 in the surrounding context.
class TermE {
 public:
  static TermE var(std::size_t index);
  static TermE app(std::string symbol, std::vector<TermE> args = {});

  bool is_var() const { return !symbol_; }
  std::size_t index() const { return index_; }
  const std::string& symbol() const { return *symbol_; }
  const std::vector<TermE>& args() const { return args_; }

  bool operator==(const TermE&) const = default;
  bool operator<(const TermE& other) const;

 private:
  std::size_t index_ = 0;
  std::optional<std::string> symbol_;
  std::vector<TermE> args_;
};

/// Sorts of x1, x2, ...
using Context = std::vector<std::string>;

struct Symbol {
  std::string name;
  std::vector<std::string> arity;
  std::string target;
  bool operator==(const Symbol&) const = default;
};

struct Equation {
  std::string name;
  Context context;
  TermE lhs;
  TermE rhs;
  bool operator==(const Equation&) const = default;
};

/// (S, Sigma, E, Sigma_t, Def). Def equations of a partial symbol live in
/// the context given by its arity.
struct Theory {
  std::string name;
  std::vector<std::string> sorts;
  std::vector<Symbol> symbols;
  std::vector<Equation> equations;
  std::set<std::string> total;
  std::map<std::string, std::vector<std::pair<TermE, TermE>>> def;

  const Symbol* find(const std::string& symbol) const;
  bool is_total(const std::string& symbol) const { return total.count(symbol) > 0; }
  bool operator==(const Theory&) const = default;
};

/// The sort s with ctx |- t : s. Throws TypingError.
std::string check_judgment(const Theory& t, const Context& ctx, const TermE& term);

/// Well-formedness: distinct names, known sorts, well-sorted equations,
/// Def given exactly for partial symbols and built from total symbols.
Report check_theory(const Theory& t);

/// Carriers hold element names; tables map argument index tuples to a
/// result index. A missing entry means undefined.
struct FiniteModel {
  std::map<std::string, std::vector<std::string>> carriers;
  std::map<std::string, std::map<std::vector<std::size_t>, std::size_t>> tables;

  std::size_t size(const std::string& sort) const;
  /// Index of an element name; throws StructuralError.
  std::size_t element(const std::string& sort, const std::string& name) const;
  void set(const std::string& symbol, const std::vector<std::size_t>& args,
           std::size_t value);
  bool operator==(const FiniteModel&) const = default;
};

/// Strict partial evaluation. Throws StructuralError when `values` does not
/// match the sorts of `ctx` or a table refers outside a carrier.
std::optional<std::size_t> eval_term(const Theory& t, const FiniteModel& m,
                                     const Context& ctx, const TermE& term,
                                     const std::vector<std::size_t>& values);

/// Checks both model conditions exhaustively. Violations are labelled
/// "total:<symbol>" (missing entry of a total symbol), "def:<symbol>"
/// (definedness differs from the Def locus) and "eq:<equation>".
/// Throws StructuralError for carriers or tables outside the theory.
Report check_model(const Theory& t, const FiniteModel& m);

struct TheoryMorphism {
  std::map<std::string, std::string> sorts;
  std::map<std::string, std::string> symbols;
};

TermE map_term(const TheoryMorphism& h, const TermE& term);

/// Violations are labelled "map", "arity", "totality", "equation" and "def".
Report check_theory_morphism(const TheoryMorphism& h, const Theory& source,
                             const Theory& target);

/// The model of `source` obtained by restricting `m` along h.
FiniteModel reduct(const TheoryMorphism& h, const Theory& source,
                   const FiniteModel& m);

TheoryMorphism identity_morphism(const Theory& t);

std::string to_string(const TermE& term);

Theory theory_mon();
Theory theory_grp();
Theory theory_gph();
Theory theory_cat();
TheoryMorphism morphism_mon_grp();
TheoryMorphism morphism_gph_cat();

/// Z/2 under xor with unit 0.
FiniteModel model_z2_xor();
/// Z/2 under xor with the unit misplaced at 1: only the unit laws fail.
FiniteModel model_corrupted_unit();
/// Z/3 under addition as a group.
FiniteModel model_z3_group();
/// Objects a, b and one arrow f : a -> b, with identities.
FiniteModel model_arrow_category();

}  // namespace polycat
