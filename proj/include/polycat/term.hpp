#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

namespace polycat {

/// Syntax of cells in a free strict category: generators, identities and
/// binary compositions `t *i u`. Terms are immutable and share subtrees.
class Term {
 public:
  enum class Kind { Gen, Id, Comp };

  static Term gen(std::string name);
  static Term id(Term t);
  static Term comp(std::size_t i, Term lhs, Term rhs);

  Kind kind() const { return node_->kind; }
  /// Generator name; only for Kind::Gen.
  const std::string& name() const { return node_->name; }
  /// Composition index; only for Kind::Comp.
  std::size_t index() const { return node_->index; }
  /// Argument of id(...); only for Kind::Id.
  const Term& arg() const { return *node_->lhs; }
  const Term& lhs() const { return *node_->lhs; }
  const Term& rhs() const { return *node_->rhs; }

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::size_t index = 0;
    std::shared_ptr<const Term> lhs, rhs;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Prints with the fewest parentheses that reparse to the same tree.
std::string to_string(const Term& t);

/// Parses a whole term. `line` and `column` locate text[0] for error
/// messages; columns count code points.
Term parse_term(std::string_view text, std::size_t line = 1,
                std::size_t column = 1);

/// True for characters that may not appear in identifiers.
bool is_reserved(char c);

}  // namespace polycat
