#include "polycat/term.hpp"

#include <cctype>

#include "polycat/errors.hpp"

namespace polycat {

Term Term::gen(std::string name) {
  return Term(std::make_shared<const Node>(
      Node{Kind::Gen, std::move(name), 0, nullptr, nullptr}));
}

Term Term::id(Term t) {
  return Term(std::make_shared<const Node>(
      Node{Kind::Id, {}, 0, std::make_shared<const Term>(std::move(t)), nullptr}));
}

Term Term::comp(std::size_t i, Term lhs, Term rhs) {
  return Term(std::make_shared<const Node>(
      Node{Kind::Comp, {}, i, std::make_shared<const Term>(std::move(lhs)),
           std::make_shared<const Term>(std::move(rhs))}));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::Gen:
      return a.name() == b.name();
    case Term::Kind::Id:
      return a.arg() == b.arg();
    case Term::Kind::Comp:
      return a.index() == b.index() && a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
  return false;
}

namespace {

void print(const Term& t, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::Gen:
      out += t.name();
      return;
    case Term::Kind::Id:
      out += "id(";
      print(t.arg(), out);
      out += ')';
      return;
    case Term::Kind::Comp: {
      const auto i = t.index();
      // Lower indices bind looser; equal indices associate to the left.
      bool wrap_left = t.lhs().kind() == Term::Kind::Comp && t.lhs().index() < i;
      bool wrap_right = t.rhs().kind() == Term::Kind::Comp && t.rhs().index() <= i;
      if (wrap_left) out += '(';
      print(t.lhs(), out);
      if (wrap_left) out += ')';
      out += " *" + std::to_string(i) + " ";
      if (wrap_right) out += '(';
      print(t.rhs(), out);
      if (wrap_right) out += ')';
      return;
    }
  }
}

class Parser {
 public:
  Parser(std::string_view text, std::size_t line, std::size_t column)
      : text_(text), line_(line), column_(column) {}

  Term parse() {
    skip_space();
    if (at_end()) fail("empty term");
    Term t = expression(0);
    skip_space();
    if (!at_end()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return t;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  // Column of the current position, counting code points.
  std::size_t column_at(std::size_t pos) const {
    std::size_t col = column_;
    for (std::size_t k = 0; k < pos && k < text_.size(); ++k) {
      if ((static_cast<unsigned char>(text_[k]) & 0xC0) != 0x80) ++col;
    }
    return col;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_, column_at(pos_));
  }

  // Peeks an operator `*k`; returns its index without consuming.
  bool peek_operator(std::size_t& index, std::size_t& length) {
    skip_space();
    if (at_end() || text_[pos_] != '*') return false;
    std::size_t p = pos_ + 1;
    std::size_t start = p;
    while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) ++p;
    if (p == start) {
      pos_ += 1;
      fail("expected a composition index after '*'");
    }
    index = std::stoul(std::string(text_.substr(start, p - start)));
    length = p - pos_;
    return true;
  }

  Term expression(std::size_t min_index) {
    Term lhs = primary();
    std::size_t index = 0, length = 0;
    while (peek_operator(index, length) && index >= min_index) {
      pos_ += length;
      Term rhs = expression(index + 1);
      lhs = Term::comp(index, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  std::string identifier() {
    std::size_t start = pos_;
    while (!at_end()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c)) || is_reserved(c)) break;
      if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') break;
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  void expect(char c) {
    skip_space();
    if (at_end()) fail(std::string("expected '") + c + "' before end of term");
    if (text_[pos_] != c) {
      fail(std::string("expected '") + c + "', found '" + text_[pos_] + "'");
    }
    ++pos_;
  }

  Term primary() {
    skip_space();
    if (at_end()) fail("expected a term");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Term t = expression(0);
      expect(')');
      return t;
    }
    if (is_reserved(c)) fail(std::string("unexpected '") + c + "'");
    std::string name = identifier();
    if (name.empty()) fail("expected an identifier");
    std::size_t after = pos_;
    skip_space();
    if (name == "id" && !at_end() && text_[pos_] == '(') {
      ++pos_;
      Term t = expression(0);
      expect(')');
      return Term::id(std::move(t));
    }
    pos_ = after;
    return Term::gen(std::move(name));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace

std::string to_string(const Term& t) {
  std::string out;
  print(t, out);
  return out;
}

Term parse_term(std::string_view text, std::size_t line, std::size_t column) {
  return Parser(text, line, column).parse();
}

bool is_reserved(char c) {
  return c == '*' || c == ':' || c == '(' || c == ')' || c == ',';
}

}  // namespace polycat
