#include "polycat/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "polycat/errors.hpp"

namespace polycat {

namespace {

std::size_t columns(std::string_view text) {
  std::size_t n = 0;
  for (char c : text) {
    if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++n;
  }
  return n;
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// A source line with comments removed; `col` maps byte offsets to columns.
struct Line {
  std::size_t number;
  std::string_view text;

  std::size_t col(std::size_t offset) const {
    return 1 + columns(text.substr(0, offset));
  }
  [[noreturn]] void fail(const std::string& message, std::size_t offset) const {
    throw ParseError(message, number, col(offset));
  }
  std::size_t first() const {
    std::size_t k = 0;
    while (k < text.size() && is_space(text[k])) ++k;
    return k;
  }
  bool blank() const { return first() == text.size(); }
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 1;
  while (true) {
    auto end = text.find('\n');
    auto line = text.substr(0, end);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    while (!line.empty() && is_space(line.back())) line.remove_suffix(1);
    out.push_back({number++, line});
    if (end == std::string_view::npos) break;
    text.remove_prefix(end + 1);
  }
  return out;
}

// Reads a word starting at `pos` (after spaces); advances past it.
std::string_view word(const Line& l, std::size_t& pos) {
  while (pos < l.text.size() && is_space(l.text[pos])) ++pos;
  std::size_t start = pos;
  while (pos < l.text.size() && !is_space(l.text[pos])) ++pos;
  return l.text.substr(start, pos - start);
}

// `<keyword> "<name>"` header; returns the name.
std::string header_name(const Line& l, std::size_t pos) {
  while (pos < l.text.size() && is_space(l.text[pos])) ++pos;
  if (pos >= l.text.size() || l.text[pos] != '"') l.fail("expected a quoted name", pos);
  auto close = l.text.find('"', pos + 1);
  if (close == std::string_view::npos) l.fail("unterminated name", l.text.size());
  for (std::size_t k = close + 1; k < l.text.size(); ++k) {
    if (!is_space(l.text[k])) l.fail("unexpected text after the name", k);
  }
  return std::string(l.text.substr(pos + 1, close - pos - 1));
}

bool valid_name(std::string_view name) {
  if (name.empty() || name.find("->") != std::string_view::npos) return false;
  for (char c : name) {
    if (is_space(c) || is_reserved(c)) return false;
  }
  return true;
}

struct PendingGenerator {
  std::size_t dim;
  std::string name;
  std::optional<Term> source, target;
  std::size_t line;
};

}  // namespace

Polygraph parse_polygraph(std::string_view text) {
  auto lines = split_lines(text);
  std::string name;
  std::optional<std::size_t> dim;
  bool seen_content = false;
  std::vector<PendingGenerator> pending;
  for (const auto& l : lines) {
    if (l.blank()) continue;
    std::size_t pos = l.first();
    auto head = l.text.substr(pos);
    auto after = head.size() > 9 ? head.find_first_not_of(" \t", 9) : head.npos;
    if (head.rfind("polygraph", 0) == 0 && after != head.npos && head[after] == '"') {
      if (seen_content) l.fail("the header must come first", pos);
      name = header_name(l, pos + 9);
      seen_content = true;
      continue;
    }
    seen_content = true;
    if (head.rfind("dim", 0) == 0 && head.size() > 3 &&
        (is_space(head[3]) || std::isdigit(static_cast<unsigned char>(head[3])))) {
      std::size_t p = pos + 3;
      while (p < l.text.size() && is_space(l.text[p])) ++p;
      std::size_t digits = p;
      while (p < l.text.size() && std::isdigit(static_cast<unsigned char>(l.text[p]))) ++p;
      if (p == digits) l.fail("expected a dimension", digits);
      std::size_t k = std::stoul(std::string(l.text.substr(digits, p - digits)));
      while (p < l.text.size() && is_space(l.text[p])) ++p;
      if (p >= l.text.size() || l.text[p] != ':') l.fail("expected ':'", p);
      if (p + 1 != l.text.size()) l.fail("unexpected text after the section", p + 1);
      std::size_t expected = dim ? *dim + 1 : 0;
      if (k != expected) {
        l.fail(expected == 0 ? "missing dim 0"
                             : "expected dim " + std::to_string(expected),
               digits);
      }
      dim = k;
      continue;
    }
    if (!dim) l.fail("missing dim 0", pos);
    auto colon = l.text.find(':', pos);
    auto gen_name = l.text.substr(pos, (colon == std::string_view::npos ? l.text.size()
                                                                       : colon) - pos);
    while (!gen_name.empty() && is_space(gen_name.back())) gen_name.remove_suffix(1);
    if (!valid_name(gen_name)) l.fail("invalid generator name", pos);
    PendingGenerator g{*dim, std::string(gen_name), std::nullopt, std::nullopt, l.number};
    if (*dim == 0) {
      if (colon != std::string_view::npos) l.fail("0-generators have no boundary", colon);
    } else {
      if (colon == std::string_view::npos) {
        l.fail("expected ': <source> -> <target>'", l.text.size());
      }
      auto arrow = l.text.find("->", colon + 1);
      if (arrow == std::string_view::npos) l.fail("expected '->'", l.text.size());
      auto src = l.text.substr(colon + 1, arrow - colon - 1);
      auto tgt = l.text.substr(arrow + 2);
      g.source = parse_term(src, l.number, l.col(colon + 1));
      g.target = parse_term(tgt, l.number, l.col(arrow + 2));
    }
    pending.push_back(std::move(g));
  }
  if (!dim) {
    throw ParseError("missing dim 0", lines.back().number, 1);
  }
  Polygraph p(*dim, name);
  for (auto& g : pending) {
    try {
      if (g.dim == 0) {
        p.add(g.name);
      } else {
        p.add(g.dim, g.name, *g.source, *g.target);
      }
    } catch (const StructuralError& e) {
      throw StructuralError("line " + std::to_string(g.line) + ": " + e.what());
    }
  }
  return p;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Polygraph read_polygraph(const std::string& path) {
  return parse_polygraph(read_file(path));
}

std::string print_polygraph(const Polygraph& p) {
  std::string out;
  if (!p.name().empty()) out += "polygraph \"" + p.name() + "\"\n";
  for (std::size_t k = 0; k <= p.dim(); ++k) {
    out += "dim " + std::to_string(k) + ":\n";
    for (const auto& g : p.generators(k)) {
      out += "  " + g.name;
      if (k > 0) out += " : " + to_string(*g.source) + " -> " + to_string(*g.target);
      out += '\n';
    }
  }
  return out;
}

namespace {

bool eat_reserved(char c) {
  return is_space(c) || c == '(' || c == ')' || c == ',' || c == '=' || c == '[' ||
         c == ']' || c == ':';
}

class EatTermParser {
 public:
  EatTermParser(std::string_view text, std::size_t line, std::size_t column)
      : text_(text), line_(line), column_(column) {}

  TermE parse() {
    TermE t = term();
    space();
    if (pos_ < text_.size()) fail("unexpected text after the term");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_, column_ + columns(text_.substr(0, pos_)));
  }
  void space() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }
  TermE term() {
    space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && !eat_reserved(text_[pos_])) ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    if (name.empty()) fail("expected a term");
    space();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      std::vector<TermE> args;
      space();
      if (pos_ < text_.size() && text_[pos_] == ')') {
        ++pos_;
        return TermE::app(name);
      }
      while (true) {
        args.push_back(term());
        space();
        if (pos_ < text_.size() && text_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (pos_ < text_.size() && text_[pos_] == ')') {
          ++pos_;
          break;
        }
        fail("expected ',' or ')'");
      }
      return TermE::app(name, std::move(args));
    }
    if (name.size() > 1 && name[0] == 'x' &&
        name.find_first_not_of("0123456789", 1) == std::string::npos) {
      auto index = std::stoul(name.substr(1));
      if (index == 0) {
        pos_ = start;
        fail("variables are numbered from x1");
      }
      return TermE::var(index - 1);
    }
    return TermE::app(name);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_, column_;
};

// Splits "lhs = rhs" and parses both sides.
std::pair<TermE, TermE> equation(const Line& l, std::size_t pos) {
  auto eq = l.text.find('=', pos);
  if (eq == std::string_view::npos) l.fail("expected '='", l.text.size());
  return {parse_eat_term(l.text.substr(pos, eq - pos), l.number, l.col(pos)),
          parse_eat_term(l.text.substr(eq + 1), l.number, l.col(eq + 1))};
}

std::size_t expect_colon(const Line& l, std::size_t pos) {
  while (pos < l.text.size() && is_space(l.text[pos])) ++pos;
  if (pos >= l.text.size() || l.text[pos] != ':') l.fail("expected ':'", pos);
  return pos + 1;
}

}  // namespace

TermE parse_eat_term(std::string_view text, std::size_t line, std::size_t column) {
  return EatTermParser(text, line, column).parse();
}

Theory parse_theory(std::string_view text) {
  Theory t;
  bool seen_content = false;
  for (const auto& l : split_lines(text)) {
    if (l.blank()) continue;
    std::size_t pos = l.first();
    std::size_t at = pos;
    auto key = word(l, pos);
    if (key == "theory") {
      if (seen_content) l.fail("the header must come first", at);
      t.name = header_name(l, pos);
    } else if (key == "sort") {
      auto name = word(l, pos);
      if (name.empty()) l.fail("expected a sort name", pos);
      if (!word(l, pos).empty()) l.fail("unexpected text after the sort", pos);
      t.sorts.emplace_back(name);
    } else if (key == "op" || key == "partial") {
      bool partial = key == "partial";
      if (partial && word(l, pos) != "op") l.fail("expected 'op'", pos);
      std::size_t name_at = pos;
      auto colon = l.text.find(':', pos);
      if (colon == std::string_view::npos) l.fail("expected ':'", l.text.size());
      auto arrow = l.text.find("->", colon);
      if (arrow == std::string_view::npos) l.fail("expected '->'", l.text.size());
      Line name_part{l.number, l.text.substr(0, colon)};
      auto name = word(name_part, name_at);
      if (name.empty()) l.fail("expected a symbol name", name_at);
      Symbol s{std::string(name), {}, {}};
      Line args{l.number, l.text.substr(0, arrow)};
      std::size_t p = colon + 1;
      for (auto a = word(args, p); !a.empty(); a = word(args, p)) s.arity.emplace_back(a);
      p = arrow + 2;
      s.target = std::string(word(l, p));
      if (s.target.empty()) l.fail("expected a target sort", p);
      if (!word(l, p).empty()) l.fail("unexpected text after the target sort", p);
      if (!partial) t.total.insert(s.name);
      t.symbols.push_back(std::move(s));
    } else if (key == "def") {
      std::size_t name_at = pos;
      auto colon = l.text.find(':', pos);
      if (colon == std::string_view::npos) l.fail("expected ':'", l.text.size());
      Line name_part{l.number, l.text.substr(0, colon)};
      auto name = word(name_part, name_at);
      if (name.empty()) l.fail("expected a symbol name", name_at);
      t.def[std::string(name)].push_back(equation(l, colon + 1));
    } else if (key == "eq") {
      auto open = l.text.find('[', pos);
      if (open == std::string_view::npos) l.fail("expected '['", l.text.size());
      Line name_part{l.number, l.text.substr(0, open)};
      std::size_t name_at = pos;
      auto name = word(name_part, name_at);
      if (name.empty()) l.fail("expected an equation name", pos);
      auto close = l.text.find(']', open);
      if (close == std::string_view::npos) l.fail("expected ']'", l.text.size());
      Equation e{std::string(name), {}, TermE::var(0), TermE::var(0)};
      Line ctx{l.number, l.text.substr(0, close)};
      std::size_t p = open + 1;
      for (auto s = word(ctx, p); !s.empty(); s = word(ctx, p)) e.context.emplace_back(s);
      auto [lhs, rhs] = equation(l, expect_colon(l, close + 1));
      e.lhs = std::move(lhs);
      e.rhs = std::move(rhs);
      t.equations.push_back(std::move(e));
    } else {
      l.fail("expected theory, sort, op, partial op, def or eq", at);
    }
    seen_content = true;
  }
  return t;
}

std::string print_theory(const Theory& t) {
  std::string out;
  if (!t.name.empty()) out += "theory \"" + t.name + "\"\n";
  for (const auto& s : t.sorts) out += "sort " + s + '\n';
  for (const auto& s : t.symbols) {
    out += t.is_total(s.name) ? "op " : "partial op ";
    out += s.name + " :";
    for (const auto& a : s.arity) out += ' ' + a;
    out += " -> " + s.target + '\n';
  }
  for (const auto& [name, pairs] : t.def) {
    for (const auto& [a, b] : pairs) {
      out += "def " + name + " : " + to_string(a) + " = " + to_string(b) + '\n';
    }
  }
  for (const auto& e : t.equations) {
    out += "eq " + e.name + " [";
    for (std::size_t k = 0; k < e.context.size(); ++k) {
      out += (k ? " " : "") + e.context[k];
    }
    out += "] : " + to_string(e.lhs) + " = " + to_string(e.rhs) + '\n';
  }
  return out;
}

FiniteModel parse_model(std::string_view text, const Theory& t) {
  FiniteModel m;
  bool seen_content = false;
  for (const auto& l : split_lines(text)) {
    if (l.blank()) continue;
    std::size_t pos = l.first();
    std::size_t at = pos;
    auto key = word(l, pos);
    if (key == "model") {
      if (seen_content) l.fail("the header must come first", at);
      header_name(l, pos);
    } else if (key == "carrier") {
      std::size_t sort_at = pos;
      auto colon = l.text.find(':', pos);
      if (colon == std::string_view::npos) l.fail("expected ':'", l.text.size());
      Line name_part{l.number, l.text.substr(0, colon)};
      auto sort = std::string(word(name_part, sort_at));
      if (sort.empty()) l.fail("expected a sort", pos);
      auto& elems = m.carriers[sort];
      std::size_t p = colon + 1;
      for (auto e = word(l, p); !e.empty(); e = word(l, p)) elems.emplace_back(e);
    } else if (key == "table") {
      std::size_t name_at = pos;
      auto colon = l.text.find(':', pos);
      if (colon == std::string_view::npos) l.fail("expected ':'", l.text.size());
      auto arrow = l.text.find("->", colon);
      if (arrow == std::string_view::npos) l.fail("expected '->'", l.text.size());
      Line name_part{l.number, l.text.substr(0, colon)};
      auto name = std::string(word(name_part, name_at));
      const Symbol* s = t.find(name);
      if (!s) l.fail("unknown symbol " + name, pos);
      Line args_part{l.number, l.text.substr(0, arrow)};
      std::size_t p = colon + 1;
      std::vector<std::size_t> args;
      for (auto e = word(args_part, p); !e.empty(); e = word(args_part, p)) {
        if (args.size() == s->arity.size()) l.fail("too many arguments", p - e.size());
        try {
          args.push_back(m.element(s->arity[args.size()], std::string(e)));
        } catch (const StructuralError& err) {
          l.fail(err.what(), p - e.size());
        }
      }
      if (args.size() != s->arity.size()) l.fail("too few arguments", arrow);
      p = arrow + 2;
      auto value = word(l, p);
      if (value.empty()) l.fail("expected a value", p);
      if (!word(l, p).empty()) l.fail("unexpected text after the value", p);
      try {
        m.set(name, args, m.element(s->target, std::string(value)));
      } catch (const StructuralError& err) {
        l.fail(err.what(), p - value.size());
      }
    } else {
      l.fail("expected model, carrier or table", at);
    }
    seen_content = true;
  }
  return m;
}

std::string print_model(const FiniteModel& m, const Theory& t) {
  std::string out;
  for (const auto& s : t.sorts) {
    auto it = m.carriers.find(s);
    if (it == m.carriers.end()) continue;
    out += "carrier " + s + " :";
    for (const auto& e : it->second) out += ' ' + e;
    out += '\n';
  }
  for (const auto& s : t.symbols) {
    auto it = m.tables.find(s.name);
    if (it == m.tables.end()) continue;
    for (const auto& [args, value] : it->second) {
      out += "table " + s.name + " :";
      for (std::size_t k = 0; k < args.size(); ++k) {
        out += ' ' + m.carriers.at(s.arity[k]).at(args[k]);
      }
      out += " -> " + m.carriers.at(s.target).at(value) + '\n';
    }
  }
  return out;
}

}  // namespace polycat
