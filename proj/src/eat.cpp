#include "polycat/eat.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

#include "polycat/errors.hpp"

namespace polycat {

TermE TermE::var(std::size_t index) {
  TermE t;
  t.index_ = index;
  return t;
}

TermE TermE::app(std::string symbol, std::vector<TermE> args) {
  TermE t;
  t.symbol_ = std::move(symbol);
  t.args_ = std::move(args);
  return t;
}

bool TermE::operator<(const TermE& other) const {
  return std::tie(symbol_, index_, args_) <
         std::tie(other.symbol_, other.index_, other.args_);
}

std::string to_string(const TermE& term) {
  if (term.is_var()) return "x" + std::to_string(term.index() + 1);
  std::string out = term.symbol();
  if (term.args().empty()) return out;
  out += '(';
  for (std::size_t k = 0; k < term.args().size(); ++k) {
    if (k) out += ", ";
    out += to_string(term.args()[k]);
  }
  return out + ')';
}

const Symbol* Theory::find(const std::string& symbol) const {
  for (const auto& s : symbols) {
    if (s.name == symbol) return &s;
  }
  return nullptr;
}

std::string check_judgment(const Theory& t, const Context& ctx,
                           const TermE& term) {
  if (term.is_var()) {
    if (term.index() >= ctx.size()) {
      throw TypingError("variable " + to_string(term) + " is not in a context of " +
                        std::to_string(ctx.size()) + " variables");
    }
    return ctx[term.index()];
  }
  const Symbol* s = t.find(term.symbol());
  if (!s) throw TypingError("unknown symbol " + term.symbol());
  if (s->arity.size() != term.args().size()) {
    throw TypingError(s->name + " takes " + std::to_string(s->arity.size()) +
                      " arguments, given " + std::to_string(term.args().size()));
  }
  for (std::size_t k = 0; k < s->arity.size(); ++k) {
    auto sort = check_judgment(t, ctx, term.args()[k]);
    if (sort != s->arity[k]) {
      throw TypingError("argument " + std::to_string(k + 1) + " of " + s->name +
                        " has sort " + sort + ", expected " + s->arity[k]);
    }
  }
  return s->target;
}

namespace {

bool only_total(const Theory& t, const TermE& term) {
  if (term.is_var()) return true;
  if (!t.is_total(term.symbol())) return false;
  return std::all_of(term.args().begin(), term.args().end(),
                     [&](const TermE& a) { return only_total(t, a); });
}

// Sorts of an equation pair; reports the failure under `label`.
void check_pair(const Theory& t, const Context& ctx, const TermE& lhs,
                const TermE& rhs, const std::string& label,
                const std::string& where, Report& r) {
  try {
    auto a = check_judgment(t, ctx, lhs);
    auto b = check_judgment(t, ctx, rhs);
    if (a != b) {
      r.violations.push_back({label, {where}, "sides have sorts " + a + " and " + b});
    }
  } catch (const TypingError& e) {
    r.violations.push_back({label, {where}, e.what()});
  }
}

void for_each_tuple(const std::vector<std::size_t>& sizes,
                    const std::function<void(const std::vector<std::size_t>&)>& f) {
  for (auto n : sizes) {
    if (n == 0) return;
  }
  std::vector<std::size_t> tuple(sizes.size(), 0);
  while (true) {
    f(tuple);
    std::size_t k = 0;
    while (k < tuple.size() && ++tuple[k] == sizes[k]) tuple[k++] = 0;
    if (k == tuple.size()) return;
  }
}

std::vector<std::string> witness(const FiniteModel& m, const Context& ctx,
                                 const std::vector<std::size_t>& values) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    out.push_back("x" + std::to_string(k + 1) + "=" +
                  m.carriers.at(ctx[k])[values[k]]);
  }
  return out;
}

}  // namespace

Report check_theory(const Theory& t) {
  Report r;
  std::set<std::string> sorts(t.sorts.begin(), t.sorts.end());
  if (sorts.size() != t.sorts.size()) {
    r.violations.push_back({"signature", {}, "repeated sort"});
  }
  std::set<std::string> names;
  for (const auto& s : t.symbols) {
    if (!names.insert(s.name).second) {
      r.violations.push_back({"signature", {s.name}, "repeated symbol"});
    }
    bool known = sorts.count(s.target) > 0;
    for (const auto& a : s.arity) known = known && sorts.count(a) > 0;
    if (!known) r.violations.push_back({"signature", {s.name}, "unknown sort"});
  }
  for (const auto& s : t.total) {
    if (!names.count(s)) r.violations.push_back({"total", {s}, "unknown symbol"});
  }
  for (const auto& e : t.equations) {
    check_pair(t, e.context, e.lhs, e.rhs, "equation", e.name, r);
  }
  for (const auto& [name, pairs] : t.def) {
    const Symbol* s = t.find(name);
    if (!s || t.is_total(name)) {
      r.violations.push_back({"def", {name}, "Def is given for partial symbols only"});
      continue;
    }
    for (const auto& [lhs, rhs] : pairs) {
      auto where = name + ": " + to_string(lhs) + " = " + to_string(rhs);
      if (!only_total(t, lhs) || !only_total(t, rhs)) {
        r.violations.push_back({"def", {where}, "uses a partial symbol"});
      }
      check_pair(t, s->arity, lhs, rhs, "def", where, r);
    }
  }
  return r;
}

std::size_t FiniteModel::size(const std::string& sort) const {
  auto it = carriers.find(sort);
  if (it == carriers.end()) throw StructuralError("no carrier for sort " + sort);
  return it->second.size();
}

std::size_t FiniteModel::element(const std::string& sort,
                                 const std::string& name) const {
  auto it = carriers.find(sort);
  if (it == carriers.end()) throw StructuralError("no carrier for sort " + sort);
  auto pos = std::find(it->second.begin(), it->second.end(), name);
  if (pos == it->second.end()) {
    throw StructuralError("no element " + name + " of sort " + sort);
  }
  return static_cast<std::size_t>(pos - it->second.begin());
}

void FiniteModel::set(const std::string& symbol,
                      const std::vector<std::size_t>& args, std::size_t value) {
  tables[symbol][args] = value;
}

namespace {

std::optional<std::size_t> eval(const Theory& t, const FiniteModel& m,
                                const TermE& term,
                                const std::vector<std::size_t>& values) {
  if (term.is_var()) return values.at(term.index());
  std::vector<std::size_t> args;
  for (const auto& a : term.args()) {
    auto v = eval(t, m, a, values);
    if (!v) return std::nullopt;
    args.push_back(*v);
  }
  auto table = m.tables.find(term.symbol());
  if (table == m.tables.end()) return std::nullopt;
  auto entry = table->second.find(args);
  if (entry == table->second.end()) return std::nullopt;
  return entry->second;
}

// Carriers and tables must stay inside the theory's sorts and symbols.
void check_structure(const Theory& t, const FiniteModel& m) {
  for (const auto& s : t.sorts) m.size(s);
  for (const auto& [sort, elems] : m.carriers) {
    if (std::find(t.sorts.begin(), t.sorts.end(), sort) == t.sorts.end()) {
      throw StructuralError("carrier for unknown sort " + sort);
    }
  }
  for (const auto& [name, table] : m.tables) {
    const Symbol* s = t.find(name);
    if (!s) throw StructuralError("table for unknown symbol " + name);
    for (const auto& [args, value] : table) {
      if (args.size() != s->arity.size()) {
        throw StructuralError("entry of " + name + " has the wrong arity");
      }
      for (std::size_t k = 0; k < args.size(); ++k) {
        if (args[k] >= m.size(s->arity[k])) {
          throw StructuralError("entry of " + name + " outside the carrier of " +
                                s->arity[k]);
        }
      }
      if (value >= m.size(s->target)) {
        throw StructuralError("value of " + name + " outside the carrier of " +
                              s->target);
      }
    }
  }
}

std::vector<std::size_t> sizes_of(const FiniteModel& m, const Context& ctx) {
  std::vector<std::size_t> sizes;
  for (const auto& s : ctx) sizes.push_back(m.size(s));
  return sizes;
}

}  // namespace

std::optional<std::size_t> eval_term(const Theory& t, const FiniteModel& m,
                                     const Context& ctx, const TermE& term,
                                     const std::vector<std::size_t>& values) {
  check_structure(t, m);
  if (values.size() != ctx.size()) {
    throw StructuralError("expected " + std::to_string(ctx.size()) +
                          " values, given " + std::to_string(values.size()));
  }
  for (std::size_t k = 0; k < ctx.size(); ++k) {
    if (values[k] >= m.size(ctx[k])) {
      throw StructuralError("value " + std::to_string(k + 1) +
                            " is not in the carrier of " + ctx[k]);
    }
  }
  check_judgment(t, ctx, term);
  return eval(t, m, term, values);
}

Report check_model(const Theory& t, const FiniteModel& m) {
  check_structure(t, m);
  Report r;
  for (const auto& s : t.symbols) {
    const auto* table = m.tables.count(s.name) ? &m.tables.at(s.name) : nullptr;
    const auto& def = t.def.count(s.name) ? t.def.at(s.name)
                                          : std::vector<std::pair<TermE, TermE>>{};
    for_each_tuple(sizes_of(m, s.arity), [&](const std::vector<std::size_t>& ys) {
      bool defined = table && table->count(ys);
      if (t.is_total(s.name)) {
        if (!defined) {
          r.violations.push_back({"total:" + s.name, witness(m, s.arity, ys),
                                  "total symbol undefined"});
        }
        return;
      }
      bool in_locus = true;
      for (const auto& [lhs, rhs] : def) {
        auto a = eval(t, m, lhs, ys);
        auto b = eval(t, m, rhs, ys);
        in_locus = in_locus && a && b && *a == *b;
      }
      if (defined != in_locus) {
        r.violations.push_back({"def:" + s.name, witness(m, s.arity, ys),
                                defined ? "defined outside its domain"
                                        : "undefined on its domain"});
      }
    });
  }
  for (const auto& e : t.equations) {
    for_each_tuple(sizes_of(m, e.context), [&](const std::vector<std::size_t>& ys) {
      auto a = eval(t, m, e.lhs, ys);
      auto b = eval(t, m, e.rhs, ys);
      if (a && b && *a != *b) {
        r.violations.push_back({"eq:" + e.name, witness(m, e.context, ys),
                                to_string(e.lhs) + " != " + to_string(e.rhs)});
      }
    });
  }
  return r;
}

TermE map_term(const TheoryMorphism& h, const TermE& term) {
  if (term.is_var()) return term;
  auto it = h.symbols.find(term.symbol());
  if (it == h.symbols.end()) throw StructuralError("unmapped symbol " + term.symbol());
  std::vector<TermE> args;
  for (const auto& a : term.args()) args.push_back(map_term(h, a));
  return TermE::app(it->second, std::move(args));
}

namespace {

Context map_context(const TheoryMorphism& h, const Context& ctx) {
  Context out;
  for (const auto& s : ctx) out.push_back(h.sorts.at(s));
  return out;
}

// Total terms of `source` whose image under h is `term`.
std::vector<TermE> preimages(const TheoryMorphism& h, const Theory& source,
                             const TermE& term) {
  if (term.is_var()) return {term};
  std::vector<std::vector<TermE>> args;
  for (const auto& a : term.args()) args.push_back(preimages(h, source, a));
  std::vector<TermE> out;
  for (const auto& s : source.symbols) {
    if (!source.is_total(s.name) || h.symbols.at(s.name) != term.symbol()) continue;
    std::vector<std::size_t> sizes;
    for (const auto& a : args) sizes.push_back(a.size());
    auto emit = [&](const std::vector<std::size_t>& pick) {
      std::vector<TermE> chosen;
      for (std::size_t k = 0; k < pick.size(); ++k) chosen.push_back(args[k][pick[k]]);
      out.push_back(TermE::app(s.name, std::move(chosen)));
    };
    if (sizes.empty()) {
      emit({});
    } else {
      for_each_tuple(sizes, emit);
    }
  }
  return out;
}

bool well_sorted_pair(const Theory& t, const Context& ctx, const TermE& a,
                      const TermE& b) {
  try {
    return check_judgment(t, ctx, a) == check_judgment(t, ctx, b);
  } catch (const TypingError&) {
    return false;
  }
}

}  // namespace

Report check_theory_morphism(const TheoryMorphism& h, const Theory& source,
                             const Theory& target) {
  Report r;
  for (const auto& s : source.sorts) {
    auto it = h.sorts.find(s);
    if (it == h.sorts.end() ||
        std::find(target.sorts.begin(), target.sorts.end(), it->second) ==
            target.sorts.end()) {
      r.violations.push_back({"map", {s}, "sort not mapped into the target"});
    }
  }
  for (const auto& s : source.symbols) {
    auto it = h.symbols.find(s.name);
    if (it == h.symbols.end() || !target.find(it->second)) {
      r.violations.push_back({"map", {s.name}, "symbol not mapped into the target"});
    }
  }
  if (!r.violations.empty()) return r;

  for (const auto& s : source.symbols) {
    const Symbol& image = *target.find(h.symbols.at(s.name));
    if (image.arity != map_context(h, s.arity) || image.target != h.sorts.at(s.target)) {
      r.violations.push_back({"arity", {s.name, image.name}, "arity not transported"});
    }
    if (source.is_total(s.name) != target.is_total(image.name)) {
      r.violations.push_back({"totality", {s.name, image.name},
                              "totality not preserved and reflected"});
    }
  }
  for (const auto& e : source.equations) {
    Equation mapped{e.name, map_context(h, e.context), map_term(h, e.lhs),
                    map_term(h, e.rhs)};
    bool found = std::any_of(target.equations.begin(), target.equations.end(),
                             [&](const Equation& f) {
                               return f.context == mapped.context &&
                                      f.lhs == mapped.lhs && f.rhs == mapped.rhs;
                             });
    if (!found) {
      r.violations.push_back({"equation", {e.name}, "image is not an equation of " +
                                                        target.name});
    }
  }
  for (const auto& s : source.symbols) {
    if (source.is_total(s.name)) continue;
    const auto& image = h.symbols.at(s.name);
    auto pairs = source.def.count(s.name) ? source.def.at(s.name)
                                          : std::vector<std::pair<TermE, TermE>>{};
    auto image_pairs = target.def.count(image)
                           ? target.def.at(image)
                           : std::vector<std::pair<TermE, TermE>>{};
    auto in = [](const auto& set, const std::pair<TermE, TermE>& p) {
      return std::find(set.begin(), set.end(), p) != set.end();
    };
    for (const auto& [a, b] : pairs) {
      if (!in(image_pairs, {map_term(h, a), map_term(h, b)})) {
        r.violations.push_back({"def", {s.name, to_string(a) + " = " + to_string(b)},
                                "image is not in the Def of " + image});
      }
    }
    for (const auto& [a, b] : image_pairs) {
      for (const auto& pa : preimages(h, source, a)) {
        for (const auto& pb : preimages(h, source, b)) {
          if (!well_sorted_pair(source, s.arity, pa, pb)) continue;
          if (!in(pairs, {pa, pb})) {
            r.violations.push_back(
                {"def", {s.name, to_string(pa) + " = " + to_string(pb)},
                 "maps into the Def of " + image + " but is not in the Def of " +
                     s.name});
          }
        }
      }
    }
  }
  return r;
}

FiniteModel reduct(const TheoryMorphism& h, const Theory& source,
                   const FiniteModel& m) {
  FiniteModel out;
  for (const auto& s : source.sorts) {
    auto it = m.carriers.find(h.sorts.at(s));
    if (it == m.carriers.end()) {
      throw StructuralError("no carrier for sort " + h.sorts.at(s));
    }
    out.carriers[s] = it->second;
  }
  for (const auto& s : source.symbols) {
    auto it = m.tables.find(h.symbols.at(s.name));
    out.tables[s.name] = it == m.tables.end()
                             ? std::map<std::vector<std::size_t>, std::size_t>{}
                             : it->second;
  }
  return out;
}

TheoryMorphism identity_morphism(const Theory& t) {
  TheoryMorphism h;
  for (const auto& s : t.sorts) h.sorts[s] = s;
  for (const auto& s : t.symbols) h.symbols[s.name] = s.name;
  return h;
}

namespace {

TermE x(std::size_t i) { return TermE::var(i - 1); }
TermE f(std::string s, std::vector<TermE> args = {}) {
  return TermE::app(std::move(s), std::move(args));
}

}  // namespace

Theory theory_mon() {
  Theory t;
  t.name = "mon";
  t.sorts = {"s"};
  t.symbols = {{"e", {}, "s"}, {"m", {"s", "s"}, "s"}};
  t.total = {"e", "m"};
  t.equations = {
      {"unit_left", {"s"}, f("m", {f("e"), x(1)}), x(1)},
      {"unit_right", {"s"}, f("m", {x(1), f("e")}), x(1)},
      {"assoc", {"s", "s", "s"}, f("m", {f("m", {x(1), x(2)}), x(3)}),
       f("m", {x(1), f("m", {x(2), x(3)})})},
  };
  return t;
}

Theory theory_grp() {
  Theory t = theory_mon();
  t.name = "grp";
  t.symbols.push_back({"i", {"s"}, "s"});
  t.total.insert("i");
  t.equations.push_back({"inv_left", {"s"}, f("m", {f("i", {x(1)}), x(1)}), f("e")});
  t.equations.push_back({"inv_right", {"s"}, f("m", {x(1), f("i", {x(1)})}), f("e")});
  return t;
}

Theory theory_gph() {
  Theory t;
  t.name = "gph";
  t.sorts = {"c0", "c1"};
  t.symbols = {{"gsrc0", {"c1"}, "c0"}, {"gtgt0", {"c1"}, "c0"}};
  t.total = {"gsrc0", "gtgt0"};
  return t;
}

Theory theory_cat() {
  Theory t;
  t.name = "cat";
  t.sorts = {"c0", "c1"};
  t.symbols = {{"src0", {"c1"}, "c0"},
               {"tgt0", {"c1"}, "c0"},
               {"id1", {"c0"}, "c1"},
               {"comp", {"c1", "c1"}, "c1"}};
  t.total = {"src0", "tgt0", "id1"};
  auto comp = [](TermE a, TermE b) { return f("comp", {std::move(a), std::move(b)}); };
  t.equations = {
      {"src_id", {"c0"}, f("src0", {f("id1", {x(1)})}), x(1)},
      {"tgt_id", {"c0"}, f("tgt0", {f("id1", {x(1)})}), x(1)},
      {"src_comp", {"c1", "c1"}, f("src0", {comp(x(1), x(2))}), f("src0", {x(1)})},
      {"tgt_comp", {"c1", "c1"}, f("tgt0", {comp(x(1), x(2))}), f("tgt0", {x(2)})},
      {"unit_left", {"c1"}, comp(f("id1", {f("src0", {x(1)})}), x(1)), x(1)},
      {"unit_right", {"c1"}, comp(x(1), f("id1", {f("tgt0", {x(1)})})), x(1)},
      {"assoc", {"c1", "c1", "c1"}, comp(comp(x(1), x(2)), x(3)),
       comp(x(1), comp(x(2), x(3)))},
  };
  t.def["comp"] = {{f("tgt0", {x(1)}), f("src0", {x(2)})}};
  return t;
}

TheoryMorphism morphism_mon_grp() { return identity_morphism(theory_mon()); }

TheoryMorphism morphism_gph_cat() {
  return {{{"c0", "c0"}, {"c1", "c1"}}, {{"gsrc0", "src0"}, {"gtgt0", "tgt0"}}};
}

namespace {

FiniteModel z2(std::size_t unit) {
  FiniteModel m;
  m.carriers["s"] = {"0", "1"};
  m.set("e", {}, unit);
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) m.set("m", {a, b}, a ^ b);
  }
  return m;
}

}  // namespace

FiniteModel model_z2_xor() { return z2(0); }
FiniteModel model_corrupted_unit() { return z2(1); }

FiniteModel model_z3_group() {
  FiniteModel m;
  m.carriers["s"] = {"0", "1", "2"};
  m.set("e", {}, 0);
  for (std::size_t a = 0; a < 3; ++a) {
    m.set("i", {a}, (3 - a) % 3);
    for (std::size_t b = 0; b < 3; ++b) m.set("m", {a, b}, (a + b) % 3);
  }
  return m;
}

FiniteModel model_arrow_category() {
  FiniteModel m;
  m.carriers["c0"] = {"a", "b"};
  m.carriers["c1"] = {"1a", "1b", "f"};
  enum { A, B };
  enum { IA, IB, F };
  m.set("src0", {IA}, A);
  m.set("src0", {IB}, B);
  m.set("src0", {F}, A);
  m.set("tgt0", {IA}, A);
  m.set("tgt0", {IB}, B);
  m.set("tgt0", {F}, B);
  m.set("id1", {A}, IA);
  m.set("id1", {B}, IB);
  m.set("comp", {IA, IA}, IA);
  m.set("comp", {IA, F}, F);
  m.set("comp", {F, IB}, F);
  m.set("comp", {IB, IB}, IB);
  return m;
}

}  // namespace polycat
