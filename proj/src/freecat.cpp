#include "polycat/freecat.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

#include "polycat/errors.hpp"

namespace polycat {

bool Higher::operator==(const Higher& other) const {
  return dim == other.dim && term == other.term && *source == *other.source &&
         *target == *other.target;
}

std::size_t FreeCell::dim() const {
  switch (data.index()) {
    case 0: return 0;
    case 1: return 1;
    case 2: return 2;
    default: return std::get<Higher>(data).dim;
  }
}

namespace {

void check_names(const Polygraph& p, const Term& t, std::size_t below,
                 const std::string& owner) {
  switch (t.kind()) {
    case Term::Kind::Gen: {
      auto ref = p.find(t.name());
      if (!ref) {
        throw StructuralError("boundary of '" + owner +
                              "' mentions unknown generator '" + t.name() + "'");
      }
      if (ref->dim >= below) {
        throw StructuralError("boundary of '" + owner + "' mentions '" +
                              t.name() + "' of dimension " +
                              std::to_string(ref->dim));
      }
      return;
    }
    case Term::Kind::Id:
      check_names(p, t.arg(), below, owner);
      return;
    case Term::Kind::Comp:
      check_names(p, t.lhs(), below, owner);
      check_names(p, t.rhs(), below, owner);
      return;
  }
}

std::vector<CellId> concat(const std::vector<CellId>& a,
                           const std::vector<CellId>& b) {
  std::vector<CellId> out(a);
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

FreeCategory::FreeCategory(Polygraph p) : p_(std::move(p)) {
  const std::size_t n = p_.dim();
  gen_cells_.resize(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    const auto& gens = p_.generators(k);
    if (k == 2) {
      std::vector<std::size_t> order(gens.size());
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return gens[a].name < gens[b].name;
      });
      rank2_.resize(gens.size());
      for (std::size_t r = 0; r < order.size(); ++r) rank2_[order[r]] = r;
    }
    for (CellId g = 0; g < gens.size(); ++g) {
      if (k == 0) {
        gen_cells_[0].push_back(FreeCell{Point{g}});
        continue;
      }
      const auto& gen = gens[g];
      check_names(p_, *gen.source, k, gen.name);
      check_names(p_, *gen.target, k, gen.name);
      FreeCell s = normalize_any(infer(*gen.source));
      FreeCell t = normalize_any(infer(*gen.target));
      if (s.dim() != k - 1 || t.dim() != k - 1) {
        throw TypingError("boundaries of " + std::to_string(k) + "-generator '" +
                          gen.name + "' must have dimension " +
                          std::to_string(k - 1));
      }
      if (k >= 2) {
        for (Side side : {Side::Source, Side::Target}) {
          if (!same(boundary(side, s), boundary(side, t))) {
            throw TypingError("source and target of '" + gen.name +
                              "' are not parallel");
          }
        }
      }
      if (k == 1) {
        gen_cells_[1].push_back(FreeCell{Word{std::get<Point>(s.data).gen,
                                              std::get<Point>(t.data).gen,
                                              {g}}});
      } else if (k == 2) {
        const auto& sw = std::get<Word>(s.data);
        const auto& tw = std::get<Word>(t.data);
        boundaries2_.emplace_back(sw, tw);
        lengths_.emplace_back(sw.gens.size(), tw.gens.size());
        gen_cells_[2].push_back(
            FreeCell{Diagram{sw, tw, {Whisker{0, g, sw.gens}}}});
      } else {
        gen_cells_[k].push_back(FreeCell{
            Higher{k, Term::gen(gen.name), std::make_shared<const FreeCell>(s),
                   std::make_shared<const FreeCell>(t)}});
      }
    }
  }
}

const std::string& FreeCategory::name(std::size_t k, CellId gen) const {
  return p_.generator(k, gen).name;
}

FreeCell FreeCategory::generator(std::size_t k, CellId gen) const {
  if (k >= gen_cells_.size() || gen >= gen_cells_[k].size()) {
    throw StructuralError("no generator " + std::to_string(gen) +
                          " in dimension " + std::to_string(k));
  }
  return gen_cells_[k][gen];
}

FreeCell FreeCategory::infer(const Term& t) const {
  switch (t.kind()) {
    case Term::Kind::Gen: {
      auto ref = p_.find(t.name());
      if (!ref) throw StructuralError("unknown generator '" + t.name() + "'");
      if (ref->index >= gen_cells_[ref->dim].size()) {
        throw StructuralError("generator '" + t.name() + "' is not yet typed");
      }
      return gen_cells_[ref->dim][ref->index];
    }
    case Term::Kind::Id:
      return identity(infer(t.arg()));
    case Term::Kind::Comp:
      return compose(t.index(), infer(t.lhs()), infer(t.rhs()));
  }
  throw StructuralError("malformed term");
}

FreeCell FreeCategory::identity(const FreeCell& u) const {
  return std::visit(
      [&](const auto& c) -> FreeCell {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Point>) {
          return FreeCell{Word{c.gen, c.gen, {}}};
        } else if constexpr (std::is_same_v<T, Word>) {
          return FreeCell{Diagram{c, c, {}}};
        } else if constexpr (std::is_same_v<T, Diagram>) {
          auto d = std::make_shared<const FreeCell>(FreeCell{canonical(c)});
          return FreeCell{Higher{3, Term::id(term_of(*d)), d, d}};
        } else {
          auto h = std::make_shared<const FreeCell>(u);
          return FreeCell{Higher{c.dim + 1, Term::id(c.term), h, h}};
        }
      },
      u.data);
}

FreeCell FreeCategory::lift(const FreeCell& u, std::size_t m) const {
  FreeCell out = u;
  while (out.dim() < m) out = identity(out);
  return out;
}

FreeCell FreeCategory::boundary(Side side, const FreeCell& u) const {
  const bool src = side == Side::Source;
  return std::visit(
      [&](const auto& c) -> FreeCell {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Point>) {
          throw DimensionError("a 0-cell has no cell boundary");
        } else if constexpr (std::is_same_v<T, Word>) {
          return FreeCell{Point{src ? c.source : c.target}};
        } else if constexpr (std::is_same_v<T, Diagram>) {
          return FreeCell{src ? c.source : c.target};
        } else {
          return src ? *c.source : *c.target;
        }
      },
      u.data);
}

FreeCell FreeCategory::boundary(Side side, std::size_t i,
                                const FreeCell& u) const {
  if (i > u.dim()) {
    throw DimensionError("boundary of dimension " + std::to_string(i) +
                         " of a " + std::to_string(u.dim()) + "-cell");
  }
  FreeCell out = u;
  while (out.dim() > i) out = boundary(side, out);
  return out;
}

FreeCell FreeCategory::normalize_any(const FreeCell& u) const {
  if (auto d = std::get_if<Diagram>(&u.data)) return FreeCell{canonical(*d)};
  return u;
}

bool FreeCategory::same(const FreeCell& u, const FreeCell& v) const {
  return normalize_any(u) == normalize_any(v);
}

void FreeCategory::mismatch(std::size_t i, const FreeCell& left,
                            const FreeCell& right) const {
  throw TypingError("cannot compose at " + std::to_string(i) +
                    ": target of the left cell is " + to_string(left) +
                    ", source of the right cell is " + to_string(right));
}

FreeCell FreeCategory::compose(std::size_t i, const FreeCell& u,
                               const FreeCell& v) const {
  const std::size_t m = std::max(u.dim(), v.dim());
  if (i >= m) {
    throw TypingError("composition *" + std::to_string(i) +
                      " needs a cell of dimension above " + std::to_string(i));
  }
  return compose_same(i, lift(u, m), lift(v, m));
}

FreeCell FreeCategory::compose_same(std::size_t i, const FreeCell& u,
                                    const FreeCell& v) const {
  const std::size_t m = u.dim();
  FreeCell left = boundary(Side::Target, i, u);
  FreeCell right = boundary(Side::Source, i, v);
  if (!same(left, right)) mismatch(i, left, right);

  if (m == 1) {
    const auto& a = std::get<Word>(u.data);
    const auto& b = std::get<Word>(v.data);
    return FreeCell{Word{a.source, b.target, concat(a.gens, b.gens)}};
  }
  if (m == 2) {
    const auto& a = std::get<Diagram>(u.data);
    const auto& b = std::get<Diagram>(v.data);
    if (i == 0) return FreeCell{horizontal(a, b)};
    Diagram out{a.source, b.target, a.layers};
    out.layers.insert(out.layers.end(), b.layers.begin(), b.layers.end());
    return FreeCell{std::move(out)};
  }
  const auto& a = std::get<Higher>(u.data);
  const auto& b = std::get<Higher>(v.data);
  const bool a_unit = a.term.kind() == Term::Kind::Id;
  const bool b_unit = b.term.kind() == Term::Kind::Id;
  if (i + 1 == m) {
    if (a_unit) return v;
    if (b_unit) return u;
    return FreeCell{Higher{m, Term::comp(i, a.term, b.term), a.source, b.target}};
  }
  if (a_unit && b_unit) {
    return identity(normalize_any(compose_same(i, *a.source, *b.source)));
  }
  auto s = std::make_shared<const FreeCell>(
      normalize_any(compose_same(i, *a.source, *b.source)));
  auto t = std::make_shared<const FreeCell>(
      normalize_any(compose_same(i, *a.target, *b.target)));
  return FreeCell{Higher{m, Term::comp(i, a.term, b.term), s, t}};
}

Diagram FreeCategory::horizontal(const Diagram& u, const Diagram& v) const {
  Diagram out;
  out.source = Word{u.source.source, v.source.target,
                    concat(u.source.gens, v.source.gens)};
  out.target = Word{u.target.source, v.target.target,
                    concat(u.target.gens, v.target.gens)};
  for (const auto& w : u.layers) {
    out.layers.push_back(Whisker{w.offset, w.gen, concat(w.context, v.source.gens)});
  }
  const std::size_t shift = u.target.gens.size();
  for (const auto& w : v.layers) {
    out.layers.push_back(
        Whisker{w.offset + shift, w.gen, concat(u.target.gens, w.context)});
  }
  return out;
}

Layers FreeCategory::layers_of(const Diagram& d) {
  Layers out;
  out.reserve(d.layers.size());
  for (const auto& w : d.layers) out.emplace_back(w.offset, w.gen);
  return out;
}

Diagram FreeCategory::diagram(const Word& source, const Layers& layers) const {
  Diagram out{source, source, {}};
  Word ctx = source;
  for (const auto& [offset, gen] : layers) {
    if (gen >= boundaries2_.size()) {
      throw StructuralError("no 2-generator " + std::to_string(gen));
    }
    const auto& [in, outw] = boundaries2_[gen];
    const std::size_t s = in.gens.size();
    if (offset + s > ctx.gens.size() ||
        !std::equal(in.gens.begin(), in.gens.end(), ctx.gens.begin() + offset)) {
      throw TypingError("layer '" + name(2, gen) + "' at offset " +
                        std::to_string(offset) + " does not match " +
                        to_string(ctx));
    }
    CellId point = offset == 0
                       ? ctx.source
                       : std::get<Word>(gen_cells_[1][ctx.gens[offset - 1]].data).target;
    if (point != in.source) {
      throw TypingError("layer '" + name(2, gen) + "' at offset " +
                        std::to_string(offset) + " sits on the wrong 0-cell");
    }
    out.layers.push_back(Whisker{offset, gen, ctx.gens});
    std::vector<CellId> next(ctx.gens.begin(), ctx.gens.begin() + offset);
    next.insert(next.end(), outw.gens.begin(), outw.gens.end());
    next.insert(next.end(), ctx.gens.begin() + offset + s, ctx.gens.end());
    ctx.gens = std::move(next);
  }
  out.target = ctx;
  return out;
}

std::vector<std::pair<std::pair<std::size_t, CellId>,
                      std::pair<std::size_t, CellId>>>
FreeCategory::exchanges(std::pair<std::size_t, CellId> lower,
                        std::pair<std::size_t, CellId> upper) const {
  const auto [a, gl] = lower;
  const auto [b, gu] = upper;
  const std::size_t sl = lengths_[gl].first, tl = lengths_[gl].second;
  const std::size_t su = lengths_[gu].first, tu = lengths_[gu].second;
  std::vector<std::pair<std::pair<std::size_t, CellId>,
                        std::pair<std::size_t, CellId>>>
      out;
  // Upper layer entirely left of the lower layer's output.
  if (b + su <= a) out.push_back({{b, gu}, {a + tu - su, gl}});
  // Entirely right of it.
  if (b >= a + tl) {
    std::pair<std::pair<std::size_t, CellId>, std::pair<std::size_t, CellId>> r{
        {b - tl + sl, gu}, {a, gl}};
    if (out.empty() || out.front() != r) out.push_back(r);
  }
  return out;
}

bool FreeCategory::key_less(const Layers& a, const Layers& b) const {
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(), [&](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return rank2_[x.second] < rank2_[y.second];
      });
}

Layers FreeCategory::canonical_layers(const Layers& layers,
                                      std::map<Layers, Layers>& memo) const {
  if (layers.size() <= 1) return layers;
  if (auto it = memo.find(layers); it != memo.end()) return it->second;

  // Every way of sinking one layer to the bottom by successive exchanges.
  std::set<Layers> candidates;
  std::function<void(const Layers&, std::size_t)> sink =
      [&](const Layers& seq, std::size_t p) {
        if (p == 0) {
          candidates.insert(seq);
          return;
        }
        for (const auto& [lo, up] : exchanges(seq[p - 1], seq[p])) {
          Layers next = seq;
          next[p - 1] = lo;
          next[p] = up;
          sink(next, p - 1);
        }
      };
  for (std::size_t j = 0; j < layers.size(); ++j) sink(layers, j);

  auto bottom_less = [&](const Layers& x, const Layers& y) {
    return key_less(Layers{x.front()}, Layers{y.front()});
  };
  const Layers& least = *std::min_element(candidates.begin(), candidates.end(),
                                          bottom_less);
  std::optional<Layers> best;
  for (const auto& cand : candidates) {
    if (bottom_less(cand, least) || bottom_less(least, cand)) continue;
    Layers rest = canonical_layers(Layers(cand.begin() + 1, cand.end()), memo);
    Layers full{cand.front()};
    full.insert(full.end(), rest.begin(), rest.end());
    if (!best || key_less(full, *best)) best = std::move(full);
  }
  memo.emplace(layers, *best);
  return *best;
}

Layers FreeCategory::least_in_class(const Layers& layers) const {
  std::set<Layers> seen{layers};
  std::deque<Layers> queue{layers};
  Layers best = layers;
  while (!queue.empty()) {
    Layers cur = std::move(queue.front());
    queue.pop_front();
    if (key_less(cur, best)) best = cur;
    for (std::size_t p = 0; p + 1 < cur.size(); ++p) {
      for (const auto& [lo, up] : exchanges(cur[p], cur[p + 1])) {
        Layers next = cur;
        next[p] = lo;
        next[p + 1] = up;
        if (seen.insert(next).second) {
          if (seen.size() > kClassBudget) {
            throw DomainError("exchange class exceeds " +
                              std::to_string(kClassBudget) +
                              " layer orders; diagram too large to normalize");
          }
          queue.push_back(std::move(next));
        }
      }
    }
  }
  return best;
}

Diagram FreeCategory::canonical(const Diagram& d) const {
  Layers layers = layers_of(d);
  // A layer with empty output under one with empty input can be exchanged
  // two ways. Then sinking a layer is not cancellable and only the whole
  // class gives the least order.
  bool empty_out = false, empty_in = false;
  for (const auto& [offset, gen] : layers) {
    empty_out = empty_out || lengths_[gen].second == 0;
    empty_in = empty_in || lengths_[gen].first == 0;
  }
  if (empty_out && empty_in) return diagram(d.source, least_in_class(layers));
  std::map<Layers, Layers> memo;
  return diagram(d.source, canonical_layers(layers, memo));
}

FreeCell FreeCategory::normalize(const FreeCell& u) const {
  if (u.dim() > 2) throw UnsupportedDimension(u.dim());
  return normalize_any(u);
}

bool FreeCategory::equal(const FreeCell& u, const FreeCell& v) const {
  if (u.dim() > 2) throw UnsupportedDimension(u.dim());
  if (v.dim() > 2) throw UnsupportedDimension(v.dim());
  return same(u, v);
}

Term FreeCategory::term_of(const FreeCell& u) const {
  auto word_term = [&](const std::vector<CellId>& gens,
                       std::size_t from, std::size_t to) -> std::optional<Term> {
    if (from >= to) return std::nullopt;
    Term t = Term::gen(name(1, gens[from]));
    for (std::size_t k = from + 1; k < to; ++k) {
      t = Term::comp(0, std::move(t), Term::gen(name(1, gens[k])));
    }
    return t;
  };
  return std::visit(
      [&](const auto& c) -> Term {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Point>) {
          return Term::gen(name(0, c.gen));
        } else if constexpr (std::is_same_v<T, Word>) {
          auto t = word_term(c.gens, 0, c.gens.size());
          return t ? *t : Term::id(Term::gen(name(0, c.source)));
        } else if constexpr (std::is_same_v<T, Diagram>) {
          if (c.layers.empty()) return Term::id(term_of(FreeCell{c.source}));
          std::optional<Term> out;
          for (const auto& w : c.layers) {
            Term layer = Term::gen(name(2, w.gen));
            const std::size_t end = w.offset + lengths_[w.gen].first;
            if (auto left = word_term(w.context, 0, w.offset)) {
              layer = Term::comp(0, *left, layer);
            }
            for (std::size_t k = end; k < w.context.size(); ++k) {
              layer = Term::comp(0, layer, Term::gen(name(1, w.context[k])));
            }
            out = out ? Term::comp(1, *out, layer) : layer;
          }
          return *out;
        } else {
          return c.term;
        }
      },
      u.data);
}

std::string FreeCategory::to_string(const FreeCell& u) const {
  return polycat::to_string(term_of(u));
}

std::string FreeCategory::to_string(const Word& w) const {
  return to_string(FreeCell{w});
}

Typing infer_type(const Polygraph& p, const Term& t) {
  FreeCategory c(p);
  Typing out;
  out.cell = c.infer(t);
  out.dim = out.cell.dim();
  if (out.dim > 0) {
    out.source = c.boundary(Side::Source, out.cell);
    out.target = c.boundary(Side::Target, out.cell);
    if (auto d = std::get_if<Diagram>(&out.source->data)) *out.source = FreeCell{c.canonical(*d)};
    if (auto d = std::get_if<Diagram>(&out.target->data)) *out.target = FreeCell{c.canonical(*d)};
  }
  return out;
}

FreeCell normalize(const Polygraph& p, const Term& t) {
  FreeCategory c(p);
  return c.normalize(c.infer(t));
}

bool decide_equal(const Polygraph& p, const Term& a, const Term& b) {
  FreeCategory c(p);
  FreeCell u = c.infer(a);
  FreeCell v = c.infer(b);
  if (u.dim() > 2) throw UnsupportedDimension(u.dim());
  if (v.dim() > 2) throw UnsupportedDimension(v.dim());
  if (u.dim() != v.dim()) return false;
  return c.equal(u, v);
}

Verdict oracle_equal(const FreeCategory& c, const FreeCell& a,
                     const FreeCell& b, std::size_t bound) {
  if (a.dim() > 2) throw UnsupportedDimension(a.dim());
  if (b.dim() > 2) throw UnsupportedDimension(b.dim());
  if (a.dim() != b.dim()) return Verdict::NotEqual;
  if (a.dim() < 2) return a == b ? Verdict::Equal : Verdict::NotEqual;
  const auto& da = std::get<Diagram>(a.data);
  const auto& db = std::get<Diagram>(b.data);
  if (!(da.source == db.source) || !(da.target == db.target)) {
    return Verdict::NotEqual;
  }
  const Layers goal = FreeCategory::layers_of(db);
  const Layers start = FreeCategory::layers_of(da);
  if (start == goal) return Verdict::Equal;
  if (start.size() != goal.size()) return Verdict::NotEqual;
  std::set<Layers> seen{start};
  std::deque<Layers> queue{start};
  while (!queue.empty()) {
    Layers cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t p = 0; p + 1 < cur.size(); ++p) {
      for (const auto& [lo, up] : c.exchanges(cur[p], cur[p + 1])) {
        Layers next = cur;
        next[p] = lo;
        next[p + 1] = up;
        if (next == goal) return Verdict::Equal;
        if (seen.insert(next).second) {
          if (seen.size() > bound) return Verdict::Indeterminate;
          queue.push_back(std::move(next));
        }
      }
    }
  }
  return Verdict::NotEqual;
}

Verdict oracle_equal(const Polygraph& p, const Term& a, const Term& b,
                     std::size_t bound) {
  FreeCategory c(p);
  return oracle_equal(c, c.infer(a), c.infer(b), bound);
}

namespace {

std::vector<Word> words_up_to(const FreeCategory& c, std::size_t max) {
  const Polygraph& p = c.polygraph();
  std::vector<Word> out;
  std::vector<Word> level;
  for (CellId x = 0; x < p.generators(0).size(); ++x) level.push_back(Word{x, x, {}});
  for (std::size_t len = 0;; ++len) {
    out.insert(out.end(), level.begin(), level.end());
    if (len == max || p.dim() < 1) break;
    std::vector<Word> next;
    for (const auto& w : level) {
      for (CellId g = 0; g < p.generators(1).size(); ++g) {
        const Word gw = std::get<Word>(c.generator(1, g).data);
        if (gw.source != w.target) continue;
        Word ext = w;
        ext.gens.push_back(g);
        ext.target = gw.target;
        next.push_back(std::move(ext));
      }
    }
    if (next.empty()) break;
    level = std::move(next);
  }
  return out;
}

std::vector<std::size_t> diagram_key(const Diagram& d) {
  std::vector<std::size_t> key{d.source.source};
  key.push_back(d.source.gens.size());
  key.insert(key.end(), d.source.gens.begin(), d.source.gens.end());
  for (const auto& w : d.layers) {
    key.push_back(w.offset);
    key.push_back(w.gen);
  }
  return key;
}

}  // namespace

std::vector<FreeCell> enumerate_cells(const FreeCategory& c, std::size_t dim,
                                      std::size_t max,
                                      const EnumerateOptions& options) {
  const Polygraph& p = c.polygraph();
  if (dim > 2) throw UnsupportedDimension(dim);
  if (dim > p.dim()) {
    throw DimensionError("polygraph has no generators in dimension " +
                         std::to_string(dim));
  }
  std::vector<FreeCell> out;
  if (dim == 0) {
    for (CellId x = 0; x < p.generators(0).size(); ++x) out.push_back(FreeCell{Point{x}});
    return out;
  }
  if (dim == 1) {
    for (auto& w : words_up_to(c, max)) out.push_back(FreeCell{std::move(w)});
    return out;
  }

  std::vector<Word> sources;
  if (options.boundary) {
    sources.push_back(options.boundary->first);
  } else {
    sources = words_up_to(c, options.word_max.value_or(max));
  }
  std::set<std::vector<std::size_t>> seen;
  std::vector<Diagram> found;
  std::vector<Diagram> frontier;
  for (const auto& w : sources) {
    Diagram d{w, w, {}};
    seen.insert(diagram_key(d));
    frontier.push_back(d);
  }
  found = frontier;
  const auto& gens2 = p.generators(2);
  for (std::size_t layer = 0; layer < max; ++layer) {
    std::vector<Diagram> next;
    for (const auto& d : frontier) {
      const auto& ctx = d.target.gens;
      for (CellId g = 0; g < gens2.size(); ++g) {
        const std::size_t s = c.source_length(g);
        if (s > ctx.size()) continue;
        for (std::size_t o = 0; o + s <= ctx.size(); ++o) {
          Layers layers = FreeCategory::layers_of(d);
          layers.emplace_back(o, g);
          Diagram cand;
          try {
            cand = c.diagram(d.source, layers);
          } catch (const TypingError&) {
            continue;
          }
          cand = c.canonical(cand);
          if (seen.insert(diagram_key(cand)).second) next.push_back(cand);
        }
      }
    }
    found.insert(found.end(), next.begin(), next.end());
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  if (options.boundary) {
    std::erase_if(found, [&](const Diagram& d) {
      return !(d.target == options.boundary->second);
    });
  }
  std::vector<std::pair<std::vector<std::size_t>, Diagram>> keyed;
  for (auto& d : found) {
    std::vector<std::size_t> key{d.layers.size()};
    for (const auto& w : d.layers) {
      key.push_back(w.offset);
      key.push_back(w.gen);
    }
    key.push_back(d.source.source);
    key.insert(key.end(), d.source.gens.begin(), d.source.gens.end());
    keyed.emplace_back(std::move(key), std::move(d));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [key, d] : keyed) out.push_back(FreeCell{std::move(d)});
  return out;
}

std::vector<FreeCell> enumerate_cells(const Polygraph& p, std::size_t dim,
                                      std::size_t max,
                                      const EnumerateOptions& options) {
  return enumerate_cells(FreeCategory(p), dim, max, options);
}

}  // namespace polycat
