#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

using namespace polycat;

namespace oracle {

namespace {

Names concat(const Names& a, const Names& b) {
  Names out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Names concat(const Names& a, const Names& b, const Names& c) { return concat(concat(a, b), c); }

Names slice(const Names& w, std::size_t from, std::size_t to) {
  return Names(w.begin() + static_cast<std::ptrdiff_t>(from),
               w.begin() + static_cast<std::ptrdiff_t>(to));
}

std::optional<std::size_t> dim_of(const Polygraph& p, const std::string& name) {
  for (std::size_t k = 0; k <= p.dim(); ++k) {
    for (const auto& g : p.generators(k)) {
      if (g.name == name) return k;
    }
  }
  return std::nullopt;
}

const Generator* lookup(const Polygraph& p, std::size_t k, const std::string& name) {
  for (const auto& g : p.generators(k)) {
    if (g.name == name) return &g;
  }
  return nullptr;
}

Cell lift(const Cell& c) {
  Cell out = c;
  out.dim = c.dim + 1;
  if (c.dim == 0) {
    out.end = c.point;
    out.source = out.target = {};
  } else {
    out.layers.clear();
  }
  return out;
}

// Source and target words of each 2-generator.
struct Shapes {
  std::map<std::string, std::pair<Names, Names>> words;
  std::map<std::string, std::string> base;  // 0-cell below an empty source

  explicit Shapes(const Polygraph& p) {
    if (p.dim() < 2) return;
    for (const auto& g : p.generators(2)) {
      auto s = interpret(p, *g.source);
      auto t = interpret(p, *g.target);
      words[g.name] = {s->source, t->source};
      base[g.name] = s->point;
    }
  }
};

}  // namespace

std::optional<Cell> interpret(const Polygraph& p, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Gen: {
      auto k = dim_of(p, t.name());
      if (!k || *k > 2) return std::nullopt;
      if (*k == 0) return Cell{0, t.name(), {}, {}, {}, {}};
      const Generator* g = lookup(p, *k, t.name());
      auto s = interpret(p, *g->source);
      auto e = interpret(p, *g->target);
      if (!s || !e) return std::nullopt;
      if (*k == 1) return Cell{1, s->point, e->point, {t.name()}, {t.name()}, {}};
      return Cell{2, s->point, s->end, s->source, e->source, {{{}, t.name(), {}}}};
    }
    case Term::Kind::Id: {
      auto a = interpret(p, t.arg());
      if (!a || a->dim >= 2) return std::nullopt;
      return lift(*a);
    }
    case Term::Kind::Comp: {
      auto a = interpret(p, t.lhs());
      auto b = interpret(p, t.rhs());
      if (!a || !b) return std::nullopt;
      while (a->dim < b->dim) a = lift(*a);
      while (b->dim < a->dim) b = lift(*b);
      const std::size_t i = t.index();
      if (a->dim <= i) return std::nullopt;
      if (i == 0) {
        if (a->end != b->point) return std::nullopt;
        Cell out{a->dim, a->point, b->end, concat(a->source, b->source),
                 concat(a->target, b->target), {}};
        for (auto l : a->layers) {
          l.right = concat(l.right, b->source);
          out.layers.push_back(l);
        }
        for (auto l : b->layers) {
          l.left = concat(a->target, l.left);
          out.layers.push_back(l);
        }
        return out;
      }
      if (a->point != b->point || a->end != b->end || a->target != b->source) {
        return std::nullopt;
      }
      Cell out{2, a->point, a->end, a->source, b->target, a->layers};
      out.layers.insert(out.layers.end(), b->layers.begin(), b->layers.end());
      return out;
    }
  }
  return std::nullopt;
}

namespace {

std::vector<std::vector<Layer>> exchange_all(const Shapes& all,
                                             const std::vector<Layer>& layers) {
  const auto& shapes = all.words;
  std::vector<std::vector<Layer>> out;
  for (std::size_t k = 0; k + 1 < layers.size(); ++k) {
    const Layer& lo = layers[k];
    const Layer& up = layers[k + 1];
    const auto& [s1, t1] = shapes.at(lo.gen);
    const auto& [s2, t2] = shapes.at(up.gen);
    // The upper generator sits inside the lower one's left word.
    if (up.left.size() + s2.size() <= lo.left.size()) {
      Names m = slice(lo.left, up.left.size() + s2.size(), lo.left.size());
      auto next = layers;
      next[k] = {up.left, up.gen, concat(m, s1, lo.right)};
      next[k + 1] = {concat(up.left, t2, m), lo.gen, lo.right};
      out.push_back(std::move(next));
    }
    // The upper generator sits inside the lower one's right word.
    if (up.left.size() >= lo.left.size() + t1.size()) {
      Names m = slice(up.left, lo.left.size() + t1.size(), up.left.size());
      auto next = layers;
      next[k] = {concat(lo.left, s1, m), up.gen, up.right};
      next[k + 1] = {lo.left, lo.gen, concat(m, t2, up.right)};
      out.push_back(std::move(next));
    }
  }
  return out;
}

}  // namespace

std::vector<std::vector<Layer>> neighbours(const Polygraph& p,
                                           const std::vector<Layer>& layers) {
  return exchange_all(Shapes(p), layers);
}

Verdict word_equal(const Polygraph& p, const Cell& a, const Cell& b, std::size_t bound) {
  if (a.dim != b.dim || a.point != b.point) return Verdict::NotEqual;
  if (a.dim == 0) return Verdict::Equal;
  if (a.end != b.end || a.source != b.source || a.target != b.target) {
    return Verdict::NotEqual;
  }
  if (a.dim == 1) return Verdict::Equal;
  if (a.layers.size() != b.layers.size()) return Verdict::NotEqual;
  const Shapes shapes(p);
  std::set<std::vector<Layer>> seen{a.layers};
  std::deque<std::vector<Layer>> queue{a.layers};
  while (!queue.empty()) {
    auto cur = std::move(queue.front());
    queue.pop_front();
    if (cur == b.layers) return Verdict::Equal;
    for (auto& n : exchange_all(shapes, cur)) {
      if (seen.insert(n).second) {
        if (seen.size() > bound) return Verdict::Indeterminate;
        queue.push_back(std::move(n));
      }
    }
  }
  return Verdict::NotEqual;
}

namespace {

Term word_term(const std::string& point, const Names& w) {
  if (w.empty()) return Term::id(Term::gen(point));
  Term t = Term::gen(w[0]);
  for (std::size_t k = 1; k < w.size(); ++k) t = Term::comp(0, t, Term::gen(w[k]));
  return t;
}

// Objects met along a word, starting at `point`.
std::vector<std::string> objects(const Polygraph& p, const std::string& point, const Names& w) {
  std::vector<std::string> out{point};
  for (const auto& a : w) out.push_back(interpret(p, Term::gen(a))->end);
  return out;
}

// A random walk of up to `max` 1-generators from `start`.
Names walk(const Polygraph& p, std::mt19937& rng, const std::string& start, std::size_t max) {
  Names w;
  std::string at = start;
  std::size_t len = std::uniform_int_distribution<std::size_t>(0, max)(rng);
  for (std::size_t k = 0; k < len; ++k) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& g : p.generators(1)) {
      auto c = interpret(p, Term::gen(g.name));
      if (c->point == at) out.emplace_back(g.name, c->end);
    }
    if (out.empty()) break;
    auto& pick = out[std::uniform_int_distribution<std::size_t>(0, out.size() - 1)(rng)];
    w.push_back(pick.first);
    at = pick.second;
  }
  return w;
}

std::string end_of(const Polygraph& p, const std::string& start, const Names& w) {
  return objects(p, start, w).back();
}

template <class T>
const T& pick(std::mt19937& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

bool coin(std::mt19937& rng, double p) { return std::bernoulli_distribution(p)(rng); }

// A pair of parallel words of length <= max from a random object.
std::pair<std::pair<std::string, Names>, Names> parallel_words(const Polygraph& p,
                                                               std::mt19937& rng,
                                                               std::size_t max) {
  std::vector<std::string> objs;
  for (const auto& g : p.generators(0)) objs.push_back(g.name);
  const std::string start = pick(rng, objs);
  Names s = walk(p, rng, start, max);
  const std::string end = end_of(p, start, s);
  for (int attempt = 0; attempt < 100; ++attempt) {
    Names t = walk(p, rng, start, max);
    if (end_of(p, start, t) == end) return {{start, s}, t};
  }
  return {{start, s}, s};
}

}  // namespace

Polygraph random_polygraph(std::mt19937& rng, std::size_t index) {
  Polygraph p(2, "random" + std::to_string(index));
  const std::size_t objects = std::uniform_int_distribution<std::size_t>(1, 2)(rng);
  const std::vector<std::string> obj_names = {"x", "y"};
  for (std::size_t k = 0; k < objects; ++k) p.add(obj_names[k]);
  const std::vector<std::string> arrows = {"a", "b", "c"};
  const std::size_t n1 = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
  std::uniform_int_distribution<std::size_t> obj(0, objects - 1);
  for (std::size_t k = 0; k < n1; ++k) {
    p.add(1, arrows[k], Term::gen(obj_names[obj(rng)]), Term::gen(obj_names[obj(rng)]));
  }
  const std::vector<std::string> cells = {"A", "B", "C"};
  const std::size_t n2 = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
  for (std::size_t k = 0; k < n2; ++k) {
    auto [start, t] = parallel_words(p, rng, 3);
    if (coin(rng, 0.5)) std::swap(start.second, t);
    p.add(2, cells[k], word_term(start.first, start.second), word_term(start.first, t));
  }
  return p;
}

Cell random_diagram_from(const Polygraph& p, std::mt19937& rng, const Cell& start,
                         std::size_t max_layers) {
  Shapes shapes(p);
  Cell d = start;
  d.dim = 2;
  d.layers.clear();
  Names w = start.source;
  const std::size_t count = std::uniform_int_distribution<std::size_t>(0, max_layers)(rng);
  for (std::size_t n = 0; n < count; ++n) {
    const auto objs = objects(p, d.point, w);
    std::vector<std::pair<std::size_t, std::string>> moves;
    for (const auto& [g, st] : shapes.words) {
      const Names& s = st.first;
      for (std::size_t o = 0; o + s.size() <= w.size(); ++o) {
        if (objs[o] != shapes.base.at(g)) continue;
        if (std::equal(s.begin(), s.end(), w.begin() + static_cast<std::ptrdiff_t>(o))) {
          moves.emplace_back(o, g);
        }
      }
    }
    if (moves.empty()) break;
    const auto& [o, g] = pick(rng, moves);
    const auto& [s, t] = shapes.words.at(g);
    Layer l{slice(w, 0, o), g, slice(w, o + s.size(), w.size())};
    w = concat(l.left, t, l.right);
    d.layers.push_back(std::move(l));
  }
  d.target = w;
  return d;
}

Cell random_diagram(const Polygraph& p, std::mt19937& rng, std::size_t max_layers) {
  std::vector<std::string> objs;
  for (const auto& g : p.generators(0)) objs.push_back(g.name);
  Cell start;
  start.point = pick(rng, objs);
  start.source = walk(p, rng, start.point, 4);
  start.end = end_of(p, start.point, start.source);
  return random_diagram_from(p, rng, start, max_layers);
}

Term random_term(const Polygraph& p, std::mt19937& rng, const Cell& d) {
  Shapes shapes(p);
  // Whiskering by a word, either padded implicitly or through id(...).
  auto whisker = [&](const Names& left, Term mid, const Names& right) {
    const bool explicit_id = coin(rng, 0.5);
    auto side = [&](const Names& w) {
      Term t = word_term("", w);
      return explicit_id ? Term::id(t) : t;
    };
    if (!left.empty()) mid = Term::comp(0, side(left), mid);
    if (!right.empty()) mid = Term::comp(0, mid, side(right));
    return mid;
  };

  std::vector<Term> pieces;
  for (std::size_t k = 0; k < d.layers.size(); ++k) {
    const Layer& lo = d.layers[k];
    if (k + 1 < d.layers.size() && coin(rng, 0.35)) {
      const Layer& up = d.layers[k + 1];
      const auto& [s1, t1] = shapes.words.at(lo.gen);
      const auto& [s2, t2] = shapes.words.at(up.gen);
      std::optional<Term> merged;
      if (up.left.size() >= lo.left.size() + t1.size()) {
        Names m = slice(up.left, lo.left.size() + t1.size(), up.left.size());
        Term h = Term::gen(lo.gen);
        if (!m.empty()) h = Term::comp(0, h, Term::id(word_term("", m)));
        h = Term::comp(0, h, Term::gen(up.gen));
        merged = whisker(lo.left, h, up.right);
      } else if (up.left.size() + s2.size() <= lo.left.size()) {
        Names m = slice(lo.left, up.left.size() + s2.size(), lo.left.size());
        Term h = Term::gen(up.gen);
        if (!m.empty()) h = Term::comp(0, h, Term::id(word_term("", m)));
        h = Term::comp(0, h, Term::gen(lo.gen));
        merged = whisker(up.left, h, lo.right);
      }
      if (merged) {
        pieces.push_back(*merged);
        ++k;
        continue;
      }
    }
    pieces.push_back(whisker(lo.left, Term::gen(lo.gen), lo.right));
  }
  if (pieces.empty()) return Term::id(word_term(d.point, d.source));

  std::function<Term(std::size_t, std::size_t)> bracket = [&](std::size_t from,
                                                               std::size_t to) -> Term {
    if (to - from == 1) return pieces[from];
    std::size_t mid = std::uniform_int_distribution<std::size_t>(from + 1, to - 1)(rng);
    return Term::comp(1, bracket(from, mid), bracket(mid, to));
  };
  return bracket(0, pieces.size());
}

std::vector<std::size_t> pushout_counts(const PolMorphism& f, const PolMorphism& g) {
  const Polygraph& r = f.source;
  const std::size_t n = std::max(f.target.dim(), g.target.dim());
  std::vector<std::size_t> counts;
  for (std::size_t k = 0; k <= n; ++k) {
    const std::size_t np = k <= f.target.dim() ? f.target.generators(k).size() : 0;
    const std::size_t nq = k <= g.target.dim() ? g.target.generators(k).size() : 0;
    std::vector<std::size_t> parent(np + nq);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    if (k <= r.dim()) {
      for (std::size_t e = 0; e < r.generators(k).size(); ++e) {
        parent[find(f.maps[k][e])] = find(np + g.maps[k][e]);
      }
    }
    std::size_t classes = 0;
    for (std::size_t x = 0; x < parent.size(); ++x) classes += find(x) == x;
    counts.push_back(classes);
  }
  return counts;
}

Polygraph random_small_polygraph(std::mt19937& rng, const std::string& prefix) {
  const std::size_t dim = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
  Polygraph p(dim, prefix);
  const std::size_t n0 = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
  for (std::size_t k = 0; k < n0; ++k) p.add(prefix + "x" + std::to_string(k));
  if (dim >= 1) {
    const std::size_t n1 = std::uniform_int_distribution<std::size_t>(0, 3)(rng);
    std::uniform_int_distribution<std::size_t> obj(0, n0 - 1);
    for (std::size_t k = 0; k < n1; ++k) {
      p.add(1, prefix + "f" + std::to_string(k), Term::gen(prefix + "x" + std::to_string(obj(rng))),
            Term::gen(prefix + "x" + std::to_string(obj(rng))));
    }
  }
  if (dim >= 2) {
    const std::size_t n2 = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
    for (std::size_t k = 0; k < n2; ++k) {
      auto [start, t] = parallel_words(p, rng, 2);
      p.add(2, prefix + "g" + std::to_string(k), word_term(start.first, start.second),
            word_term(start.first, t));
    }
  }
  return p;
}

namespace {

Term rename(const Term& t, const std::unordered_map<std::string, std::string>& names) {
  switch (t.kind()) {
    case Term::Kind::Gen: {
      auto it = names.find(t.name());
      return Term::gen(it == names.end() ? t.name() : it->second);
    }
    case Term::Kind::Id: return Term::id(rename(t.arg(), names));
    case Term::Kind::Comp:
      return Term::comp(t.index(), rename(t.lhs(), names), rename(t.rhs(), names));
  }
  return t;
}

}  // namespace

PolMorphism random_quotient(std::mt19937& rng, const Polygraph& r, const std::string& name) {
  Polygraph p(r.dim(), name);
  std::unordered_map<std::string, std::string> rep;
  std::vector<std::vector<std::size_t>> maps(r.dim() + 1);
  std::vector<std::vector<std::string>> kept(r.dim() + 1);

  for (std::size_t k = 0; k <= r.dim(); ++k) {
    for (const auto& g : r.generators(k)) {
      std::optional<Term> s, t;
      if (k > 0) {
        s = rename(*g.source, rep);
        t = rename(*g.target, rep);
      }
      // Identify with an earlier kept generator of the same shape.
      std::vector<std::size_t> candidates;
      if (k < 2) {
        for (std::size_t j = 0; j < kept[k].size(); ++j) {
          const Generator& h = p.generator(k, j);
          if (k == 0 || (h.source == s && h.target == t)) candidates.push_back(j);
        }
      }
      if (!candidates.empty() && coin(rng, 0.35)) {
        std::size_t j = pick(rng, candidates);
        rep[g.name] = kept[k][j];
        maps[k].push_back(j);
        continue;
      }
      rep[g.name] = g.name;
      maps[k].push_back(kept[k].size());
      kept[k].push_back(g.name);
      if (k == 0) {
        p.add(g.name);
      } else {
        p.add(k, g.name, *s, *t);
      }
    }
    // Fresh generators outside the image.
    const std::size_t extra = std::uniform_int_distribution<std::size_t>(0, 1)(rng);
    for (std::size_t e = 0; e < extra && k < 2; ++e) {
      std::string fresh = name + "n" + std::to_string(k) + std::to_string(e);
      if (k == 0) {
        p.add(fresh);
      } else {
        const auto& objs = p.generators(0);
        p.add(1, fresh, Term::gen(pick(rng, objs).name), Term::gen(pick(rng, objs).name));
      }
      kept[k].push_back(fresh);
    }
  }
  return PolMorphism{r, p, maps};
}

}  // namespace oracle
