#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <tuple>
#include <string>
#include <vector>

#include "polycat/polygraph.hpp"
#include "polycat/term.hpp"

// Reference implementations used to judge the library. They share no code
// with it beyond the Polygraph and Term data types.
namespace oracle {

using Names = std::vector<std::string>;

// A whisker X g Y: generator g applied between the words X and Y.
struct Layer {
  Names left;
  std::string gen;
  Names right;
  bool operator==(const Layer&) const = default;
  bool operator<(const Layer& o) const {
    return std::tie(left, gen, right) < std::tie(o.left, o.gen, o.right);
  }
};

// A cell of dimension <= 2 of a free 2-category, as plain strings.
struct Cell {
  std::size_t dim = 0;
  std::string point;  // 0-cell, or the base point of a 1- or 2-cell
  std::string end;    // target 0-cell for dimensions 1 and 2
  Names source;       // 1-cell word (the cell itself in dimension 1)
  Names target;
  std::vector<Layer> layers;
};

// Interprets a term by direct string manipulation. Returns nullopt when the
// term is ill-typed or leaves dimension 2.
std::optional<Cell> interpret(const polycat::Polygraph& p, const polycat::Term& t);

enum class Verdict { Equal, NotEqual, Indeterminate };

// Breadth-first search over exchanges of adjacent independent layers, with
// independence judged by splitting the words around each generator.
Verdict word_equal(const polycat::Polygraph& p, const Cell& a, const Cell& b,
                   std::size_t bound);

// All layer stacks one exchange away from `layers`.
std::vector<std::vector<Layer>> neighbours(const polycat::Polygraph& p,
                                           const std::vector<Layer>& layers);

// Random 2-polygraph with at most three generators per dimension and
// 2-generator boundaries of length at most three.
polycat::Polygraph random_polygraph(std::mt19937& rng, std::size_t index);

// A random stack of at most `max_layers` whiskers starting from a random
// word. Returns the source word and the layers.
Cell random_diagram(const polycat::Polygraph& p, std::mt19937& rng,
                    std::size_t max_layers);
Cell random_diagram_from(const polycat::Polygraph& p, std::mt19937& rng,
                         const Cell& start, std::size_t max_layers);

// A term denoting the diagram, with random bracketing and occasional
// horizontal composites of independent neighbours.
polycat::Term random_term(const polycat::Polygraph& p, std::mt19937& rng,
                          const Cell& d);

// Per-dimension generator counts of a pushout, by union-find over the
// disjoint union of the two targets.
std::vector<std::size_t> pushout_counts(const polycat::PolMorphism& f,
                                        const polycat::PolMorphism& g);

// A random polygraph of dimension <= 2 whose generator names start with
// `prefix`.
polycat::Polygraph random_small_polygraph(std::mt19937& rng, const std::string& prefix);

// A random quotient P of r, enlarged by fresh generators, and the quotient
// map r -> P. Only 0- and 1-generators are identified.
polycat::PolMorphism random_quotient(std::mt19937& rng, const polycat::Polygraph& r,
                                     const std::string& name);

}  // namespace oracle
