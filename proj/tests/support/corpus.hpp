#pragma once

#include <string>
#include <vector>

#include "polycat/polygraph.hpp"
#include "polycat/precat.hpp"
#include "polycat/strictcat.hpp"

namespace corpus {

struct Entry {
  std::string name;
  polycat::FiniteStrictCat cat;
};

struct Corrupted {
  std::string name;
  polycat::FiniteStrictCat cat;
  std::string label;  // the axiom the corruption breaks
};

/// The free strict category on p, tabulated from the cells enumerated
/// within `bound`. Throws if a composite falls outside the enumeration.
polycat::FiniteStrictCat finite_free_category(const polycat::Polygraph& p,
                                              std::size_t bound);

std::vector<Entry> one_categories();
std::vector<Entry> two_categories();
std::vector<Corrupted> corrupted();

polycat::FinitePrecat left_zero_precat();

std::string fixture(const std::string& file);

}  // namespace corpus
