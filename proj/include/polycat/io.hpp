#pragma once

#include <string>
#include <string_view>

#include "polycat/eat.hpp"
#include "polycat/polygraph.hpp"

namespace polycat {

// Polygraph files:
//
//   polygraph "pseudomonoid"     optional header
//   dim 0:
//     x
//   dim 1:
//     one : x -> x
//
// Sections run from dim 0 upwards without gaps; `#` starts a comment.

/// Throws ParseError with the line and column of the offending text, and
/// StructuralError (prefixed with the line) for duplicate generators. The
/// result is not validated.
Polygraph parse_polygraph(std::string_view text);
Polygraph read_polygraph(const std::string& path);
std::string print_polygraph(const Polygraph& p);

// Theory files:
//
//   theory "cat"
//   sort c0
//   op src0 : c1 -> c0
//   partial op comp : c1 c1 -> c1
//   def comp : tgt0(x1) = src0(x2)
//   eq assoc [c1 c1 c1] : comp(comp(x1, x2), x3) = comp(x1, comp(x2, x3))
//
// Constants are written `op e : -> s` and used as `e`.

TermE parse_eat_term(std::string_view text, std::size_t line = 1,
                     std::size_t column = 1);
Theory parse_theory(std::string_view text);
std::string print_theory(const Theory& t);

// Model files, read against a theory:
//
//   model "z2"
//   carrier s : 0 1
//   table m : 0 1 -> 1
//   table e : -> 0

FiniteModel parse_model(std::string_view text, const Theory& t);
std::string print_model(const FiniteModel& m, const Theory& t);

std::string read_file(const std::string& path);

}  // namespace polycat
