#pragma once

#include <string>
#include <vector>

namespace polycat {

/// One failed check: a label naming the law or condition, and the cells or
/// values that witness the failure.
struct Violation {
  std::string label;
  std::vector<std::string> witness;
  std::string detail;
};

/// Outcome of an exhaustive check. `errors` collects precondition failures
/// (a partial operation defined off its domain, a missing table entry),
/// which are kept apart from violations of the laws themselves.
struct Report {
  std::vector<Violation> errors;
  std::vector<Violation> violations;

  bool ok() const { return errors.empty() && violations.empty(); }
  bool has_label(const std::string& label) const;
  std::vector<std::string> labels() const;
};

std::string to_string(const Violation& v);

}  // namespace polycat
