#include "polycat/report.hpp"

#include <algorithm>

namespace polycat {

bool Report::has_label(const std::string& label) const {
  auto match = [&](const Violation& v) { return v.label == label; };
  return std::ranges::any_of(violations, match) ||
         std::ranges::any_of(errors, match);
}

std::vector<std::string> Report::labels() const {
  std::vector<std::string> out;
  for (const auto* list : {&errors, &violations}) {
    for (const auto& v : *list) {
      if (std::ranges::find(out, v.label) == out.end()) out.push_back(v.label);
    }
  }
  return out;
}

std::string to_string(const Violation& v) {
  std::string out = v.label + " (";
  for (std::size_t i = 0; i < v.witness.size(); ++i) {
    if (i > 0) out += ", ";
    out += v.witness[i];
  }
  out += ")";
  if (!v.detail.empty()) out += ": " + v.detail;
  return out;
}

}  // namespace polycat
