#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "polycat/cli.hpp"
#include "polycat/eat.hpp"
#include "polycat/errors.hpp"
#include "polycat/freecat.hpp"
#include "polycat/io.hpp"
#include "polycat/svg.hpp"

namespace py = pybind11;
using namespace polycat;

namespace {

py::dict cell_dict(const FreeCategory& c, const FreeCell& u) {
  py::dict d;
  d["dim"] = u.dim();
  d["term"] = c.to_string(u);
  if (u.dim() > 0) {
    d["source"] = c.to_string(c.boundary(Side::Source, u));
    d["target"] = c.to_string(c.boundary(Side::Target, u));
  }
  if (auto diagram = std::get_if<Diagram>(&u.data)) {
    py::list layers;
    for (const auto& w : diagram->layers) {
      layers.append(py::make_tuple(w.offset, c.name(2, w.gen)));
    }
    d["layers"] = layers;
  }
  return d;
}

std::vector<std::string> messages(const Report& r) {
  std::vector<std::string> out;
  for (const auto& v : r.errors) out.push_back(to_string(v));
  for (const auto& v : r.violations) out.push_back(to_string(v));
  return out;
}

Theory bundled_theory(const std::string& name) {
  if (name == "mon") return theory_mon();
  if (name == "grp") return theory_grp();
  if (name == "gph") return theory_gph();
  if (name == "cat") return theory_cat();
  throw py::value_error("unknown theory " + name);
}

}  // namespace

PYBIND11_MODULE(_polycat, m) {
  m.doc() = "Polygraphs, free strict categories and essentially algebraic theories";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<TypingError>(m, "TypingError", base.ptr());
  py::register_exception<StructuralError>(m, "StructuralError", base.ptr());
  py::register_exception<UnsupportedDimension>(m, "UnsupportedDimension", base.ptr());

  py::class_<Polygraph>(m, "Polygraph")
      .def_property_readonly("name", &Polygraph::name)
      .def_property_readonly("dim", &Polygraph::dim)
      .def("generators",
           [](const Polygraph& p, std::size_t k) {
             std::vector<std::string> names;
             for (const auto& g : p.generators(k)) names.push_back(g.name);
             return names;
           })
      .def("validate", [](const Polygraph& p) { return messages(validate_polygraph(p)); })
      .def("__str__", &print_polygraph)
      .def("__eq__", [](const Polygraph& a, const Polygraph& b) { return a == b; });

  m.def("parse_polygraph", [](const std::string& text) { return parse_polygraph(text); });
  m.def("read_polygraph", &read_polygraph);

  m.def("infer_type", [](const Polygraph& p, const std::string& term) {
    FreeCategory c(p);
    return cell_dict(c, c.infer(parse_term(term)));
  });
  m.def("normalize", [](const Polygraph& p, const std::string& term) {
    FreeCategory c(p);
    return cell_dict(c, c.normalize(c.infer(parse_term(term))));
  });
  m.def("decide_equal", [](const Polygraph& p, const std::string& a, const std::string& b) {
    return decide_equal(p, parse_term(a), parse_term(b));
  });
  m.def(
      "oracle_equal",
      [](const Polygraph& p, const std::string& a, const std::string& b,
         std::size_t bound) -> std::optional<bool> {
        switch (oracle_equal(p, parse_term(a), parse_term(b), bound)) {
          case Verdict::Equal: return true;
          case Verdict::NotEqual: return false;
          case Verdict::Indeterminate: return std::nullopt;
        }
        return std::nullopt;
      },
      py::arg("p"), py::arg("a"), py::arg("b"), py::arg("bound") = 100000);
  m.def("enumerate_cells", [](const Polygraph& p, std::size_t dim, std::size_t max) {
    FreeCategory c(p);
    std::vector<std::string> out;
    for (const auto& u : enumerate_cells(c, dim, max)) out.push_back(c.to_string(u));
    return out;
  });
  m.def("render_svg", [](const Polygraph& p, const std::string& term) {
    FreeCategory c(p);
    FreeCell u = c.normalize(c.infer(parse_term(term)));
    if (u.dim() != 2) throw UnsupportedDimension(u.dim());
    return render_svg(c, std::get<Diagram>(u.data));
  });

  m.def("theory_text", [](const std::string& name) {
    return print_theory(bundled_theory(name));
  });
  m.def("check_theory", [](const std::string& text) {
    return messages(check_theory(parse_theory(text)));
  });
  m.def("check_model", [](const std::string& theory, const std::string& model) {
    Theory t = parse_theory(theory);
    return messages(check_model(t, parse_model(model, t)));
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
