#include "polycat/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <json.hpp>

#include "polycat/eat.hpp"
#include "polycat/errors.hpp"
#include "polycat/freecat.hpp"
#include "polycat/io.hpp"
#include "polycat/svg.hpp"

namespace polycat {

namespace {

using nlohmann::json;

struct Session {
  std::ostream& out;
  std::ostream& err;
  bool json_mode = false;

  void emit(const json& j, const std::string& text) const {
    if (json_mode) {
      out << j.dump() << '\n';
    } else if (!text.empty()) {
      out << text;
    }
  }
};

// Loads and validates a polygraph file; violations are diagnostics.
Polygraph load(const Session& s, const std::string& path) {
  Polygraph p = read_polygraph(path);
  Report r = validate_polygraph(p);
  if (!r.ok()) {
    for (const auto& v : r.errors) s.err << to_string(v) << '\n';
    for (const auto& v : r.violations) s.err << to_string(v) << '\n';
    throw StructuralError(path + " is not a valid polygraph");
  }
  return p;
}

json layers_json(const FreeCategory& c, const Diagram& d) {
  json layers = json::array();
  for (const auto& w : d.layers) {
    layers.push_back({{"offset", w.offset}, {"generator", c.name(2, w.gen)}});
  }
  return layers;
}

json cell_json(const FreeCategory& c, const FreeCell& u) {
  json j{{"dim", u.dim()}, {"term", c.to_string(u)}};
  if (auto d = std::get_if<Diagram>(&u.data)) {
    j["source_word"] = c.to_string(d->source);
    j["layers"] = layers_json(c, *d);
  }
  return j;
}

json boundaries_json(const FreeCategory& c, const FreeCell& u) {
  if (u.dim() == 0) return nullptr;
  return {{"source", c.to_string(c.boundary(Side::Source, u))},
          {"target", c.to_string(c.boundary(Side::Target, u))}};
}

std::string describe(const FreeCategory& c, const FreeCell& u) {
  std::string text;
  if (auto d = std::get_if<Diagram>(&u.data)) {
    text += "source: " + c.to_string(d->source) + '\n';
    text += "target: " + c.to_string(d->target) + '\n';
    for (std::size_t k = 0; k < d->layers.size(); ++k) {
      text += "layer " + std::to_string(k + 1) + ": offset " +
              std::to_string(d->layers[k].offset) + " " +
              c.name(2, d->layers[k].gen) + '\n';
    }
  }
  return text + "normal form: " + c.to_string(u) + '\n';
}

int cmd_check(const Session& s, const std::string& path) {
  Polygraph p = load(s, path);
  std::string counts;
  json per_dim = json::array();
  for (std::size_t k = 0; k <= p.dim(); ++k) {
    counts += (k ? "/" : "") + std::to_string(p.generators(k).size());
    per_dim.push_back(p.generators(k).size());
  }
  s.emit({{"verdict", "ok"}, {"name", p.name()}, {"generators", per_dim}},
         "ok: " + (p.name().empty() ? path : p.name()) + ", generators " + counts + '\n');
  return kExitOk;
}

int cmd_type(const Session& s, const std::string& path, const std::string& term) {
  Polygraph p = load(s, path);
  FreeCategory c(p);
  Typing t = infer_type(p, parse_term(term));
  std::string text = "dim " + std::to_string(t.dim);
  json j{{"verdict", "ok"}, {"dim", t.dim}, {"boundaries", nullptr}};
  if (t.source) {
    text += ": " + c.to_string(*t.source) + " -> " + c.to_string(*t.target);
    j["boundaries"] = {{"source", c.to_string(*t.source)},
                       {"target", c.to_string(*t.target)}};
  }
  s.emit(j, text + '\n');
  return kExitOk;
}

int cmd_normalize(const Session& s, const std::string& path, const std::string& term,
                  bool layered) {
  Polygraph p = load(s, path);
  FreeCategory c(p);
  FreeCell u = c.infer(parse_term(term));
  FreeCell nf = layered && u.dim() > 2 ? u : c.normalize(u);
  json j{{"verdict", "ok"},
         {"normal_form", cell_json(c, nf)},
         {"boundaries", boundaries_json(c, nf)}};
  if (u.dim() > 2) j["sound_only"] = true;
  s.emit(j, describe(c, nf));
  return kExitOk;
}

int cmd_equal(const Session& s, const std::string& path, const std::string& a,
              const std::string& b) {
  Polygraph p = load(s, path);
  FreeCategory c(p);
  FreeCell u = c.infer(parse_term(a));
  FreeCell v = c.infer(parse_term(b));
  bool same = c.equal(u, v);
  FreeCell nu = c.normalize(u), nv = c.normalize(v);
  s.emit({{"verdict", same ? "equal" : "not equal"},
          {"normal_form", {cell_json(c, nu), cell_json(c, nv)}},
          {"boundaries", {boundaries_json(c, nu), boundaries_json(c, nv)}}},
         same ? "equal\n" : "not equal\n");
  return same ? kExitOk : kExitNotEqual;
}

int cmd_enumerate(const Session& s, const std::string& path, std::size_t dim,
                  std::size_t max) {
  Polygraph p = load(s, path);
  FreeCategory c(p);
  if (dim > 2) throw UnsupportedDimension(dim);
  auto cells = enumerate_cells(c, dim, max);
  json list = json::array();
  std::string text;
  for (const auto& u : cells) {
    list.push_back(c.to_string(u));
    text += c.to_string(u) + '\n';
  }
  s.emit({{"verdict", "ok"}, {"count", cells.size()}, {"cells", list}}, text);
  return kExitOk;
}

int cmd_render(const Session& s, const std::string& path, const std::string& term,
               const std::string& output) {
  Polygraph p = load(s, path);
  FreeCategory c(p);
  FreeCell u = c.infer(parse_term(term));
  if (u.dim() != 2) throw UnsupportedDimension(u.dim());
  const Diagram d = std::get<Diagram>(c.normalize(u).data);
  std::ofstream file(output, std::ios::binary);
  if (!file) throw Error("cannot write " + output);
  file << render_svg(c, d);
  s.emit({{"verdict", "ok"}, {"output", output}, {"normal_form", cell_json(c, FreeCell{d})}},
         "wrote " + output + '\n');
  return kExitOk;
}

int cmd_eat_check(const Session& s, const std::string& theory_path,
                  const std::string& model_path) {
  Theory t = parse_theory(read_file(theory_path));
  Report tr = check_theory(t);
  FiniteModel m = parse_model(read_file(model_path), t);
  Report mr = tr.ok() ? check_model(t, m) : Report{};
  json violations = json::array();
  for (const auto* r : {&tr, &mr}) {
    for (const auto& v : r->violations) {
      s.err << to_string(v) << '\n';
      violations.push_back({{"label", v.label}, {"witness", v.witness}, {"detail", v.detail}});
    }
  }
  bool ok = tr.ok() && mr.ok();
  std::string verdict = !tr.ok() ? "theory invalid" : ok ? "ok" : "model invalid";
  s.emit({{"verdict", verdict}, {"violations", violations}}, verdict + '\n');
  return ok ? kExitOk : kExitInvalid;
}

int guarded(const Session& s, const std::function<int()>& body) {
  auto fail = [&](int code, const char* kind, const std::string& message) {
    s.err << "error: " << message << '\n';
    if (s.json_mode) {
      s.out << json{{"verdict", "error"}, {"kind", kind}, {"message", message}}.dump()
            << '\n';
    }
    return code;
  };
  try {
    return body();
  } catch (const ParseError& e) {
    return fail(kExitParse, "parse", e.what());
  } catch (const UnsupportedDimension& e) {
    return fail(kExitUnsupported, "unsupported dimension", e.what());
  } catch (const TypingError& e) {
    return fail(kExitInvalid, "typing", e.what());
  } catch (const Error& e) {
    return fail(kExitInvalid, "invalid", e.what());
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Strict higher categories presented by polygraphs", "polycat"};
  app.require_subcommand(1);
  Session s{out, err};
  app.add_flag("--json", s.json_mode, "Print machine-readable verdicts");
  app.fallthrough();

  std::string file, term, term2, output, theory, model;
  std::size_t dim = 0, max = 0;
  bool layered = false;
  std::function<int()> action;

  auto* check = app.add_subcommand("check", "Validate a polygraph file");
  check->add_option("file", file)->required();
  check->callback([&] { action = [&] { return cmd_check(s, file); }; });

  auto* type = app.add_subcommand("type", "Print the dimension and boundaries of a term");
  type->add_option("file", file)->required();
  type->add_option("term", term)->required();
  type->callback([&] { action = [&] { return cmd_type(s, file, term); }; });

  auto* normalize = app.add_subcommand("normalize", "Print the normal form of a term");
  normalize->add_option("file", file)->required();
  normalize->add_option("term", term)->required();
  normalize->add_flag("--layered", layered,
                      "Above dimension 2, print the layered form (not canonical)");
  normalize->callback(
      [&] { action = [&] { return cmd_normalize(s, file, term, layered); }; });

  auto* equal = app.add_subcommand("equal", "Decide whether two terms denote one cell");
  equal->add_option("file", file)->required();
  equal->add_option("left", term)->required();
  equal->add_option("right", term2)->required();
  equal->callback([&] { action = [&] { return cmd_equal(s, file, term, term2); }; });

  auto* enumerate = app.add_subcommand("enumerate", "List the cells within a size bound");
  enumerate->add_option("file", file)->required();
  enumerate->add_option("--dim", dim, "Dimension of the cells")->required();
  enumerate->add_option("--max", max, "Longest word or most layers")->required();
  enumerate->callback([&] { action = [&] { return cmd_enumerate(s, file, dim, max); }; });

  auto* render = app.add_subcommand("render", "Draw a 2-cell as an SVG string diagram");
  render->add_option("file", file)->required();
  render->add_option("term", term)->required();
  render->add_option("output", output)->required();
  render->callback([&] { action = [&] { return cmd_render(s, file, term, output); }; });

  auto* eat = app.add_subcommand("eat", "Essentially algebraic theories");
  eat->require_subcommand(1);
  auto* eat_check = eat->add_subcommand("check", "Check a finite model against a theory");
  eat_check->add_option("theory", theory)->required();
  eat_check->add_option("model", model)->required();
  eat_check->callback([&] { action = [&] { return cmd_eat_check(s, theory, model); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitParse;
  }
  return guarded(s, action);
}

}  // namespace polycat
