#include "polycat/svg.hpp"

#include <algorithm>

namespace polycat {

std::string xml_escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

namespace {

int wire_x(std::size_t index) {
  return kMargin + kWirePitch * static_cast<int>(index) + kWirePitch / 2;
}

std::string line(int x1, int y1, int x2, int y2) {
  return "  <line class=\"wire\" x1=\"" + std::to_string(x1) + "\" y1=\"" +
         std::to_string(y1) + "\" x2=\"" + std::to_string(x2) + "\" y2=\"" +
         std::to_string(y2) + "\"/>\n";
}

std::string text(const char* cls, int x, int y, const std::string& label) {
  return "  <text class=\"" + std::string(cls) + "\" x=\"" + std::to_string(x) +
         "\" y=\"" + std::to_string(y) + "\">" + xml_escape(label) + "</text>\n";
}

}  // namespace

std::string render_svg(const FreeCategory& c, const Diagram& d) {
  const std::size_t bands = std::max<std::size_t>(d.layers.size(), 1);
  std::size_t widest = std::max(d.source.gens.size(), d.target.gens.size());
  for (const auto& w : d.layers) widest = std::max(widest, w.context.size());
  const int width = 2 * kMargin + kWirePitch * static_cast<int>(std::max<std::size_t>(widest, 1));
  const int height = 2 * kMargin + kLayerHeight * static_cast<int>(bands);
  // Level j sits below layer j; level 0 is the source.
  auto level_y = [&](std::size_t j) {
    return kMargin + kLayerHeight * static_cast<int>(bands - j);
  };

  std::string body;
  if (d.layers.empty()) {
    for (std::size_t w = 0; w < d.source.gens.size(); ++w) {
      body += line(wire_x(w), level_y(0), wire_x(w), level_y(1));
    }
  }
  std::string nodes;
  for (std::size_t j = 0; j < d.layers.size(); ++j) {
    const auto& layer = d.layers[j];
    const std::size_t s = c.source_length(layer.gen);
    const std::size_t t = c.target_length(layer.gen);
    const int bottom = level_y(j), top = level_y(j + 1);
    const int nx = kMargin + kWirePitch * static_cast<int>(layer.offset) +
                   kWirePitch * static_cast<int>(s) / 2;
    const int ny = bottom - kLayerHeight / 2;
    for (std::size_t w = 0; w < layer.context.size(); ++w) {
      if (w < layer.offset) {
        body += line(wire_x(w), bottom, wire_x(w), top);
      } else if (w < layer.offset + s) {
        body += line(wire_x(w), bottom, nx, ny);
      } else {
        body += line(wire_x(w), bottom, wire_x(w + t - s), top);
      }
    }
    for (std::size_t k = 0; k < t; ++k) {
      body += line(nx, ny, wire_x(layer.offset + k), top);
    }
    nodes += "  <circle class=\"node\" cx=\"" + std::to_string(nx) + "\" cy=\"" +
             std::to_string(ny) + "\" r=\"" + std::to_string(kNodeRadius) + "\"/>\n";
    nodes += text("label", nx, ny - kNodeRadius - 4, c.name(2, layer.gen));
  }

  std::string labels;
  for (std::size_t w = 0; w < d.source.gens.size(); ++w) {
    labels += text("source", wire_x(w), level_y(0) + 18, c.name(1, d.source.gens[w]));
  }
  for (std::size_t w = 0; w < d.target.gens.size(); ++w) {
    labels += text("target", wire_x(w), level_y(bands) - 8, c.name(1, d.target.gens[w]));
  }

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " +
         std::to_string(width) + " " + std::to_string(height) + "\">\n";
  out += "  <style>.wire{stroke:#000;stroke-width:2}"
         ".node{fill:#fff;stroke:#000;stroke-width:2}"
         "text{font-family:sans-serif;font-size:12px;text-anchor:middle}</style>\n";
  out += "  <rect width=\"100%\" height=\"100%\" fill=\"#fff\"/>\n";
  out += body + nodes + labels + "</svg>\n";
  return out;
}

}  // namespace polycat
