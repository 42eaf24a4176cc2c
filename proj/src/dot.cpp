#include "coarse_menger/dot.hpp"

#include <map>
#include <sstream>

namespace coarse_menger {

std::string export_dot(const Graph& g, const DotOptions& options) {
  std::map<std::pair<Vertex, Vertex>, const DotHighlight*> styled;
  for (const auto& h : options.highlights) {
    for (std::size_t i = 1; i < h.path.vertices.size(); ++i) {
      Vertex u = h.path.vertices[i - 1];
      Vertex v = h.path.vertices[i];
      styled.emplace(std::minmax(u, v), &h);
    }
  }

  std::ostringstream out;
  out << "graph G {\n";
  out << "  node [shape=circle, width=0.2, fontsize=8];\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const bool in_s = options.s.contains(v);
    const bool in_t = options.t.contains(v);
    std::vector<std::string> attrs;
    if (in_s && in_t) {
      attrs.push_back("shape=doublecircle");
      attrs.push_back("color=purple");
    } else if (in_s) {
      attrs.push_back("shape=box");
      attrs.push_back("color=blue");
    } else if (in_t) {
      attrs.push_back("shape=diamond");
      attrs.push_back("color=red");
    }
    if (options.z.contains(v)) {
      attrs.push_back("style=filled");
      attrs.push_back("fillcolor=lightgray");
    }
    out << "  " << v;
    if (!attrs.empty()) {
      out << " [";
      for (std::size_t i = 0; i < attrs.size(); ++i) out << (i ? ", " : "") << attrs[i];
      out << "]";
    }
    out << ";\n";
  }
  for (auto [u, v] : g.edges()) {
    out << "  " << u << " -- " << v;
    auto it = styled.find({u, v});
    if (it != styled.end()) {
      const DotHighlight& h = *it->second;
      out << " [style=" << (h.style == DotHighlight::Style::kBold ? "bold" : "dashed") << ", penwidth=3, color=" << h.color
          << "]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_dot(const LabeledGadget& g, const std::vector<DotHighlight>& highlights) {
  return export_dot(g.graph, DotOptions{g.s, g.t, g.z, highlights});
}

}  // namespace coarse_menger
