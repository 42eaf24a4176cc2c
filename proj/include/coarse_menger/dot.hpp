#pragma once

#include <string>
#include <vector>

#include "coarse_menger/construction.hpp"

namespace coarse_menger {

struct DotHighlight {
  enum class Style { kBold, kDashed };

  Path path;
  Style style = Style::kBold;
  std::string color = "black";
};

struct DotOptions {
  VertexSet s;
  VertexSet t;
  VertexSet z;  // drawn filled, as in the gadget figures
  std::vector<DotHighlight> highlights;
};

/// Undirected DOT text. Nodes and edges are listed in ascending order; S, T
/// and S∩T nodes get distinct shapes, and each highlighted path's edges take
/// the path's style. An edge on several paths takes the first one's style.
std::string export_dot(const Graph& g, const DotOptions& options = {});

/// Same, labelled from the gadget's S, T and Z.
std::string export_dot(const LabeledGadget& g, const std::vector<DotHighlight>& highlights = {});

}  // namespace coarse_menger
