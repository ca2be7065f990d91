#pragma once

#include <string>

#include "pdgrid/placement.hpp"
#include "pdgrid/quad_graph.hpp"

namespace pdgrid {

struct RenderStyle {
  std::string primal_color = "blue";
  std::string dual_color = "red";
  int vertex_radius = 4;
  int scale = 20;  // pixels per grid unit, at least 1
  bool show_grid = false;
};

/// SVG 1.1 with larger y drawn higher. Elements come in a fixed order:
/// lattice (optional), primal edges, dual edges, primal vertices, dual
/// vertices. The bent edge is a polyline through the bend point.
std::string render_svg(const QuadGraph& q, const GridDrawing& d, const RenderStyle& style = {});

}  // namespace pdgrid
