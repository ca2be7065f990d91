#pragma once

#include <optional>
#include <string>
#include <utility>

#include "pdgrid/labeling.hpp"
#include "pdgrid/placement.hpp"
#include "pdgrid/quad_graph.hpp"

namespace pdgrid {

struct EmbedOptions {
  BendOn bend_on = BendOn::primal;
  Engine engine = Engine::offset;
  bool check_three_connectivity = true;
  /// Input vertex names of the outer edge (u, w); default is the least one.
  std::optional<std::pair<std::string, std::string>> outer_edge;
};

struct Embedding {
  QuadGraph quad;
  CanonicalLabeling labeling;
  GridDrawing drawing;
};

/// build_quad, select_outer_quad, compute_labeling, embed.
Embedding embed_graph(const PlanarGraph& g1, const EmbedOptions& options = {}, const TraceSink& trace = {});

/// Quadrangulation for checking an existing drawing, without the
/// 3-connectivity test. The checks take the outer face from the drawing's
/// bent edge.
QuadGraph quad_for_verification(const PlanarGraph& g1);

}  // namespace pdgrid
