#include "pdgrid/pipeline.hpp"

#include "pdgrid/error.hpp"

namespace pdgrid {

Embedding embed_graph(const PlanarGraph& g1, const EmbedOptions& options, const TraceSink& trace) {
  std::optional<std::pair<VertexId, VertexId>> edge;
  if (options.outer_edge) {
    const auto a = g1.find(options.outer_edge->first);
    const auto b = g1.find(options.outer_edge->second);
    if (!a || !b) throw Error(ErrorKind::InvalidArgument, "outer edge names unknown vertices");
    edge = std::pair{*a, *b};
  }
  QuadGraph q = select_outer_quad(build_quad(g1, options.check_three_connectivity), options.bend_on, edge);
  CanonicalLabeling c = compute_labeling(q);
  GridDrawing d = embed(q, c, options.engine, trace);
  return {std::move(q), std::move(c), std::move(d)};
}

QuadGraph quad_for_verification(const PlanarGraph& g1) { return build_quad(g1, false); }

}  // namespace pdgrid
