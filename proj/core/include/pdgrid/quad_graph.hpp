#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pdgrid/planar_graph.hpp"

namespace pdgrid {

enum class VertexKind : std::uint8_t { primal, dual };

/// Origin of a QuadGraph vertex: a vertex of the input graph or one of its
/// faces.
struct VertexTag {
  VertexKind kind = VertexKind::primal;
  std::uint32_t source = 0;  // vertex id or face id in the input graph
};

enum class BendOn : std::uint8_t { primal, dual };

/// Outer face (u, v, w, w') of the quadrangulation: u and w are primal
/// vertices, v and w' are duals; v is the dual of the input's outer face.
struct OuterQuad {
  VertexId u = 0;
  VertexId v = 0;
  VertexId w = 0;
  VertexId w_prime = 0;
};

/// The four outer vertices by the part they play in the placement: `left`
/// and `right` form the first group, `last` forms the final group and the
/// bent edge joins `left` with `opposite`.
struct PlacementRoles {
  VertexId left = 0;
  VertexId right = 0;
  VertexId opposite = 0;
  VertexId last = 0;
};

struct PrimalEdge {
  VertexId a = 0;  // input vertex ids, a < b
  VertexId b = 0;
};

struct DualEdge {
  FaceId left = 0;  // face left of (a, b)
  FaceId right = 0; // face left of (b, a)
};

/// The radial graph of a 3-connected plane graph: one vertex per input
/// vertex and per input face, one edge per vertex-face incidence. Every face
/// is a quadrilateral (primal, dual, primal, dual) standing for one input edge.
///
/// Vertex ids: input vertex i is i, input face f is V1 + f.
class QuadGraph {
 public:
  const PlanarGraph& primal() const { return primal_; }
  const PlanarGraph& graph() const { return graph_; }
  std::size_t size() const { return graph_.vertex_count(); }

  const VertexTag& tag(VertexId x) const { return tags_[x]; }
  VertexId vertex_of(VertexId primal_vertex) const { return primal_vertex; }
  VertexId vertex_of_face(FaceId f) const {
    return static_cast<VertexId>(primal_.vertex_count() + f);
  }

  std::size_t edge_count_primal() const { return primal_edges_.size(); }
  const PrimalEdge& primal_edge(std::size_t e) const { return primal_edges_[e]; }
  const DualEdge& dual_edge(std::size_t e) const { return dual_edges_[e]; }
  /// Index of the input edge {a, b}; throws InvalidArgument when absent.
  std::size_t edge_index(VertexId a, VertexId b) const;
  /// Index of the input edge separating faces f and g.
  std::size_t edge_index_of_faces(FaceId f, FaceId g) const;
  DualEdge dual_edge_of(const PrimalEdge& e) const;
  PrimalEdge primal_edge_of(const DualEdge& e) const;

  /// QuadGraph face standing for input edge e.
  FaceId quad_face_of_edge(std::size_t e) const { return quad_face_of_edge_[e]; }

  const std::optional<OuterQuad>& outer_quad() const { return outer_quad_; }
  BendOn bend_on() const { return bend_on_; }
  /// Requires an outer quad.
  PlacementRoles roles() const;
  /// Endpoints (QuadGraph ids) of the edge drawn with a bend.
  std::pair<VertexId, VertexId> bent_edge() const;

  /// True when the placement runs on the mirror image of the input rotation
  /// so that the chosen outer quad reads (u, w', w, v) along its face walk.
  bool mirrored() const { return mirrored_; }
  /// Embedding used by labeling and placement (graph() or its mirror).
  const PlanarGraph& working_graph() const { return mirrored_ ? working_ : graph_; }

 private:
  friend QuadGraph build_quad(const PlanarGraph& g1, bool check_three_connectivity);
  friend QuadGraph select_outer_quad(QuadGraph q, BendOn bend_on,
                                     std::optional<std::pair<VertexId, VertexId>> outer_edge);

  PlanarGraph primal_;
  PlanarGraph graph_;
  PlanarGraph working_;
  std::vector<VertexTag> tags_;
  std::vector<PrimalEdge> primal_edges_;
  std::vector<DualEdge> dual_edges_;
  std::vector<FaceId> quad_face_of_edge_;
  std::vector<std::size_t> edge_of_dart_;  // input dart -> input edge
  std::optional<OuterQuad> outer_quad_;
  BendOn bend_on_ = BendOn::primal;
  bool mirrored_ = false;
};

/// Builds the radial quadrangulation of g1. Throws NotThreeConnected unless
/// the check is disabled (large generated inputs that are 3-connected by
/// construction).
QuadGraph build_quad(const PlanarGraph& g1, bool check_three_connectivity = true);

/// Fixes the outer quad on the input edge (u, w) of the input's outer face:
/// the lexicographically least (min index, max index) outer edge unless
/// `outer_edge` names another one. u is the smaller endpoint.
QuadGraph select_outer_quad(QuadGraph q, BendOn bend_on,
                            std::optional<std::pair<VertexId, VertexId>> outer_edge = std::nullopt);

/// Graph JSON plus "tags" and (when selected) "outer_quad" / "bend_on".
std::string serialize_quad(const QuadGraph& q);

}  // namespace pdgrid
