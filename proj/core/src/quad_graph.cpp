#include "pdgrid/quad_graph.hpp"

#include <algorithm>

#include <json.hpp>

#include "pdgrid/error.hpp"

namespace pdgrid {

std::size_t QuadGraph::edge_index(VertexId a, VertexId b) const {
  if (a >= primal_.vertex_count() || b >= primal_.vertex_count() || !primal_.adjacent(a, b)) {
    throw Error(ErrorKind::InvalidArgument, "not an edge of the input graph");
  }
  return edge_of_dart_[primal_.dart(a, b)];
}

std::size_t QuadGraph::edge_index_of_faces(FaceId f, FaceId g) const {
  if (f < primal_.face_count() && g < primal_.face_count()) {
    const auto& faces = primal_.faces();
    if (faces[f].boundary.size() > faces[g].boundary.size()) std::swap(f, g);
    const auto& b = faces[f].boundary;
    for (std::size_t i = 0; i < b.size(); ++i) {
      const std::size_t d = primal_.dart(b[i], b[(i + 1) % b.size()]);
      if (primal_.dart_face(primal_.twin(d)) == g) return edge_of_dart_[d];
    }
  }
  throw Error(ErrorKind::InvalidArgument, "faces do not share an edge");
}

DualEdge QuadGraph::dual_edge_of(const PrimalEdge& e) const { return dual_edges_[edge_index(e.a, e.b)]; }

PrimalEdge QuadGraph::primal_edge_of(const DualEdge& e) const {
  return primal_edges_[edge_index_of_faces(e.left, e.right)];
}

PlacementRoles QuadGraph::roles() const {
  if (!outer_quad_) throw Error(ErrorKind::InvalidArgument, "outer quad not selected");
  const OuterQuad& o = *outer_quad_;
  if (bend_on_ == BendOn::primal) return {o.u, o.v, o.w, o.w_prime};
  return {o.v, o.w, o.w_prime, o.u};
}

std::pair<VertexId, VertexId> QuadGraph::bent_edge() const {
  const PlacementRoles r = roles();
  return {r.left, r.opposite};
}

QuadGraph build_quad(const PlanarGraph& g1, bool check_three_connectivity) {
  if (g1.vertex_count() < 4) throw Error(ErrorKind::TooSmall, "input needs at least 4 vertices");
  if (check_three_connectivity && !check_three_connected(g1)) {
    throw Error(ErrorKind::NotThreeConnected, "input graph is not 3-connected");
  }
  const std::size_t nv = g1.vertex_count();
  const std::size_t nf = g1.face_count();
  QuadGraph q;
  q.primal_ = g1;

  std::vector<std::string> names(nv + nf);
  q.tags_.resize(nv + nf);
  for (VertexId v = 0; v < nv; ++v) {
    names[v] = g1.name(v);
    q.tags_[v] = {VertexKind::primal, v};
  }
  for (FaceId f = 0; f < nf; ++f) {
    // Generated names differ from each other in their digits; only clashes
    // with input names need a prefix.
    std::string name = "f" + std::to_string(f);
    while (g1.find(name)) name = "_" + name;
    names[nv + f] = std::move(name);
    q.tags_[nv + f] = {VertexKind::dual, f};
  }

  std::vector<std::vector<VertexId>> rot(nv + nf);
  for (VertexId v = 0; v < nv; ++v) {
    rot[v].resize(g1.degree(v));
    for (std::size_t i = 0; i < rot[v].size(); ++i) {
      rot[v][i] = static_cast<VertexId>(nv + g1.dart_face(g1.first_dart(v) + i));
    }
  }
  for (const Face& f : g1.faces()) rot[nv + f.id] = f.boundary;

  q.edge_of_dart_.resize(g1.dart_count());
  // Input edges in dart order; each owns the G2 face (a, left(a,b), b, left(b,a)).
  for (std::size_t d = 0; d < g1.dart_count(); ++d) {
    const VertexId a = g1.dart_tail(d);
    const VertexId b = g1.dart_head(d);
    if (a > b) continue;
    const std::size_t e = q.primal_edges_.size();
    q.primal_edges_.push_back({a, b});
    q.dual_edges_.push_back({g1.dart_face(d), g1.dart_face(g1.twin(d))});
    q.edge_of_dart_[d] = e;
    q.edge_of_dart_[g1.twin(d)] = e;
  }

  // Default outer face: the quad of the least outer edge; select_outer_quad
  // may move it.
  const auto& outer = g1.faces()[g1.outer_face()].boundary;
  std::pair<VertexId, VertexId> least{static_cast<VertexId>(-1), static_cast<VertexId>(-1)};
  for (std::size_t i = 0; i < outer.size(); ++i) {
    const VertexId a = outer[i];
    const VertexId b = outer[(i + 1) % outer.size()];
    least = std::min(least, std::pair{std::min(a, b), std::max(a, b)});
  }
  const VertexId fo = static_cast<VertexId>(nv + g1.face_left_of(least.first, least.second));
  const VertexId fi = static_cast<VertexId>(nv + g1.face_left_of(least.second, least.first));
  const std::vector<VertexId> outer_quad{least.first, fo, least.second, fi};
  q.graph_ = PlanarGraph::from_rotation(std::move(names), std::move(rot), outer_quad);

  q.quad_face_of_edge_.resize(q.primal_edges_.size());
  for (std::size_t e = 0; e < q.primal_edges_.size(); ++e) {
    const auto& pe = q.primal_edges_[e];
    const auto& de = q.dual_edges_[e];
    q.quad_face_of_edge_[e] = q.graph_.face_left_of(pe.a, static_cast<VertexId>(nv + de.right));
  }
  for (const Face& f : q.graph_.faces()) {
    if (f.boundary.size() != 4) {
      throw Error(ErrorKind::MalformedDocument, "radial graph has a face of length " +
                                                    std::to_string(f.boundary.size()));
    }
  }
  return q;
}

QuadGraph select_outer_quad(QuadGraph q, BendOn bend_on,
                            std::optional<std::pair<VertexId, VertexId>> outer_edge) {
  const PlanarGraph& g1 = q.primal_;
  const auto& outer = g1.faces()[g1.outer_face()].boundary;
  std::pair<VertexId, VertexId> chosen{static_cast<VertexId>(-1), static_cast<VertexId>(-1)};
  bool found = false;
  for (std::size_t i = 0; i < outer.size(); ++i) {
    const VertexId a = outer[i];
    const VertexId b = outer[(i + 1) % outer.size()];
    const std::pair e{std::min(a, b), std::max(a, b)};
    if (outer_edge) {
      if (e == std::pair{std::min(outer_edge->first, outer_edge->second),
                         std::max(outer_edge->first, outer_edge->second)}) {
        chosen = e;
        found = true;
      }
    } else {
      chosen = std::min(chosen, e);
      found = true;
    }
  }
  if (!found) throw Error(ErrorKind::InvalidArgument, "requested edge is not on the outer face");

  const std::size_t nv = g1.vertex_count();
  const VertexId u = chosen.first;
  const VertexId w = chosen.second;
  const FaceId outer_id = g1.outer_face();
  FaceId left = g1.face_left_of(u, w);
  FaceId right = g1.face_left_of(w, u);
  const FaceId other = left == outer_id ? right : left;
  OuterQuad oq{u, static_cast<VertexId>(nv + outer_id), w, static_cast<VertexId>(nv + other)};
  q.outer_quad_ = oq;
  q.bend_on_ = bend_on;

  const FaceId quad = q.quad_face_of_edge_[q.edge_index(u, w)];
  q.graph_ = std::move(q.graph_).with_outer_face(quad);

  // The placement wants the outer quad to read (left, last, opposite, right)
  // along its face walk; otherwise it runs on the mirror image.
  const PlacementRoles r = q.roles();
  const auto& b = q.graph_.faces()[quad].boundary;
  const auto at = std::find(b.begin(), b.end(), r.left) - b.begin();
  const VertexId next = b[(at + 1) % 4];
  q.mirrored_ = next != r.last;
  if (q.mirrored_) {
    q.working_ = q.graph_.mirrored();
  } else {
    q.working_ = PlanarGraph{};
  }
  return q;
}

std::string serialize_quad(const QuadGraph& q) {
  using nlohmann::json;
  json doc = json::parse(serialize_graph(q.graph()));
  json tags = json::object();
  for (VertexId x = 0; x < q.size(); ++x) {
    const VertexTag& t = q.tag(x);
    tags[q.graph().name(x)] = t.kind == VertexKind::primal
                                  ? json{{"primal", q.primal().name(t.source)}}
                                  : json{{"dual", t.source}};
  }
  doc["tags"] = std::move(tags);
  if (q.outer_quad()) {
    const OuterQuad& o = *q.outer_quad();
    const auto& g = q.graph();
    doc["outer_quad"] = {g.name(o.u), g.name(o.v), g.name(o.w), g.name(o.w_prime)};
    doc["bend_on"] = q.bend_on() == BendOn::primal ? "primal" : "dual";
  }
  return doc.dump(1);
}

}  // namespace pdgrid
