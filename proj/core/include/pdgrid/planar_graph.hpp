#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pdgrid {

using VertexId = std::uint32_t;
using FaceId = std::uint32_t;

/// A face of an embedded graph: the directed boundary cycle as traced by the
/// face-walk rule below, starting at the face's lowest directed edge.
struct Face {
  FaceId id = 0;
  std::vector<VertexId> boundary;
};

/// Combinatorially embedded simple planar graph.
///
/// Vertices are dense indices in input order; each carries the opaque string
/// identifier it was created with. `rotation(v)` lists the neighbors of v in
/// counterclockwise order. Faces are traced by the rule "after arriving at b
/// along (a, b), leave along the neighbor that follows a clockwise around b",
/// which walks every bounded face counterclockwise (face on the left) and the
/// unbounded face clockwise.
///
/// Instances are validated on construction and immutable afterwards.
class PlanarGraph {
 public:
  PlanarGraph() = default;

  /// Validates symmetry, simplicity and Euler consistency, and locates the
  /// designated outer face (matched as a cyclic sequence in either direction).
  /// Throws pdgrid::Error (AsymmetricRotation, EulerViolation,
  /// UnknownOuterFace, MalformedDocument).
  static PlanarGraph from_rotation(std::vector<std::string> names,
                                   std::vector<std::vector<VertexId>> rotation,
                                   std::span<const VertexId> outer_face);

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return adjacency_.size() / 2; }
  std::size_t face_count() const { return faces_.size(); }

  std::span<const VertexId> rotation(VertexId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(VertexId a, VertexId b) const;

  const std::string& name(VertexId v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<VertexId> find(std::string_view name) const;

  const std::vector<Face>& faces() const { return faces_; }
  FaceId outer_face() const { return outer_face_; }

  /// Face lying to the left of the directed edge (a, b).
  FaceId face_left_of(VertexId a, VertexId b) const;

  /// Dart index of (a, b); darts are numbered by position in the CSR
  /// adjacency, so dart d leaves vertex `tail(d)`.
  std::size_t dart(VertexId a, VertexId b) const;
  std::size_t dart_count() const { return adjacency_.size(); }
  /// Darts leaving v are first_dart(v) .. first_dart(v) + degree(v) - 1, in
  /// rotation order.
  std::size_t first_dart(VertexId v) const { return offsets_[v]; }
  VertexId dart_head(std::size_t d) const { return adjacency_[d]; }
  VertexId dart_tail(std::size_t d) const { return tails_[d]; }
  FaceId dart_face(std::size_t d) const { return dart_face_[d]; }
  std::size_t twin(std::size_t d) const { return twin_[d]; }
  /// Next dart along the same face.
  std::size_t face_next(std::size_t d) const;

  /// Copy with every rotation reversed; faces keep their vertex sets but are
  /// traced in the opposite direction.
  PlanarGraph mirrored() const;

  /// Copy with a different designated outer face.
  PlanarGraph with_outer_face(FaceId f) const&;
  PlanarGraph with_outer_face(FaceId f) &&;

 private:
  void build_darts();
  void trace();
  std::optional<std::size_t> find_dart(VertexId a, VertexId b) const;
  std::size_t slot_of(std::string_view name) const;

  std::vector<std::string> names_;
  std::vector<VertexId> index_;  // open addressing over names_, power-of-two size
  // Dart indices are stored in 32 bits; from_rotation rejects larger graphs.
  std::vector<std::uint32_t> offsets_;
  std::vector<VertexId> adjacency_;
  std::vector<VertexId> tails_;
  std::vector<std::uint32_t> by_head_;  // darts of each vertex sorted by head
  std::vector<std::uint32_t> twin_;
  std::vector<std::uint32_t> pos_in_head_;  // position of tail inside rotation(head)
  std::vector<FaceId> dart_face_;
  std::vector<Face> faces_;
  FaceId outer_face_ = 0;
};

/// Faces of `g` in deterministic order: a face is emitted when its lowest
/// directed edge (by tail index, then head index) is reached.
std::vector<Face> trace_faces(const PlanarGraph& g);

/// True iff removing any two vertices leaves `g` connected. Exhaustive over
/// vertex pairs, organised as one articulation-point search per removed
/// vertex: O(V * (V + E)). Throws TooSmall when V < 4.
bool check_three_connected(const PlanarGraph& g);

/// Parses the JSON graph document
///   {"vertices": [...], "rotation": {"a": [...], ...}, "outer_face": [...]}.
PlanarGraph parse_graph(std::string_view document);
std::string serialize_graph(const PlanarGraph& g);

}  // namespace pdgrid
