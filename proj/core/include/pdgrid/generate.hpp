#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "pdgrid/planar_graph.hpp"

namespace pdgrid {

/// One of tetrahedron, cube, octahedron, dodecahedron, icosahedron. Vertices
/// are named "1".."V"; the outer face is the outermost ring of a fixed
/// Schlegel layout. Throws UnknownSolid.
PlanarGraph platonic(std::string_view name);

enum class GenKind : std::uint8_t { triangulation, sparsified };

struct GenSpec {
  GenKind kind = GenKind::triangulation;
  std::size_t n = 4;           // vertices, at least 4
  double deletion_rate = 0.5;  // sparsified only, in [0, 1)
  std::uint64_t seed = 0;
};

/// Triangulation: K4, then repeated insertion of a vertex into a uniformly
/// chosen face (not a uniform distribution over triangulations).
/// Sparsified: a triangulation with random edge deletions kept only when
/// both ends keep degree >= 3 and the graph stays 3-connected.
/// The outer face is the first face in trace order. Deterministic in the
/// arguments across platforms.
PlanarGraph random_graph(const GenSpec& spec);

}  // namespace pdgrid
