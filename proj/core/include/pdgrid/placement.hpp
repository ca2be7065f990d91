#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pdgrid/geometry.hpp"
#include "pdgrid/labeling.hpp"
#include "pdgrid/quad_graph.hpp"

namespace pdgrid {

struct Degeneracies {
  std::array<std::size_t, 4> count{};  // d1, d2, d3, d4
  std::size_t total() const { return count[0] + count[1] + count[2] + count[3]; }
  friend bool operator==(const Degeneracies&, const Degeneracies&) = default;
};

struct Bend {
  VertexId from = 0;  // QuadGraph ids of the bent edge
  VertexId to = 0;
  Point point;
};

/// Integer coordinates for every QuadGraph vertex (indexed by id).
struct GridDrawing {
  std::size_t n = 0;
  std::vector<Point> coords;
  std::vector<char> placed;
  std::optional<Bend> bend;
  Degeneracies degeneracies;
  /// Width x(right) - x(left) before the final shift.
  std::int64_t pre_final_width = 0;
};

/// State of the exterior path C_k = (left = c_1, ..., c_r = right) between
/// placement steps. `children` is the under-set forest: U(x) is x together
/// with everything below it.
struct Frontier {
  std::vector<VertexId> cycle;
  std::vector<std::vector<VertexId>> children;
  std::vector<std::int64_t> pending;  // neighbors in G - G_k
  std::vector<std::uint32_t> group_of;
};

/// Frontier state recorded after step k (2 <= k <= m) when tracing.
struct FrontierSnapshot {
  std::uint32_t step = 0;
  std::vector<VertexId> cycle;
  std::vector<Point> coords;
  std::vector<std::int64_t> pending;
  std::vector<std::uint32_t> group_of;
};

enum class Engine : std::uint8_t { reference, offset };

using TraceSink = std::function<void(const FrontierSnapshot&)>;

/// Step operations of the reference engine. Indices are 0-based positions
/// in `Frontier::cycle` as it was before the current group (C_{k-1}).

/// Places groups 1 and 2: left (0,0), right (3,0), the group-2 vertex next
/// to left at (1,1), the other at (2,1). Throws BadGroupShape.
Frontier init_first_quad(const QuadGraph& q, const CanonicalLabeling& c, GridDrawing& d);

/// Position (i or j) of the vertex with the smaller group index; ties go to
/// the vertex further left.
std::size_t low(const Frontier& f, const GridDrawing& d, std::size_t i, std::size_t j);

/// Under-set update for a singleton attached to positions p..q; pairs leave
/// the forest unchanged.
void update_under(Frontier& f, const GridDrawing& d, std::size_t p, std::size_t q, std::size_t group_size,
                  VertexId z0);

/// Adds s to x of every vertex in U(c_j) ∪ ... ∪ U(c_r).
void shift_right(const Frontier& f, GridDrawing& d, std::size_t j, std::int64_t s);

/// Location formulas for z0 (and z1 one unit right of it).
void locate_group(const Frontier& f, GridDrawing& d, std::size_t p, std::size_t q, VertexId z0,
                  std::optional<VertexId> z1);

/// Applies d1/d2 (singleton) or d3/d4 (pair) until none fires. k and m are
/// the 1-based step and group count. Throws RepairDivergence.
Degeneracies repair_degeneracies(const Frontier& f, GridDrawing& d, std::size_t p, std::size_t q, VertexId z0,
                                 std::optional<VertexId> z1, std::size_t k, std::size_t m);

/// Checks the final triangle, shifts right one unit, sets the bend point
/// (x(last) - 1, y(last) + 2) and translates by one unit so the bend point
/// lands on the grid. Throws OuterShapeViolation.
void finalize(const QuadGraph& q, GridDrawing& d);

GridDrawing embed(const QuadGraph& q, const CanonicalLabeling& c, Engine engine = Engine::offset,
                  const TraceSink& trace = {});

std::string serialize_drawing(const QuadGraph& q, const GridDrawing& d);
GridDrawing parse_drawing(const QuadGraph& q, std::string_view document);
std::string serialize_snapshot(const QuadGraph& q, const FrontierSnapshot& s);

}  // namespace pdgrid
