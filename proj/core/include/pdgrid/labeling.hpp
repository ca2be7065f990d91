#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pdgrid/planar_graph.hpp"
#include "pdgrid/quad_graph.hpp"
#include "pdgrid/report.hpp"

namespace pdgrid {

/// Ordered groups v_1..v_m of QuadGraph vertices. Group k (1-based) is
/// groups[k - 1]; `group_of[x]` is the 1-based index of the group holding x.
struct CanonicalLabeling {
  std::vector<std::vector<VertexId>> groups;
  std::vector<std::uint32_t> group_of;

  std::size_t size() const { return groups.size(); }
  const std::vector<VertexId>& group(std::size_t k) const { return groups[k - 1]; }
};

/// Builds group_of from groups; throws BadGroupShape if a vertex is missing
/// or repeated.
CanonicalLabeling make_labeling(std::vector<std::vector<VertexId>> groups, std::size_t vertex_count);

/// Reverse peeling from the full graph. The outer path starts as
/// (left, last, opposite, right); each round removes the least removable
/// candidate, a singleton keyed (z, z) or an outer-path pair keyed
/// (min, max). Runs in O(n log n) and checks its result with
/// verify_labeling before returning.
CanonicalLabeling compute_labeling(const QuadGraph& q);

/// Same peeling order decided from the definition: a candidate is removable
/// when the remainder stays biconnected. O(n^3); used as a test reference.
CanonicalLabeling compute_labeling_reference(const QuadGraph& q);

/// Checks the labeling invariants for every step k >= 3 by replaying the
/// groups against a frontier: each prefix attaches as an ear to a contiguous
/// stretch of the current outer path, every closed face is a face of q, and
/// the neighbor-count conditions for singletons and pairs hold.
Report verify_labeling(const QuadGraph& q, const CanonicalLabeling& c);

std::string serialize_labeling(const QuadGraph& q, const CanonicalLabeling& c);
CanonicalLabeling parse_labeling(const QuadGraph& q, std::string_view document);

}  // namespace pdgrid
