#pragma once

#include "pdgrid/placement.hpp"
#include "pdgrid/quad_graph.hpp"
#include "pdgrid/report.hpp"

namespace pdgrid {

/// Checks a finished drawing of the primal graph and its dual:
///   primal_planar, dual_planar   no two edges of one graph meet except at a
///                                shared endpoint (the bent edge counts as two
///                                segments through the bend point)
///   crossings                    each primal edge crosses its dual edge
///                                exactly once, at interior points, and
///                                touches nothing else of the dual drawing
///   dual_inside                  every dual vertex lies strictly inside its
///                                face polygon; the outer one strictly outside
///                                the outer cycle
///   grid_bounds                  every coordinate and the bend point lie in
///                                [0, 2n - 2]
///   one_bend                     exactly one edge is bent, and it is an edge
///                                of the primal or dual graph
Report check_requirements(const QuadGraph& q, const GridDrawing& d);

/// Every inner face of the quadrangulation has four nonzero orientation
/// tests of one sign; the outer face (the face of the bent edge) is reflex
/// at the far end of the bent edge and nowhere else.
Report check_strict_convexity(const QuadGraph& q, const GridDrawing& d);

/// Slope classes of consecutive frontier vectors and the alternation rules
/// for settled vertices, all by integer cross-multiplication. Snapshots of
/// the final step are outside the statement and pass vacuously.
Report check_angles(const FrontierSnapshot& s, std::size_t group_count);

/// check_requirements followed by check_strict_convexity.
Report verify_drawing(const QuadGraph& q, const GridDrawing& d);

}  // namespace pdgrid
