#include <doctest.h>

#include <numeric>

#include "support.hpp"

using namespace pdgrid;

namespace {

// Edge set of the radial graph straight from vertex-face incidences.
std::set<std::pair<VertexId, VertexId>> incidence_edges(const PlanarGraph& g) {
  std::set<std::pair<VertexId, VertexId>> out;
  const auto v1 = static_cast<VertexId>(g.vertex_count());
  for (const Face& f : g.faces()) {
    for (VertexId x : f.boundary) out.insert({x, v1 + f.id});
  }
  return out;
}

std::set<std::pair<VertexId, VertexId>> edges_of(const PlanarGraph& g) {
  std::set<std::pair<VertexId, VertexId>> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (VertexId w : g.rotation(v)) {
      if (v < w) out.insert({v, w});
    }
  }
  return out;
}

bool isomorphic_to_cube(const PlanarGraph& g) {
  if (g.vertex_count() != 8) return false;
  // 3-cube: vertices are 3-bit words, edges differ in one bit.
  std::vector<VertexId> perm(8);
  std::iota(perm.begin(), perm.end(), 0);
  const auto e = edges_of(g);
  do {
    bool ok = true;
    for (VertexId a = 0; a < 8 && ok; ++a) {
      for (int bit = 0; bit < 3 && ok; ++bit) {
        const VertexId b = a ^ (1u << bit);
        ok = e.count({std::min(perm[a], perm[b]), std::max(perm[a], perm[b])}) > 0;
      }
    }
    if (ok && e.size() == 12) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_CASE("K4 gives the cube") {
  const PlanarGraph k4 = platonic("tetrahedron");
  const QuadGraph q = build_quad(k4);
  CHECK(q.size() == 8);
  CHECK(q.graph().edge_count() == 12);
  CHECK(q.graph().face_count() == 6);
  CHECK(edges_of(q.graph()) == incidence_edges(k4));
  CHECK(isomorphic_to_cube(q.graph()));
}

TEST_CASE("radial sizes") {
  const QuadGraph cube = build_quad(platonic("cube"));
  CHECK(cube.size() == 14);
  CHECK(cube.graph().edge_count() == 24);
  CHECK(cube.graph().face_count() == 12);
  CHECK(build_quad(platonic("dodecahedron")).size() == 32);
}

TEST_CASE("radial graph structure on the corpus") {
  for (const PlanarGraph& g : fixtures::corpus(30, 40)) {
    const QuadGraph q = build_quad(g);
    CHECK(edges_of(q.graph()) == incidence_edges(g));
    CHECK(q.graph().edge_count() == 2 * q.size() - 4);
    for (const Face& f : q.graph().faces()) {
      REQUIRE(f.boundary.size() == 4);
      // primal, dual, primal, dual in some rotation
      CHECK(q.tag(f.boundary[0]).kind != q.tag(f.boundary[1]).kind);
      CHECK(q.tag(f.boundary[0]).kind == q.tag(f.boundary[2]).kind);
    }
    for (std::size_t e = 0; e < q.edge_count_primal(); ++e) {
      const PrimalEdge pe = q.primal_edge(e);
      const DualEdge de = q.dual_edge(e);
      CHECK(q.edge_index(pe.a, pe.b) == e);
      CHECK(q.edge_index_of_faces(de.left, de.right) == e);
      CHECK(q.primal_edge_of(de).a == pe.a);
      CHECK(q.dual_edge_of(pe).left == de.left);
      // The quad face of an edge holds both its endpoints and both faces.
      const Face& f = q.graph().faces()[q.quad_face_of_edge(e)];
      const std::set<VertexId> got(f.boundary.begin(), f.boundary.end());
      CHECK(got == std::set<VertexId>{pe.a, pe.b, q.vertex_of_face(de.left), q.vertex_of_face(de.right)});
    }
  }
}

TEST_CASE("build_quad rejects graphs that are not 3-connected") {
  const PlanarGraph g = PlanarGraph::from_rotation({"a", "b", "c", "d"}, {{1, 2, 3}, {2, 0, 3}, {0, 1}, {1, 0}},
                                                   std::vector<VertexId>{0, 2, 1, 3});
  try {
    build_quad(g);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotThreeConnected);
  }
}

TEST_CASE("outer quad on K4") {
  const PlanarGraph k4 = platonic("tetrahedron");
  const VertexId one = *k4.find("1"), two = *k4.find("2"), four = *k4.find("4");
  FaceId f124 = 0;
  for (const Face& f : k4.faces()) {
    const std::set<VertexId> s(f.boundary.begin(), f.boundary.end());
    if (s == std::set<VertexId>{one, two, four}) f124 = f.id;
  }
  const QuadGraph primal = select_outer_quad(build_quad(k4), BendOn::primal);
  const OuterQuad oq = *primal.outer_quad();
  CHECK(oq.u == one);
  CHECK(oq.v == primal.vertex_of_face(k4.outer_face()));
  CHECK(oq.w == two);
  CHECK(oq.w_prime == primal.vertex_of_face(f124));
  CHECK(primal.bent_edge() == std::pair{oq.u, oq.w});

  const QuadGraph dual = select_outer_quad(build_quad(k4), BendOn::dual);
  const OuterQuad dq = *dual.outer_quad();
  CHECK(dq.u == oq.u);
  CHECK(dq.v == oq.v);
  CHECK(dq.w == oq.w);
  CHECK(dq.w_prime == oq.w_prime);
  CHECK(dual.bent_edge() == std::pair{dq.v, dq.w_prime});
}

TEST_CASE("outer quad roles and face") {
  for (const PlanarGraph& g : fixtures::corpus(20, 30)) {
    for (BendOn b : {BendOn::primal, BendOn::dual}) {
      const QuadGraph q = select_outer_quad(build_quad(g), b);
      const OuterQuad oq = *q.outer_quad();
      CHECK(oq.v == q.vertex_of_face(g.outer_face()));
      CHECK(q.tag(oq.u).kind == VertexKind::primal);
      CHECK(q.tag(oq.w_prime).kind == VertexKind::dual);
      // (u, v, w, w') is a face of the radial graph in one direction or the other.
      const PlanarGraph& wg = q.working_graph();
      const Face& outer = wg.faces()[wg.outer_face()];
      CHECK(std::set<VertexId>(outer.boundary.begin(), outer.boundary.end()) ==
            std::set<VertexId>{oq.u, oq.v, oq.w, oq.w_prime});
      const PlacementRoles r = q.roles();
      CHECK(wg.adjacent(r.left, r.right));
      CHECK(wg.adjacent(r.left, r.last));
      CHECK(wg.adjacent(r.opposite, r.right));
      CHECK(q.bent_edge() == std::pair{r.left, r.opposite});
    }
  }
}

TEST_CASE("cube outer quad uses the designated outer face") {
  const PlanarGraph cube = platonic("cube");
  const QuadGraph q = select_outer_quad(build_quad(cube), BendOn::primal);
  CHECK(q.outer_quad()->v == q.vertex_of_face(cube.outer_face()));
}

TEST_CASE("explicit outer edge") {
  const PlanarGraph g = platonic("octahedron");
  const Face& outer = g.faces()[g.outer_face()];
  const VertexId a = outer.boundary[1], b = outer.boundary[2];
  const QuadGraph q = select_outer_quad(build_quad(g), BendOn::primal, std::pair{a, b});
  CHECK(q.outer_quad()->u == std::min(a, b));
  CHECK(q.outer_quad()->w == std::max(a, b));
  // An inner edge is rejected.
  const Face& inner = g.faces()[(g.outer_face() + 1) % g.face_count()];
  VertexId x = inner.boundary[0], y = inner.boundary[1];
  for (std::size_t i = 0; i < inner.boundary.size(); ++i) {
    x = inner.boundary[i];
    y = inner.boundary[(i + 1) % inner.boundary.size()];
    if (std::find(outer.boundary.begin(), outer.boundary.end(), x) == outer.boundary.end()) break;
  }
  CHECK_THROWS_AS(select_outer_quad(build_quad(g), BendOn::primal, std::pair{x, y}), Error);
}
