#include <doctest.h>

#include "support.hpp"

using namespace pdgrid;

namespace {

const char* kK4 = R"({
  "vertices": ["1", "2", "3", "4"],
  "rotation": {"1": ["2", "4", "3"], "2": ["3", "4", "1"], "3": ["1", "4", "2"], "4": ["1", "2", "3"]},
  "outer_face": ["1", "2", "3"]
})";

// Two triangles glued along the edge {a, b}.
PlanarGraph two_triangles() {
  return PlanarGraph::from_rotation({"a", "b", "c", "d"}, {{1, 2, 3}, {2, 0, 3}, {0, 1}, {1, 0}},
                                    std::vector<VertexId>{0, 2, 1, 3});
}

}  // namespace

TEST_CASE("parse K4") {
  const PlanarGraph g = parse_graph(kK4);
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 6);
  CHECK(g.face_count() == 4);
  CHECK(g.find("3") == VertexId{2});
  CHECK_FALSE(g.find("5"));
}

TEST_CASE("parse cube round trip") {
  const PlanarGraph cube = platonic("cube");
  const PlanarGraph g = parse_graph(serialize_graph(cube));
  CHECK(g.vertex_count() == 8);
  CHECK(g.edge_count() == 12);
  CHECK(g.face_count() == 6);
  CHECK(serialize_graph(g) == serialize_graph(cube));
}

TEST_CASE("malformed documents") {
  auto kind_of = [](const std::string& doc) {
    try {
      parse_graph(doc);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  SUBCASE("missing directed adjacency") {
    const std::string doc = R"({"vertices": ["1","2","3","4"],
      "rotation": {"1": ["2","4","3"], "2": ["3","4","1"], "3": ["1","4"], "4": ["1","2","3"]},
      "outer_face": ["1","2","3"]})";
    CHECK(kind_of(doc) == ErrorKind::AsymmetricRotation);
  }
  SUBCASE("not json") { CHECK(kind_of("{") == ErrorKind::MalformedDocument); }
  SUBCASE("unknown neighbor") {
    const std::string doc = R"({"vertices": ["1","2"], "rotation": {"1": ["9"], "2": []}, "outer_face": ["1"]})";
    CHECK(kind_of(doc) == ErrorKind::MalformedDocument);
  }
  SUBCASE("outer face not a face") {
    std::string doc = kK4;
    doc.replace(doc.rfind(R"(["1", "2", "3"])"), 15, R"(["1", "2"])");
    CHECK(kind_of(doc) == ErrorKind::UnknownOuterFace);
  }
  SUBCASE("rotation that is not planar") {
    // K4 with one rotation reversed traces too few faces.
    const std::string doc = R"({"vertices": ["1","2","3","4"],
      "rotation": {"1": ["3","4","2"], "2": ["3","4","1"], "3": ["1","4","2"], "4": ["1","2","3"]},
      "outer_face": ["1","2","3"]})";
    CHECK(kind_of(doc) == ErrorKind::EulerViolation);
  }
}

TEST_CASE("face tracing") {
  auto lengths = [](const PlanarGraph& g) {
    std::multiset<std::size_t> out;
    for (const Face& f : trace_faces(g)) out.insert(f.boundary.size());
    return out;
  };
  CHECK(lengths(platonic("tetrahedron")) == std::multiset<std::size_t>{3, 3, 3, 3});
  CHECK(lengths(platonic("cube")) == std::multiset<std::size_t>(std::multiset<std::size_t>{4, 4, 4, 4, 4, 4}));
  const auto dodeca = lengths(platonic("dodecahedron"));
  CHECK(dodeca.size() == 12);
  CHECK(dodeca.count(5) == 12);
}

TEST_CASE("every dart lies on exactly one face and faces chain through face_next") {
  for (const PlanarGraph& g : fixtures::corpus(20, 30)) {
    std::vector<int> hits(g.dart_count(), 0);
    for (const Face& f : g.faces()) {
      for (std::size_t i = 0; i < f.boundary.size(); ++i) {
        const std::size_t d = g.dart(f.boundary[i], f.boundary[(i + 1) % f.boundary.size()]);
        ++hits[d];
        CHECK(g.dart_face(d) == f.id);
        CHECK(g.dart_head(g.face_next(d)) == f.boundary[(i + 2) % f.boundary.size()]);
      }
    }
    CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
    CHECK(g.vertex_count() + g.face_count() == g.edge_count() + 2);
  }
}

TEST_CASE("mirrored reverses rotations and keeps face vertex sets") {
  const PlanarGraph g = platonic("icosahedron");
  const PlanarGraph m = g.mirrored();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::vector<VertexId> r(g.rotation(v).begin(), g.rotation(v).end());
    std::vector<VertexId> s(m.rotation(v).begin(), m.rotation(v).end());
    std::reverse(s.begin(), s.end());
    std::rotate(s.begin(), std::find(s.begin(), s.end(), r[0]), s.end());
    CHECK(r == s);
  }
  std::set<std::set<VertexId>> a, b;
  for (const Face& f : g.faces()) a.insert({f.boundary.begin(), f.boundary.end()});
  for (const Face& f : m.faces()) b.insert({f.boundary.begin(), f.boundary.end()});
  CHECK(a == b);
}

TEST_CASE("three-connectivity examples") {
  CHECK(check_three_connected(platonic("tetrahedron")));
  CHECK(check_three_connected(platonic("cube")));
  CHECK_FALSE(check_three_connected(two_triangles()));
  CHECK_THROWS_AS(check_three_connected(PlanarGraph::from_rotation({"a", "b", "c"}, {{1, 2}, {2, 0}, {0, 1}},
                                                                   std::vector<VertexId>{0, 1, 2})),
                  Error);
}

TEST_CASE("three-connectivity agrees with the pair-removal oracle") {
  // Deleting edges from triangulations without the generator's guard yields
  // a mix of 3-connected and 2-connected plane graphs.
  int negatives = 0;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const PlanarGraph base = fixtures::random(seed, 6 + seed % 12, false);
    std::vector<std::vector<VertexId>> rot(base.vertex_count());
    for (VertexId v = 0; v < base.vertex_count(); ++v) rot[v].assign(base.rotation(v).begin(), base.rotation(v).end());
    for (int cut = 0; cut < 3; ++cut) {
      // Remove the first edge (v, rot[v][0]) whose ends keep degree >= 3.
      for (VertexId v = 0; v < rot.size(); ++v) {
        const VertexId w = rot[v][(seed + cut) % rot[v].size()];
        if (rot[v].size() > 3 && rot[w].size() > 3) {
          rot[v].erase(std::find(rot[v].begin(), rot[v].end(), w));
          rot[w].erase(std::find(rot[w].begin(), rot[w].end(), v));
          break;
        }
      }
    }
    std::vector<std::string> names = base.names();
    // Use any traced face as the outer face.
    PlanarGraph probe;
    try {
      std::vector<VertexId> any{0, rot[0][0]};
      // Trace the face to the left of (0, rot[0][0]) by the documented rule.
      while (true) {
        const VertexId a = any[any.size() - 2], b = any.back();
        const auto& rb = rot[b];
        const std::size_t pos = std::find(rb.begin(), rb.end(), a) - rb.begin();
        const VertexId c = rb[(pos + rb.size() - 1) % rb.size()];
        if (b == any[0] && c == any[1]) break;
        any.push_back(c);
      }
      any.pop_back();
      probe = PlanarGraph::from_rotation(names, rot, any);
    } catch (const Error&) {
      continue;
    }
    const bool expected = oracle::k_connected(oracle::adjacency(probe), 3);
    negatives += !expected;
    CHECK(check_three_connected(probe) == expected);
  }
  CHECK(negatives > 0);
}

TEST_CASE("with_outer_face relabels only the outer face") {
  const PlanarGraph g = platonic("octahedron");
  const PlanarGraph h = g.with_outer_face(3);
  CHECK(h.outer_face() == 3);
  CHECK(h.face_count() == g.face_count());
}
