#include "pdgrid/verify.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace pdgrid {

namespace {

constexpr VertexId kBendPoint = static_cast<VertexId>(-2);

struct Segment {
  std::size_t edge;  // input edge index
  VertexId ends[2];  // QuadGraph ids, kBendPoint for the bend
  Point p[2];
};

std::string pt(Point p) {
  std::ostringstream s;
  s << "(" << p.x << "," << p.y << ")";
  return s.str();
}

class Namer {
 public:
  explicit Namer(const QuadGraph& q) : q_(q) {}
  std::string vertex(VertexId x) const { return x == kBendPoint ? "bend" : "'" + q_.graph().name(x) + "'"; }
  std::string seg(const Segment& s) const {
    return vertex(s.ends[0]) + pt(s.p[0]) + "-" + vertex(s.ends[1]) + pt(s.p[1]);
  }

 private:
  const QuadGraph& q_;
};

// Which input edge is bent and in which drawing.
struct BentEdge {
  bool valid = false;
  bool primal = true;
  std::size_t edge = 0;
};

BentEdge find_bent(const QuadGraph& q, const GridDrawing& d) {
  BentEdge out;
  if (!d.bend) return out;
  const VertexId a = d.bend->from;
  const VertexId b = d.bend->to;
  if (a >= q.size() || b >= q.size()) return out;
  const VertexTag& ta = q.tag(a);
  const VertexTag& tb = q.tag(b);
  if (ta.kind != tb.kind) return out;
  try {
    if (ta.kind == VertexKind::primal) {
      out.edge = q.edge_index(ta.source, tb.source);
      out.primal = true;
    } else {
      out.edge = q.edge_index_of_faces(ta.source, tb.source);
      out.primal = false;
    }
    out.valid = true;
  } catch (const std::exception&) {
    out.valid = false;
  }
  return out;
}

std::vector<Segment> build_segments(const QuadGraph& q, const GridDrawing& d, const BentEdge& bent, bool primal) {
  std::vector<Segment> out;
  for (std::size_t e = 0; e < q.edge_count_primal(); ++e) {
    VertexId a, b;
    if (primal) {
      a = q.vertex_of(q.primal_edge(e).a);
      b = q.vertex_of(q.primal_edge(e).b);
    } else {
      a = q.vertex_of_face(q.dual_edge(e).left);
      b = q.vertex_of_face(q.dual_edge(e).right);
    }
    if (bent.valid && bent.primal == primal && bent.edge == e) {
      const VertexId from = d.bend->from;
      const VertexId to = d.bend->to;
      out.push_back({e, {from, kBendPoint}, {d.coords[from], d.bend->point}});
      out.push_back({e, {kBendPoint, to}, {d.bend->point, d.coords[to]}});
    } else {
      out.push_back({e, {a, b}, {d.coords[a], d.coords[b]}});
    }
  }
  return out;
}

// Contact between two segments of the same drawing; allowed only as a shared
// endpoint with the segments leaving in different directions.
bool allowed_contact(const Segment& s, const Segment& t) {
  const Contact c = classify_segments(s.p[0], s.p[1], t.p[0], t.p[1]);
  if (c == Contact::none) return true;
  if (c == Contact::proper) return false;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (s.ends[i] != t.ends[j] || s.ends[i] == kBendPoint) continue;
      const Point p = s.p[i];
      const Point a = s.p[1 - i];
      const Point b = t.p[1 - j];
      if (orientation(p, a, b) != Orientation::collinear) return true;
      const Wide dot = static_cast<Wide>(a.x - p.x) * (b.x - p.x) +
                           static_cast<Wide>(a.y - p.y) * (b.y - p.y);
      return dot < 0;
    }
  }
  return false;
}

void check_planar(const std::vector<Segment>& segs, const Namer& names, const char* check, Report& rep) {
  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      if (segs[i].edge == segs[j].edge) continue;
      if (!allowed_contact(segs[i], segs[j])) {
        rep.fail(check, names.seg(segs[i]) + " meets " + names.seg(segs[j]));
      }
    }
  }
}

int sign(Orientation o) { return static_cast<int>(o); }

}  // namespace

Report check_requirements(const QuadGraph& q, const GridDrawing& d) {
  Report rep;
  for (const char* name : {"primal_planar", "dual_planar", "crossings", "dual_inside", "grid_bounds", "one_bend"}) {
    rep.check(name);
  }
  const Namer names(q);
  if (d.coords.size() != q.size() ||
      std::any_of(d.placed.begin(), d.placed.end(), [](char c) { return !c; }) || d.placed.size() != q.size()) {
    rep.fail("grid_bounds", "drawing does not cover every vertex");
    return rep;
  }

  const BentEdge bent = find_bent(q, d);
  if (!d.bend) {
    rep.fail("one_bend", "no bent edge");
  } else if (!bent.valid) {
    rep.fail("one_bend", names.vertex(d.bend->from) + "-" + names.vertex(d.bend->to) + " is not an edge");
  }

  const std::int64_t n = static_cast<std::int64_t>(q.size());
  if (d.n != q.size()) rep.fail("grid_bounds", "drawing states n=" + std::to_string(d.n) + ", graph has " + std::to_string(n));
  const std::int64_t hi = 2 * n - 2;
  auto in_bounds = [&](Point p) { return p.x >= 0 && p.y >= 0 && p.x <= hi && p.y <= hi; };
  for (VertexId x = 0; x < q.size(); ++x) {
    if (!in_bounds(d.coords[x])) rep.fail("grid_bounds", names.vertex(x) + " at " + pt(d.coords[x]) + " outside [0," + std::to_string(hi) + "]");
  }
  if (d.bend && !in_bounds(d.bend->point)) rep.fail("grid_bounds", "bend point " + pt(d.bend->point) + " outside [0," + std::to_string(hi) + "]");

  const auto primal = build_segments(q, d, bent, true);
  const auto dual = build_segments(q, d, bent, false);
  check_planar(primal, names, "primal_planar", rep);
  check_planar(dual, names, "dual_planar", rep);

  std::vector<std::size_t> crossings(q.edge_count_primal(), 0);
  for (const Segment& s : primal) {
    for (const Segment& t : dual) {
      const Contact c = classify_segments(s.p[0], s.p[1], t.p[0], t.p[1]);
      if (c == Contact::none) continue;
      if (c == Contact::proper && s.edge == t.edge) {
        ++crossings[s.edge];
      } else {
        rep.fail("crossings", names.seg(s) + (c == Contact::proper ? " crosses " : " touches ") + names.seg(t));
      }
    }
  }
  for (std::size_t e = 0; e < crossings.size(); ++e) {
    if (crossings[e] != 1) {
      const PrimalEdge& pe = q.primal_edge(e);
      rep.fail("crossings", "edge " + names.vertex(pe.a) + "-" + names.vertex(pe.b) + " crosses its dual " +
                                std::to_string(crossings[e]) + " times");
    }
  }

  const PlanarGraph& g1 = q.primal();
  for (const Face& f : g1.faces()) {
    std::vector<Point> poly;
    const std::size_t len = f.boundary.size();
    for (std::size_t i = 0; i < len; ++i) {
      const VertexId a = f.boundary[i];
      const VertexId b = f.boundary[(i + 1) % len];
      poly.push_back(d.coords[q.vertex_of(a)]);
      if (bent.valid && bent.primal) {
        const PrimalEdge& pe = q.primal_edge(bent.edge);
        if ((pe.a == a && pe.b == b) || (pe.a == b && pe.b == a)) poly.push_back(d.bend->point);
      }
    }
    const VertexId dv = q.vertex_of_face(f.id);
    const Side side = locate_in_polygon(poly, d.coords[dv]);
    const bool outer = f.id == g1.outer_face();
    const Side want = outer ? Side::outside : Side::inside;
    if (side != want) {
      const char* got = side == Side::boundary ? "on the boundary of" : side == Side::inside ? "inside" : "outside";
      rep.fail("dual_inside", names.vertex(dv) + " at " + pt(d.coords[dv]) + " is " + got + " its face");
    }
  }
  return rep;
}

Report check_strict_convexity(const QuadGraph& q, const GridDrawing& d) {
  Report rep;
  rep.check("inner_faces_convex");
  rep.check("outer_face_reflex");
  const Namer names(q);
  const PlanarGraph& g = q.graph();

  FaceId outer = g.outer_face();
  VertexId reflex_at = static_cast<VertexId>(-1);
  const BentEdge bent = find_bent(q, d);
  if (bent.valid) {
    outer = q.quad_face_of_edge(bent.edge);
    reflex_at = d.bend->to;
  } else if (q.outer_quad()) {
    outer = q.quad_face_of_edge(q.edge_index(q.outer_quad()->u, q.outer_quad()->w));
    reflex_at = q.roles().opposite;
  }

  for (const Face& f : g.faces()) {
    const auto& b = f.boundary;
    std::array<int, 4> s{};
    for (std::size_t i = 0; i < 4; ++i) {
      s[i] = sign(orientation(d.coords[b[(i + 3) % 4]], d.coords[b[i]], d.coords[b[(i + 1) % 4]]));
    }
    std::string corners;
    for (VertexId x : b) corners += names.vertex(x) + pt(d.coords[x]) + " ";
    if (f.id != outer) {
      const bool ok = s[0] != 0 && s[0] == s[1] && s[1] == s[2] && s[2] == s[3];
      if (!ok) rep.fail("inner_faces_convex", "face " + corners + "is not strictly convex");
      continue;
    }
    const auto at = std::find(b.begin(), b.end(), reflex_at) - b.begin();
    if (at >= 4) {
      rep.fail("outer_face_reflex", "bent edge end is not on the outer face");
      continue;
    }
    const int r = s[at];
    bool ok = r != 0;
    for (std::size_t i = 0; i < 4; ++i) {
      if (static_cast<std::ptrdiff_t>(i) != at && s[i] != -r) ok = false;
    }
    if (!ok) rep.fail("outer_face_reflex", "outer face " + corners + "is not reflex exactly at " + names.vertex(reflex_at));
  }
  return rep;
}

namespace {

bool slope_permitted(std::int64_t dx, std::int64_t dy, bool pending) {
  if (dx > 0 && dy == 0) return true;
  if (dx == 0 && dy > 0) return true;
  if (dx > 0 && dy >= dx) return true;
  if (dx > 0 && dy >= -dx && 2 * dy <= -dx) return !pending || dy == -dx;
  return false;
}

}  // namespace

Report check_angles(const FrontierSnapshot& s, std::size_t group_count) {
  Report rep;
  rep.check("slope_classes");
  rep.check("settled_vertices");
  if (s.step < 2 || s.step >= group_count) return rep;
  const std::size_t r = s.cycle.size();
  auto vec = [&](std::size_t j) {
    return std::pair{s.coords[j + 1].x - s.coords[j].x, s.coords[j + 1].y - s.coords[j].y};
  };
  auto up = [](std::pair<std::int64_t, std::int64_t> a) { return a.first == 0 && a.second > 0; };
  auto down = [](std::pair<std::int64_t, std::int64_t> a) { return a.first > 0 && a.second == -a.first; };
  const std::string at = " at step " + std::to_string(s.step);
  for (std::size_t j = 0; j + 1 < r; ++j) {
    const auto [dx, dy] = vec(j);
    if (!slope_permitted(dx, dy, s.pending[j] > 0)) {
      rep.fail("slope_classes", "frontier vector " + std::to_string(j + 1) + " is (" + std::to_string(dx) + "," +
                                    std::to_string(dy) + ")" + (s.pending[j] > 0 ? " from a vertex with pending edges" : "") + at);
    }
  }
  for (std::size_t j = 1; j + 1 < r; ++j) {
    if (s.pending[j] != 0) continue;
    const auto before = vec(j - 1);
    const auto after = vec(j);
    // Equal groups resolve to the left vertex.
    const bool left_low = s.group_of[j - 1] <= s.group_of[j];
    const std::string where = "frontier vertex " + std::to_string(j + 1) + at;
    if (left_low && !up(after)) rep.fail("settled_vertices", where + ": lower left neighbor but no vertical edge after");
    if (!left_low && !down(before)) rep.fail("settled_vertices", where + ": lower right neighbor but no -45 degree edge before");
    if (up(after) && up(before)) rep.fail("settled_vertices", where + ": two vertical edges in a row");
    if (down(after) && down(before)) rep.fail("settled_vertices", where + ": two -45 degree edges in a row");
  }
  return rep;
}

Report verify_drawing(const QuadGraph& q, const GridDrawing& d) {
  Report rep = check_requirements(q, d);
  rep.merge(check_strict_convexity(q, d));
  return rep;
}

}  // namespace pdgrid
