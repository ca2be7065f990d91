#include "pdgrid/placement.hpp"

#include <algorithm>
#include <limits>

#include <json.hpp>

#include "pdgrid/error.hpp"

namespace pdgrid {

namespace {

constexpr VertexId kNone = static_cast<VertexId>(-1);

std::string vname(const QuadGraph& q, VertexId x) { return q.graph().name(x); }

bool collinear(Point a, Point b, Point c) { return orientation(a, b, c) == Orientation::collinear; }

std::vector<std::int64_t> initial_pending(const PlanarGraph& g, const std::vector<std::uint32_t>& gi) {
  std::vector<std::int64_t> pend(g.vertex_count(), 0);
  for (VertexId x = 0; x < g.vertex_count(); ++x) {
    const std::uint32_t floor = std::max<std::uint32_t>(gi[x], 2);
    for (VertexId y : g.rotation(x)) {
      if (gi[y] > floor) ++pend[x];
    }
  }
  return pend;
}

void place_pending(const PlanarGraph& g, const std::vector<char>& placed, std::vector<std::int64_t>& pend,
                   const std::vector<VertexId>& group) {
  for (VertexId z : group) {
    for (VertexId y : g.rotation(z)) {
      if (placed[y]) --pend[y];
    }
  }
}

// Orders a pair so that z0 is the member attached to the left end. Returns
// the two attachment vertices (a, b) with a left of b.
struct PairAttach {
  VertexId z0, z1, a, b;
};

PairAttach attach_pair(const PlanarGraph& g, const std::vector<char>& placed, VertexId z0, VertexId z1,
                       const std::function<bool(VertexId, VertexId)>& left_of) {
  auto only = [&](VertexId z, VertexId other) {
    VertexId found = kNone;
    for (VertexId y : g.rotation(z)) {
      if (placed[y] && y != other) {
        if (found != kNone) throw Error(ErrorKind::BadGroupShape, "pair member has two earlier neighbors");
        found = y;
      }
    }
    if (found == kNone) throw Error(ErrorKind::BadGroupShape, "pair member has no earlier neighbor");
    return found;
  };
  VertexId a = only(z0, z1);
  VertexId b = only(z1, z0);
  if (!left_of(a, b)) {
    std::swap(a, b);
    std::swap(z0, z1);
  }
  return {z0, z1, a, b};
}

void check_size(const QuadGraph& q, const CanonicalLabeling& c) {
  if (q.size() >= (std::size_t{1} << 31)) throw Error(ErrorKind::Overflow, "graph too large for the coordinate range");
  if (c.group_of.size() != q.size()) throw Error(ErrorKind::BadGroupShape, "labeling does not match the graph");
  if (c.groups.size() < 3) throw Error(ErrorKind::BadGroupShape, "labeling needs at least three groups");
  for (const auto& g : c.groups) {
    if (g.empty() || g.size() > 2) throw Error(ErrorKind::BadGroupShape, "groups must have one or two vertices");
  }
}

}  // namespace

Frontier init_first_quad(const QuadGraph& q, const CanonicalLabeling& c, GridDrawing& d) {
  if (c.groups.size() < 2 || c.groups[0].size() != 2 || c.groups[1].size() != 2) {
    throw Error(ErrorKind::BadGroupShape, "groups 1 and 2 must each have two vertices");
  }
  const PlanarGraph& g = q.working_graph();
  const PlacementRoles r = q.roles();
  VertexId a = c.groups[1][0];
  VertexId b = c.groups[1][1];
  if (!g.adjacent(a, r.left)) std::swap(a, b);
  auto closes_face = [&](std::size_t dart) {
    const auto& f = g.faces()[g.dart_face(dart)].boundary;
    return f.size() == 4 && std::count(f.begin(), f.end(), a) == 1 && std::count(f.begin(), f.end(), b) == 1;
  };
  if (!g.adjacent(a, r.left) || !g.adjacent(b, r.right) || !g.adjacent(a, b) ||
      !(closes_face(g.dart(r.left, r.right)) || closes_face(g.dart(r.right, r.left)))) {
    throw Error(ErrorKind::BadGroupShape, "group 2 does not close the first face");
  }
  const std::size_t n = g.vertex_count();
  d.n = n;
  d.coords.assign(n, Point{});
  d.placed.assign(n, 0);
  d.bend.reset();
  d.degeneracies = {};
  d.coords[r.left] = {0, 0};
  d.coords[r.right] = {3, 0};
  d.coords[a] = {1, 1};
  d.coords[b] = {2, 1};
  for (VertexId x : {r.left, r.right, a, b}) d.placed[x] = 1;

  Frontier f;
  f.cycle = {r.left, a, b, r.right};
  f.children.assign(n, {});
  f.group_of = c.group_of;
  f.pending = initial_pending(g, c.group_of);
  return f;
}

std::size_t low(const Frontier& f, const GridDrawing& d, std::size_t i, std::size_t j) {
  const VertexId ci = f.cycle[i];
  const VertexId cj = f.cycle[j];
  if (f.group_of[ci] != f.group_of[cj]) return f.group_of[ci] < f.group_of[cj] ? i : j;
  const std::int64_t xi = d.coords[ci].x;
  const std::int64_t xj = d.coords[cj].x;
  if (xi != xj) return xi < xj ? i : j;
  return std::min(i, j);
}

void update_under(Frontier& f, const GridDrawing& d, std::size_t p, std::size_t q, std::size_t group_size,
                  VertexId z0) {
  if (group_size != 1) return;
  const std::size_t lp = low(f, d, p, p + 1);
  const std::size_t lq = low(f, d, q - 2, q - 1);
  if (lp == p + 1) f.children[f.cycle[p]].push_back(f.cycle[p + 1]);
  if (lq == q - 2) f.children[f.cycle[q]].push_back(f.cycle[q - 1]);
  for (std::size_t i = lp + 1; i <= lq; ++i) f.children[z0].push_back(f.cycle[i]);
}

void shift_right(const Frontier& f, GridDrawing& d, std::size_t j, std::int64_t s) {
  if (s == 0) return;
  // Sets can nest while a step is in progress, so collect before moving.
  std::vector<char> seen(d.coords.size(), 0);
  std::vector<VertexId> stack;
  for (std::size_t i = j; i < f.cycle.size(); ++i) stack.push_back(f.cycle[i]);
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    if (seen[x]) continue;
    seen[x] = 1;
    d.coords[x].x += s;
    for (VertexId y : f.children[x]) stack.push_back(y);
  }
}

void locate_group(const Frontier& f, GridDrawing& d, std::size_t p, std::size_t q, VertexId z0,
                  std::optional<VertexId> z1) {
  const VertexId cp = f.cycle[p];
  const VertexId cq = f.cycle[q];
  const std::int64_t size = z1 ? 2 : 1;
  const Point a = d.coords[cp];
  const Point b = d.coords[cq];
  if (f.pending[cp] == 0) {
    d.coords[z0] = {a.x, b.y + b.x - a.x - size + 1};
  } else {
    d.coords[z0] = {a.x + 1, b.y + b.x - a.x - size};
  }
  if (z1) d.coords[*z1] = {d.coords[z0].x + 1, d.coords[z0].y};
}

Degeneracies repair_degeneracies(const Frontier& f, GridDrawing& d, std::size_t p, std::size_t q, VertexId z0,
                                 std::optional<VertexId> z1, std::size_t k, std::size_t m) {
  Degeneracies out;
  const auto& C = f.cycle;
  const std::size_t limit = d.coords.size();
  auto tail_collinear = [&](VertexId z) {
    return k < m && q + 1 < C.size() && f.pending[C[q]] == 0 &&
           collinear(d.coords[z], d.coords[C[q]], d.coords[C[q + 1]]);
  };
  for (std::size_t iter = 0;; ++iter) {
    if (iter > limit) throw Error(ErrorKind::RepairDivergence, "degeneracy repairs do not settle");
    if (!z1) {
      if (q >= p + 2 && d.coords[z0].x == d.coords[C[p + 1]].x && d.coords[z0].x == d.coords[C[p + 2]].x) {
        shift_right(f, d, p + 1, 1);
        locate_group(f, d, p, q, z0, z1);
        ++out.count[0];
        continue;
      }
      if (tail_collinear(z0)) {
        shift_right(f, d, q + 1, 1);
        ++out.count[1];
        continue;
      }
    } else {
      if (d.coords[z0].y == d.coords[*z1].y && d.coords[z0].y == d.coords[C[p]].y) {
        shift_right(f, d, q, 1);
        locate_group(f, d, p, q, z0, z1);
        ++out.count[2];
        continue;
      }
      if (tail_collinear(*z1)) {
        shift_right(f, d, q + 1, 1);
        ++out.count[3];
        continue;
      }
    }
    break;
  }
  return out;
}

void finalize(const QuadGraph& q, GridDrawing& d) {
  const PlacementRoles r = q.roles();
  const Point left = d.coords[r.left];
  const Point right = d.coords[r.right];
  const Point last = d.coords[r.last];
  const Point opp = d.coords[r.opposite];
  if (left != Point{0, 0} || right.y != 0 || last.x != 0 || last.y != right.x || !on_segment(right, last, opp) ||
      opp == right || opp == last) {
    throw Error(ErrorKind::OuterShapeViolation, "outer face is not the expected right triangle");
  }
  d.pre_final_width = right.x - left.x;
  d.coords[r.right].x += 1;
  Point bend{last.x - 1, last.y + 2};
  for (auto& c : d.coords) c.x += 1;
  bend.x += 1;
  d.bend = Bend{r.left, r.opposite, bend};
}

namespace {

GridDrawing embed_reference(const QuadGraph& q, const CanonicalLabeling& c, const TraceSink& trace) {
  const PlanarGraph& g = q.working_graph();
  GridDrawing d;
  Frontier f = init_first_quad(q, c, d);
  const std::size_t m = c.groups.size();

  auto snapshot = [&](std::uint32_t k) {
    if (!trace) return;
    FrontierSnapshot s;
    s.step = k;
    s.cycle = f.cycle;
    for (VertexId x : f.cycle) {
      s.coords.push_back(d.coords[x]);
      s.pending.push_back(f.pending[x]);
      s.group_of.push_back(f.group_of[x]);
    }
    trace(s);
  };
  snapshot(2);

  std::vector<std::size_t> pos(g.vertex_count(), 0);
  for (std::size_t k = 3; k <= m; ++k) {
    const auto& grp = c.group(k);
    place_pending(g, d.placed, f.pending, grp);
    for (std::size_t i = 0; i < f.cycle.size(); ++i) pos[f.cycle[i]] = i;

    std::size_t p = 0, qi = 0;
    VertexId z0 = grp[0];
    std::optional<VertexId> z1;
    if (grp.size() == 1) {
      p = std::numeric_limits<std::size_t>::max();
      for (VertexId y : g.rotation(z0)) {
        if (!d.placed[y]) continue;
        p = std::min(p, pos[y]);
        qi = std::max(qi, pos[y]);
      }
      if (p == std::numeric_limits<std::size_t>::max() || qi < p + 2) {
        throw Error(ErrorKind::BadGroupShape, "'" + vname(q, z0) + "' does not span the outer path");
      }
      update_under(f, d, p, qi, 1, z0);
      shift_right(f, d, qi, 1);
    } else {
      const PairAttach pa = attach_pair(g, d.placed, grp[0], grp[1],
                                        [&](VertexId a, VertexId b) { return pos[a] < pos[b]; });
      z0 = pa.z0;
      z1 = pa.z1;
      p = pos[pa.a];
      qi = pos[pa.b];
      if (qi != p + 1) throw Error(ErrorKind::BadGroupShape, "pair does not attach to an outer edge");
      shift_right(f, d, qi, 2);
    }
    locate_group(f, d, p, qi, z0, z1);
    const Degeneracies rep = repair_degeneracies(f, d, p, qi, z0, z1, k, m);
    for (int i = 0; i < 4; ++i) d.degeneracies.count[i] += rep.count[i];

    std::vector<VertexId> next(f.cycle.begin(), f.cycle.begin() + static_cast<std::ptrdiff_t>(p) + 1);
    next.push_back(z0);
    if (z1) next.push_back(*z1);
    next.insert(next.end(), f.cycle.begin() + static_cast<std::ptrdiff_t>(qi), f.cycle.end());
    f.cycle = std::move(next);
    d.placed[z0] = 1;
    if (z1) d.placed[*z1] = 1;
    snapshot(static_cast<std::uint32_t>(k));
  }
  finalize(q, d);
  return d;
}

// Linear-time engine: the exterior path is a linked list in which each
// vertex stores its x relative to its predecessor, and a vertex that leaves
// the path stores its x relative to its parent in the under-set forest. A
// shift of U(c_j) ∪ ... ∪ U(c_r) is one offset update. Absolute x values are
// resolved once at the end.
class OffsetEngine {
 public:
  OffsetEngine(const QuadGraph& q, const CanonicalLabeling& c, const TraceSink& trace)
      : q_(q), g_(q.working_graph()), c_(c), trace_(trace) {}

  GridDrawing run() {
    const std::size_t n = g_.vertex_count();
    const std::size_t m = c_.groups.size();
    GridDrawing d;
    // Groups 1 and 2 go through the shared initializer.
    Frontier init = init_first_quad(q_, c_, d);
    pend_ = std::move(init.pending);
    gi_ = c_.group_of;
    next_.assign(n, kNone);
    prev_.assign(n, kNone);
    dx_.assign(n, 0);
    y_.assign(n, 0);
    parent_.assign(n, kNone);
    children_.assign(n, {});
    mark_.assign(n, 0);
    placed_ = d.placed;
    head_ = init.cycle[0];
    for (std::size_t i = 0; i < 4; ++i) {
      const VertexId x = init.cycle[i];
      y_[x] = d.coords[x].y;
      dx_[x] = i == 0 ? 0 : d.coords[x].x - d.coords[init.cycle[i - 1]].x;
      if (i + 1 < 4) {
        next_[x] = init.cycle[i + 1];
        prev_[init.cycle[i + 1]] = x;
      }
    }
    snapshot(2);

    for (std::size_t k = 3; k <= m; ++k) {
      const auto& grp = c_.group(k);
      place_pending(g_, placed_, pend_, grp);
      if (grp.size() == 1) {
        place_singleton(grp[0], k, m, d.degeneracies);
      } else {
        place_pair(grp[0], grp[1], k, m, d.degeneracies);
      }
      for (VertexId z : grp) placed_[z] = 1;
      snapshot(static_cast<std::uint32_t>(k));
    }

    resolve(d);
    std::fill(d.placed.begin(), d.placed.end(), 1);
    finalize(q_, d);
    return d;
  }

 private:
  void place_singleton(VertexId z0, std::size_t k, std::size_t m, Degeneracies& deg) {
    std::size_t count = 0;
    for (VertexId y : g_.rotation(z0)) {
      if (placed_[y]) {
        mark_[y] = 1;
        ++count;
      }
    }
    // Neighbors sit at every other position of one stretch of the path; the
    // first is the one two steps behind which nothing is marked.
    VertexId cp = kNone;
    for (VertexId y : g_.rotation(z0)) {
      if (!placed_[y]) continue;
      const VertexId p1 = prev_[y];
      const VertexId p2 = p1 == kNone ? kNone : prev_[p1];
      if (p2 == kNone || !mark_[p2]) cp = y;
    }
    if (cp == kNone || count < 2) throw Error(ErrorKind::BadGroupShape, "'" + vname(q_, z0) + "' has no attachment");
    VertexId cq = cp;
    for (std::size_t i = 1; i < count; ++i) {
      const VertexId mid = next_[cq];
      if (mid == kNone || next_[mid] == kNone) {
        throw Error(ErrorKind::BadGroupShape, "'" + vname(q_, z0) + "' does not span the outer path");
      }
      cq = next_[mid];
    }
    std::vector<VertexId> path;
    for (VertexId x = next_[cp]; x != cq; x = next_[x]) path.push_back(x);
    for (VertexId y : g_.rotation(z0)) mark_[y] = 0;

    const std::size_t len = path.size();  // q - p - 1
    auto low_left = [&](VertexId a, VertexId b) { return gi_[b] < gi_[a] ? 1 : 0; };
    // lp, lq as offsets from p.
    const std::size_t lp = low_left(cp, path[0]);
    const VertexId cq2 = len >= 2 ? path[len - 2] : cp;
    const std::size_t lq = (len - 1) + low_left(cq2, path[len - 1]);
    const bool absorbed_p = lp == 1;
    const bool absorbed_q = lq == len - 1;

    const VertexId main = absorbed_q ? path[len - 1] : cq;
    dx_[main] += 1;

    std::int64_t width = 0;
    for (VertexId x : path) width += dx_[x];
    width += dx_[cq];
    std::int64_t rel = 0, yz = 0;
    auto locate = [&] {
      if (pend_[cp] == 0) {
        rel = 0;
        yz = y_[cq] + width;
      } else {
        rel = 1;
        yz = y_[cq] + width - 1;
      }
    };
    locate();
    const std::size_t limit = g_.vertex_count();
    for (std::size_t iter = 0;; ++iter) {
      if (iter > limit) throw Error(ErrorKind::RepairDivergence, "degeneracy repairs do not settle");
      const VertexId c1 = path[0];
      const VertexId c2 = next_[c1];
      if (rel == dx_[c1] && dx_[c2] == 0) {
        dx_[c1] += 1;
        width += 1;
        locate();
        ++deg.count[0];
        continue;
      }
      const VertexId cn = next_[cq];
      if (k < m && cn != kNone && pend_[cq] == 0 &&
          collinear({rel, yz}, {width, y_[cq]}, {width + dx_[cn], y_[cn]})) {
        dx_[cn] += 1;
        ++deg.count[1];
        continue;
      }
      break;
    }

    // Detach the covered stretch into the forest.
    std::int64_t xr = 0;
    for (std::size_t i = 0; i < len; ++i) {
      const VertexId x = path[i];
      xr += dx_[x];
      VertexId parent = z0;
      std::int64_t base = rel;
      if (i == 0 && absorbed_p) {
        parent = cp;
        base = 0;
      } else if (i == len - 1 && absorbed_q) {
        parent = cq;
        base = width;
      }
      parent_[x] = parent;
      dx_[x] = xr - base;
      children_[parent].push_back(x);
      next_[x] = prev_[x] = kNone;
    }
    y_[z0] = yz;
    link(cp, z0, rel);
    link(z0, cq, width - rel);
  }

  void place_pair(VertexId a0, VertexId a1, std::size_t k, std::size_t m, Degeneracies& deg) {
    const PairAttach pa = attach_pair(g_, placed_, a0, a1, [&](VertexId a, VertexId b) { return next_[a] == b; });
    const VertexId cp = pa.a;
    const VertexId cq = pa.b;
    if (next_[cp] != cq) throw Error(ErrorKind::BadGroupShape, "pair does not attach to an outer edge");
    dx_[cq] += 2;
    std::int64_t width = dx_[cq];
    std::int64_t rel = 0, yz = 0;
    auto locate = [&] {
      if (pend_[cp] == 0) {
        rel = 0;
        yz = y_[cq] + width - 1;
      } else {
        rel = 1;
        yz = y_[cq] + width - 2;
      }
    };
    locate();
    const std::size_t limit = g_.vertex_count();
    for (std::size_t iter = 0;; ++iter) {
      if (iter > limit) throw Error(ErrorKind::RepairDivergence, "degeneracy repairs do not settle");
      if (yz == y_[cp]) {
        dx_[cq] += 1;
        width += 1;
        locate();
        ++deg.count[2];
        continue;
      }
      const VertexId cn = next_[cq];
      if (k < m && cn != kNone && pend_[cq] == 0 &&
          collinear({rel + 1, yz}, {width, y_[cq]}, {width + dx_[cn], y_[cn]})) {
        dx_[cn] += 1;
        ++deg.count[3];
        continue;
      }
      break;
    }
    y_[pa.z0] = y_[pa.z1] = yz;
    link(cp, pa.z0, rel);
    link(pa.z0, pa.z1, 1);
    link(pa.z1, cq, width - rel - 1);
  }

  void link(VertexId a, VertexId b, std::int64_t dx) {
    next_[a] = b;
    prev_[b] = a;
    dx_[b] = dx;
  }

  void snapshot(std::uint32_t k) {
    if (!trace_) return;
    FrontierSnapshot s;
    s.step = k;
    std::int64_t x = 0;
    for (VertexId c = head_; c != kNone; c = next_[c]) {
      x += dx_[c];
      s.cycle.push_back(c);
      s.coords.push_back({x, y_[c]});
      s.pending.push_back(pend_[c]);
      s.group_of.push_back(gi_[c]);
    }
    trace_(s);
  }

  void resolve(GridDrawing& d) {
    std::vector<VertexId> stack;
    std::int64_t x = 0;
    for (VertexId c = head_; c != kNone; c = next_[c]) {
      x += dx_[c];
      d.coords[c] = {x, y_[c]};
      stack.push_back(c);
    }
    while (!stack.empty()) {
      const VertexId p = stack.back();
      stack.pop_back();
      for (VertexId ch : children_[p]) {
        d.coords[ch] = {d.coords[p].x + dx_[ch], y_[ch]};
        stack.push_back(ch);
      }
    }
  }

  const QuadGraph& q_;
  const PlanarGraph& g_;
  const CanonicalLabeling& c_;
  const TraceSink& trace_;
  VertexId head_ = 0;
  std::vector<std::int64_t> pend_;
  std::vector<std::uint32_t> gi_;
  std::vector<VertexId> next_, prev_, parent_;
  std::vector<std::int64_t> dx_, y_;
  std::vector<std::vector<VertexId>> children_;
  std::vector<char> mark_, placed_;
};

}  // namespace

GridDrawing embed(const QuadGraph& q, const CanonicalLabeling& c, Engine engine, const TraceSink& trace) {
  check_size(q, c);
  if (engine == Engine::reference) return embed_reference(q, c, trace);
  return OffsetEngine(q, c, trace).run();
}

using nlohmann::json;

std::string serialize_drawing(const QuadGraph& q, const GridDrawing& d) {
  json coords = json::object();
  for (VertexId x = 0; x < d.coords.size(); ++x) coords[q.graph().name(x)] = {d.coords[x].x, d.coords[x].y};
  json doc = {{"format", 1}, {"n", d.n}, {"coords", std::move(coords)}};
  if (d.bend) {
    doc["bend"] = {{"edge", {q.graph().name(d.bend->from), q.graph().name(d.bend->to)}},
                   {"point", {d.bend->point.x, d.bend->point.y}}};
  }
  const auto& c = d.degeneracies.count;
  doc["degeneracies"] = {{"d1", c[0]}, {"d2", c[1]}, {"d3", c[2]}, {"d4", c[3]}};
  return doc.dump(1);
}

GridDrawing parse_drawing(const QuadGraph& q, std::string_view document) {
  try {
    const json doc = json::parse(document);
    if (doc.contains("format") && doc.at("format").get<int>() != 1) {
      throw Error(ErrorKind::MalformedDocument, "unsupported format version");
    }
    GridDrawing d;
    d.n = doc.at("n").get<std::size_t>();
    d.coords.assign(q.size(), Point{});
    d.placed.assign(q.size(), 0);
    auto lookup = [&](const std::string& name) {
      const auto id = q.graph().find(name);
      if (!id) throw Error(ErrorKind::MalformedDocument, "unknown vertex '" + name + "'");
      return *id;
    };
    for (const auto& [name, xy] : doc.at("coords").items()) {
      const VertexId x = lookup(name);
      d.coords[x] = {xy.at(0).get<std::int64_t>(), xy.at(1).get<std::int64_t>()};
      d.placed[x] = 1;
    }
    if (doc.contains("bend") && !doc.at("bend").is_null()) {
      const json& b = doc.at("bend");
      d.bend = Bend{lookup(b.at("edge").at(0).get<std::string>()), lookup(b.at("edge").at(1).get<std::string>()),
                    Point{b.at("point").at(0).get<std::int64_t>(), b.at("point").at(1).get<std::int64_t>()}};
    }
    if (doc.contains("degeneracies")) {
      const json& g = doc.at("degeneracies");
      const char* keys[4] = {"d1", "d2", "d3", "d4"};
      for (int i = 0; i < 4; ++i) d.degeneracies.count[i] = g.value(keys[i], std::size_t{0});
    }
    return d;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::MalformedDocument, std::string("bad drawing document: ") + e.what());
  }
}

std::string serialize_snapshot(const QuadGraph& q, const FrontierSnapshot& s) {
  json cycle = json::array();
  for (std::size_t i = 0; i < s.cycle.size(); ++i) {
    cycle.push_back({{"v", q.graph().name(s.cycle[i])},
                     {"x", s.coords[i].x},
                     {"y", s.coords[i].y},
                     {"pending", s.pending[i]},
                     {"group", s.group_of[i]}});
  }
  return json{{"step", s.step}, {"frontier", std::move(cycle)}}.dump();
}

}  // namespace pdgrid
