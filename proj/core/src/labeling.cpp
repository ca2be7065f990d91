#include "pdgrid/labeling.hpp"

#include <algorithm>
#include <array>
#include <queue>

#include <json.hpp>

#include "pdgrid/error.hpp"

namespace pdgrid {

namespace {

constexpr VertexId kNone = static_cast<VertexId>(-1);

std::array<VertexId, 4> sorted_quad(VertexId a, VertexId b, VertexId c, VertexId d) {
  std::array<VertexId, 4> f{a, b, c, d};
  std::sort(f.begin(), f.end());
  return f;
}

// Whether a, b, c, d bound an inner face; a and b must be adjacent, and the
// face then lies on one side of that edge.
bool is_inner_quad(const PlanarGraph& g, VertexId a, VertexId b, VertexId c, VertexId d) {
  if (!g.adjacent(a, b)) return false;
  const auto want = sorted_quad(a, b, c, d);
  for (FaceId f : {g.face_left_of(a, b), g.face_left_of(b, a)}) {
    const auto& bd = g.faces()[f].boundary;
    if (f == g.outer_face() || bd.size() != 4) continue;
    if (sorted_quad(bd[0], bd[1], bd[2], bd[3]) == want) return true;
  }
  return false;
}

std::string vname(const QuadGraph& q, VertexId x) { return q.graph().name(x); }

// Shared state of the reverse peeling. Both the fast rule and the
// definitional rule drive the same removal mechanics.
class Peeler {
 public:
  explicit Peeler(const QuadGraph& q) : q_(q), g_(q.working_graph()) {
    const std::size_t n = g_.vertex_count();
    const PlacementRoles r = q.roles();
    u_ = r.left;
    v_ = r.right;
    w_ = r.opposite;
    wp_ = r.last;
    outer_ = g_.outer_face();

    const std::size_t base_dart = g_.dart(u_, v_);
    const FaceId base = g_.dart_face(base_dart);
    if (base == outer_) throw Error(ErrorKind::LabelingNotFound, "outer quad orientation is inconsistent");
    const std::size_t d1 = g_.face_next(base_dart);  // v -> b
    const std::size_t d2 = g_.face_next(d1);         // b -> a
    b_ = g_.dart_head(d1);
    a_ = g_.dart_head(d2);

    faces_.resize(g_.face_count());
    for (const Face& f : g_.faces()) faces_[f.id] = {f.boundary[0], f.boundary[1], f.boundary[2], f.boundary[3]};
    alive_.assign(g_.face_count(), 1);
    alive_[outer_] = 0;
    cnt_.assign(g_.face_count(), 0);
    S_.assign(n, 0);
    deg_.resize(n);
    for (VertexId x = 0; x < n; ++x) deg_[x] = static_cast<std::uint32_t>(g_.degree(x));
    has_removed_.assign(n, 0);
    on_path_.assign(n, 0);
    present_.assign(n, 1);
    present_count_ = n;
    next_.assign(n, kNone);
    prev_.assign(n, kNone);
    special_.assign(n, 0);
    special_[u_] = special_[v_] = special_[a_] = special_[b_] = 1;

    const std::array<VertexId, 4> path{u_, wp_, w_, v_};
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      next_[path[i]] = path[i + 1];
      prev_[path[i + 1]] = path[i];
    }
    for (VertexId x : path) enter_path(x);
  }

  std::size_t present_count() const { return present_count_; }
  VertexId a() const { return a_; }
  VertexId b() const { return b_; }
  VertexId u() const { return u_; }
  VertexId v() const { return v_; }
  VertexId last() const { return wp_; }

  bool singleton_ok(VertexId z) const {
    return present_[z] && on_path_[z] && !special_[z] && has_removed_[z] && S_[z] == deg_[z] + 1;
  }

  bool pair_ok(VertexId z, VertexId z1) const {
    return z1 != kNone && present_[z] && present_[z1] && on_path_[z] && on_path_[z1] && next_[z] == z1 &&
           !special_[z] && !special_[z1] && has_removed_[z] && has_removed_[z1] && deg_[z] == 2 &&
           deg_[z1] == 2;
  }

  // Definitional versions: remainder biconnected.
  bool singleton_ok_reference(VertexId z) const {
    if (!present_[z] || !on_path_[z] || special_[z] || !has_removed_[z] || deg_[z] < 2) return false;
    return biconnected_without({z, kNone});
  }

  bool pair_ok_reference(VertexId z, VertexId z1) const {
    if (z1 == kNone || !present_[z] || !present_[z1] || next_[z] != z1) return false;
    if (special_[z] || special_[z1] || !has_removed_[z] || !has_removed_[z1]) return false;
    if (deg_[z] != 2 || deg_[z1] != 2) return false;
    return biconnected_without({z, z1});
  }

  VertexId next(VertexId x) const { return next_[x]; }
  VertexId prev(VertexId x) const { return prev_[x]; }
  bool on_path(VertexId x) const { return on_path_[x]; }

  /// Removes singleton z and returns the vertices whose candidate state may
  /// have changed.
  void remove_single(VertexId z, std::vector<VertexId>& touched) {
    const VertexId cl = prev_[z];
    const VertexId cr = next_[z];
    if (cl == kNone || cr == kNone) {
      throw Error(ErrorKind::LabelingNotFound, "vertex '" + vname(q_, z) + "' is an end of the outer path");
    }
    const std::size_t first = g_.first_dart(z);
    const std::size_t deg = g_.degree(z);
    std::size_t start = deg;
    for (std::size_t i = 0; i < deg; ++i) {
      if (g_.dart_head(first + i) == cl) start = i;
    }
    std::vector<VertexId>& path = path_;
    path.assign(1, cl);
    std::size_t prev_dart = first + start;
    for (std::size_t step = 1; step <= deg; ++step) {
      const std::size_t d = first + (start + step) % deg;
      const VertexId y = g_.dart_head(d);
      if (!present_[y]) continue;
      // Face left of (z, y_prev) reads (z, y_prev, x, y).
      const std::size_t e1 = g_.face_next(prev_dart);
      const std::size_t e2 = g_.face_next(e1);
      if (g_.dart_head(e2) != y || !alive_[g_.dart_face(prev_dart)]) {
        throw Error(ErrorKind::LabelingNotFound, "faces around '" + vname(q_, z) + "' are not all present");
      }
      path.push_back(g_.dart_head(e1));
      path.push_back(y);
      prev_dart = d;
      if (y == cr) break;
    }
    if (path.back() != cr) {
      throw Error(ErrorKind::LabelingNotFound, "could not walk around '" + vname(q_, z) + "'");
    }
    const VertexId group[1] = {z};
    remove(group, touched);
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
      if (on_path_[path[i]]) {
        throw Error(ErrorKind::LabelingNotFound,
                    "removing '" + vname(q_, z) + "' would pinch the outer path at '" + vname(q_, path[i]) + "'");
      }
    }
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      next_[path[i]] = path[i + 1];
      prev_[path[i + 1]] = path[i];
    }
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
      enter_path(path[i], &touched);
      touched.push_back(path[i]);
    }
    touched.push_back(cl);
    touched.push_back(cr);
  }

  void remove_pair(VertexId z0, VertexId z1, std::vector<VertexId>& touched) {
    const VertexId cp = prev_[z0];
    const VertexId cq = next_[z1];
    const VertexId group[2] = {z0, z1};
    remove(group, touched);
    next_[cp] = cq;
    prev_[cq] = cp;
    touched.push_back(cp);
    touched.push_back(cq);
  }

 private:
  void enter_path(VertexId x, std::vector<VertexId>* touched = nullptr) {
    on_path_[x] = 1;
    const std::size_t first = g_.first_dart(x);
    for (std::size_t i = 0; i < g_.degree(x); ++i) {
      const FaceId f = g_.dart_face(first + i);
      if (!alive_[f]) continue;
      ++cnt_[f];
      for (VertexId y : faces_[f]) {
        ++S_[y];
        if (touched) touched->push_back(y);
      }
    }
  }

  void remove(std::span<const VertexId> group, std::vector<VertexId>& touched) {
    for (VertexId z : group) {
      const std::size_t first = g_.first_dart(z);
      for (std::size_t i = 0; i < g_.degree(z); ++i) {
        const FaceId f = g_.dart_face(first + i);
        if (!alive_[f]) continue;
        alive_[f] = 0;
        for (VertexId y : faces_[f]) {
          S_[y] -= cnt_[f];
          touched.push_back(y);
        }
      }
    }
    for (VertexId z : group) {
      present_[z] = 0;
      on_path_[z] = 0;
      --present_count_;
    }
    for (VertexId z : group) {
      for (VertexId y : g_.rotation(z)) {
        if (!present_[y]) continue;
        --deg_[y];
        has_removed_[y] = 1;
        touched.push_back(y);
      }
    }
  }

  bool biconnected_without(std::array<VertexId, 2> removed) const {
    const std::size_t n = g_.vertex_count();
    auto alive = [&](VertexId x) { return present_[x] && x != removed[0] && x != removed[1]; };
    VertexId root = kNone;
    std::size_t total = 0;
    for (VertexId x = 0; x < n; ++x) {
      if (alive(x)) {
        if (root == kNone) root = x;
        ++total;
      }
    }
    if (total < 3) return false;
    std::vector<std::uint32_t> disc(n, 0), low(n, 0);
    std::vector<std::size_t> it(n, 0);
    std::vector<VertexId> parent(n, kNone);
    std::vector<VertexId> stack{root};
    std::uint32_t timer = 1;
    disc[root] = low[root] = timer++;
    std::size_t visited = 1;
    std::size_t root_children = 0;
    while (!stack.empty()) {
      const VertexId x = stack.back();
      const auto rot = g_.rotation(x);
      if (it[x] < rot.size()) {
        const VertexId y = rot[it[x]++];
        if (!alive(y)) continue;
        if (disc[y] == 0) {
          disc[y] = low[y] = timer++;
          parent[y] = x;
          ++visited;
          if (x == root) ++root_children;
          stack.push_back(y);
        } else if (y != parent[x]) {
          low[x] = std::min(low[x], disc[y]);
        }
      } else {
        stack.pop_back();
        if (x != root) {
          const VertexId p = parent[x];
          low[p] = std::min(low[p], low[x]);
          if (p != root && low[x] >= disc[p]) return false;
        }
      }
    }
    return visited == total && root_children <= 1;
  }

  const QuadGraph& q_;
  const PlanarGraph& g_;
  VertexId u_ = 0, v_ = 0, w_ = 0, wp_ = 0, a_ = 0, b_ = 0;
  FaceId outer_ = 0;
  std::vector<std::array<VertexId, 4>> faces_;
  std::vector<char> alive_;
  std::vector<std::uint32_t> cnt_;
  std::vector<std::int64_t> S_;
  std::vector<std::uint32_t> deg_;
  std::vector<char> has_removed_;
  std::vector<char> on_path_;
  std::vector<char> present_;
  std::size_t present_count_ = 0;
  std::vector<VertexId> next_;
  std::vector<VertexId> prev_;
  std::vector<char> special_;
  std::vector<VertexId> path_;  // scratch for remove_single
};

// Candidate ordering: a singleton z sorts as (z, z), a pair as (min, max).
struct Candidate {
  VertexId k0;
  VertexId k1;
  VertexId z;
  VertexId z1;  // kNone for a singleton
  bool operator>(const Candidate& o) const { return std::tie(k0, k1) > std::tie(o.k0, o.k1); }
};

Candidate singleton(VertexId z) { return {z, z, z, kNone}; }
Candidate pair_of(VertexId z, VertexId z1) { return {std::min(z, z1), std::max(z, z1), z, z1}; }

CanonicalLabeling finish(const QuadGraph& q, const Peeler& p, std::vector<std::vector<VertexId>> removed) {
  removed.push_back({p.a(), p.b()});
  removed.push_back({p.u(), p.v()});
  std::reverse(removed.begin(), removed.end());
  return make_labeling(std::move(removed), q.size());
}

}  // namespace

CanonicalLabeling make_labeling(std::vector<std::vector<VertexId>> groups, std::size_t vertex_count) {
  CanonicalLabeling c;
  c.group_of.assign(vertex_count, 0);
  for (std::size_t k = 0; k < groups.size(); ++k) {
    for (VertexId x : groups[k]) {
      if (x >= vertex_count) throw Error(ErrorKind::BadGroupShape, "group holds an unknown vertex");
      if (c.group_of[x] != 0) throw Error(ErrorKind::BadGroupShape, "vertex appears in two groups");
      c.group_of[x] = static_cast<std::uint32_t>(k + 1);
    }
  }
  for (std::size_t x = 0; x < vertex_count; ++x) {
    if (c.group_of[x] == 0) throw Error(ErrorKind::BadGroupShape, "vertex missing from labeling");
  }
  c.groups = std::move(groups);
  return c;
}

CanonicalLabeling compute_labeling(const QuadGraph& q) {
  Peeler p(q);
  std::vector<std::vector<VertexId>> removed;
  std::vector<VertexId> touched;
  std::priority_queue<Candidate, std::vector<Candidate>, std::greater<>> heap;

  // Every change to a candidate's state touches one of its vertices, so
  // pushing only candidates that pass at that moment loses nothing; pops
  // still re-check because later changes can invalidate an entry.
  std::vector<std::uint32_t> stamp(q.size(), 0);
  std::uint32_t round = 0;
  auto push_around = [&](VertexId y) {
    if (stamp[y] == round || !p.on_path(y)) return;
    stamp[y] = round;
    if (p.singleton_ok(y)) heap.push(singleton(y));
    if (p.next(y) != kNone && p.pair_ok(y, p.next(y))) heap.push(pair_of(y, p.next(y)));
    if (p.prev(y) != kNone && p.pair_ok(p.prev(y), y)) heap.push(pair_of(p.prev(y), y));
  };

  removed.push_back({p.last()});
  p.remove_single(p.last(), touched);
  ++round;
  for (VertexId y : touched) push_around(y);

  while (p.present_count() > 4) {
    std::optional<Candidate> best;
    while (!heap.empty()) {
      const Candidate c = heap.top();
      heap.pop();
      const bool ok = c.z1 == kNone ? p.singleton_ok(c.z) : p.pair_ok(c.z, c.z1);
      if (ok) {
        best = c;
        break;
      }
    }
    if (!best) {
      throw Error(ErrorKind::LabelingNotFound,
                  "no removable vertex with " + std::to_string(p.present_count()) + " vertices left");
    }
    touched.clear();
    if (best->z1 == kNone) {
      removed.push_back({best->z});
      p.remove_single(best->z, touched);
    } else {
      removed.push_back({best->z, best->z1});
      p.remove_pair(best->z, best->z1, touched);
    }
    ++round;
    for (VertexId y : touched) push_around(y);
  }

  CanonicalLabeling c = finish(q, p, std::move(removed));
  const Report r = verify_labeling(q, c);
  if (!r.ok()) {
    for (const auto& check : r.checks) {
      if (!check.pass) {
        throw Error(ErrorKind::LabelingNotFound, "computed labeling fails " + check.name + ": " + check.witness);
      }
    }
  }
  return c;
}

CanonicalLabeling compute_labeling_reference(const QuadGraph& q) {
  Peeler p(q);
  std::vector<std::vector<VertexId>> removed;
  std::vector<VertexId> touched;
  removed.push_back({p.last()});
  p.remove_single(p.last(), touched);
  while (p.present_count() > 4) {
    std::optional<Candidate> best;
    auto consider = [&](const Candidate& c) {
      if (!best || *best > c) best = c;
    };
    for (VertexId x = p.u(); x != kNone; x = p.next(x)) {
      if (p.singleton_ok_reference(x)) consider(singleton(x));
      if (p.pair_ok_reference(x, p.next(x))) consider(pair_of(x, p.next(x)));
    }
    if (!best) {
      throw Error(ErrorKind::LabelingNotFound,
                  "no removable vertex with " + std::to_string(p.present_count()) + " vertices left");
    }
    touched.clear();
    if (best->z1 == kNone) {
      removed.push_back({best->z});
      p.remove_single(best->z, touched);
    } else {
      removed.push_back({best->z, best->z1});
      p.remove_pair(best->z, best->z1, touched);
    }
  }
  return finish(q, p, std::move(removed));
}

Report verify_labeling(const QuadGraph& q, const CanonicalLabeling& c) {
  Report rep;
  for (const char* name : {"coverage", "group_sizes", "first_group", "last_group", "first_quad",
                           "prefix_biconnected", "singleton", "pair", "closed_faces"}) {
    rep.check(name);
  }
  const PlanarGraph& g = q.working_graph();
  const std::size_t n = g.vertex_count();
  const std::size_t m = c.groups.size();

  std::vector<std::uint32_t> gi(n, 0);
  for (std::size_t k = 0; k < m; ++k) {
    for (VertexId x : c.groups[k]) {
      if (x >= n) {
        rep.fail("coverage", "unknown vertex id " + std::to_string(x));
        return rep;
      }
      if (gi[x] != 0) rep.fail("coverage", "'" + vname(q, x) + "' appears twice");
      gi[x] = static_cast<std::uint32_t>(k + 1);
    }
    if (c.groups[k].empty() || c.groups[k].size() > 2) {
      rep.fail("group_sizes", "group " + std::to_string(k + 1) + " has size " + std::to_string(c.groups[k].size()));
    }
  }
  for (VertexId x = 0; x < n; ++x) {
    if (gi[x] == 0) rep.fail("coverage", "'" + vname(q, x) + "' is not labeled");
  }
  if (!rep.ok() || m < 3) {
    if (m < 3) rep.fail("group_sizes", "fewer than three groups");
    return rep;
  }

  const PlacementRoles r = q.roles();
  const auto& g1 = c.groups[0];
  if (g1.size() != 2 || !((g1[0] == r.left && g1[1] == r.right) || (g1[0] == r.right && g1[1] == r.left))) {
    rep.fail("first_group", "group 1 must be {'" + vname(q, r.left) + "', '" + vname(q, r.right) + "'}");
  }
  if (c.groups[m - 1].size() != 1 || c.groups[m - 1][0] != r.last) {
    rep.fail("last_group", "group " + std::to_string(m) + " must be {'" + vname(q, r.last) + "'}");
  }
  if (!rep.ok()) return rep;

  const VertexId u = r.left;
  const VertexId v = r.right;
  std::vector<VertexId> next(n, kNone), prev(n, kNone);
  std::vector<char> placed(n, 0), on_path(n, 0), mark(n, 0);

  {
    const auto& g2 = c.groups[1];
    if (g2.size() != 2) {
      rep.fail("first_quad", "group 2 must have two vertices");
      return rep;
    }
    VertexId a = g2[0];
    VertexId b = g2[1];
    if (!g.adjacent(a, u)) std::swap(a, b);
    if (!g.adjacent(a, u) || !g.adjacent(b, v) || !g.adjacent(a, b) || !is_inner_quad(g, u, v, a, b)) {
      rep.fail("first_quad", "groups 1 and 2 do not span a face with the edge ('" + vname(q, u) + "', '" +
                                 vname(q, v) + "')");
      return rep;
    }
    const VertexId path[4] = {u, a, b, v};
    for (int i = 0; i < 4; ++i) {
      placed[path[i]] = on_path[path[i]] = 1;
      if (i < 3) {
        next[path[i]] = path[i + 1];
        prev[path[i + 1]] = path[i];
      }
    }
  }

  auto has_future = [&](VertexId z, std::uint32_t k) {
    for (VertexId y : g.rotation(z)) {
      if (gi[y] > k) return true;
    }
    return false;
  };

  for (std::uint32_t k = 3; k <= m; ++k) {
    const auto& grp = c.groups[k - 1];
    const std::string where = " at step " + std::to_string(k);
    if (grp.size() == 1) {
      const VertexId z = grp[0];
      std::vector<VertexId> nb;
      for (VertexId y : g.rotation(z)) {
        if (placed[y]) nb.push_back(y);
      }
      if (nb.size() < 2) {
        rep.fail("singleton", "'" + vname(q, z) + "' has " + std::to_string(nb.size()) + " earlier neighbors" + where);
        return rep;
      }
      if (k < m && !has_future(z, k)) {
        rep.fail("singleton", "'" + vname(q, z) + "' has no later neighbor" + where);
      }
      for (VertexId y : nb) {
        if (!on_path[y]) {
          rep.fail("prefix_biconnected", "'" + vname(q, z) + "' attaches to interior vertex '" + vname(q, y) + "'" + where);
          return rep;
        }
        mark[y] = 1;
      }
      VertexId cp = kNone;
      std::size_t starts = 0;
      for (VertexId y : nb) {
        const VertexId p1 = prev[y];
        const VertexId p2 = p1 == kNone ? kNone : prev[p1];
        if (p2 == kNone || !mark[p2]) {
          cp = y;
          ++starts;
        }
      }
      bool ok = starts == 1;
      std::vector<VertexId> covered;
      VertexId cur = cp;
      for (std::size_t seen = 1; ok && seen < nb.size(); ++seen) {
        const VertexId mid = next[cur];
        const VertexId nx = mid == kNone ? kNone : next[mid];
        if (nx == kNone || !mark[nx]) {
          ok = false;
          break;
        }
        if (!is_inner_quad(g, z, cur, mid, nx)) {
          rep.fail("closed_faces", "'" + vname(q, z) + "', '" + vname(q, cur) + "', '" + vname(q, mid) + "', '" +
                                       vname(q, nx) + "' is not a face" + where);
        }
        covered.push_back(mid);
        cur = nx;
      }
      for (VertexId y : nb) mark[y] = 0;
      if (!ok) {
        rep.fail("prefix_biconnected",
                 "neighbors of '" + vname(q, z) + "' are not every other vertex of one stretch of the outer path" + where);
        return rep;
      }
      for (VertexId y : covered) on_path[y] = 0;
      next[cp] = z;
      prev[z] = cp;
      next[z] = cur;
      prev[cur] = z;
      placed[z] = on_path[z] = 1;
    } else {
      VertexId z0 = grp[0];
      VertexId z1 = grp[1];
      if (!g.adjacent(z0, z1)) {
        rep.fail("pair", "'" + vname(q, z0) + "' and '" + vname(q, z1) + "' are not adjacent" + where);
        return rep;
      }
      auto only_neighbor = [&](VertexId z, VertexId other) {
        VertexId found = kNone;
        std::size_t count = 0;
        for (VertexId y : g.rotation(z)) {
          if (placed[y] && y != other) {
            found = y;
            ++count;
          }
        }
        return count == 1 ? found : kNone;
      };
      VertexId a = only_neighbor(z0, z1);
      VertexId b = only_neighbor(z1, z0);
      if (a == kNone || b == kNone) {
        rep.fail("pair", "'" + vname(q, z0) + "' and '" + vname(q, z1) +
                             "' need exactly one earlier neighbor each" + where);
        return rep;
      }
      if (k < m && (!has_future(z0, k) || !has_future(z1, k))) {
        rep.fail("pair", "'" + vname(q, z0) + "' or '" + vname(q, z1) + "' has no later neighbor" + where);
      }
      if (next[b] == a) {
        std::swap(a, b);
        std::swap(z0, z1);
      }
      if (!on_path[a] || !on_path[b] || next[a] != b) {
        rep.fail("prefix_biconnected", "pair '" + vname(q, z0) + "', '" + vname(q, z1) +
                                           "' does not attach to an edge of the outer path" + where);
        return rep;
      }
      if (!is_inner_quad(g, z0, z1, a, b)) {
        rep.fail("closed_faces", "'" + vname(q, a) + "', '" + vname(q, z0) + "', '" + vname(q, z1) + "', '" +
                                     vname(q, b) + "' is not a face" + where);
      }
      next[a] = z0;
      prev[z0] = a;
      next[z0] = z1;
      prev[z1] = z0;
      next[z1] = b;
      prev[b] = z1;
      placed[z0] = placed[z1] = on_path[z0] = on_path[z1] = 1;
    }
  }
  return rep;
}

std::string serialize_labeling(const QuadGraph& q, const CanonicalLabeling& c) {
  using nlohmann::json;
  json groups = json::array();
  for (const auto& grp : c.groups) {
    json g = json::array();
    for (VertexId x : grp) g.push_back(q.graph().name(x));
    groups.push_back(std::move(g));
  }
  return json{{"format", 1}, {"groups", std::move(groups)}}.dump();
}

CanonicalLabeling parse_labeling(const QuadGraph& q, std::string_view document) {
  using nlohmann::json;
  try {
    const json doc = json::parse(document);
    std::vector<std::vector<VertexId>> groups;
    for (const auto& grp : doc.at("groups")) {
      std::vector<VertexId> g;
      for (const auto& name : grp) {
        const auto id = q.graph().find(name.get<std::string>());
        if (!id) throw Error(ErrorKind::MalformedDocument, "unknown vertex '" + name.get<std::string>() + "'");
        g.push_back(*id);
      }
      groups.push_back(std::move(g));
    }
    return make_labeling(std::move(groups), q.size());
  } catch (const json::exception& e) {
    throw Error(ErrorKind::MalformedDocument, std::string("bad labeling document: ") + e.what());
  }
}

}  // namespace pdgrid
