#include "pdgrid/generate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "pdgrid/error.hpp"

namespace pdgrid {

namespace {

struct Polar {
  double r;
  double deg;
};

PlanarGraph from_layout(const std::vector<Polar>& pos, const std::vector<std::pair<int, int>>& edges,
                        const std::vector<VertexId>& outer) {
  const std::size_t n = pos.size();
  std::vector<std::vector<VertexId>> rot(n);
  for (auto [a, b] : edges) {
    rot[a].push_back(static_cast<VertexId>(b));
    rot[b].push_back(static_cast<VertexId>(a));
  }
  auto xy = [&](std::size_t v) {
    const double t = pos[v].deg * std::numbers::pi / 180.0;
    return std::pair{pos[v].r * std::cos(t), pos[v].r * std::sin(t)};
  };
  for (std::size_t v = 0; v < n; ++v) {
    const auto [x0, y0] = xy(v);
    std::sort(rot[v].begin(), rot[v].end(), [&](VertexId a, VertexId b) {
      const auto [xa, ya] = xy(a);
      const auto [xb, yb] = xy(b);
      return std::atan2(ya - y0, xa - x0) < std::atan2(yb - y0, xb - x0);
    });
  }
  std::vector<std::string> names;
  for (std::size_t v = 0; v < n; ++v) names.push_back(std::to_string(v + 1));
  return PlanarGraph::from_rotation(std::move(names), std::move(rot), outer);
}

PlanarGraph tetrahedron() {
  return from_layout({{10, 90}, {10, 210}, {10, 330}, {0, 0}}, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}},
                     {0, 1, 2});
}

PlanarGraph cube() {
  std::vector<Polar> pos;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 4; ++i) pos.push_back({10, 45.0 + 90 * i});
  for (int i = 0; i < 4; ++i) pos.push_back({4, 45.0 + 90 * i});
  for (int i = 0; i < 4; ++i) {
    edges.push_back({i, (i + 1) % 4});
    edges.push_back({4 + i, 4 + (i + 1) % 4});
    edges.push_back({i, 4 + i});
  }
  return from_layout(pos, edges, {0, 1, 2, 3});
}

PlanarGraph octahedron() {
  std::vector<Polar> pos{{10, 90}, {10, 210}, {10, 330}, {3, 30}, {3, 150}, {3, 270}};
  std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3},
                                         {3, 0}, {3, 2}, {4, 0}, {4, 1}, {5, 1}, {5, 2}};
  return from_layout(pos, edges, {0, 1, 2});
}

PlanarGraph dodecahedron() {
  // Outer pentagon a, middle decagon m, inner pentagon d.
  std::vector<Polar> pos;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) pos.push_back({10, 90.0 + 72 * i});
  for (int j = 0; j < 10; ++j) pos.push_back({6, 90.0 + 36 * j});
  for (int i = 0; i < 5; ++i) pos.push_back({3, 90.0 + 72 * i + 36});
  for (int i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({i, 5 + 2 * i});
    edges.push_back({15 + i, 15 + (i + 1) % 5});
    edges.push_back({15 + i, 5 + 2 * i + 1});
  }
  for (int j = 0; j < 10; ++j) edges.push_back({5 + j, 5 + (j + 1) % 10});
  return from_layout(pos, edges, {0, 1, 2, 3, 4});
}

PlanarGraph icosahedron() {
  // Outer triangle A, hexagon H, inner triangle B.
  std::vector<Polar> pos{{12, 90}, {12, 210}, {12, 330}};
  for (int j = 0; j < 6; ++j) pos.push_back({5, 90.0 + 60 * j});
  for (double t : {30.0, 150.0, 270.0}) pos.push_back({2, t});
  auto h = [](int deg) { return 3 + ((deg - 90 + 360) % 360) / 60; };
  std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {2, 0}, {9, 10}, {10, 11}, {11, 9}};
  for (int j = 0; j < 6; ++j) edges.push_back({3 + j, 3 + (j + 1) % 6});
  const int a_deg[3] = {90, 210, 330};
  for (int i = 0; i < 3; ++i) {
    for (int off : {-60, 0, 60}) edges.push_back({i, h(a_deg[i] + off)});
  }
  const int b_deg[3] = {30, 150, 270};
  for (int i = 0; i < 3; ++i) {
    for (int off : {-60, 0, 60}) edges.push_back({9 + i, h(b_deg[i] + off)});
  }
  return from_layout(pos, edges, {0, 1, 2});
}

// Bounded draws by rejection so results do not depend on the standard
// library's distribution implementations.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % bound;
}

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::vector<VertexId> first_traced_face(const std::vector<std::vector<VertexId>>& rot) {
  VertexId a = 0;
  VertexId b = *std::min_element(rot[0].begin(), rot[0].end());
  std::vector<VertexId> face;
  const VertexId a0 = a, b0 = b;
  do {
    face.push_back(a);
    const auto& rb = rot[b];
    const std::size_t i = std::find(rb.begin(), rb.end(), a) - rb.begin();
    const VertexId c = rb[(i + rb.size() - 1) % rb.size()];
    a = b;
    b = c;
  } while (a != a0 || b != b0);
  return face;
}

std::vector<std::vector<VertexId>> triangulate(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::vector<VertexId>> rot{{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {0, 1, 2}};
  // Faces of K4 in trace order.
  std::vector<std::array<VertexId, 3>> faces{{0, 1, 3}, {0, 2, 1}, {0, 3, 2}, {1, 2, 3}};
  for (VertexId x = 4; x < n; ++x) {
    const std::size_t fi = below(rng, faces.size());
    const auto [a, b, c] = faces[fi];
    for (auto [p, q] : {std::pair{a, b}, std::pair{b, c}, std::pair{c, a}}) {
      auto& rq = rot[q];
      rq.insert(std::find(rq.begin(), rq.end(), p), x);
    }
    rot.push_back({a, b, c});
    faces[fi] = {a, b, x};
    faces.push_back({b, c, x});
    faces.push_back({c, a, x});
  }
  return rot;
}

}  // namespace

PlanarGraph platonic(std::string_view name) {
  if (name == "tetrahedron") return tetrahedron();
  if (name == "cube") return cube();
  if (name == "octahedron") return octahedron();
  if (name == "dodecahedron") return dodecahedron();
  if (name == "icosahedron") return icosahedron();
  throw Error(ErrorKind::UnknownSolid, "unknown solid '" + std::string(name) + "'");
}

PlanarGraph random_graph(const GenSpec& spec) {
  if (spec.n < 4) throw Error(ErrorKind::TooSmall, "generated graphs need at least 4 vertices");
  if (!(spec.deletion_rate >= 0.0 && spec.deletion_rate < 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "deletion rate must lie in [0, 1)");
  }
  std::mt19937_64 rng(spec.seed);
  auto rot = triangulate(spec.n, rng);
  std::vector<std::string> names;
  for (std::size_t v = 0; v < spec.n; ++v) names.push_back(std::to_string(v));

  if (spec.kind == GenKind::sparsified) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId a = 0; a < rot.size(); ++a) {
      for (VertexId b : rot[a]) {
        if (a < b) edges.emplace_back(a, b);
      }
    }
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = edges.size(); i > 1; --i) std::swap(edges[i - 1], edges[below(rng, i)]);
    for (auto [a, b] : edges) {
      if (unit(rng) >= spec.deletion_rate) continue;
      if (rot[a].size() <= 3 || rot[b].size() <= 3) continue;
      auto trial = rot;
      trial[a].erase(std::find(trial[a].begin(), trial[a].end(), b));
      trial[b].erase(std::find(trial[b].begin(), trial[b].end(), a));
      const PlanarGraph g = PlanarGraph::from_rotation(names, trial, first_traced_face(trial));
      if (check_three_connected(g)) rot = std::move(trial);
    }
  }
  const auto outer = first_traced_face(rot);
  return PlanarGraph::from_rotation(std::move(names), std::move(rot), outer);
}

}  // namespace pdgrid
