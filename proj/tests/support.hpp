#pragma once

// Brute-force oracles shared by the unit tests. They work on plain adjacency
// sets and know nothing about rotations, faces or the library's algorithms.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "pdgrid/pdgrid.hpp"

namespace oracle {

using Adj = std::vector<std::set<std::uint32_t>>;

inline Adj adjacency(const pdgrid::PlanarGraph& g) {
  Adj a(g.vertex_count());
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    for (auto w : g.rotation(v)) a[v].insert(w);
  }
  return a;
}

// Connected on the vertices with keep[v] set (vacuously true when empty).
inline bool connected(const Adj& a, const std::vector<char>& keep) {
  const auto n = static_cast<std::uint32_t>(a.size());
  std::uint32_t start = n;
  std::size_t total = 0;
  for (std::uint32_t v = 0; v < n; ++v) {
    if (keep[v]) {
      ++total;
      if (start == n) start = v;
    }
  }
  if (total == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<std::uint32_t> stack{start};
  seen[start] = 1;
  std::size_t reached = 0;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    ++reached;
    for (auto w : a[v]) {
      if (keep[w] && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return reached == total;
}

// Every subset of fewer than k vertices can be removed without
// disconnecting the rest (checked for k = 2 and 3 only).
inline bool k_connected(const Adj& a, int k) {
  const auto n = static_cast<std::uint32_t>(a.size());
  if (n <= static_cast<std::uint32_t>(k)) return false;
  std::vector<char> keep(n, 1);
  if (!connected(a, keep)) return false;
  for (std::uint32_t x = 0; x < n; ++x) {
    keep[x] = 0;
    if (!connected(a, keep)) return false;
    if (k == 3) {
      for (std::uint32_t y = x + 1; y < n; ++y) {
        keep[y] = 0;
        const bool ok = connected(a, keep);
        keep[y] = 1;
        if (!ok) return false;
      }
    }
    keep[x] = 1;
  }
  return true;
}

// Induced subgraph on `in` has at least three vertices and no cut vertex.
inline bool biconnected_subset(const Adj& a, const std::vector<char>& in) {
  std::size_t size = std::count(in.begin(), in.end(), 1);
  if (size < 3) return false;
  std::vector<char> keep = in;
  if (!connected(a, keep)) return false;
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (!in[x]) continue;
    keep[x] = 0;
    if (!connected(a, keep)) return false;
    keep[x] = 1;
  }
  return true;
}

// Valid labelings straight from the definition. Group 1 is {left, right},
// group 2 the two remaining vertices of the face through left and right, the
// last group {last}; for each later group the prefix before it must be
// biconnected with every unplaced vertex in one component outside it, a
// singleton needs two placed neighbors, a pair is an edge whose ends have one
// placed neighbor each, and every group but the last needs a later neighbor.
inline std::vector<std::vector<std::vector<std::uint32_t>>> enumerate_labelings(const pdgrid::QuadGraph& q,
                                                                             std::size_t limit = 100000) {
  const auto& g = q.working_graph();
  const Adj a = adjacency(g);
  const auto n = static_cast<std::uint32_t>(a.size());
  const auto r = q.roles();
  std::vector<std::vector<std::vector<std::uint32_t>>> out;

  std::vector<std::uint32_t> second;
  for (auto x : a[r.left]) {
    if (x == r.right) continue;
    for (auto y : a[r.right]) {
      if (y != r.left && y != r.opposite && x != r.last && a[x].count(y)) second = {x, y};
    }
  }
  if (second.empty()) return out;

  std::vector<char> placed(n, 0);
  std::vector<std::vector<std::uint32_t>> groups{{r.left, r.right}, second};
  for (auto x : {r.left, r.right, second[0], second[1]}) placed[x] = 1;

  auto placed_neighbors = [&](std::uint32_t z) {
    int c = 0;
    for (auto y : a[z]) c += placed[y];
    return c;
  };
  auto has_later = [&](std::uint32_t z, std::uint32_t other) {
    for (auto y : a[z]) {
      if (!placed[y] && y != other) return true;
    }
    return false;
  };

  std::function<void(std::uint32_t)> rec = [&](std::uint32_t count) {
    if (out.size() >= limit) return;
    if (count == n) {
      if (groups.back() == std::vector<std::uint32_t>{r.last}) out.push_back(groups);
      return;
    }
    if (!biconnected_subset(a, placed)) return;
    std::vector<char> rest(n, 0);
    for (std::uint32_t x = 0; x < n; ++x) rest[x] = !placed[x];
    if (!connected(a, rest)) return;
    const bool final_step = count + 1 == n;
    for (std::uint32_t z = 0; z < n; ++z) {
      if (placed[z]) continue;
      if (z == r.last && !final_step) continue;
      if (placed_neighbors(z) >= 2 && (final_step || has_later(z, z))) {
        placed[z] = 1;
        groups.push_back({z});
        rec(count + 1);
        groups.pop_back();
        placed[z] = 0;
      }
      for (auto z1 : a[z]) {
        if (z1 <= z || placed[z1] || z1 == r.last) continue;
        if (placed_neighbors(z) != 1 || placed_neighbors(z1) != 1) continue;
        if (count + 2 < n && (!has_later(z, z1) || !has_later(z1, z))) continue;
        placed[z] = placed[z1] = 1;
        groups.push_back({z, z1});
        rec(count + 2);
        groups.pop_back();
        placed[z] = placed[z1] = 0;
      }
    }
  };
  rec(4);
  return out;
}

inline std::vector<std::vector<std::uint32_t>> normalized(std::vector<std::vector<std::uint32_t>> groups) {
  for (auto& grp : groups) std::sort(grp.begin(), grp.end());
  return groups;
}

}  // namespace oracle

namespace fixtures {

inline pdgrid::PlanarGraph random(std::uint64_t seed, std::size_t n, bool sparse) {
  pdgrid::GenSpec spec;
  spec.kind = sparse ? pdgrid::GenKind::sparsified : pdgrid::GenKind::triangulation;
  spec.n = n;
  spec.seed = seed;
  return pdgrid::random_graph(spec);
}

inline std::vector<pdgrid::PlanarGraph> solids() {
  std::vector<pdgrid::PlanarGraph> out;
  for (auto name : {"tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron"}) {
    out.push_back(pdgrid::platonic(name));
  }
  return out;
}

// Solids plus `count` random graphs of 4..max_n vertices, alternating kinds.
inline std::vector<pdgrid::PlanarGraph> corpus(std::size_t count, std::size_t max_n, std::uint64_t salt = 0) {
  auto out = solids();
  for (std::uint64_t i = 0; i < count; ++i) {
    out.push_back(random(1000 + salt + i, 4 + (i * 7919) % (max_n - 3), i % 2 == 1));
  }
  return out;
}

}  // namespace fixtures
