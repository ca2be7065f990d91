#include "pdgrid/planar_graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <numeric>

#include <json.hpp>

#include "pdgrid/error.hpp"

namespace pdgrid {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedDocument: return "MalformedDocument";
    case ErrorKind::AsymmetricRotation: return "AsymmetricRotation";
    case ErrorKind::EulerViolation: return "EulerViolation";
    case ErrorKind::UnknownOuterFace: return "UnknownOuterFace";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::NotThreeConnected: return "NotThreeConnected";
    case ErrorKind::LabelingNotFound: return "LabelingNotFound";
    case ErrorKind::BadGroupShape: return "BadGroupShape";
    case ErrorKind::NonIntegerPosition: return "NonIntegerPosition";
    case ErrorKind::RepairDivergence: return "RepairDivergence";
    case ErrorKind::OuterShapeViolation: return "OuterShapeViolation";
    case ErrorKind::UnknownSolid: return "UnknownSolid";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

constexpr VertexId kNoVertex = static_cast<VertexId>(-1);

bool same_cycle(std::span<const VertexId> a, std::span<const VertexId> b) {
  if (a.size() != b.size() || a.empty()) return false;
  const std::size_t n = a.size();
  for (std::size_t shift = 0; shift < n; ++shift) {
    bool forward = true;
    bool backward = true;
    for (std::size_t i = 0; i < n && (forward || backward); ++i) {
      if (a[i] != b[(shift + i) % n]) forward = false;
      if (a[i] != b[(shift + n - i) % n]) backward = false;
    }
    if (forward || backward) return true;
  }
  return false;
}

}  // namespace

PlanarGraph PlanarGraph::from_rotation(std::vector<std::string> names,
                                       std::vector<std::vector<VertexId>> rotation,
                                       std::span<const VertexId> outer_face) {
  const std::size_t n = names.size();
  if (n == 0) throw Error(ErrorKind::MalformedDocument, "graph has no vertices");
  if (rotation.size() != n) {
    throw Error(ErrorKind::MalformedDocument, "rotation count does not match vertex count");
  }

  PlanarGraph g;
  g.names_ = std::move(names);
  g.index_.assign(std::bit_ceil(2 * n), kNoVertex);
  for (VertexId v = 0; v < n; ++v) {
    VertexId& slot = g.index_[g.slot_of(g.names_[v])];
    if (slot != kNoVertex) {
      throw Error(ErrorKind::MalformedDocument, "duplicate vertex identifier '" + g.names_[v] + "'");
    }
    slot = v;
  }

  g.offsets_.assign(n + 1, 0);
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId w : rotation[v]) {
      if (w >= n) throw Error(ErrorKind::MalformedDocument, "neighbor index out of range");
      if (w == v) throw Error(ErrorKind::MalformedDocument, "self loop at '" + g.names_[v] + "'");
    }
    if (rotation[v].size() >= std::numeric_limits<std::uint32_t>::max() - g.offsets_[v]) {
      throw Error(ErrorKind::MalformedDocument, "graph has too many edges");
    }
    g.offsets_[v + 1] = g.offsets_[v] + static_cast<std::uint32_t>(rotation[v].size());
  }
  g.adjacency_.reserve(g.offsets_[n]);
  for (const auto& r : rotation) g.adjacency_.insert(g.adjacency_.end(), r.begin(), r.end());
  g.build_darts();
  // Connectivity; disconnected inputs are outside the supported domain.
  {
    std::vector<char> seen(n, 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const VertexId a = stack.back();
      stack.pop_back();
      for (VertexId b : g.rotation(a)) {
        if (!seen[b]) {
          seen[b] = 1;
          ++reached;
          stack.push_back(b);
        }
      }
    }
    if (reached != n) throw Error(ErrorKind::MalformedDocument, "graph is disconnected");
  }

  g.trace();

  const long long euler = static_cast<long long>(n) - static_cast<long long>(g.edge_count()) +
                          static_cast<long long>(g.faces_.size());
  if (euler != 2) {
    throw Error(ErrorKind::EulerViolation,
                "V - E + F = " + std::to_string(euler) + " (rotation system is not planar)");
  }

  bool found = false;
  for (const Face& f : g.faces_) {
    if (same_cycle(f.boundary, outer_face)) {
      g.outer_face_ = f.id;
      found = true;
      break;
    }
  }
  if (!found) throw Error(ErrorKind::UnknownOuterFace, "outer_face is not a face of the embedding");
  return g;
}

// Sorts each vertex's darts by head, then finds twins by binary search.
// Rejects repeated neighbors and one-sided adjacencies.
void PlanarGraph::build_darts() {
  const std::size_t n = names_.size();
  const std::size_t m = adjacency_.size();
  tails_.resize(m);
  by_head_.resize(m);
  for (VertexId v = 0; v < n; ++v) {
    for (std::size_t d = offsets_[v]; d < offsets_[v + 1]; ++d) {
      tails_[d] = v;
      by_head_[d] = static_cast<std::uint32_t>(d);
    }
    const auto first = by_head_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
    const auto last = by_head_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
    std::sort(first, last, [&](std::size_t x, std::size_t y) { return adjacency_[x] < adjacency_[y]; });
    const auto dup =
        std::adjacent_find(first, last, [&](std::size_t x, std::size_t y) { return adjacency_[x] == adjacency_[y]; });
    if (dup != last) {
      throw Error(ErrorKind::MalformedDocument, "vertex '" + names_[v] + "' lists a neighbor twice (multigraph)");
    }
  }
  twin_.resize(m);
  pos_in_head_.resize(m);
  for (std::size_t d = 0; d < m; ++d) {
    const auto t = find_dart(adjacency_[d], tails_[d]);
    if (!t) {
      throw Error(ErrorKind::AsymmetricRotation,
                  "'" + names_[tails_[d]] + "' lists '" + names_[adjacency_[d]] + "' but not vice versa");
    }
    twin_[d] = static_cast<std::uint32_t>(*t);
    pos_in_head_[d] = static_cast<std::uint32_t>(*t - offsets_[adjacency_[d]]);
  }
}

std::optional<std::size_t> PlanarGraph::find_dart(VertexId a, VertexId b) const {
  const auto first = by_head_.begin() + static_cast<std::ptrdiff_t>(offsets_[a]);
  const auto last = by_head_.begin() + static_cast<std::ptrdiff_t>(offsets_[a + 1]);
  const auto it = std::lower_bound(first, last, b, [&](std::size_t d, VertexId h) { return adjacency_[d] < h; });
  if (it == last || adjacency_[*it] != b) return std::nullopt;
  return *it;
}

std::size_t PlanarGraph::face_next(std::size_t d) const {
  const VertexId b = adjacency_[d];
  const std::size_t deg = offsets_[b + 1] - offsets_[b];
  return offsets_[b] + (pos_in_head_[d] + deg - 1) % deg;
}

void PlanarGraph::trace() {
  const std::size_t n = names_.size();
  constexpr FaceId kNone = static_cast<FaceId>(-1);
  dart_face_.assign(adjacency_.size(), kNone);
  faces_.clear();
  if (adjacency_.size() / 2 + 2 > n) faces_.reserve(adjacency_.size() / 2 + 2 - n);
  for (VertexId v = 0; v < n; ++v) {
    for (std::size_t i = offsets_[v]; i < offsets_[v + 1]; ++i) {
      const std::size_t start = by_head_[i];
      if (dart_face_[start] != kNone) continue;
      Face f;
      f.id = static_cast<FaceId>(faces_.size());
      std::size_t len = 0;
      std::size_t d = start;
      do {
        ++len;
        d = face_next(d);
      } while (d != start);
      f.boundary.reserve(len);
      do {
        dart_face_[d] = f.id;
        f.boundary.push_back(tails_[d]);
        d = face_next(d);
      } while (d != start);
      faces_.push_back(std::move(f));
    }
  }
}

bool PlanarGraph::adjacent(VertexId a, VertexId b) const { return find_dart(a, b).has_value(); }

// Slot holding name, or the empty slot where it would go; linear probing.
std::size_t PlanarGraph::slot_of(std::string_view name) const {
  const std::size_t mask = index_.size() - 1;
  std::size_t i = std::hash<std::string_view>{}(name) & mask;
  while (index_[i] != kNoVertex && names_[index_[i]] != name) i = (i + 1) & mask;
  return i;
}

std::optional<VertexId> PlanarGraph::find(std::string_view name) const {
  if (index_.empty()) return std::nullopt;
  const VertexId v = index_[slot_of(name)];
  if (v == kNoVertex) return std::nullopt;
  return v;
}

std::size_t PlanarGraph::dart(VertexId a, VertexId b) const {
  if (const auto d = find_dart(a, b)) return *d;
  throw Error(ErrorKind::InvalidArgument, "no edge between '" + names_[a] + "' and '" + names_[b] + "'");
}

FaceId PlanarGraph::face_left_of(VertexId a, VertexId b) const { return dart_face_[dart(a, b)]; }

PlanarGraph PlanarGraph::mirrored() const {
  std::vector<std::vector<VertexId>> rot(vertex_count());
  for (VertexId v = 0; v < vertex_count(); ++v) {
    const auto r = rotation(v);
    rot[v].assign(r.rbegin(), r.rend());
  }
  return from_rotation(names_, std::move(rot), faces_[outer_face_].boundary);
}

PlanarGraph PlanarGraph::with_outer_face(FaceId f) const& { return PlanarGraph(*this).with_outer_face(f); }

PlanarGraph PlanarGraph::with_outer_face(FaceId f) && {
  if (f >= faces_.size()) throw Error(ErrorKind::InvalidArgument, "face id out of range");
  outer_face_ = f;
  return std::move(*this);
}

std::vector<Face> trace_faces(const PlanarGraph& g) { return g.faces(); }

namespace {

// Articulation points of g restricted to vertices with alive[v]; returns true
// when the alive subgraph is connected and has no cut vertex.
bool biconnected_without(const PlanarGraph& g, VertexId removed) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint32_t> disc(n, 0), low(n, 0);
  std::vector<std::size_t> iter(n, 0);
  std::vector<VertexId> parent(n, 0);
  const VertexId root = removed == 0 ? 1 : 0;
  std::uint32_t timer = 1;
  std::vector<VertexId> stack{root};
  disc[root] = low[root] = timer++;
  parent[root] = root;
  std::size_t root_children = 0;
  std::size_t visited = 1;
  while (!stack.empty()) {
    const VertexId a = stack.back();
    const auto r = g.rotation(a);
    if (iter[a] < r.size()) {
      const VertexId b = r[iter[a]++];
      if (b == removed) continue;
      if (disc[b] == 0) {
        disc[b] = low[b] = timer++;
        parent[b] = a;
        ++visited;
        if (a == root) ++root_children;
        stack.push_back(b);
      } else if (b != parent[a]) {
        low[a] = std::min(low[a], disc[b]);
      }
    } else {
      stack.pop_back();
      if (a != root) {
        const VertexId p = parent[a];
        low[p] = std::min(low[p], low[a]);
        if (p != root && low[a] >= disc[p]) return false;
      }
    }
  }
  if (visited != n - 1) return false;
  return root_children <= 1;
}

}  // namespace

bool check_three_connected(const PlanarGraph& g) {
  if (g.vertex_count() < 4) {
    throw Error(ErrorKind::TooSmall, "3-connectivity needs at least 4 vertices");
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!biconnected_without(g, v)) return false;
  }
  return true;
}

using nlohmann::json;

PlanarGraph parse_graph(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::MalformedDocument, std::string("invalid JSON: ") + e.what());
  }
  try {
    if (!doc.is_object()) throw Error(ErrorKind::MalformedDocument, "graph document must be an object");
    if (doc.contains("format") && doc.at("format").get<int>() != 1) {
      throw Error(ErrorKind::MalformedDocument, "unsupported format version");
    }
    std::vector<std::string> names = doc.at("vertices").get<std::vector<std::string>>();
    std::unordered_map<std::string, VertexId> index;
    for (VertexId v = 0; v < names.size(); ++v) index.emplace(names[v], v);
    auto lookup = [&](const std::string& s) {
      auto it = index.find(s);
      if (it == index.end()) throw Error(ErrorKind::MalformedDocument, "unknown vertex '" + s + "'");
      return it->second;
    };
    const json& rot = doc.at("rotation");
    if (!rot.is_object()) throw Error(ErrorKind::MalformedDocument, "rotation must be an object");
    std::vector<std::vector<VertexId>> rotation(names.size());
    for (VertexId v = 0; v < names.size(); ++v) {
      if (!rot.contains(names[v])) {
        throw Error(ErrorKind::MalformedDocument, "no rotation for vertex '" + names[v] + "'");
      }
      for (const auto& w : rot.at(names[v]).get<std::vector<std::string>>()) {
        rotation[v].push_back(lookup(w));
      }
    }
    for (const auto& [key, _] : rot.items()) lookup(key);
    std::vector<VertexId> outer;
    for (const auto& w : doc.at("outer_face").get<std::vector<std::string>>()) outer.push_back(lookup(w));
    return PlanarGraph::from_rotation(std::move(names), std::move(rotation), outer);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::MalformedDocument, std::string("bad graph document: ") + e.what());
  }
}

std::string serialize_graph(const PlanarGraph& g) {
  json rot = json::object();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    json list = json::array();
    for (VertexId w : g.rotation(v)) list.push_back(g.name(w));
    rot[g.name(v)] = std::move(list);
  }
  json outer = json::array();
  for (VertexId v : g.faces()[g.outer_face()].boundary) outer.push_back(g.name(v));
  json doc = {{"format", 1}, {"vertices", g.names()}, {"rotation", std::move(rot)},
              {"outer_face", std::move(outer)}};
  return doc.dump(1);
}

}  // namespace pdgrid
