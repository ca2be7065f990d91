#include <doctest.h>

#include "support.hpp"

using namespace pdgrid;

namespace {

QuadGraph prepared(const PlanarGraph& g, BendOn b = BendOn::primal) { return select_outer_quad(build_quad(g), b); }

bool prefixes_biconnected(const QuadGraph& q, const CanonicalLabeling& c) {
  const auto a = oracle::adjacency(q.working_graph());
  std::vector<char> in(q.size(), 0);
  for (std::size_t k = 1; k < c.size(); ++k) {
    for (VertexId x : c.group(k)) in[x] = 1;
    if (k >= 2 && !oracle::biconnected_subset(a, in)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("cube from K4: computed labeling is one of the enumerated ones") {
  for (BendOn b : {BendOn::primal, BendOn::dual}) {
    const QuadGraph q = prepared(platonic("tetrahedron"), b);
    const auto all = oracle::enumerate_labelings(q);
    REQUIRE_FALSE(all.empty());
    std::set<std::vector<std::vector<VertexId>>> valid;
    for (const auto& groups : all) {
      const auto c = make_labeling(groups, q.size());
      CHECK(verify_labeling(q, c).ok());
      valid.insert(oracle::normalized(groups));
    }
    const CanonicalLabeling c = compute_labeling(q);
    CHECK(c.size() == 5);
    CHECK(c.group(2).size() == 2);
    CHECK(valid.count(oracle::normalized(c.groups)) == 1);
    const auto r = q.roles();
    CHECK(oracle::normalized({c.group(1)})[0] == oracle::normalized({{r.left, r.right}})[0]);
    CHECK(c.group(c.size()) == std::vector<VertexId>{r.last});
  }
}

TEST_CASE("enumerated labelings of small radials all pass the verifier") {
  for (const char* name : {"cube", "octahedron"}) {
    const QuadGraph q = prepared(platonic(name));
    const auto all = oracle::enumerate_labelings(q, 300);
    REQUIRE_FALSE(all.empty());
    std::set<std::vector<std::vector<VertexId>>> valid;
    for (const auto& groups : all) {
      CHECK(verify_labeling(q, make_labeling(groups, q.size())).ok());
      valid.insert(oracle::normalized(groups));
    }
    if (all.size() < 300) CHECK(valid.count(oracle::normalized(compute_labeling(q).groups)) == 1);
  }
}

TEST_CASE("cube radial: every prefix biconnected") {
  const QuadGraph q = prepared(platonic("cube"));
  CHECK(q.size() == 14);
  CHECK(prefixes_biconnected(q, compute_labeling(q)));
}

TEST_CASE("labeling properties on the corpus") {
  for (const PlanarGraph& g : fixtures::corpus(60, 40)) {
    for (BendOn b : {BendOn::primal, BendOn::dual}) {
      const QuadGraph q = prepared(g, b);
      const CanonicalLabeling c = compute_labeling(q);
      const CanonicalLabeling ref = compute_labeling_reference(q);
      CHECK(c.groups == ref.groups);
      CHECK(verify_labeling(q, c).ok());
      CHECK(prefixes_biconnected(q, c));
      std::size_t singles = 0, pairs = 0;
      for (std::size_t k = 3; k <= c.size(); ++k) (c.group(k).size() == 1 ? singles : pairs)++;
      CHECK(4 + singles + 2 * pairs == q.size());
      CHECK(c.group(2).size() == 2);
      CHECK(compute_labeling(q).groups == c.groups);
    }
  }
}

TEST_CASE("constructed violations") {
  const QuadGraph q = prepared(platonic("cube"));
  const CanonicalLabeling c = compute_labeling(q);

  SUBCASE("groups 1 and 2 swapped") {
    auto groups = c.groups;
    std::swap(groups[0], groups[1]);
    const Report r = verify_labeling(q, make_labeling(groups, q.size()));
    CHECK_FALSE(r.ok());
    CHECK_FALSE(r.find("first_group")->pass);
  }
  SUBCASE("pair of non-adjacent vertices") {
    // Merge two singleton groups whose vertices are not adjacent.
    auto groups = c.groups;
    bool merged = false;
    for (std::size_t i = 2; i + 1 < groups.size() && !merged; ++i) {
      for (std::size_t j = i + 1; j + 1 < groups.size() && !merged; ++j) {
        if (groups[i].size() == 1 && groups[j].size() == 1 &&
            !q.working_graph().adjacent(groups[i][0], groups[j][0])) {
          groups[i].push_back(groups[j][0]);
          groups.erase(groups.begin() + static_cast<std::ptrdiff_t>(j));
          merged = true;
        }
      }
    }
    REQUIRE(merged);
    const Report r = verify_labeling(q, make_labeling(groups, q.size()));
    CHECK_FALSE(r.ok());
    CHECK_FALSE(r.find("pair")->pass);
  }
  SUBCASE("last group moved forward") {
    auto groups = c.groups;
    std::rotate(groups.begin() + 2, groups.end() - 1, groups.end());
    CHECK_FALSE(verify_labeling(q, make_labeling(groups, q.size())).ok());
  }
  SUBCASE("vertex missing") {
    auto groups = c.groups;
    groups.pop_back();
    CHECK_THROWS_AS(make_labeling(groups, q.size()), Error);
  }
}

TEST_CASE("labeling JSON round trip") {
  const QuadGraph q = prepared(platonic("dodecahedron"));
  const CanonicalLabeling c = compute_labeling(q);
  const std::string doc = serialize_labeling(q, c);
  CHECK(doc.find("\"groups\"") != std::string::npos);
  CHECK(parse_labeling(q, doc).groups == c.groups);
}
