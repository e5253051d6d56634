#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "cubehull/convexity.hpp"
#include "cubehull/corpus.hpp"
#include "cubehull/pcube.hpp"

using namespace cubehull;

namespace {

int hamming(const VertexSet& a, const VertexSet& b) { return (a ^ b).count(); }

}  // namespace

TEST_CASE("theta classes of C4") {
  auto g = cycle(4);
  auto d = all_pairs_distances(g);
  auto cp = theta_classes(g, d);
  REQUIRE(cp.cuts.size() == 2);
  // edges sorted: (0,1),(0,3),(1,2),(2,3); opposite edges share a class
  CHECK(cp.class_of[0] == cp.class_of[3]);
  CHECK(cp.class_of[1] == cp.class_of[2]);
  CHECK(cp.class_of[0] != cp.class_of[1]);
}

TEST_CASE("theta classes of Q3 are the coordinate cuts") {
  auto g = hypercube(3);
  auto d = all_pairs_distances(g);
  auto cp = theta_classes(g, d);
  REQUIRE(cp.cuts.size() == 3);
  for (auto& c : cp.cuts) {
    CHECK(c.edge_ids.size() == 4);
    CHECK(c.minus.count() == 4);
    CHECK(c.plus.count() == 4);
    CHECK(c.minus.test(0));  // side containing vertex 0 is labeled minus
    for (int e : c.edge_ids) {
      auto [u, v] = g.edges[e];
      CHECK(c.minus.test(u) != c.minus.test(v));
    }
  }
}

TEST_CASE("tree edges are singleton cuts") {
  for (const Graph& g : {star(4), path_graph(6)}) {
    auto d = all_pairs_distances(g);
    auto cp = theta_classes(g, d);
    CHECK(int(cp.cuts.size()) == g.m());
    for (auto& c : cp.cuts) CHECK(c.edge_ids.size() == 1);
  }
}

TEST_CASE("theta_classes reports structural failures") {
  auto d5 = all_pairs_distances(cycle(5));
  CHECK_THROWS_AS(static_cast<void>(theta_classes(cycle(5), d5)), Error);
  auto k23 = complete_bipartite(2, 3);
  auto dk = all_pairs_distances(k23);
  // all six edges collapse into one theta class whose removal shatters K_{2,3}
  try {
    static_cast<void>(theta_classes(k23, dk));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::property);
  }
}

TEST_CASE("recognize accepts Q3 with a valid isometric embedding") {
  auto g = hypercube(3);
  auto rec = recognize(g);
  REQUIRE(rec.accepted());
  CHECK(rec.embedding->dims == 3);
  auto d = all_pairs_distances(g);
  for (int u = 0; u < g.n; ++u)
    for (int w = 0; w < g.n; ++w)
      CHECK(hamming(rec.embedding->coords[u], rec.embedding->coords[w]) == d[u][w]);
}

TEST_CASE("recognize accepts C6 with 3 coordinates") {
  auto rec = recognize(cycle(6));
  REQUIRE(rec.accepted());
  CHECK(rec.embedding->dims == 3);
}

TEST_CASE("recognize rejects with structured witnesses") {
  auto rc5 = recognize(cycle(5));
  REQUIRE_FALSE(rc5.accepted());
  REQUIRE(rc5.rejection.has_value());
  CHECK(rc5.rejection->reason == Rejection::Reason::not_bipartite);
  CHECK(!rc5.rejection->odd_walk.empty());

  auto rk23 = recognize(complete_bipartite(2, 3));
  REQUIRE_FALSE(rk23.accepted());
  REQUIRE(rk23.rejection.has_value());
  CHECK(rk23.rejection->reason == Rejection::Reason::bad_cut_class);
  CHECK(!rk23.rejection->class_edges.empty());
  CHECK(!rk23.rejection->describe().empty());
}

TEST_CASE("embedding coordinate count equals cut count") {
  for (const Graph& g : {hypercube(4), cycle(8), grid(3, 3), star(5)}) {
    auto rec = recognize(g);
    REQUIRE(rec.accepted());
    CHECK(rec.embedding->dims == int(rec.cuts.cuts.size()));
  }
}

TEST_CASE("cut sides are convex") {
  for (const Graph& g : {hypercube(3), cycle(8), grid(2, 4)}) {
    auto d = all_pairs_distances(g);
    auto rec = recognize(g, d);
    REQUIRE(rec.accepted());
    for (auto& c : rec.cuts.cuts) {
      CHECK(is_convex(g, d, c.minus));
      CHECK(is_convex(g, d, c.plus));
    }
  }
}

TEST_CASE("verify_cut_conditions passes on partial cubes") {
  for (const Graph& g : {hypercube(3), cycle(6), grid(3, 3)}) {
    auto d = all_pairs_distances(g);
    auto rec = recognize(g, d);
    REQUIRE(rec.accepted());
    auto rep = verify_cut_conditions(g, d, rec.cuts);
    CHECK(rep.pass());
  }
}

TEST_CASE("verify_cut_conditions fails on a non-cut partition") {
  // C6 with both theta cuts of one coordinate merged into a single class is
  // no longer a valid cut-partition: force it by feeding a hand-built
  // partition where one class repeats along shortest paths
  auto g = cycle(6);
  auto d = all_pairs_distances(g);
  auto rec = recognize(g, d);
  REQUIRE(rec.accepted());
  CutPartition merged;
  merged.class_of.assign(g.m(), 0);
  Cut all;
  for (int e = 0; e < g.m(); ++e) all.edge_ids.push_back(e);
  all.minus = VertexSet::from(g.n, {0, 1, 2});
  all.plus = all.minus.complement();
  merged.cuts.push_back(all);
  auto rep = verify_cut_conditions(g, d, merged);
  CHECK_FALSE(rep.pass());
  CHECK(rep.u >= 0);
  CHECK(rep.w >= 0);
}

TEST_CASE("recognition agrees with the cut-condition route on the corpus") {
  for (auto& ng : partial_cube_corpus()) {
    if (ng.graph.n > 20) continue;
    auto d = all_pairs_distances(ng.graph);
    auto rec = recognize(ng.graph, d);
    REQUIRE(rec.accepted());
    CHECK(verify_cut_conditions(ng.graph, d, rec.cuts).pass());
  }
}

TEST_CASE("count_separating_cuts equals distance in partial cubes") {
  auto g = grid(2, 3);
  auto d = all_pairs_distances(g);
  auto rec = recognize(g, d);
  REQUIRE(rec.accepted());
  for (int u = 0; u < g.n; ++u)
    for (int w = 0; w < g.n; ++w)
      CHECK(count_separating_cuts(rec.cuts, u, w) == d[u][w]);
}
