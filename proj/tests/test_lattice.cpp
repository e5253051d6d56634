#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "cubehull/convexity.hpp"
#include "cubehull/corpus.hpp"
#include "cubehull/hullnum.hpp"
#include "cubehull/json_io.hpp"
#include "cubehull/lattice.hpp"

using namespace cubehull;

namespace {

VertexSet vs(int n, std::initializer_list<int> members) {
  VertexSet s(n);
  for (int v : members) s.set(v);
  return s;
}

}  // namespace

TEST_CASE("convex_subgraphs counts") {
  CHECK(convex_subgraphs(path_graph(2)).size() == 4);    // {}, {0}, {1}, V
  CHECK(convex_subgraphs(cycle(4)).size() == 10);        // {}, 4 vertices, 4 edges, V
  CHECK(convex_subgraphs(star(3)).size() == 12);
  // non-partial-cube fallback: C5 also has its five geodesic 2-paths
  CHECK(convex_subgraphs(cycle(5)).size() == 17);
}

TEST_CASE("build_lattice_full on an edge is the diamond") {
  auto l = build_lattice_full(path_graph(2));
  REQUIRE(l.elements.size() == 4);
  CHECK(l.elements[l.bottom].none());
  CHECK(l.elements[l.top].count() == 2);
  CHECK(l.atoms.size() == 2);
  CHECK(l.upper_covers[l.bottom].size() == 2);
  CHECK(l.lower_covers[l.top].size() == 2);
}

TEST_CASE("meets and joins on the C4 lattice") {
  auto g = cycle(4);
  auto l = build_lattice_full(g);
  REQUIRE(l.elements.size() == 10);
  CHECK(l.atoms.size() == 4);
  int a0 = l.index_of(vs(4, {0})), a2 = l.index_of(vs(4, {2}));
  int a1 = l.index_of(vs(4, {1}));
  REQUIRE(a0 >= 0);
  CHECK(l.meet(a0, a2) == l.bottom);
  CHECK(l.join(a0, a2) == l.top);                     // antipodal pair hulls to V
  CHECK(l.join(a0, a1) == l.index_of(vs(4, {0, 1})));  // adjacent pair hulls to the edge
  CHECK(l.smallest_above(vs(4, {0, 2})) == l.top);
  CHECK(l.index_of(vs(4, {0, 2})) == -1);
}

TEST_CASE("build_lattice validates its input") {
  // not meet-closed: {0,1} and {1,2} present but {1} missing
  std::vector<VertexSet> bad = {vs(3, {}), vs(3, {0, 1}), vs(3, {1, 2}),
                                vs(3, {0, 1, 2})};
  try {
    static_cast<void>(build_lattice(3, bad));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::input);
  }
  // no bottom: {0} and {1} have no common lower bound in the family
  CHECK_THROWS_AS(
      static_cast<void>(build_lattice(2, {vs(2, {0}), vs(2, {1}), vs(2, {0, 1})})), Error);
}

TEST_CASE("build_lattice_above") {
  auto lk2 = build_lattice_above(path_graph(2), 0);
  CHECK(lk2.elements.size() == 2);  // {0} < {0,1}
  CHECK(lk2.elements[lk2.bottom] == vs(2, {0}));

  CHECK(build_lattice_above(cycle(4), 0).elements.size() == 4);
  CHECK(build_lattice_above(star(3), 0).elements.size() == 8);
}

TEST_CASE("meet irreducibles") {
  auto chain = build_lattice(2, {vs(2, {}), vs(2, {0}), vs(2, {0, 1})});
  auto mi = meet_irreducibles(chain);
  CHECK(mi == std::vector<int>{chain.index_of(vs(2, {})), chain.index_of(vs(2, {0}))});

  auto l = build_lattice_above(cycle(4), 0);
  auto mc = meet_irreducibles(l);
  CHECK(mc.size() == 2);  // the two edges at 0
  for (int x : mc) CHECK(l.elements[x].count() == 2);
}

TEST_CASE("upper local distributivity") {
  CHECK(is_uld(build_lattice(2, {vs(2, {}), vs(2, {0}), vs(2, {0, 1})})).uld);
  CHECK(is_uld(build_lattice_above(cycle(4), 0)).uld);
  // M3 is not ULD: the top has three minimal meet representations
  std::vector<VertexSet> m3 = {vs(3, {}), vs(3, {0}), vs(3, {1}), vs(3, {2}),
                               vs(3, {0, 1, 2})};
  auto r = is_uld(build_lattice(3, m3));
  CHECK_FALSE(r.uld);
  CHECK(r.witness >= 0);
}

TEST_CASE("hull number from the lattice") {
  CHECK(hull_number_lattice(build_lattice_full(path_graph(2))).size == 2);
  auto sol = hull_number_lattice(build_lattice_full(cycle(4)));
  CHECK(sol.size == 2);
  CHECK(sol.atom_witness.size() == 2);
  CHECK(hull_number_lattice(build_lattice_full(star(3))).size == 3);

  // non-atomistic input is refused
  auto chain = build_lattice(2, {vs(2, {}), vs(2, {0}), vs(2, {0, 1})});
  try {
    static_cast<void>(hull_number_lattice(chain));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::property);
  }
}

TEST_CASE("lattice hull number agrees with the exact solver") {
  for (auto& g : {path_graph(4), cycle(6), hypercube(3), grid(2, 3), star(4)}) {
    auto l = build_lattice_full(g);
    CHECK(is_atomistic(l));
    auto sol = hull_number_lattice(l);
    CHECK(sol.size == hull_number_exact(g).size);
    CHECK((1u << sol.size) <= l.elements.size());
  }
}

TEST_CASE("hasse graph of a vertex lattice is the graph again") {
  auto g = cycle(4);
  auto h = hasse_graph(build_lattice_above(g, 0));
  CHECK(h.n == 4);
  CHECK(h.edges.size() == 4);
  CHECK(recognize(h).accepted());
}

TEST_CASE("verify_embedding") {
  for (auto& g : {path_graph(2), cycle(4), hypercube(3), grid(2, 3)}) {
    for (int v = 0; v < g.n; ++v) {
      auto l = build_lattice_above(g, v);
      CHECK(is_uld(l).uld);
      CHECK(verify_embedding(g, v, l).pass());
    }
  }
  // K_{2,3} is not a partial cube, so some base must fail
  auto k23 = complete_bipartite(2, 3);
  bool some_fail = false;
  for (int v = 0; v < k23.n; ++v) {
    auto l = build_lattice_above(k23, v);
    if (!is_uld(l).uld || !verify_embedding(k23, v, l).pass()) some_fail = true;
  }
  CHECK(some_fail);
}

TEST_CASE("meet is intersection, join is the hull of the union") {
  auto g = hypercube(3);
  auto d = all_pairs_distances(g);
  auto l = build_lattice_full(g);
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(l.elements.size()) - 1);
  for (int t = 0; t < 200; ++t) {
    int x = pick(rng), y = pick(rng);
    CHECK(l.elements[l.meet(x, y)] == (l.elements[x] & l.elements[y]));
    auto u = l.elements[x] | l.elements[y];
    if (u.none())
      CHECK(l.join(x, y) == l.bottom);
    else
      CHECK(l.elements[l.join(x, y)] == hull_closure(g, d, u));
  }
}

TEST_CASE("lattice JSON round trip") {
  auto l = build_lattice_full(cycle(4));
  auto j = lattice_to_json(l);
  auto back = lattice_from_json(j);
  CHECK(back.elements == l.elements);
  CHECK(back.upper_covers == l.upper_covers);
  CHECK(back.atoms == l.atoms);
}
