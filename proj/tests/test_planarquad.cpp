#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cubehull/corpus.hpp"
#include "cubehull/hullnum.hpp"
#include "cubehull/planarquad.hpp"

using namespace cubehull;

namespace {

CutPartition cuts_of(const Graph& g) {
  return theta_classes(g, all_pairs_distances(g));
}

}  // namespace

TEST_CASE("parse_rotation") {
  auto g = cycle(4);
  auto rot = parse_rotation("1 3\n0 2\n1 3\n2 0\n", g);
  REQUIRE(rot.size() == 4);
  CHECK(rot[0] == std::vector<int>{1, 3});
  CHECK_THROWS_AS(static_cast<void>(parse_rotation("1 3\n0 2\n1 3\n2 2\n", g)), Error);
  CHECK_THROWS_AS(static_cast<void>(parse_rotation("1 3\n0 2\n1 3\n", g)), Error);
}

TEST_CASE("intersection graphs of far sides") {
  auto c4 = cycle(4);
  auto ig = intersection_graph(c4, cuts_of(c4), 0);
  CHECK(ig.k == 2);
  CHECK(ig.adj[0][1]);  // both far sides contain the antipode 2
  CHECK(ig.far_side[0].test(2));
  CHECK(ig.far_side[1].test(2));

  auto q3 = hypercube(3);
  auto ig3 = intersection_graph(q3, cuts_of(q3), 0);
  CHECK(ig3.k == 3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (a != b) CHECK(ig3.adj[a][b]);

  auto s = star(3);
  auto igs = intersection_graph(s, cuts_of(s), 0);
  CHECK(igs.k == 3);
  for (int a = 0; a < 3; ++a) CHECK(igs.neighbors[a].empty());
}

TEST_CASE("peo accepts chordal graphs and extracts chordless cycles") {
  auto q3 = hypercube(3);
  auto r = peo(intersection_graph(q3, cuts_of(q3), 0));
  CHECK(r.chordal);
  CHECK(r.order.size() == 3);

  // 3x3 grid from the center: the four far sides form a chordless 4-cycle
  auto g33 = grid(3, 3);
  auto ig = intersection_graph(g33, cuts_of(g33), 4);
  auto bad = peo(ig);
  CHECK_FALSE(bad.chordal);
  auto& cyc = bad.counterexample_cycle;
  REQUIRE(cyc.size() >= 4);
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
    CHECK(ig.adj[a][b]);
    for (std::size_t j = i + 2; j < cyc.size(); ++j)
      if (!(i == 0 && j + 1 == cyc.size())) CHECK_FALSE(ig.adj[cyc[i]][cyc[j]]);
  }
}

TEST_CASE("clique cover with Helly witnesses and matching independent set") {
  auto q3 = hypercube(3);
  auto ig = intersection_graph(q3, cuts_of(q3), 0);
  auto r = peo(ig);
  auto cc = min_clique_cover(ig, r.order);
  REQUIRE(cc.cliques.size() == 1);
  CHECK(cc.witness[0] == 7);  // the antipode lies in all three far sides
  CHECK(cc.independent_set.size() == 1);

  auto s = star(3);
  auto igs = intersection_graph(s, cuts_of(s), 0);
  auto cs = min_clique_cover(igs, peo(igs).order);
  CHECK(cs.cliques.size() == 3);
  std::vector<int> w = cs.witness;
  std::sort(w.begin(), w.end());
  CHECK(w == std::vector<int>{1, 2, 3});  // one leaf per singleton clique

  auto c4 = cycle(4);
  auto igc = intersection_graph(c4, cuts_of(c4), 0);
  auto ccc = min_clique_cover(igc, peo(igc).order);
  REQUIRE(ccc.cliques.size() == 1);
  CHECK(ccc.witness[0] == 2);
}

TEST_CASE("validate_quad") {
  auto c4 = cycle(4);
  auto rot = parse_rotation("1 3\n0 2\n1 3\n2 0\n", c4);
  auto rep = validate_quad(c4, cuts_of(c4), rot);
  CHECK(rep.euler_ok);  // m = 4 = 2n - 4
  CHECK(rep.rotation_checked);
  CHECK(rep.faces_ok);
  CHECK(rep.num_faces == 2);
  CHECK(rep.face_lengths == std::vector<int>{4, 4});
  CHECK(rep.pass());

  auto q3 = hypercube(3);
  auto rq = validate_quad(q3, cuts_of(q3), std::nullopt);
  CHECK(rq.euler_ok);  // m = 12 = 2*8 - 4
  CHECK_FALSE(rq.rotation_checked);

  auto s = star(3);
  CHECK_FALSE(validate_quad(s, cuts_of(s), std::nullopt).euler_ok);

  auto g23 = grid(2, 3);
  CHECK_FALSE(validate_quad(g23, cuts_of(g23), std::nullopt).euler_ok);
}

TEST_CASE("hull_number_quad in trusted mode matches the exact solver") {
  for (auto& g : {cycle(4), hypercube(3), grid(2, 2), grid(2, 3)}) {
    auto sol = hull_number_quad(g, QuadMode::trusted);
    auto cp = cuts_of(g);
    auto exact = hull_number_exact(g, cp);
    CHECK(sol.size == exact.size);
    CHECK(is_hull_set(g, all_pairs_distances(g), sol.witness));
    for (int v = 0; v < g.n; ++v) {
      if (sol.h_values[v] < 0) continue;
      CHECK(sol.h_values[v] == h_v(g, cp, v).size);
    }
  }
  auto g23 = hull_number_quad(grid(2, 3), QuadMode::trusted);
  CHECK(g23.size == 2);
  CHECK(g23.h_values == std::vector<int>{1, 2, 1, 1, 2, 1});
}

TEST_CASE("trusted mode skips bases with non-chordal intersection graphs") {
  auto sol = hull_number_quad(grid(3, 3), QuadMode::trusted);
  CHECK(sol.h_values[4] == -1);  // center base, chordless 4-cycle of far sides
  CHECK(sol.size == hull_number_exact(grid(3, 3)).size);
}

TEST_CASE("strict mode demands a rotation system and a real quadrangulation") {
  try {
    static_cast<void>(hull_number_quad(cycle(4), QuadMode::strict));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::input);
  }

  auto c4 = cycle(4);
  auto rot = parse_rotation("1 3\n0 2\n1 3\n2 0\n", c4);
  auto sol = hull_number_quad(c4, QuadMode::strict, rot);
  CHECK(sol.size == 2);

  // 2x3 grid fails the Euler count, so strict mode rejects it
  auto g23 = grid(2, 3);
  auto rot23 = parse_rotation("1 3\n0 4 2\n1 5\n0 4\n3 1 5\n4 2\n", g23);
  try {
    static_cast<void>(hull_number_quad(g23, QuadMode::strict, rot23));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::property);
  }
}
