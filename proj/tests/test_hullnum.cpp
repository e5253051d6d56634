#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cubehull/convexity.hpp"
#include "cubehull/corpus.hpp"
#include "cubehull/hullnum.hpp"

using namespace cubehull;

namespace {

CutPartition cuts_of(const Graph& g) {
  auto rec = recognize(g);
  REQUIRE(rec.accepted());
  return rec.cuts;
}

}  // namespace

TEST_CASE("hitting_instance materializes both sides of every cut") {
  auto c4 = cycle(4);
  auto inst = hitting_instance(c4, cuts_of(c4));
  REQUIRE(inst.sets.size() == 4);
  for (auto& s : inst.sets) CHECK(s.count() == 2);

  auto q3 = hypercube(3);
  auto iq = hitting_instance(q3, cuts_of(q3));
  REQUIRE(iq.sets.size() == 6);
  for (auto& s : iq.sets) CHECK(s.count() == 4);

  auto k13 = star(3);
  auto ik = hitting_instance(k13, cuts_of(k13));
  REQUIRE(ik.sets.size() == 6);
  int singletons = 0, big = 0;
  for (auto& s : ik.sets) {
    if (s.count() == 1) ++singletons;
    if (s.count() == 3) ++big;
  }
  CHECK(singletons == 3);
  CHECK(big == 3);
}

TEST_CASE("min_hitting_set finds lexicographically smallest optima") {
  auto c4 = cycle(4);
  auto sol = min_hitting_set(hitting_instance(c4, cuts_of(c4)));
  CHECK(sol.size == 2);
  CHECK(sol.witness == VertexSet::from(4, {0, 2}));

  auto k13 = star(3);
  auto sk = min_hitting_set(hitting_instance(k13, cuts_of(k13)));
  CHECK(sk.size == 3);
  CHECK(sk.witness == VertexSet::from(4, {1, 2, 3}));

  HittingInstance single;
  single.universe = 6;
  single.sets = {VertexSet::from(6, {5})};
  single.origin.resize(1);
  auto ss = min_hitting_set(single);
  CHECK(ss.size == 1);
  CHECK(ss.witness == VertexSet::from(6, {5}));
}

TEST_CASE("min_hitting_set witness is optimal against subset search") {
  auto g = grid(3, 3);
  auto inst = hitting_instance(g, cuts_of(g));
  auto sol = min_hitting_set(inst);
  // exhaustive check that no smaller set hits everything
  int n = inst.universe;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) >= sol.size) continue;
    bool hits_all = true;
    for (auto& s : inst.sets) {
      bool hit = false;
      for (int v = s.first(); v >= 0; v = s.next(v))
        if (mask >> v & 1) {
          hit = true;
          break;
        }
      if (!hit) {
        hits_all = false;
        break;
      }
    }
    CHECK_FALSE(hits_all);
  }
}

TEST_CASE("hull_number_exact on named graphs") {
  CHECK(hull_number_exact(hypercube(3)).size == 2);
  CHECK(hull_number_exact(star(3)).size == 3);
  CHECK(hull_number_exact(cycle(6)).size == 2);
  auto sol = hull_number_exact(grid(3, 3));
  auto g = grid(3, 3);
  auto d = all_pairs_distances(g);
  CHECK(is_hull_set(g, d, sol.witness));
}

TEST_CASE("hull_number_exact rejects non-partial-cubes") {
  try {
    static_cast<void>(hull_number_exact(complete_bipartite(2, 3)));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::property);
  }
}

TEST_CASE("h_v values") {
  auto c4 = cycle(4);
  auto hc = h_v(c4, cuts_of(c4), 0);
  CHECK(hc.size == 1);
  CHECK(hc.witness == VertexSet::from(4, {2}));

  auto q3 = hypercube(3);
  auto cq = cuts_of(q3);
  for (int v = 0; v < 8; ++v) {
    auto hq = h_v(q3, cq, v);
    CHECK(hq.size == 1);
    CHECK(hq.witness == VertexSet::from(8, {7 - v}));  // the antipode
  }

  auto k13 = star(3);
  CHECK(h_v(k13, cuts_of(k13), 0).size == 3);
}

TEST_CASE("hull_number_onesided equals the exact value") {
  CHECK(hull_number_onesided(cycle(4)).size == 2);
  CHECK(hull_number_onesided(hypercube(3)).size == 2);
  auto sk = hull_number_onesided(star(3));
  CHECK(sk.size == 3);
  CHECK(sk.best_v == 1);  // smallest leaf; h at the center is 3, at a leaf 2
  for (const Graph& g : {grid(2, 4), cycle(10), hypercube(4)})
    CHECK(hull_number_onesided(g).size == hull_number_exact(g).size);
}

TEST_CASE("is_hull_set") {
  auto c4 = cycle(4);
  auto d4 = all_pairs_distances(c4);
  CHECK(is_hull_set(c4, d4, VertexSet::from(4, {0, 2})));
  auto q3 = hypercube(3);
  auto dq = all_pairs_distances(q3);
  CHECK(is_hull_set(q3, dq, VertexSet::from(8, {0, 7})));
  auto k13 = star(3);
  auto dk = all_pairs_distances(k13);
  CHECK_FALSE(is_hull_set(k13, dk, VertexSet::from(4, {1, 2})));
}

TEST_CASE("brute-force oracle agrees and respects its bound") {
  for (const Graph& g : {cycle(8), star(4), grid(2, 3), hypercube(3)}) {
    auto d = all_pairs_distances(g);
    CHECK(hull_number_brute(g, d).size == hull_number_exact(g).size);
  }
  auto q5 = hypercube(5);
  auto d5 = all_pairs_distances(q5);
  try {
    static_cast<void>(hull_number_brute(q5, d5));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::bound);
  }
}

TEST_CASE("witnesses are minimum hull sets") {
  for (const Graph& g : {cycle(6), star(5), grid(3, 3)}) {
    auto d = all_pairs_distances(g);
    auto sol = hull_number_exact(g);
    CHECK(is_hull_set(g, d, sol.witness));
    CHECK(sol.witness.count() == sol.size);
    auto one = hull_number_onesided(g);
    CHECK(is_hull_set(g, d, one.witness));
    CHECK(one.witness.test(one.best_v));
  }
}
