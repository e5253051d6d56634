#pragma once

#include <vector>

#include "cubehull/core.hpp"
#include "cubehull/pcube.hpp"

namespace cubehull {

// Hull sets of a partial cube are exactly the vertex sets hitting both sides
// of every cut; this instance materializes that reformulation.
struct HittingInstance {
  int universe = 0;
  std::vector<VertexSet> sets;
  struct Origin {
    int cut = -1;
    int sign = 0;  // +1 plus side, -1 minus side, 0 far side / external
  };
  std::vector<Origin> origin;
};

HittingInstance hitting_instance(const Graph& g, const CutPartition& cp);

struct HittingSolution {
  int size = 0;
  VertexSet witness;  // lexicographically smallest optimum, as sorted ids
};

// Exact branch-and-bound solver: branches on the smallest unhit set in
// ascending vertex order; lower bound from a greedy pairwise-disjoint
// subfamily; upper bound seeded by greedy max coverage. The witness is
// canonicalized to the lexicographically smallest optimum.
HittingSolution min_hitting_set(const HittingInstance& inst);

// Smallest set hitting the far side V \ C(v) of every cut.
HittingSolution h_v(const Graph& g, const CutPartition& cp, int v);

// Exact hull number via the two-sided hitting-set reformulation; the witness
// is re-verified with hull_halfspace.
HittingSolution hull_number_exact(const Graph& g);
HittingSolution hull_number_exact(const Graph& g, const CutPartition& cp);

struct OneSidedSolution {
  int size = 0;
  int best_v = -1;  // smallest vertex attaining the minimum
  VertexSet witness;
};

// min over v of h_v, plus one.
OneSidedSolution hull_number_onesided(const Graph& g);
OneSidedSolution hull_number_onesided(const Graph& g, const CutPartition& cp);

bool is_hull_set(const Graph& g, const DistanceMatrix& d, const VertexSet& s);

// Definition-level oracle: smallest subset whose interval closure covers the
// graph, by exhaustive search over subsets of increasing size. Refuses
// n > 24. Works on any connected graph.
HittingSolution hull_number_brute(const Graph& g, const DistanceMatrix& d);

}  // namespace cubehull
