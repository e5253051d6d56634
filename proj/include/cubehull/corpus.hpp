#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cubehull/core.hpp"
#include "cubehull/json_io.hpp"
#include "cubehull/planarquad.hpp"
#include "cubehull/poset.hpp"
#include "cubehull/satred.hpp"

namespace cubehull {

Graph hypercube(int d);
Graph cycle(int k);
Graph path_graph(int k);
Graph star(int leaves);
Graph grid(int rows, int cols);
Graph complete_bipartite(int a, int b);

// All free trees up to max_n vertices, one representative per isomorphism
// class (leaf extension with canonical-form deduplication).
std::vector<Graph> all_trees(int max_n);

struct NamedGraph {
  std::string name;
  Graph graph;
};

// Partial cubes: hypercubes Q1..Q6, even cycles C4..C12, all trees up to 10
// vertices, grids up to 4x4.
std::vector<NamedGraph> partial_cube_corpus();

// Non-partial-cubes: K_{2,3}, C5, C6 plus a chord, the 3-fan.
std::vector<NamedGraph> rejection_corpus();

// The standard example S_k: a_1..a_k, b_1..b_k with a_i < b_j iff i != j.
Poset standard_example(int k);

// All posets with 1..max_n elements, one representative per isomorphism
// class.
std::vector<Poset> all_posets(int max_n);

// Every AM3 formula with at most max_vars variables and max_clauses distinct
// clauses in which each variable occurs in both polarities (and hence in 2
// or 3 clauses). Clauses are sets of up to three distinct non-complementary
// literals.
std::vector<CnfFormula> exhaustive_am3(int max_vars, int max_clauses);

// Seeded random AM3 instances (not necessarily preprocessed).
std::vector<CnfFormula> random_am3(int count, int max_vars, unsigned seed);

struct CorpusRun {
  json report;  // deterministic given the seed
  std::vector<std::pair<std::string, double>> timings;  // section -> seconds
};

// Regenerates the built-in corpus and runs the full cross-validation suite:
// recognition, hull-operator agreement, hull numbers against brute force,
// the SAT reduction biconditional, poset dimension, quadrangulation hull
// numbers, and the convex-subgraph lattice checks.
CorpusRun run_corpus(unsigned seed);

}  // namespace cubehull
