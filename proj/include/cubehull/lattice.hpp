#pragma once

#include <vector>

#include "cubehull/core.hpp"

namespace cubehull {

// Finite lattice of convex vertex sets under inclusion; meet is set
// intersection, join is the smallest element containing the union.
struct ConvexLattice {
  int graph_n = 0;                    // width of the element sets
  std::vector<VertexSet> elements;    // sorted by (cardinality, member sequence)
  int bottom = -1, top = -1;
  std::vector<std::vector<int>> upper_covers;
  std::vector<std::vector<int>> lower_covers;
  std::vector<int> atoms;  // upper covers of bottom

  int index_of(const VertexSet& s) const;  // -1 when absent

  bool leq(int x, int y) const { return elements[x].is_subset_of(elements[y]); }
  // meet = set intersection (always present; verified at build time)
  int meet(int x, int y) const;
  // join = intersection of all common upper bounds (present by meet-closure)
  int join(int x, int y) const;
  // smallest element containing the given vertex set, or -1 when none
  int smallest_above(const VertexSet& s) const;
};

// All convex vertex sets including the empty set. Partial cubes are
// enumerated as the intersection closure of the cut sides; other graphs fall
// back to hull-closure testing over all subsets (n <= 20).
std::vector<VertexSet> convex_subgraphs(const Graph& g);

// Builds the lattice from a family of sets. Requires closure under pairwise
// intersection and the presence of the empty and full sets.
ConvexLattice build_lattice(int graph_n, std::vector<VertexSet> sets);

// Lattice of convex subgraphs of g (bottom = empty set).
ConvexLattice build_lattice_full(const Graph& g);

// Restriction to the convex subgraphs containing v (bottom = {v}).
ConvexLattice build_lattice_above(const Graph& g, int v);

// Elements with exactly one upper cover.
std::vector<int> meet_irreducibles(const ConvexLattice& l);

// True when every element is the join of the atoms below it.
bool is_atomistic(const ConvexLattice& l);

struct UldResult {
  bool uld = true;
  int witness = -1;  // an element without a unique minimal meet representation
};

// Upper local distributivity via the essential-elements criterion: x is ULD
// iff the essential members of { meet-irreducibles above x } already meet
// to x.
UldResult is_uld(const ConvexLattice& l);

struct LatticeHullSolution {
  int size = 0;
  std::vector<int> atom_witness;  // element ids of the chosen atoms
};

// Smallest atom set joining to the top, searched by increasing size up to
// ceil(log2 |L|). Requires an atomistic lattice.
LatticeHullSolution hull_number_lattice(const ConvexLattice& l);

struct EmbeddingReport {
  bool injective = true;
  bool edges_are_covers = true;
  bool isometric = true;
  int fail_u = -1, fail_w = -1;
  bool pass() const { return injective && edges_are_covers && isometric; }
};

// Checks that u -> conv{v,u} embeds g isometrically into the (undirected)
// Hasse diagram of l = build_lattice_above(g, v).
EmbeddingReport verify_embedding(const Graph& g, int v, const ConvexLattice& l);

// The Hasse diagram viewed as an undirected graph (vertex ids = element ids).
Graph hasse_graph(const ConvexLattice& l);

}  // namespace cubehull
