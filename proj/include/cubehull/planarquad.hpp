#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "cubehull/core.hpp"
#include "cubehull/pcube.hpp"

namespace cubehull {

// Per-vertex clockwise cyclic neighbor order.
using RotationSystem = std::vector<std::vector<int>>;

// One line per vertex listing its neighbors in clockwise order.
RotationSystem parse_rotation(std::istream& in, const Graph& g);
RotationSystem parse_rotation(const std::string& text, const Graph& g);

// Intersection graph of the cut far sides with respect to a base vertex:
// nodes are cuts, adjacent when their far sides share a vertex. This is the
// combinatorial surrogate for the intersection graph of curve interiors.
struct IntersectionGraph {
  int base_vertex = -1;
  int k = 0;  // number of cuts
  std::vector<VertexSet> far_side;
  std::vector<std::vector<bool>> adj;
  std::vector<std::vector<int>> neighbors;  // sorted
};

IntersectionGraph intersection_graph(const Graph& g, const CutPartition& cp, int v);

struct PeoResult {
  bool chordal = false;
  std::vector<int> order;                 // perfect elimination ordering when chordal
  std::vector<int> counterexample_cycle;  // induced chordless cycle, length >= 4
};

// Maximum cardinality search plus verification; on failure an induced
// chordless cycle is extracted as the counterexample.
PeoResult peo(const IntersectionGraph& ig);

struct CliqueCover {
  std::vector<std::vector<int>> cliques;  // partition of the nodes
  std::vector<int> witness;               // per clique: vertex in all its far sides
  std::vector<int> independent_set;       // same size as cliques (optimality certificate)
};

// Gavril-style scan over the PEO. Throws Error(property) when some clique
// has an empty far-side intersection (the combinatorial Helly certificate
// fails, signaling a violated hypothesis).
CliqueCover min_clique_cover(const IntersectionGraph& ig, const std::vector<int>& order);

struct QuadReport {
  int n = 0, m = 0;
  bool euler_ok = false;  // m == 2n - 4
  bool rotation_checked = false;
  bool faces_ok = false;
  int num_faces = 0;
  std::vector<int> face_lengths;
  bool pass() const { return euler_ok && (!rotation_checked || faces_ok); }
};

// Necessary quadrangulation checks: the Euler edge count, and with a
// rotation system, the traced faces must all be 4-cycles.
QuadReport validate_quad(const Graph& g, const CutPartition& cp,
                         const std::optional<RotationSystem>& rotation);

enum class QuadMode {
  strict,   // rotation system required; all faces must be 4-cycles
  trusted,  // no topological validation; runtime certificates must pass
};

struct QuadHullSolution {
  int size = 0;
  int best_v = -1;
  VertexSet witness;
  std::vector<int> h_values;  // h_v per base vertex
};

// Hull number as min over base vertices of the clique-cover size plus one.
// In trusted mode every per-vertex value is certified against the generic
// exact hitting-set solver.
QuadHullSolution hull_number_quad(const Graph& g, QuadMode mode,
                                  const std::optional<RotationSystem>& rotation = std::nullopt);

}  // namespace cubehull
