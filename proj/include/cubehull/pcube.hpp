#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubehull/core.hpp"

namespace cubehull {

// One cut of a cut-partition: an edge class whose removal splits the graph
// into exactly two sides. The side containing vertex 0 is labeled minus.
struct Cut {
  std::vector<int> edge_ids;
  VertexSet plus;
  VertexSet minus;

  const VertexSet& side_of(int v) const { return minus.test(v) ? minus : plus; }
  const VertexSet& far_side_of(int v) const { return minus.test(v) ? plus : minus; }
  bool separates(const VertexSet& s) const {
    return s.intersects(plus) && s.intersects(minus);
  }
  // C(s): the side containing s, or the full vertex set when C separates s.
  VertexSet side_around(const VertexSet& s) const {
    if (separates(s)) return VertexSet::full(plus.width());
    return s.intersects(minus) ? minus : plus;
  }
};

struct CutPartition {
  std::vector<int> class_of;  // edge id -> cut id
  std::vector<Cut> cuts;
};

struct HypercubeEmbedding {
  int dims = 0;
  // coords[v]: bit i set iff v lies on the plus side of cut i.
  std::vector<VertexSet> coords;
};

struct Rejection {
  enum class Reason { not_bipartite, bad_cut_class, not_isometric };
  Reason reason;
  std::vector<int> odd_walk;     // not_bipartite
  std::vector<int> class_edges;  // bad_cut_class: edge ids of the offending class
  int num_components = 0;        // bad_cut_class
  int u = -1, w = -1;            // not_isometric: violating pair
  std::string describe() const;
};

struct RecognitionResult {
  std::optional<HypercubeEmbedding> embedding;
  CutPartition cuts;  // populated when accepted
  std::optional<Rejection> rejection;
  bool accepted() const { return embedding.has_value(); }
};

// Edge classes of the Djokovic-Winkler relation: edges {x,y} and {u,v} are
// related when d(x,u)+d(y,v) != d(x,v)+d(y,u); classes are the transitive
// closure, computed by the pairwise test over all edge pairs.
std::vector<std::vector<int>> theta_edge_classes(const Graph& g, const DistanceMatrix& d);

// Theta classes as a cut-partition with side labelings. Throws
// Error(property) when g is not bipartite or some class does not leave
// exactly two components (signals: not a partial cube).
CutPartition theta_classes(const Graph& g, const DistanceMatrix& d);

// Full recognition with an unconditional certificate: the embedding is
// validated by the exhaustive all-pairs isometry check.
RecognitionResult recognize(const Graph& g);
RecognitionResult recognize(const Graph& g, const DistanceMatrix& d);

// Number of cuts in cp whose sides separate u from w.
int count_separating_cuts(const CutPartition& cp, int u, int w);

struct CutConditionReport {
  // (i) there is a shortest path between any pair using no cut twice
  bool some_path_ok = true;
  // (ii) no shortest path uses any cut twice
  bool all_paths_ok = true;
  int u = -1, w = -1;  // violating pair when a condition fails
  int repeated_cut = -1;
  std::vector<int> witness_path;  // a shortest u-w path crossing repeated_cut twice
  bool pass() const { return some_path_ok && all_paths_ok; }
};

// Exhaustive check of both cut conditions over all vertex pairs. For a pair
// u,w every shortest path crosses each separating cut an odd number of times
// and every other cut an even number, so d(u,w) equals the number of
// separating cuts exactly when some (equivalently every) shortest path uses
// no cut twice. On failure a concrete shortest path with a repeated cut is
// extracted from the predecessor structure.
CutConditionReport verify_cut_conditions(const Graph& g, const DistanceMatrix& d,
                                         const CutPartition& cp);

}  // namespace cubehull
