#pragma once

#include "cubehull/core.hpp"
#include "cubehull/pcube.hpp"

namespace cubehull {

// Convex hull by halfspace intersection: the intersection over all cuts of
// C(s). Requires a validated partial-cube cut-partition.
VertexSet hull_halfspace(const Graph& g, const CutPartition& cp, const VertexSet& s);

// Convex hull as the least fixpoint of pairwise interval closure; works on
// any connected graph and serves as the trusted oracle.
VertexSet hull_closure(const Graph& g, const DistanceMatrix& d, const VertexSet& s);

bool is_convex(const Graph& g, const DistanceMatrix& d, const VertexSet& s);

}  // namespace cubehull
