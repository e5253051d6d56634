#include "cubehull/convexity.hpp"

namespace cubehull {

VertexSet hull_halfspace(const Graph& g, const CutPartition& cp, const VertexSet& s) {
  if (s.none()) throw Error(ErrorKind::input, "hull of the empty set is undefined");
  VertexSet hull = VertexSet::full(g.n);
  for (auto& cut : cp.cuts) {
    if (cut.separates(s)) continue;  // C(s) = V
    hull &= s.intersects(cut.minus) ? cut.minus : cut.plus;
  }
  return hull;
}

VertexSet hull_closure(const Graph& g, const DistanceMatrix& d, const VertexSet& s) {
  if (s.none()) throw Error(ErrorKind::input, "hull of the empty set is undefined");
  VertexSet cur = s;
  while (true) {
    VertexSet next = cur;
    auto vs = cur.members();
    for (std::size_t i = 0; i < vs.size(); ++i) {
      int u = vs[i];
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        int w = vs[j];
        int duw = d[u][w];
        for (int z = 0; z < g.n; ++z)
          if (!next.test(z) && d[u][z] + d[z][w] == duw) next.set(z);
      }
    }
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

bool is_convex(const Graph& g, const DistanceMatrix& d, const VertexSet& s) {
  if (s.none()) throw Error(ErrorKind::input, "convexity of the empty set is undefined");
  auto vs = s.members();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      int u = vs[i], w = vs[j];
      int duw = d[u][w];
      for (int z = 0; z < g.n; ++z)
        if (!s.test(z) && d[u][z] + d[z][w] == duw) return false;
    }
  return true;
}

}  // namespace cubehull
