#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cubehull/vertexset.hpp"

namespace cubehull {

// Error taxonomy shared by all modules; the CLI maps kinds to exit codes.
enum class ErrorKind {
  input,     // malformed or invalid input (exit 1)
  property,  // a structural property the algorithm requires is violated (exit 2)
  bound,     // desk-scale bound exceeded (exit 3)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind(kind) {}
  ErrorKind kind;
};

// Simple connected undirected graph with dense vertex ids 0..n-1.
// Immutable after construction.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // normalized u < v, sorted
  std::vector<std::vector<int>> adj;       // sorted neighbor lists

  int m() const { return int(edges.size()); }
  int edge_index(int u, int v) const;  // -1 when absent
  bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }
};

// Validates: ids in range, no loops, no parallel edges, connected.
Graph make_graph(int n, std::vector<std::pair<int, int>> edges);

// Edge-list text format: header "n m", then m lines "u v"; '#' starts a
// comment line. Errors carry the offending line number.
Graph load_graph(std::istream& in);
Graph load_graph(const std::string& text);

using DistanceMatrix = std::vector<std::vector<int>>;

// BFS from every source.
DistanceMatrix all_pairs_distances(const Graph& g);

struct BipartiteResult {
  bool bipartite = false;
  std::vector<int> color;     // per-vertex 0/1 when bipartite
  std::vector<int> odd_walk;  // closed walk of odd length otherwise
};

BipartiteResult is_bipartite(const Graph& g);

// { z : d(u,z) + d(z,w) = d(u,w) }
VertexSet interval(const Graph& g, const DistanceMatrix& d, int u, int w);

// Hard cap for exponential-time operations (brute-force enumerations).
inline constexpr int kMaxExactVertices = 4096;

}  // namespace cubehull
