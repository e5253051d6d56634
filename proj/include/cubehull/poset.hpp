#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cubehull/core.hpp"
#include "cubehull/pcube.hpp"

namespace cubehull {

struct Poset {
  int n = 0;
  std::vector<std::vector<bool>> leq_;  // reflexive-transitive closure

  bool leq(int a, int b) const { return leq_[a][b]; }
  bool incomparable(int a, int b) const { return a != b && !leq_[a][b] && !leq_[b][a]; }
  std::vector<std::pair<int, int>> incomparable_pairs() const;
};

// Builds the reflexive-transitive closure of the given strict relations and
// rejects cycles.
Poset make_poset(int n, const std::vector<std::pair<int, int>>& less_than);

// Text format: first line n; following lines "u v" meaning u < v; '#' starts
// a comment line.
Poset parse_poset(std::istream& in);
Poset parse_poset(const std::string& text);

inline constexpr long kMaxLinearExtensions = 1'000'000;
inline constexpr int kMaxPosetElements = 24;

// All linear extensions in lexicographic order, by backtracking over minimal
// elements. Throws Error(bound) past the extension cap.
std::vector<std::vector<int>> linear_extensions(const Poset& p);

struct LinearExtensionGraph {
  Graph graph;
  DistanceMatrix dist;
  std::vector<std::vector<int>> perm_of;         // vertex -> linear extension
  CutPartition cuts;                             // theta classes (recognition certificate)
  std::vector<std::pair<int, int>> pair_of_cut;  // cut id -> incomparable pair {x,y}, x<y
};

// Adjacency between extensions differing by one neighboring transposition.
// The graph is certified as a partial cube and its cuts are labeled by
// incomparable pairs; distances are spot-checked against discordant-pair
// counts.
LinearExtensionGraph linext_graph(const Poset& p);

// True when every incomparable pair is reversed between two of the given
// extensions. Throws Error(input) when some permutation is not an extension.
bool is_realizer(const Poset& p, const std::vector<std::vector<int>>& exts);

// Smallest realizer size by increasing-k exhaustive search over extension
// subsets; independent oracle for dimension_via_hull.
int dimension_bruteforce(const Poset& p);

struct DimensionResult {
  int dimension = 0;
  std::vector<std::vector<int>> realizer;
};

// Dimension as the hull number of the linear extension graph, computed by
// the hitting-set solver over cut sides.
DimensionResult dimension_via_hull(const Poset& p);

// Maximum antichain size via minimum chain cover (bipartite matching).
int width(const Poset& p);

}  // namespace cubehull
