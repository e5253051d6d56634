#include "cubehull/core.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace cubehull {

int Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
  if (it == edges.end() || *it != std::make_pair(u, v)) return -1;
  return int(it - edges.begin());
}

Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
  if (n <= 0) throw Error(ErrorKind::input, "graph must have at least one vertex");
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw Error(ErrorKind::input, "vertex id out of range: " +
                                        std::to_string(u) + " " + std::to_string(v));
    if (u == v) throw Error(ErrorKind::input, "self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (edges[i] == edges[i - 1])
      throw Error(ErrorKind::input, "duplicate edge " + std::to_string(edges[i].first) +
                                        " " + std::to_string(edges[i].second));

  Graph g;
  g.n = n;
  g.edges = std::move(edges);
  g.adj.assign(n, {});
  for (auto [u, v] : g.edges) {
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& a : g.adj) std::sort(a.begin(), a.end());

  // connectivity
  std::vector<char> seen(n, 0);
  std::deque<int> q{0};
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int v : g.adj[u])
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        q.push_back(v);
      }
  }
  if (reached != n) throw Error(ErrorKind::input, "graph is disconnected");
  return g;
}

Graph load_graph(std::istream& in) {
  std::string line;
  int lineno = 0;
  long n = -1, m = -1;
  std::vector<std::pair<int, int>> edges;
  long seen_edges = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n >> m)) {
        std::string tok;
        std::istringstream probe(line);
        if (!(probe >> tok)) continue;  // blank/comment line before header
        throw Error(ErrorKind::input,
                    "parse error at line " + std::to_string(lineno) + ": expected header \"n m\"");
      }
      if (n <= 0 || m < 0)
        throw Error(ErrorKind::input, "invalid header at line " + std::to_string(lineno));
      continue;
    }
    long u, v;
    if (!(ls >> u)) continue;  // blank line
    if (!(ls >> v))
      throw Error(ErrorKind::input,
                  "parse error at line " + std::to_string(lineno) + ": expected \"u v\"");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw Error(ErrorKind::input, "vertex id out of range at line " + std::to_string(lineno));
    if (u == v)
      throw Error(ErrorKind::input, "self-loop at line " + std::to_string(lineno));
    ++seen_edges;
    if (seen_edges > m)
      throw Error(ErrorKind::input, "more edges than declared at line " + std::to_string(lineno));
    int a = int(u), b = int(v);
    if (a > b) std::swap(a, b);
    for (auto& e : edges)
      if (e == std::make_pair(a, b))
        throw Error(ErrorKind::input, "duplicate edge at line " + std::to_string(lineno));
    edges.emplace_back(a, b);
  }
  if (n < 0) throw Error(ErrorKind::input, "empty input: missing header");
  if (seen_edges != m)
    throw Error(ErrorKind::input, "edge count mismatch: header declares " + std::to_string(m) +
                                      ", found " + std::to_string(seen_edges));
  return make_graph(int(n), std::move(edges));
}

Graph load_graph(const std::string& text) {
  std::istringstream in(text);
  return load_graph(in);
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  DistanceMatrix d(g.n, std::vector<int>(g.n, -1));
  std::deque<int> q;
  for (int s = 0; s < g.n; ++s) {
    auto& ds = d[s];
    ds[s] = 0;
    q.assign(1, s);
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int v : g.adj[u])
        if (ds[v] < 0) {
          ds[v] = ds[u] + 1;
          q.push_back(v);
        }
    }
  }
  return d;
}

BipartiteResult is_bipartite(const Graph& g) {
  BipartiteResult r;
  r.color.assign(g.n, -1);
  std::vector<int> parent(g.n, -1);
  std::deque<int> q{0};
  r.color[0] = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int v : g.adj[u]) {
      if (r.color[v] < 0) {
        r.color[v] = 1 - r.color[u];
        parent[v] = u;
        q.push_back(v);
      } else if (r.color[v] == r.color[u]) {
        // odd closed walk: u -> root -> v plus the edge {v,u}
        std::vector<int> up, vp;
        for (int x = u; x >= 0; x = parent[x]) up.push_back(x);
        for (int x = v; x >= 0; x = parent[x]) vp.push_back(x);
        std::reverse(up.begin(), up.end());  // root .. u
        r.odd_walk = up;                     // root .. u
        r.odd_walk.push_back(v);             // edge u-v
        for (std::size_t i = 1; i < vp.size(); ++i) r.odd_walk.push_back(vp[i]);  // v .. root
        r.bipartite = false;
        r.color.clear();
        return r;
      }
    }
  }
  r.bipartite = true;
  return r;
}

VertexSet interval(const Graph& g, const DistanceMatrix& d, int u, int w) {
  VertexSet s(g.n);
  int duw = d[u][w];
  for (int z = 0; z < g.n; ++z)
    if (d[u][z] + d[z][w] == duw) s.set(z);
  return s;
}

}  // namespace cubehull
