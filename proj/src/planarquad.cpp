#include "cubehull/planarquad.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "cubehull/convexity.hpp"
#include "cubehull/hullnum.hpp"

namespace cubehull {

RotationSystem parse_rotation(std::istream& in, const Graph& g) {
  RotationSystem rot(g.n);
  std::string line;
  int v = 0;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<int> nbrs;
    int x;
    while (ls >> x) nbrs.push_back(x);
    if (nbrs.empty()) continue;
    if (v >= g.n)
      throw Error(ErrorKind::input, "rotation system has more lines than vertices");
    auto sorted = nbrs;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != g.adj[v])
      throw Error(ErrorKind::input, "rotation at vertex " + std::to_string(v) +
                                        " is not a permutation of its neighbors (line " +
                                        std::to_string(lineno) + ")");
    rot[v] = std::move(nbrs);
    ++v;
  }
  if (v != g.n)
    throw Error(ErrorKind::input, "rotation system covers " + std::to_string(v) + " of " +
                                      std::to_string(g.n) + " vertices");
  return rot;
}

RotationSystem parse_rotation(const std::string& text, const Graph& g) {
  std::istringstream in(text);
  return parse_rotation(in, g);
}

IntersectionGraph intersection_graph(const Graph& g, const CutPartition& cp, int v) {
  IntersectionGraph ig;
  ig.base_vertex = v;
  ig.k = int(cp.cuts.size());
  ig.adj.assign(ig.k, std::vector<bool>(ig.k, false));
  ig.neighbors.assign(ig.k, {});
  for (auto& cut : cp.cuts) ig.far_side.push_back(cut.far_side_of(v));
  for (int a = 0; a < ig.k; ++a)
    for (int b = a + 1; b < ig.k; ++b)
      if (ig.far_side[a].intersects(ig.far_side[b])) {
        ig.adj[a][b] = ig.adj[b][a] = true;
        ig.neighbors[a].push_back(b);
        ig.neighbors[b].push_back(a);
      }
  for (auto& ns : ig.neighbors) std::sort(ns.begin(), ns.end());
  return ig;
}

namespace {

// Tries to close an induced cycle through v and its non-adjacent neighbors
// x, w: a shortest x-w path avoiding the rest of N[v] has no chords, so the
// cycle v, x, ..., w is chordless of length >= 4.
std::vector<int> cycle_through(const IntersectionGraph& ig, int v, int x, int w) {
  std::vector<char> banned(ig.k, 0);
  banned[v] = 1;
  for (int nb : ig.neighbors[v]) banned[nb] = 1;
  banned[x] = banned[w] = 0;
  std::vector<int> parent(ig.k, -2);
  std::deque<int> q{x};
  parent[x] = -1;
  while (!q.empty()) {
    int a = q.front();
    q.pop_front();
    if (a == w) break;
    for (int b : ig.neighbors[a]) {
      if (banned[b] || parent[b] != -2) continue;
      parent[b] = a;
      q.push_back(b);
    }
  }
  if (parent[w] == -2) return {};
  std::vector<int> cycle{v};
  for (int a = w; a >= 0; a = parent[a]) cycle.push_back(a);
  std::reverse(cycle.begin() + 1, cycle.end());  // v, x, ..., w
  return cycle;
}

// Every chordless cycle c1..ck contains the triple (c2; c1, c3) whose
// closing path avoids N[c2], so scanning all triples is complete.
std::vector<int> find_chordless_cycle(const IntersectionGraph& ig) {
  for (int v = 0; v < ig.k; ++v)
    for (std::size_t i = 0; i < ig.neighbors[v].size(); ++i)
      for (std::size_t j = i + 1; j < ig.neighbors[v].size(); ++j) {
        int x = ig.neighbors[v][i], w = ig.neighbors[v][j];
        if (ig.adj[x][w]) continue;
        auto cycle = cycle_through(ig, v, x, w);
        if (!cycle.empty()) return cycle;
      }
  return {};
}

}  // namespace

PeoResult peo(const IntersectionGraph& ig) {
  PeoResult res;
  int k = ig.k;
  if (k == 0) {
    res.chordal = true;
    return res;
  }
  // maximum cardinality search, smallest id on ties; produces a reverse PEO
  std::vector<int> weight(k, 0), mcs;
  std::vector<char> taken(k, 0);
  for (int step = 0; step < k; ++step) {
    int pick = -1;
    for (int a = 0; a < k; ++a)
      if (!taken[a] && (pick < 0 || weight[a] > weight[pick])) pick = a;
    taken[pick] = 1;
    mcs.push_back(pick);
    for (int b : ig.neighbors[pick])
      if (!taken[b]) ++weight[b];
  }
  std::vector<int> order(mcs.rbegin(), mcs.rend());  // elimination order
  std::vector<int> pos(k);
  for (int i = 0; i < k; ++i) pos[order[i]] = i;
  // verify: later neighbors of v must form a clique around the earliest one
  for (int i = 0; i < k; ++i) {
    int v = order[i];
    int anchor = -1;
    for (int nb : ig.neighbors[v])
      if (pos[nb] > i && (anchor < 0 || pos[nb] < pos[anchor])) anchor = nb;
    if (anchor < 0) continue;
    for (int nb : ig.neighbors[v]) {
      if (pos[nb] <= i || nb == anchor) continue;
      if (!ig.adj[anchor][nb]) {
        res.chordal = false;
        res.counterexample_cycle = find_chordless_cycle(ig);
        return res;
      }
    }
  }
  res.chordal = true;
  res.order = std::move(order);
  return res;
}

CliqueCover min_clique_cover(const IntersectionGraph& ig, const std::vector<int>& order) {
  if (int(order.size()) != ig.k)
    throw Error(ErrorKind::input, "elimination ordering does not cover the nodes");
  CliqueCover cover;
  std::vector<int> clique_of(ig.k, -1);
  std::vector<int> pos(ig.k);
  for (int i = 0; i < ig.k; ++i) pos[order[i]] = i;
  // greedy independent set in PEO order; each chosen node opens a clique
  for (int i = 0; i < ig.k; ++i) {
    int v = order[i];
    bool independent = true;
    for (int c : cover.independent_set)
      if (ig.adj[c][v]) {
        independent = false;
        break;
      }
    if (independent) {
      clique_of[v] = int(cover.cliques.size());
      cover.independent_set.push_back(v);
      cover.cliques.push_back({v});
    }
  }
  // assign every other node to the clique of the first chosen node it touches
  for (int i = 0; i < ig.k; ++i) {
    int v = order[i];
    if (clique_of[v] >= 0) continue;
    for (int j = 0; j < i; ++j) {
      int c = order[j];
      if (clique_of[c] >= 0 && cover.cliques[clique_of[c]][0] == c && ig.adj[c][v]) {
        clique_of[v] = clique_of[c];
        cover.cliques[clique_of[c]].push_back(v);
        break;
      }
    }
    if (clique_of[v] < 0)
      throw Error(ErrorKind::property, "internal: node not covered by the Gavril scan");
  }
  // Helly witnesses: a vertex common to all far sides of each clique
  for (auto& clique : cover.cliques) {
    VertexSet common = ig.far_side[clique[0]];
    for (std::size_t i = 1; i < clique.size(); ++i) common &= ig.far_side[clique[i]];
    if (common.none())
      throw Error(ErrorKind::property,
                  "clique far sides have empty intersection at base vertex " +
                      std::to_string(ig.base_vertex) +
                      "; the arrangement hypotheses do not hold");
    cover.witness.push_back(common.first());
  }
  return cover;
}

QuadReport validate_quad(const Graph& g, const CutPartition&,
                         const std::optional<RotationSystem>& rotation) {
  QuadReport rep;
  rep.n = g.n;
  rep.m = g.m();
  rep.euler_ok = rep.m == 2 * rep.n - 4;
  if (!rotation) return rep;
  rep.rotation_checked = true;
  const RotationSystem& rot = *rotation;
  // face tracing over darts: after entering v from u, leave along the
  // successor of u in the rotation at v
  std::map<std::pair<int, int>, int> dart_face;
  rep.faces_ok = true;
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adj[u]) {
      if (dart_face.count({u, v})) continue;
      int len = 0;
      int a = u, b = v;
      do {
        dart_face[{a, b}] = rep.num_faces;
        ++len;
        auto& rb = rot[b];
        int idx = int(std::find(rb.begin(), rb.end(), a) - rb.begin());
        int c = rb[(idx + 1) % rb.size()];
        a = b;
        b = c;
      } while (!(a == u && b == v));
      rep.face_lengths.push_back(len);
      ++rep.num_faces;
      if (len != 4) rep.faces_ok = false;
    }
  // Euler formula sanity for the traced embedding
  if (rep.n - rep.m + rep.num_faces != 2) rep.faces_ok = false;
  return rep;
}

QuadHullSolution hull_number_quad(const Graph& g, QuadMode mode,
                                  const std::optional<RotationSystem>& rotation) {
  auto d = all_pairs_distances(g);
  auto rec = recognize(g, d);
  if (!rec.accepted())
    throw Error(ErrorKind::property, "not a partial cube: " + rec.rejection->describe());
  const CutPartition& cp = rec.cuts;

  if (mode == QuadMode::strict) {
    if (!rotation)
      throw Error(ErrorKind::input, "strict mode requires a rotation system");
    auto rep = validate_quad(g, cp, rotation);
    if (!rep.pass())
      throw Error(ErrorKind::property, "graph is not a plane quadrangulation");
  }

  QuadHullSolution sol;
  std::vector<std::vector<int>> best_witnesses;
  for (int v = 0; v < g.n; ++v) {
    auto ig = intersection_graph(g, cp, v);
    auto elim = peo(ig);
    if (!elim.chordal) {
      // strict mode promised a plane quadrangulation, so this cannot happen;
      // trusted mode skips the base and leans on the remaining certificates
      if (mode == QuadMode::strict)
        throw Error(ErrorKind::property,
                    "far-side intersection graph at base vertex " + std::to_string(v) +
                        " is not chordal");
      sol.h_values.push_back(-1);
      continue;
    }
    std::optional<CliqueCover> maybe_cover;
    try {
      maybe_cover = min_clique_cover(ig, elim.order);
    } catch (const Error&) {
      if (mode == QuadMode::strict) throw;
      sol.h_values.push_back(-1);
      continue;
    }
    const CliqueCover& cover = *maybe_cover;
    int hv = int(cover.cliques.size());
    if (mode == QuadMode::trusted) {
      // runtime certificate: agree with the generic exact hitting-set value
      if (h_v(g, cp, v).size != hv)
        throw Error(ErrorKind::property,
                    "clique-cover value disagrees with the exact hitting set at base vertex " +
                        std::to_string(v));
    }
    sol.h_values.push_back(hv);
    if (sol.best_v < 0 || hv + 1 < sol.size) {
      sol.size = hv + 1;
      sol.best_v = v;
      sol.witness = VertexSet(g.n);
      sol.witness.set(v);
      for (int w : cover.witness) sol.witness.set(w);
    }
  }
  if (sol.best_v < 0)
    throw Error(ErrorKind::property, "no base vertex was accepted");
  if (hull_halfspace(g, cp, sol.witness) != VertexSet::full(g.n))
    throw Error(ErrorKind::property, "internal: quadrangulation witness is not a hull set");
  return sol;
}

}  // namespace cubehull
