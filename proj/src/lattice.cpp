#include "cubehull/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <unordered_set>

#include "cubehull/convexity.hpp"
#include "cubehull/pcube.hpp"

namespace cubehull {

int ConvexLattice::index_of(const VertexSet& s) const {
  auto key = [](const VertexSet& a, const VertexSet& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return VertexSet::lex_less(a, b);
  };
  auto it = std::lower_bound(elements.begin(), elements.end(), s, key);
  if (it == elements.end() || !(*it == s)) return -1;
  return int(it - elements.begin());
}

int ConvexLattice::meet(int x, int y) const {
  int id = index_of(elements[x] & elements[y]);
  if (id < 0) throw Error(ErrorKind::property, "lattice is not closed under intersection");
  return id;
}

int ConvexLattice::smallest_above(const VertexSet& s) const {
  // intersection of all upper bounds; present by meet-closure
  VertexSet acc = elements[top];
  bool found = false;
  for (auto& e : elements)
    if (s.is_subset_of(e)) {
      acc &= e;
      found = true;
    }
  if (!found) return -1;
  return index_of(acc);
}

int ConvexLattice::join(int x, int y) const {
  int id = smallest_above(elements[x] | elements[y]);
  if (id < 0) throw Error(ErrorKind::property, "join not found; lattice is malformed");
  return id;
}

std::vector<VertexSet> convex_subgraphs(const Graph& g) {
  std::unordered_set<VertexSet, VertexSetHash> seen;
  std::vector<VertexSet> sets;
  auto add = [&](const VertexSet& s) {
    if (seen.insert(s).second) {
      sets.push_back(s);
      return true;
    }
    return false;
  };

  auto d = all_pairs_distances(g);
  auto rec = recognize(g, d);
  if (rec.accepted()) {
    // intersection closure of the cut sides and the full set
    add(VertexSet::full(g.n));
    for (auto& cut : rec.cuts.cuts) {
      add(cut.minus);
      add(cut.plus);
    }
    std::size_t frontier_begin = 0;
    while (frontier_begin < sets.size()) {
      std::size_t frontier_end = sets.size();
      for (std::size_t i = frontier_begin; i < frontier_end; ++i)
        for (auto& cut : rec.cuts.cuts)
          for (const VertexSet* side : {&cut.minus, &cut.plus}) {
            VertexSet inter = sets[i] & *side;
            if (inter.any()) add(inter);
          }
      frontier_begin = frontier_end;
    }
    add(VertexSet(g.n));  // empty set as the lattice bottom
  } else {
    if (g.n > 20)
      throw Error(ErrorKind::bound,
                  "convex-set enumeration on general graphs refuses n > 20");
    add(VertexSet(g.n));
    // interval table, then subset filtering
    std::vector<std::vector<VertexSet>> iv(g.n, std::vector<VertexSet>(g.n, VertexSet(g.n)));
    for (int u = 0; u < g.n; ++u)
      for (int w = u + 1; w < g.n; ++w) iv[u][w] = interval(g, d, u, w);
    for (std::uint64_t mask = 1; mask < (1ull << g.n); ++mask) {
      VertexSet s(g.n);
      for (int v = 0; v < g.n; ++v)
        if ((mask >> v) & 1) s.set(v);
      bool convex = true;
      auto vs = s.members();
      for (std::size_t i = 0; i < vs.size() && convex; ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
          if (!iv[vs[i]][vs[j]].is_subset_of(s)) {
            convex = false;
            break;
          }
      if (convex) add(s);
    }
  }
  std::sort(sets.begin(), sets.end(), [](const VertexSet& a, const VertexSet& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return VertexSet::lex_less(a, b);
  });
  return sets;
}

ConvexLattice build_lattice(int graph_n, std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end(), [](const VertexSet& a, const VertexSet& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return VertexSet::lex_less(a, b);
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  if (sets.empty()) throw Error(ErrorKind::input, "lattice needs at least one element");

  ConvexLattice l;
  l.graph_n = graph_n;
  l.elements = std::move(sets);
  l.bottom = 0;
  l.top = int(l.elements.size()) - 1;
  // bottom must be below everything, top above everything
  for (auto& e : l.elements)
    if (!l.elements[l.bottom].is_subset_of(e) || !e.is_subset_of(l.elements[l.top]))
      throw Error(ErrorKind::input, "element family has no bottom/top");

  // meet closure
  std::unordered_set<VertexSet, VertexSetHash> present(l.elements.begin(), l.elements.end());
  for (std::size_t i = 0; i < l.elements.size(); ++i)
    for (std::size_t j = i + 1; j < l.elements.size(); ++j) {
      VertexSet inter = l.elements[i] & l.elements[j];
      if (!l.elements[l.bottom].is_subset_of(inter)) inter = l.elements[l.bottom];
      if (!present.count(inter))
        throw Error(ErrorKind::input, "element family is not closed under intersection");
    }

  // cover relation: for each x scan supersets in size order, keeping the
  // minimal ones
  int ne = int(l.elements.size());
  l.upper_covers.assign(ne, {});
  l.lower_covers.assign(ne, {});
  for (int x = 0; x < ne; ++x) {
    for (int y = x + 1; y < ne; ++y) {
      if (!l.elements[x].is_subset_of(l.elements[y]) || l.elements[x] == l.elements[y]) continue;
      bool minimal = true;
      for (int z : l.upper_covers[x])
        if (l.elements[z].is_subset_of(l.elements[y])) {
          minimal = false;
          break;
        }
      if (minimal) {
        l.upper_covers[x].push_back(y);
        l.lower_covers[y].push_back(x);
      }
    }
  }
  l.atoms = l.upper_covers[l.bottom];
  return l;
}

ConvexLattice build_lattice_full(const Graph& g) {
  return build_lattice(g.n, convex_subgraphs(g));
}

ConvexLattice build_lattice_above(const Graph& g, int v) {
  if (v < 0 || v >= g.n) throw Error(ErrorKind::input, "base vertex out of range");
  std::vector<VertexSet> filtered;
  for (auto& s : convex_subgraphs(g))
    if (s.test(v)) filtered.push_back(s);
  return build_lattice(g.n, std::move(filtered));
}

std::vector<int> meet_irreducibles(const ConvexLattice& l) {
  std::vector<int> out;
  for (int x = 0; x < int(l.elements.size()); ++x)
    if (l.upper_covers[x].size() == 1) out.push_back(x);
  return out;
}

bool is_atomistic(const ConvexLattice& l) {
  for (int x = 0; x < int(l.elements.size()); ++x) {
    VertexSet u = l.elements[l.bottom];
    for (int a : l.atoms)
      if (l.leq(a, x)) u |= l.elements[a];
    if (l.smallest_above(u) != x) return false;
  }
  return true;
}

UldResult is_uld(const ConvexLattice& l) {
  auto mi = meet_irreducibles(l);
  for (int x = 0; x < int(l.elements.size()); ++x) {
    std::vector<int> above;
    for (int m : mi)
      if (l.leq(x, m)) above.push_back(m);
    auto meet_of = [&](const std::vector<int>& ms, int skip) {
      VertexSet acc = l.elements[l.top];  // meet of the empty family is the top
      for (int m : ms)
        if (m != skip) acc &= l.elements[m];
      return acc;
    };
    if (!(meet_of(above, -1) == l.elements[x])) return {false, x};
    std::vector<int> essential;
    for (int m : above)
      if (!(meet_of(above, m) == l.elements[x])) essential.push_back(m);
    if (!(meet_of(essential, -1) == l.elements[x])) return {false, x};
  }
  return {true, -1};
}

LatticeHullSolution hull_number_lattice(const ConvexLattice& l) {
  if (!is_atomistic(l))
    throw Error(ErrorKind::property, "lattice is not atomistic");
  int na = int(l.atoms.size());
  if (l.bottom == l.top) return {0, {}};
  int bound = std::max(1, int(std::ceil(std::log2(double(l.elements.size())))));
  bound = std::min(bound, na);
  std::vector<int> chosen;
  // increasing-k search over atom subsets in ascending id order
  std::function<bool(int, int, VertexSet&)> rec = [&](int k, int start, VertexSet& u) -> bool {
    if (k == 0) return l.smallest_above(u) == l.top;
    for (int i = start; i + k <= na; ++i) {
      VertexSet nu = u | l.elements[l.atoms[i]];
      chosen.push_back(l.atoms[i]);
      if (rec(k - 1, i + 1, nu)) return true;
      chosen.pop_back();
    }
    return false;
  };
  for (int k = 1; k <= bound; ++k) {
    VertexSet u = l.elements[l.bottom];
    chosen.clear();
    if (rec(k, 0, u)) return {k, chosen};
  }
  throw Error(ErrorKind::property,
              "no atom set within the log-size bound joins to the top");
}

Graph hasse_graph(const ConvexLattice& l) {
  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x < int(l.elements.size()); ++x)
    for (int y : l.upper_covers[x]) edges.emplace_back(x, y);
  return make_graph(int(l.elements.size()), edges);
}

EmbeddingReport verify_embedding(const Graph& g, int v, const ConvexLattice& l) {
  EmbeddingReport rep;
  // phi(u) = conv{v,u}, located inside the lattice
  std::vector<int> phi(g.n);
  for (int u = 0; u < g.n; ++u) {
    VertexSet s(g.n);
    s.set(v);
    s.set(u);
    phi[u] = l.smallest_above(s);
    if (phi[u] < 0) throw Error(ErrorKind::input, "lattice does not contain conv{v,u}");
  }
  for (int u = 0; u < g.n && rep.injective; ++u)
    for (int w = u + 1; w < g.n; ++w)
      if (phi[u] == phi[w]) {
        rep.injective = false;
        rep.fail_u = u;
        rep.fail_w = w;
        break;
      }
  for (auto [u, w] : g.edges) {
    bool cover = std::count(l.upper_covers[phi[u]].begin(), l.upper_covers[phi[u]].end(), phi[w]) ||
                 std::count(l.upper_covers[phi[w]].begin(), l.upper_covers[phi[w]].end(), phi[u]);
    if (!cover) {
      rep.edges_are_covers = false;
      rep.fail_u = u;
      rep.fail_w = w;
      break;
    }
  }
  auto hg = hasse_graph(l);
  auto hd = all_pairs_distances(hg);
  auto gd = all_pairs_distances(g);
  for (int u = 0; u < g.n && rep.isometric; ++u)
    for (int w = u + 1; w < g.n; ++w)
      if (hd[phi[u]][phi[w]] != gd[u][w]) {
        rep.isometric = false;
        rep.fail_u = u;
        rep.fail_w = w;
        break;
      }
  return rep;
}

}  // namespace cubehull
