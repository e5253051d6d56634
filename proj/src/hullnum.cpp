#include "cubehull/hullnum.hpp"

#include <algorithm>

#include "cubehull/convexity.hpp"

namespace cubehull {

HittingInstance hitting_instance(const Graph& g, const CutPartition& cp) {
  HittingInstance inst;
  inst.universe = g.n;
  for (std::size_t i = 0; i < cp.cuts.size(); ++i) {
    inst.sets.push_back(cp.cuts[i].minus);
    inst.origin.push_back({int(i), -1});
    inst.sets.push_back(cp.cuts[i].plus);
    inst.origin.push_back({int(i), +1});
  }
  return inst;
}

namespace {

struct Solver {
  const std::vector<VertexSet>& sets;
  int n;
  int best;  // best size found so far
  VertexSet best_set;

  Solver(const std::vector<VertexSet>& sets, int n)
      : sets(sets), n(n), best(n + 1), best_set(n) {}

  std::vector<int> unhit_indices(const VertexSet& chosen) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < sets.size(); ++i)
      if (!sets[i].intersects(chosen)) out.push_back(int(i));
    return out;
  }

  // greedy pairwise-disjoint subfamily of the unhit sets
  int lower_bound(const std::vector<int>& unhit) const {
    VertexSet used(n);
    int lb = 0;
    for (int i : unhit)
      if (!sets[i].intersects(used)) {
        used |= sets[i];
        ++lb;
      }
    return lb;
  }

  // greedy max-coverage seed for the upper bound
  void seed_greedy() {
    VertexSet chosen(n);
    auto unhit = unhit_indices(chosen);
    while (!unhit.empty()) {
      int best_v = -1, best_c = -1;
      for (int v = 0; v < n; ++v) {
        int c = 0;
        for (int i : unhit)
          if (sets[i].test(v)) ++c;
        if (c > best_c) {
          best_c = c;
          best_v = v;
        }
      }
      chosen.set(best_v);
      std::vector<int> rest;
      for (int i : unhit)
        if (!sets[i].test(best_v)) rest.push_back(i);
      unhit = std::move(rest);
    }
    best = chosen.count();
    best_set = chosen;
  }

  void search(VertexSet& chosen, int chosen_count, const std::vector<int>& unhit) {
    if (unhit.empty()) {
      if (chosen_count < best) {
        best = chosen_count;
        best_set = chosen;
      }
      return;
    }
    if (chosen_count + lower_bound(unhit) >= best) return;
    // branch on the smallest unhit set, smallest index on ties
    int pick = unhit[0];
    for (int i : unhit)
      if (sets[i].count() < sets[pick].count()) pick = i;
    for (int v = sets[pick].first(); v >= 0; v = sets[pick].next(v)) {
      chosen.set(v);
      std::vector<int> rest;
      rest.reserve(unhit.size());
      for (int i : unhit)
        if (!sets[i].test(v)) rest.push_back(i);
      search(chosen, chosen_count + 1, rest);
      chosen.reset(v);
    }
  }

  // decision variant: can the unhit sets be hit with at most budget vertices?
  bool feasible(const std::vector<int>& unhit, int budget) {
    if (unhit.empty()) return true;
    if (lower_bound(unhit) > budget) return false;
    int pick = unhit[0];
    for (int i : unhit)
      if (sets[i].count() < sets[pick].count()) pick = i;
    for (int v = sets[pick].first(); v >= 0; v = sets[pick].next(v)) {
      std::vector<int> rest;
      rest.reserve(unhit.size());
      for (int i : unhit)
        if (!sets[i].test(v)) rest.push_back(i);
      if (feasible(rest, budget - 1)) return true;
    }
    return false;
  }
};

}  // namespace

HittingSolution min_hitting_set(const HittingInstance& inst) {
  for (auto& s : inst.sets)
    if (s.none()) throw Error(ErrorKind::input, "hitting instance contains an empty set");

  Solver solver(inst.sets, inst.universe);
  if (inst.sets.empty()) return {0, VertexSet(inst.universe)};
  solver.seed_greedy();
  VertexSet chosen(inst.universe);
  auto all = solver.unhit_indices(chosen);
  solver.search(chosen, 0, all);
  int opt = solver.best;

  // canonicalization: build the lexicographically smallest optimum
  VertexSet witness(inst.universe);
  std::vector<int> unhit = all;
  int budget = opt;
  int v = 0;
  while (!unhit.empty()) {
    for (;; ++v) {
      bool useful = false;
      for (int i : unhit)
        if (inst.sets[i].test(v)) {
          useful = true;
          break;
        }
      if (!useful) continue;
      std::vector<int> rest;
      for (int i : unhit)
        if (!inst.sets[i].test(v)) rest.push_back(i);
      if (solver.feasible(rest, budget - 1)) {
        witness.set(v);
        unhit = std::move(rest);
        --budget;
        ++v;
        break;
      }
    }
  }
  return {opt, witness};
}

HittingSolution h_v(const Graph& g, const CutPartition& cp, int v) {
  HittingInstance inst;
  inst.universe = g.n;
  for (std::size_t i = 0; i < cp.cuts.size(); ++i) {
    const Cut& cut = cp.cuts[i];
    inst.sets.push_back(cut.far_side_of(v));
    inst.origin.push_back({int(i), 0});
  }
  return min_hitting_set(inst);
}

HittingSolution hull_number_exact(const Graph& g) {
  auto rec = recognize(g);
  if (!rec.accepted())
    throw Error(ErrorKind::property, "not a partial cube: " + rec.rejection->describe());
  return hull_number_exact(g, rec.cuts);
}

HittingSolution hull_number_exact(const Graph& g, const CutPartition& cp) {
  auto sol = min_hitting_set(hitting_instance(g, cp));
  if (sol.size == 0) {
    // single-vertex graph: the smallest hull set is a single vertex
    sol.size = 1;
    sol.witness = VertexSet(g.n);
    sol.witness.set(0);
  }
  if (hull_halfspace(g, cp, sol.witness) != VertexSet::full(g.n))
    throw Error(ErrorKind::property, "internal: hull-number witness is not a hull set");
  return sol;
}

OneSidedSolution hull_number_onesided(const Graph& g) {
  auto rec = recognize(g);
  if (!rec.accepted())
    throw Error(ErrorKind::property, "not a partial cube: " + rec.rejection->describe());
  return hull_number_onesided(g, rec.cuts);
}

OneSidedSolution hull_number_onesided(const Graph& g, const CutPartition& cp) {
  OneSidedSolution best;
  for (int v = 0; v < g.n; ++v) {
    auto sol = h_v(g, cp, v);
    if (best.best_v < 0 || sol.size < best.size - 1) {
      best.size = sol.size + 1;
      best.best_v = v;
      best.witness = sol.witness;
      best.witness.set(v);
    }
  }
  return best;
}

bool is_hull_set(const Graph& g, const DistanceMatrix& d, const VertexSet& s) {
  if (s.none()) throw Error(ErrorKind::input, "hull of the empty set is undefined");
  return hull_closure(g, d, s) == VertexSet::full(g.n);
}

namespace {

bool any_subset_is_hull(const Graph& g, const DistanceMatrix& d, int k, int start,
                        VertexSet& cur, VertexSet& out) {
  if (k == 0) {
    if (hull_closure(g, d, cur) == VertexSet::full(g.n)) {
      out = cur;
      return true;
    }
    return false;
  }
  for (int v = start; v <= g.n - k; ++v) {
    cur.set(v);
    if (any_subset_is_hull(g, d, k - 1, v + 1, cur, out)) {
      cur.reset(v);
      return true;
    }
    cur.reset(v);
  }
  return false;
}

}  // namespace

HittingSolution hull_number_brute(const Graph& g, const DistanceMatrix& d) {
  if (g.n > 24)
    throw Error(ErrorKind::bound,
                "brute-force subset search refuses n > 24 (n = " + std::to_string(g.n) + ")");
  for (int k = 1; k <= g.n; ++k) {
    VertexSet cur(g.n), out(g.n);
    if (any_subset_is_hull(g, d, k, 0, cur, out)) return {k, out};
  }
  throw Error(ErrorKind::property, "internal: no hull set found");  // unreachable
}

}  // namespace cubehull
