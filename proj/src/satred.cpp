#include "cubehull/satred.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "cubehull/convexity.hpp"
#include "cubehull/hullnum.hpp"

namespace cubehull {

namespace {

void validate_am3(const CnfFormula& f) {
  std::vector<int> clause_count(f.num_vars + 1, 0);
  for (auto& cl : f.clauses) {
    if (cl.empty()) throw Error(ErrorKind::input, "empty clause");
    if (cl.size() > 3)
      throw Error(ErrorKind::input, "clause with more than three literals");
    std::set<int> vars;
    for (int lit : cl) {
      int v = std::abs(lit);
      if (v < 1 || v > f.num_vars)
        throw Error(ErrorKind::input, "literal out of range: " + std::to_string(lit));
      if (!vars.insert(v).second)
        throw Error(ErrorKind::input,
                    "clause mentions variable " + std::to_string(v) + " twice");
    }
    for (int v : vars) clause_count[v]++;
  }
  for (int v = 1; v <= f.num_vars; ++v)
    if (clause_count[v] > 3)
      throw Error(ErrorKind::input,
                  "variable " + std::to_string(v) + " occurs in more than three clauses");
}

}  // namespace

CnfFormula parse_dimacs(std::istream& in) {
  CnfFormula f;
  int declared_clauses = -1;
  std::string line;
  std::vector<int> current;
  bool saw_header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == 'c' || line[0] == '%') continue;
    std::istringstream ls(line);
    if (line[0] == 'p') {
      std::string p, fmt;
      if (!(ls >> p >> fmt >> f.num_vars >> declared_clauses) || fmt != "cnf")
        throw Error(ErrorKind::input, "malformed DIMACS header");
      if (f.num_vars < 0 || declared_clauses < 0)
        throw Error(ErrorKind::input, "malformed DIMACS header");
      saw_header = true;
      continue;
    }
    if (!saw_header) throw Error(ErrorKind::input, "clause before DIMACS header");
    int lit;
    while (ls >> lit) {
      if (lit == 0) {
        f.clauses.push_back(current);
        current.clear();
      } else {
        current.push_back(lit);
      }
    }
    if (!ls.eof()) throw Error(ErrorKind::input, "malformed DIMACS literal");
  }
  if (!saw_header) throw Error(ErrorKind::input, "missing DIMACS header");
  if (!current.empty()) throw Error(ErrorKind::input, "clause not terminated by 0");
  if (int(f.clauses.size()) != declared_clauses)
    throw Error(ErrorKind::input, "clause count mismatch with header");
  for (auto& cl : f.clauses) {
    std::sort(cl.begin(), cl.end(),
              [](int a, int b) { return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : a < b; });
    cl.erase(std::unique(cl.begin(), cl.end()), cl.end());
    for (std::size_t i = 0; i + 1 < cl.size(); ++i)
      for (std::size_t j = i + 1; j < cl.size(); ++j)
        if (cl[i] == -cl[j])
          throw Error(ErrorKind::input, "tautological clause (contains a literal and its negation)");
  }
  validate_am3(f);
  return f;
}

CnfFormula parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

PreprocessResult preprocess_pure_literals(const CnfFormula& f) {
  validate_am3(f);
  std::vector<std::vector<int>> clauses = f.clauses;
  PreprocessResult out;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> pos(f.num_vars + 1, 0), neg(f.num_vars + 1, 0);
    for (auto& cl : clauses)
      for (int lit : cl) (lit > 0 ? pos : neg)[std::abs(lit)]++;
    for (int v = 1; v <= f.num_vars; ++v) {
      if (pos[v] + neg[v] == 0) continue;
      if (pos[v] > 0 && neg[v] > 0) continue;
      bool value = pos[v] > 0;
      out.forced.emplace_back(v, value);
      int sat_lit = value ? v : -v;
      std::vector<std::vector<int>> rest;
      for (auto& cl : clauses)
        if (std::find(cl.begin(), cl.end(), sat_lit) == cl.end()) rest.push_back(cl);
      clauses = std::move(rest);
      changed = true;
      break;
    }
  }
  // compact renumbering of the surviving variables
  std::vector<int> new_id(f.num_vars + 1, 0);
  for (auto& cl : clauses)
    for (int lit : cl)
      if (!new_id[std::abs(lit)]) {
        new_id[std::abs(lit)] = -1;  // mark used
      }
  int k = 0;
  for (int v = 1; v <= f.num_vars; ++v)
    if (new_id[v]) {
      new_id[v] = ++k;
      out.original_var.push_back(v);
    }
  out.reduced.num_vars = k;
  for (auto& cl : clauses) {
    std::vector<int> mapped;
    for (int lit : cl) mapped.push_back(lit > 0 ? new_id[lit] : -new_id[-lit]);
    std::sort(mapped.begin(), mapped.end(),
              [](int a, int b) { return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : a < b; });
    out.reduced.clauses.push_back(std::move(mapped));
  }
  return out;
}

bool evaluate(const CnfFormula& f, const std::vector<bool>& a) {
  for (auto& cl : f.clauses) {
    bool sat = false;
    for (int lit : cl) {
      int v = std::abs(lit) - 1;
      if ((lit > 0) == bool(a[v])) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

std::optional<std::vector<bool>> solve_bruteforce(const CnfFormula& f) {
  if (f.num_vars > 20)
    throw Error(ErrorKind::bound, "exhaustive SAT search refuses more than 20 variables");
  std::vector<bool> a(f.num_vars);
  for (std::uint64_t mask = 0; mask < (1ull << f.num_vars); ++mask) {
    for (int v = 0; v < f.num_vars; ++v) a[v] = (mask >> v) & 1;
    if (evaluate(f, a)) return a;
  }
  return std::nullopt;
}

namespace {

// occurrences of a literal: clause indices, ascending
std::vector<int> occurrences(const CnfFormula& f, int lit) {
  std::vector<int> out;
  for (std::size_t i = 0; i < f.clauses.size(); ++i)
    if (std::find(f.clauses[i].begin(), f.clauses[i].end(), lit) != f.clauses[i].end())
      out.push_back(int(i));
  return out;
}

}  // namespace

GadgetGraph build_gadget(const CnfFormula& reduced) {
  validate_am3(reduced);
  int n = reduced.num_vars;
  int m = int(reduced.clauses.size());
  if (n < 1) throw Error(ErrorKind::input, "gadget build needs at least one variable");
  for (int v = 1; v <= n; ++v) {
    if (occurrences(reduced, v).empty() || occurrences(reduced, -v).empty())
      throw Error(ErrorKind::input,
                  "formula is not preprocessed: variable " + std::to_string(v) +
                      " does not occur in both polarities");
  }

  GadgetGraph gg;
  gg.formula = reduced;
  std::vector<GadgetGraph::VertexRole> roles;
  std::vector<std::pair<int, int>> edges;
  auto add_vertex = [&](GadgetGraph::VertexRole r) {
    roles.push_back(std::move(r));
    return int(roles.size()) - 1;
  };

  gg.u = add_vertex({GadgetGraph::Role::u, -1, -1, -1, "u"});
  gg.u_prime = add_vertex({GadgetGraph::Role::u_prime, -1, -1, -1, "u'"});
  edges.emplace_back(gg.u, gg.u_prime);

  for (int i = 0; i < m; ++i) {
    int di = add_vertex({GadgetGraph::Role::clause, i, -1, -1, "d" + std::to_string(i + 1)});
    gg.clause_vertex.push_back(di);
    edges.emplace_back(gg.u, di);
  }

  // shared vertices: one per unordered clause pair sharing at least one literal
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      bool share = false;
      for (int lit : reduced.clauses[i])
        if (std::find(reduced.clauses[j].begin(), reduced.clauses[j].end(), lit) !=
            reduced.clauses[j].end()) {
          share = true;
          break;
        }
      if (!share) continue;
      int dij = add_vertex({GadgetGraph::Role::shared, i, j, -1,
                            "d{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}"});
      gg.shared_vertex[{i, j}] = dij;
      edges.emplace_back(gg.clause_vertex[i], dij);
      edges.emplace_back(gg.clause_vertex[j], dij);
    }

  // per variable x: a copy G_x of the subgraph induced by u, the clause
  // vertices of clauses containing x or xbar, and the shared vertices whose
  // shared literal is over x; joined to the originals by a matching M_x
  for (int x = 1; x <= n; ++x) {
    std::string xs = "x" + std::to_string(x);
    int ux = add_vertex({GadgetGraph::Role::copy_u, -1, -1, x - 1, "u:" + xs});
    gg.copy_u.push_back(ux);
    edges.emplace_back(gg.u, ux);  // M_x

    std::vector<int> clause_ids;
    for (std::size_t i = 0; i < reduced.clauses.size(); ++i)
      for (int lit : reduced.clauses[i])
        if (std::abs(lit) == x) clause_ids.push_back(int(i));
    std::sort(clause_ids.begin(), clause_ids.end());

    for (int i : clause_ids) {
      int c = add_vertex({GadgetGraph::Role::copy_clause, i, -1, x - 1,
                          "d" + std::to_string(i + 1) + ":" + xs});
      gg.copy_clause[{i, x - 1}] = c;
      edges.emplace_back(ux, c);                  // copy of {u, d_i}
      edges.emplace_back(gg.clause_vertex[i], c);  // M_x
    }
    for (auto& [pair, dij] : gg.shared_vertex) {
      auto [i, j] = pair;
      bool same_literal = false;
      for (int lit : reduced.clauses[i])
        if (std::abs(lit) == x &&
            std::find(reduced.clauses[j].begin(), reduced.clauses[j].end(), lit) !=
                reduced.clauses[j].end()) {
          same_literal = true;
          break;
        }
      if (!same_literal) continue;
      int c = add_vertex({GadgetGraph::Role::copy_shared, i, j, x - 1,
                          "d{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}:" + xs});
      gg.copy_shared[{i, j, x - 1}] = c;
      edges.emplace_back(gg.copy_clause[{i, x - 1}], c);  // copies of the shared edges
      edges.emplace_back(gg.copy_clause[{j, x - 1}], c);
      edges.emplace_back(dij, c);  // M_x
    }
  }

  gg.graph = make_graph(int(roles.size()), edges);
  gg.role_of = std::move(roles);
  gg.dist = all_pairs_distances(gg.graph);

  // literal anchors v_l: the copy of d_i (one occurrence) or d_{i,j} (two)
  for (int x = 1; x <= n; ++x)
    for (int sign : {+1, -1}) {
      int lit = sign * x;
      auto occ = occurrences(reduced, lit);
      if (occ.size() == 1) {
        gg.literal_anchor[lit] = gg.copy_clause.at({occ[0], x - 1});
      } else if (occ.size() == 2) {
        gg.literal_anchor[lit] = gg.copy_shared.at({occ[0], occ[1], x - 1});
      } else {
        throw Error(ErrorKind::input,
                    "literal " + std::to_string(lit) + " occurs " +
                        std::to_string(occ.size()) + " times; SAT-AM3 allows one or two");
      }
    }

  // the labeled cut-partition of the construction
  int expected_cuts = n + m + 1;
  std::vector<std::vector<int>> labeled(expected_cuts);  // 0: {u,u'}; 1..m: clauses; m+1..: vars
  std::vector<GadgetGraph::CutTag> tags(expected_cuts);
  tags[0] = {GadgetGraph::CutRole::u_uprime, -1};
  for (int i = 0; i < m; ++i) tags[1 + i] = {GadgetGraph::CutRole::clause_cut, i};
  for (int x = 0; x < n; ++x) tags[1 + m + x] = {GadgetGraph::CutRole::var_cut, x};

  auto label_edge = [&](int a, int b, int cut) {
    int e = gg.graph.edge_index(a, b);
    labeled[cut].push_back(e);
  };
  label_edge(gg.u, gg.u_prime, 0);
  for (int i = 0; i < m; ++i) label_edge(gg.u, gg.clause_vertex[i], 1 + i);
  for (auto& [pair, dij] : gg.shared_vertex) {
    auto [i, j] = pair;
    label_edge(dij, gg.clause_vertex[j], 1 + i);  // cut C_i holds the edge to d_j
    label_edge(dij, gg.clause_vertex[i], 1 + j);  // cut C_j holds the edge to d_i
  }
  for (int x = 0; x < n; ++x) {
    label_edge(gg.u, gg.copy_u[x], 1 + m + x);
    for (auto& [key, c] : gg.copy_clause) {
      if (key.second != x) continue;
      label_edge(gg.copy_u[x], c, 1 + key.first);             // copy of {u, d_i}
      label_edge(gg.clause_vertex[key.first], c, 1 + m + x);  // M_x
    }
    for (auto& [key, c] : gg.copy_shared) {
      auto [i, j, var] = key;
      if (var != x) continue;
      label_edge(c, gg.copy_clause.at({j, x}), 1 + i);
      label_edge(c, gg.copy_clause.at({i, x}), 1 + j);
      label_edge(gg.shared_vertex.at({i, j}), c, 1 + m + x);  // M_x
    }
  }

  // certificate: recognition must accept and reproduce the labeled partition
  auto rec = recognize(gg.graph, gg.dist);
  if (!rec.accepted())
    throw Error(ErrorKind::property,
                "gadget construction failed recognition: " + rec.rejection->describe());
  if (int(rec.cuts.cuts.size()) != expected_cuts)
    throw Error(ErrorKind::property,
                "gadget cut census mismatch: expected " + std::to_string(expected_cuts) +
                    ", theta yields " + std::to_string(rec.cuts.cuts.size()));
  gg.cuts = std::move(rec.cuts);
  gg.cut_role.assign(expected_cuts, {});
  for (int c = 0; c < expected_cuts; ++c) {
    std::sort(labeled[c].begin(), labeled[c].end());
    int theta_id = gg.cuts.class_of[labeled[c][0]];
    auto theta_edges = gg.cuts.cuts[theta_id].edge_ids;
    std::sort(theta_edges.begin(), theta_edges.end());
    if (theta_edges != labeled[c])
      throw Error(ErrorKind::property,
                  "gadget labeled cut does not match its theta class");
    gg.cut_role[theta_id] = tags[c];
  }
  return gg;
}

VertexSet assignment_to_hull_set(const GadgetGraph& gg, const std::vector<bool>& a) {
  if (int(a.size()) != gg.num_vars())
    throw Error(ErrorKind::input, "assignment does not cover every variable");
  VertexSet h(gg.graph.n);
  h.set(gg.u_prime);
  for (int x = 1; x <= gg.num_vars(); ++x)
    h.set(gg.literal_anchor.at(a[x - 1] ? x : -x));
  return h;
}

std::vector<bool> hull_set_to_assignment(const GadgetGraph& gg, const VertexSet& h) {
  int n = gg.num_vars();
  if (h.count() > n + 1)
    throw Error(ErrorKind::input, "hull set larger than n+1");
  if (hull_closure(gg.graph, gg.dist, h) != VertexSet::full(gg.graph.n))
    throw Error(ErrorKind::input, "given set is not a hull set of the gadget");
  if (!h.test(gg.u_prime))
    throw Error(ErrorKind::input, "malformed hull set: u' missing");
  std::vector<bool> a(n);
  for (int x = 0; x < n; ++x) {
    int hx = -1;
    for (int v = h.first(); v >= 0; v = h.next(v))
      if (gg.in_copy(v, x)) {
        if (hx >= 0)
          throw Error(ErrorKind::input, "malformed hull set: two vertices in one variable gadget");
        hx = v;
      }
    if (hx < 0)
      throw Error(ErrorKind::input, "malformed hull set: no vertex in a variable gadget");
    int vx = gg.literal_anchor.at(x + 1);
    // normalization: a copy vertex on a shortest (u',v_x)-path reads as v_x
    a[x] = gg.dist[gg.u_prime][hx] + gg.dist[hx][vx] == gg.dist[gg.u_prime][vx];
  }
  return a;
}

ReductionReport verify_reduction(const CnfFormula& f) {
  auto pre = preprocess_pure_literals(f);
  ReductionReport rep;
  rep.n = pre.reduced.num_vars;
  rep.m = int(pre.reduced.clauses.size());
  rep.n_plus_1 = rep.n + 1;
  rep.expected_cuts = rep.n + rep.m + 1;
  if (pre.empty()) {
    rep.reduced_empty = true;
    rep.satisfiable = true;
    rep.biconditional_holds = true;
    return rep;
  }
  if (rep.n > 8)
    throw Error(ErrorKind::bound, "verify_reduction refuses reduced formulas with n > 8");
  rep.satisfiable = solve_bruteforce(pre.reduced).has_value();
  auto gg = build_gadget(pre.reduced);
  rep.recognized = true;
  rep.num_cuts = int(gg.cuts.cuts.size());
  rep.hull_number = hull_number_exact(gg.graph, gg.cuts).size;
  rep.biconditional_holds = rep.satisfiable == (rep.hull_number <= rep.n_plus_1);
  return rep;
}

}  // namespace cubehull
