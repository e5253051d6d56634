#include "cubehull/json_io.hpp"

#include <algorithm>

namespace cubehull {

json to_json(const VertexSet& s) { return json(s.members()); }

json graph_to_json(const Graph& g, const std::vector<std::string>& labels) {
  json j;
  j["n"] = g.n;
  j["m"] = g.m();
  json edges = json::array();
  for (auto [u, v] : g.edges) edges.push_back(json::array({u, v}));
  j["edges"] = std::move(edges);
  if (!labels.empty()) j["labels"] = labels;
  return j;
}

Graph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw Error(ErrorKind::input, "graph JSON needs \"n\" and \"edges\"");
  int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw Error(ErrorKind::input, "graph JSON edge must be a pair");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  if (j.contains("m") && j.at("m").get<int>() != int(edges.size()))
    throw Error(ErrorKind::input, "graph JSON edge count mismatch");
  return make_graph(n, std::move(edges));
}

json embedding_to_json(const Graph& g, const HypercubeEmbedding& emb,
                       const CutPartition& cp) {
  json j;
  j["n"] = g.n;
  j["dims"] = emb.dims;
  json coords = json::array();
  for (int v = 0; v < g.n; ++v) {
    std::string bits(emb.dims, '0');
    for (int i = 0; i < emb.dims; ++i)
      if (emb.coords[v].test(i)) bits[i] = '1';
    coords.push_back(bits);
  }
  j["coords"] = std::move(coords);
  json cuts = json::array();
  for (auto& c : cp.cuts) {
    json cj;
    json edges = json::array();
    for (int e : c.edge_ids)
      edges.push_back(json::array({g.edges[e].first, g.edges[e].second}));
    cj["edges"] = std::move(edges);
    cj["minus_size"] = c.minus.count();
    cj["plus_size"] = c.plus.count();
    cj["minus"] = to_json(c.minus);
    cuts.push_back(std::move(cj));
  }
  j["cuts"] = std::move(cuts);
  return j;
}

json rejection_to_json(const Rejection& r) {
  json j;
  switch (r.reason) {
    case Rejection::Reason::not_bipartite:
      j["reason"] = "not_bipartite";
      j["odd_closed_walk"] = r.odd_walk;
      break;
    case Rejection::Reason::bad_cut_class:
      j["reason"] = "bad_cut_class";
      j["class_edges"] = r.class_edges;
      j["num_components"] = r.num_components;
      break;
    case Rejection::Reason::not_isometric:
      j["reason"] = "not_isometric";
      j["pair"] = json::array({r.u, r.w});
      break;
  }
  j["detail"] = r.describe();
  return j;
}

json gadget_to_json(const GadgetGraph& gg) {
  std::vector<std::string> labels(gg.graph.n);
  for (int v = 0; v < gg.graph.n; ++v) labels[v] = gg.role_of[v].name;
  json j = graph_to_json(gg.graph, labels);
  j["num_vars"] = gg.num_vars();
  j["num_clauses"] = int(gg.formula.clauses.size());
  json cuts = json::array();
  for (std::size_t c = 0; c < gg.cuts.cuts.size(); ++c) {
    json cj;
    switch (gg.cut_role[c].role) {
      case GadgetGraph::CutRole::u_uprime: cj["role"] = "u_uprime"; break;
      case GadgetGraph::CutRole::clause_cut: cj["role"] = "clause"; break;
      case GadgetGraph::CutRole::var_cut: cj["role"] = "variable"; break;
    }
    cj["index"] = gg.cut_role[c].index;
    json edges = json::array();
    for (int e : gg.cuts.cuts[c].edge_ids)
      edges.push_back(json::array({gg.graph.edges[e].first, gg.graph.edges[e].second}));
    cj["edges"] = std::move(edges);
    cuts.push_back(std::move(cj));
  }
  j["cuts"] = std::move(cuts);
  return j;
}

json lattice_to_json(const ConvexLattice& l) {
  json j;
  j["graph_n"] = l.graph_n;
  json elems = json::array();
  for (auto& e : l.elements) elems.push_back(to_json(e));
  j["elements"] = std::move(elems);
  json covers = json::array();
  for (auto& c : l.upper_covers) covers.push_back(c);
  j["covers"] = std::move(covers);
  j["atoms"] = l.atoms;
  return j;
}

ConvexLattice lattice_from_json(const json& j) {
  if (!j.is_object() || !j.contains("graph_n") || !j.contains("elements"))
    throw Error(ErrorKind::input, "lattice JSON needs \"graph_n\" and \"elements\"");
  int n = j.at("graph_n").get<int>();
  std::vector<VertexSet> sets;
  for (auto& e : j.at("elements")) {
    std::vector<int> vs = e.get<std::vector<int>>();
    for (int v : vs)
      if (v < 0 || v >= n) throw Error(ErrorKind::input, "lattice element id out of range");
    sets.push_back(VertexSet::from(n, vs));
  }
  return build_lattice(n, std::move(sets));
}

}  // namespace cubehull
