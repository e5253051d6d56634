#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cubehull/core.hpp"
#include "cubehull/lattice.hpp"
#include "cubehull/pcube.hpp"
#include "cubehull/satred.hpp"

namespace cubehull {

using json = nlohmann::ordered_json;

json to_json(const VertexSet& s);  // sorted id array

json graph_to_json(const Graph& g, const std::vector<std::string>& labels = {});
Graph graph_from_json(const json& j);

// Vertex id -> coordinate bit string, plus per-cut edge lists and side sizes.
json embedding_to_json(const Graph& g, const HypercubeEmbedding& emb,
                       const CutPartition& cp);
json rejection_to_json(const Rejection& r);

json gadget_to_json(const GadgetGraph& gg);

// {graph_n, elements, covers, atoms}
json lattice_to_json(const ConvexLattice& l);
ConvexLattice lattice_from_json(const json& j);

}  // namespace cubehull
