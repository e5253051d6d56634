#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cubehull/convexity.hpp"
#include "cubehull/corpus.hpp"
#include "cubehull/hullnum.hpp"
#include "cubehull/json_io.hpp"
#include "cubehull/lattice.hpp"
#include "cubehull/planarquad.hpp"
#include "cubehull/poset.hpp"
#include "cubehull/satred.hpp"

namespace {

using cubehull::json;

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw cubehull::Error(cubehull::ErrorKind::input, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Input format is inferred from the content; --format only affects output.
cubehull::Graph load_graph_any(const std::string& path, const std::string&) {
  std::string text = read_file(path);
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    return cubehull::graph_from_json(json::parse(text));
  return cubehull::load_graph(text);
}

// Flat "key: value" rendering of the report; nested objects get dotted keys.
void render_text(std::ostream& out, const json& j, const std::string& prefix) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    if (it->is_object())
      render_text(out, *it, key);
    else
      out << key << ": " << it->dump() << "\n";
  }
}

std::string g_format = "json";

void emit(const json& j, const std::string& out_path) {
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!out_path.empty() && out_path != "-") {
    file.open(out_path);
    if (!file) throw cubehull::Error(cubehull::ErrorKind::input, "cannot open " + out_path);
    out = &file;
  }
  if (g_format == "text")
    render_text(*out, j, "");
  else
    *out << j.dump(2) << "\n";
}

int exit_code(cubehull::ErrorKind kind) {
  switch (kind) {
    case cubehull::ErrorKind::input: return 1;
    case cubehull::ErrorKind::property: return 2;
    case cubehull::ErrorKind::bound: return 3;
  }
  return 1;
}

struct CommonOpts {
  std::string input = "-";
  std::string output;
  std::string format = "json";
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("-i,--input", o.input, "input file ('-' for stdin)");
  cmd->add_option("-o,--output", o.output, "output file (default stdout)");
  cmd->add_option("--format", o.format, "output format: text|json")
      ->check(CLI::IsMember({"text", "json"}));
}

json witness_json(const cubehull::VertexSet& s) { return cubehull::to_json(s); }

int cmd_recognize(const CommonOpts& o) {
  auto g = load_graph_any(o.input, o.format);
  auto rec = cubehull::recognize(g);
  json j;
  j["background"] =
      "partial cubes are exactly the graphs embedding isometrically into "
      "hypercubes; the Djokovic-Winkler classes are the cuts";
  j["accepted"] = rec.accepted();
  if (rec.accepted()) {
    j["embedding"] = cubehull::embedding_to_json(g, *rec.embedding, rec.cuts);
    emit(j, o.output);
    return 0;
  }
  j["rejection"] = cubehull::rejection_to_json(*rec.rejection);
  emit(j, o.output);
  std::cerr << rec.rejection->describe() << "\n";
  return 2;
}

int cmd_hull(const CommonOpts& o, const std::vector<int>& seed_set,
             const std::string& method) {
  auto g = load_graph_any(o.input, o.format);
  if (seed_set.empty())
    throw cubehull::Error(cubehull::ErrorKind::input, "--set must list at least one vertex");
  for (int v : seed_set)
    if (v < 0 || v >= g.n)
      throw cubehull::Error(cubehull::ErrorKind::input, "seed vertex out of range");
  auto s = cubehull::VertexSet::from(g.n, seed_set);
  auto d = cubehull::all_pairs_distances(g);
  json j;
  j["background"] =
      "the convex hull is the intersection over all cuts of the side around "
      "the set, and equals the interval-closure fixpoint";
  std::optional<cubehull::VertexSet> half, closure;
  if (method == "halfspace" || method == "both") {
    auto rec = cubehull::recognize(g, d);
    if (!rec.accepted())
      throw cubehull::Error(cubehull::ErrorKind::property,
                            "halfspace hulls need a partial cube: " +
                                rec.rejection->describe());
    half = cubehull::hull_halfspace(g, rec.cuts, s);
  }
  if (method == "closure" || method == "both")
    closure = cubehull::hull_closure(g, d, s);
  const auto& hull = half ? *half : *closure;
  j["hull"] = witness_json(hull);
  j["hull_size"] = hull.count();
  if (half && closure) j["methods_agree"] = (*half == *closure);
  emit(j, o.output);
  return 0;
}

int cmd_hullnum(const CommonOpts& o, const std::string& method) {
  auto g = load_graph_any(o.input, o.format);
  json j;
  j["background"] =
      "hull sets of a partial cube are exactly the sets hitting both sides "
      "of every cut; the one-sided route is min over v of h_v plus one";
  if (method == "exact" || method == "all") {
    auto sol = cubehull::hull_number_exact(g);
    j["hull_number"] = sol.size;
    j["witness"] = witness_json(sol.witness);
  }
  if (method == "onesided" || method == "all") {
    auto sol = cubehull::hull_number_onesided(g);
    j["onesided"] = {{"hull_number", sol.size},
                     {"base_vertex", sol.best_v},
                     {"witness", witness_json(sol.witness)}};
    if (!j.contains("hull_number")) j["hull_number"] = sol.size;
  }
  if (method == "brute" || method == "all") {
    auto d = cubehull::all_pairs_distances(g);
    auto sol = cubehull::hull_number_brute(g, d);
    j["brute"] = {{"hull_number", sol.size}, {"witness", witness_json(sol.witness)}};
    if (!j.contains("hull_number")) j["hull_number"] = sol.size;
  }
  if (method == "all") {
    int hn = j["hull_number"].get<int>();
    bool agree = j["onesided"]["hull_number"].get<int>() == hn &&
                 j["brute"]["hull_number"].get<int>() == hn;
    j["methods_agree"] = agree;
    if (!agree)
      throw cubehull::Error(cubehull::ErrorKind::property, "hull number methods disagree");
  }
  emit(j, o.output);
  return 0;
}

const char* kSatRef =
    "a formula is satisfiable exactly when the gadget graph built from it "
    "has hull number at most one more than the variable count";

int cmd_sat_gadget(const CommonOpts& o) {
  auto f = cubehull::parse_dimacs(read_file(o.input));
  auto pre = cubehull::preprocess_pure_literals(f);
  json j;
  j["background"] = kSatRef;
  j["reduced_empty"] = pre.empty();
  if (pre.empty()) {
    j["satisfiable"] = true;
    emit(j, o.output);
    return 0;
  }
  auto gg = cubehull::build_gadget(pre.reduced);
  j["gadget"] = cubehull::gadget_to_json(gg);
  emit(j, o.output);
  return 0;
}

int cmd_sat_verify(const CommonOpts& o) {
  auto f = cubehull::parse_dimacs(read_file(o.input));
  auto r = cubehull::verify_reduction(f);
  json j;
  j["background"] = kSatRef;
  j["reduced_empty"] = r.reduced_empty;
  j["satisfiable"] = r.satisfiable;
  j["hull_number"] = r.hull_number;
  j["n_plus_1"] = r.n_plus_1;
  j["biconditional_holds"] = r.biconditional_holds;
  j["cuts"] = r.num_cuts;
  j["expected_cuts"] = r.expected_cuts;
  emit(j, o.output);
  if (!r.biconditional_holds)
    throw cubehull::Error(cubehull::ErrorKind::property, "reduction biconditional failed");
  return 0;
}

int cmd_poset_dim(const CommonOpts& o) {
  auto p = cubehull::parse_poset(read_file(o.input));
  auto exts = cubehull::linear_extensions(p);
  auto dim = cubehull::dimension_via_hull(p);
  json j;
  j["background"] =
      "the dimension of a poset equals the hull number of its linear "
      "extension graph, which is a partial cube";
  j["dimension"] = dim.dimension;
  j["width"] = cubehull::width(p);
  j["num_extensions"] = exts.size();
  j["realizer"] = dim.realizer;
  emit(j, o.output);
  return 0;
}

int cmd_quad_hullnum(const CommonOpts& o, const std::string& mode,
                     const std::string& rotation_path) {
  auto g = load_graph_any(o.input, o.format);
  cubehull::QuadMode m =
      mode == "strict" ? cubehull::QuadMode::strict : cubehull::QuadMode::trusted;
  std::optional<cubehull::RotationSystem> rot;
  if (!rotation_path.empty())
    rot = cubehull::parse_rotation(read_file(rotation_path), g);
  auto sol = cubehull::hull_number_quad(g, m, rot);
  json j;
  j["background"] =
      "the hull number of a plane quadrangulation is one more than the "
      "smallest clique cover of a far-side intersection graph";
  j["hull_number"] = sol.size;
  j["base_vertex"] = sol.best_v;
  j["witness"] = witness_json(sol.witness);
  j["h_values"] = sol.h_values;
  j["mode"] = mode;
  emit(j, o.output);
  return 0;
}

int cmd_lattice(const CommonOpts& o, int base, bool check_uld, bool verify_emb,
                bool hullnum, bool input_is_lattice) {
  json j;
  j["background"] =
      "the convex subgraphs ordered by inclusion form an atomistic lattice "
      "whose Hasse diagram contains the graph as an isometric subgraph";
  if (input_is_lattice) {
    auto l = cubehull::lattice_from_json(json::parse(read_file(o.input)));
    j["lattice"] = cubehull::lattice_to_json(l);
    if (hullnum) {
      auto sol = cubehull::hull_number_lattice(l);
      j["hull_number"] = sol.size;
      j["atom_witness"] = sol.atom_witness;
    }
    emit(j, o.output);
    return 0;
  }
  auto g = load_graph_any(o.input, o.format);
  cubehull::ConvexLattice l = base >= 0 ? cubehull::build_lattice_above(g, base)
                                        : cubehull::build_lattice_full(g);
  j["base"] = base;
  j["lattice"] = cubehull::lattice_to_json(l);
  j["atomistic"] = cubehull::is_atomistic(l);
  if (check_uld) {
    auto u = cubehull::is_uld(l);
    j["uld"] = u.uld;
    if (!u.uld) j["uld_witness"] = u.witness;
  }
  if (verify_emb) {
    if (base < 0)
      throw cubehull::Error(cubehull::ErrorKind::input,
                            "--verify-embedding needs --base");
    auto rep = cubehull::verify_embedding(g, base, l);
    j["embedding"] = {{"injective", rep.injective},
                      {"edges_are_covers", rep.edges_are_covers},
                      {"isometric", rep.isometric},
                      {"pass", rep.pass()}};
  }
  if (hullnum) {
    auto sol = cubehull::hull_number_lattice(l);
    j["hull_number"] = sol.size;
    j["atom_witness"] = sol.atom_witness;
  }
  emit(j, o.output);
  return 0;
}

int cmd_corpus(const CommonOpts& o, unsigned seed) {
  auto run = cubehull::run_corpus(seed);
  json j;
  j["background"] =
      "cross-validation of every implemented result on the built-in corpus";
  j["report"] = run.report;
  for (auto& [name, secs] : run.timings)
    std::cerr << name << ": " << secs << " s\n";
  emit(j, o.output);
  return run.report["all_pass"].get<bool>() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"geodesic convexity toolkit for partial cubes"};
  app.require_subcommand(1);

  CommonOpts o;
  std::vector<int> seed_set;
  std::string method_hull = "both";
  std::string method_hullnum = "exact";
  std::string mode = "trusted";
  std::string rotation_path;
  int base = -1;
  bool check_uld = false, verify_emb = false, lattice_hullnum = false,
       input_is_lattice = false;
  unsigned seed = 1;

  auto* recognize = app.add_subcommand("recognize", "partial cube recognition");
  add_common(recognize, o);

  auto* hull = app.add_subcommand("hull", "convex hull of a vertex set");
  add_common(hull, o);
  hull->add_option("--set", seed_set, "seed vertices (comma or space separated)")
      ->required()
      ->delimiter(',');
  hull->add_option("--method", method_hull, "halfspace|closure|both")
      ->check(CLI::IsMember({"halfspace", "closure", "both"}));

  auto* hullnum = app.add_subcommand("hullnum", "hull number");
  add_common(hullnum, o);
  hullnum->add_option("--method", method_hullnum, "exact|onesided|brute|all")
      ->check(CLI::IsMember({"exact", "onesided", "brute", "all"}));

  auto* sat_gadget = app.add_subcommand("sat-gadget", "build the reduction gadget");
  add_common(sat_gadget, o);

  auto* sat_verify = app.add_subcommand("sat-verify", "verify the reduction biconditional");
  add_common(sat_verify, o);

  auto* poset_dim = app.add_subcommand("poset-dim", "poset dimension via hull number");
  add_common(poset_dim, o);

  auto* quad = app.add_subcommand("quad-hullnum", "quadrangulation hull number");
  add_common(quad, o);
  quad->add_option("--mode", mode, "strict|trusted")
      ->check(CLI::IsMember({"strict", "trusted"}));
  quad->add_option("--rotation", rotation_path, "rotation system file");

  auto* lattice = app.add_subcommand("lattice", "convex-subgraph lattice");
  add_common(lattice, o);
  lattice->add_option("--base", base, "restrict to convex sets containing this vertex");
  lattice->add_flag("--check-uld", check_uld, "check upper local distributivity");
  lattice->add_flag("--verify-embedding", verify_emb, "verify the Hasse embedding");
  lattice->add_flag("--hullnum", lattice_hullnum, "hull number from the lattice");
  lattice->add_flag("--from-lattice", input_is_lattice,
                    "input is a lattice JSON export instead of a graph");

  auto* corpus = app.add_subcommand("corpus", "run the built-in cross-validation corpus");
  add_common(corpus, o);
  corpus->add_option("--seed", seed, "seed for randomized corpus parts");

  CLI11_PARSE(app, argc, argv);
  g_format = o.format;

  try {
    if (recognize->parsed()) return cmd_recognize(o);
    if (hull->parsed()) return cmd_hull(o, seed_set, method_hull);
    if (hullnum->parsed()) return cmd_hullnum(o, method_hullnum);
    if (sat_gadget->parsed()) return cmd_sat_gadget(o);
    if (sat_verify->parsed()) return cmd_sat_verify(o);
    if (poset_dim->parsed()) return cmd_poset_dim(o);
    if (quad->parsed()) return cmd_quad_hullnum(o, mode, rotation_path);
    if (lattice->parsed())
      return cmd_lattice(o, base, check_uld, verify_emb, lattice_hullnum,
                         input_is_lattice);
    if (corpus->parsed()) return cmd_corpus(o, seed);
  } catch (const cubehull::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    emit(json{{"error", e.what()}}, o.output);
    return exit_code(e.kind);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    emit(json{{"error", e.what()}}, o.output);
    return 1;
  }
  return 1;
}
