#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "cubehull/core.hpp"
#include "cubehull/pcube.hpp"

namespace cubehull {

// CNF instance of SAT-AM3: at most three distinct literals per clause, each
// variable in at most three clauses. Literals are signed 1-based indices.
struct CnfFormula {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;
};

// DIMACS CNF. Rejects empty clauses, clauses with more than three distinct
// literals, tautological clauses, and variables occurring in more than three
// clauses.
CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs(const std::string& text);

struct PreprocessResult {
  CnfFormula reduced;  // variables renumbered 1..k, each occurring in both polarities
  std::vector<std::pair<int, bool>> forced;  // original variable -> forced value
  std::vector<int> original_var;             // reduced variable (1-based) -> original
  bool empty() const { return reduced.clauses.empty(); }
};

// Repeatedly satisfies and removes single-polarity variables together with
// their clauses. An empty reduced formula means satisfiable outright.
PreprocessResult preprocess_pure_literals(const CnfFormula& f);

// The reduction gadget: a labeled partial cube built from a preprocessed
// formula, with one cut per clause, one per variable, and one for the edge
// {u,u'}.
struct GadgetGraph {
  enum class Role { u, u_prime, clause, shared, copy_u, copy_clause, copy_shared };
  struct VertexRole {
    Role role;
    int clause_i = -1;  // clause / copy_clause / shared / copy_shared
    int clause_j = -1;  // shared / copy_shared
    int var = -1;       // copies: which gadget G_x (0-based)
    std::string name;   // human-readable, e.g. "d{1,2}:x3"
  };
  enum class CutRole { u_uprime, clause_cut, var_cut };
  struct CutTag {
    CutRole role;
    int index = -1;  // clause id or variable id (0-based)
  };

  Graph graph;
  DistanceMatrix dist;
  CnfFormula formula;  // the reduced formula the gadget was built from
  std::vector<VertexRole> role_of;
  int u = -1, u_prime = -1;
  std::vector<int> clause_vertex;                       // clause i -> d_i
  std::map<std::pair<int, int>, int> shared_vertex;     // {i,j} (i<j) -> d_{i,j}
  std::vector<int> copy_u;                              // var x -> u_x
  std::map<std::pair<int, int>, int> copy_clause;       // (i, x) -> copy of d_i in G_x
  std::map<std::tuple<int, int, int>, int> copy_shared; // (i, j, x) -> copy of d_{i,j} in G_x
  std::map<int, int> literal_anchor;                    // signed literal -> v_l
  CutPartition cuts;
  std::vector<CutTag> cut_role;  // per cut id

  int num_vars() const { return formula.num_vars; }
  bool in_copy(int vertex, int var) const {
    auto& r = role_of[vertex];
    return r.var == var &&
           (r.role == Role::copy_u || r.role == Role::copy_clause || r.role == Role::copy_shared);
  }
};

// Builds G_F for a preprocessed formula and certifies the construction:
// recognition must accept, the cut census must be n+m+1, and the labeled
// cut-partition must coincide with the theta classes.
GadgetGraph build_gadget(const CnfFormula& reduced);

// {u'} plus the anchor v_x or v_xbar per variable; size n+1.
VertexSet assignment_to_hull_set(const GadgetGraph& gg, const std::vector<bool>& a);

// Reads the unique hull-set vertex inside each variable gadget, normalizing
// vertices on a shortest (u',v_x)-path to v_x and others to v_xbar.
std::vector<bool> hull_set_to_assignment(const GadgetGraph& gg, const VertexSet& h);

struct ReductionReport {
  bool reduced_empty = false;
  int n = 0, m = 0;
  bool satisfiable = false;
  int hull_number = -1;  // -1 when the gadget build was skipped
  int n_plus_1 = 0;
  bool biconditional_holds = false;
  bool recognized = false;
  int num_cuts = 0;
  int expected_cuts = 0;
};

// Cross-checks satisfiability (exhaustive search, reduced n <= 8) against
// the hull number of the gadget.
ReductionReport verify_reduction(const CnfFormula& f);

bool evaluate(const CnfFormula& f, const std::vector<bool>& a);

// Exhaustive satisfiability search; refuses num_vars > 20.
std::optional<std::vector<bool>> solve_bruteforce(const CnfFormula& f);

}  // namespace cubehull
