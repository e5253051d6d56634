#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cubehull/convexity.hpp"
#include "cubehull/corpus.hpp"
#include "cubehull/hullnum.hpp"
#include "cubehull/satred.hpp"

using namespace cubehull;

namespace {

const char* kF1 = "p cnf 2 2\n1 2 0\n-1 -2 0\n";
const char* kContradiction = "p cnf 1 2\n1 0\n-1 0\n";

}  // namespace

TEST_CASE("parse_dimacs accepts F1") {
  auto f = parse_dimacs(kF1);
  CHECK(f.num_vars == 2);
  REQUIRE(f.clauses.size() == 2);
  CHECK(f.clauses[0] == std::vector<int>{1, 2});
  CHECK(f.clauses[1] == std::vector<int>{-1, -2});
}

TEST_CASE("parse_dimacs enforces the AM3 shape") {
  CHECK_THROWS_AS(static_cast<void>(parse_dimacs("p cnf 4 1\n1 2 3 4 0\n")), Error);
  CHECK_THROWS_AS(
      static_cast<void>(parse_dimacs("p cnf 2 4\n1 0\n1 2 0\n1 -2 0\n-1 0\n")), Error);
  CHECK_THROWS_AS(static_cast<void>(parse_dimacs("p cnf 1 1\n0\n")), Error);
  CHECK_THROWS_AS(static_cast<void>(parse_dimacs("p cnf 2 1\n1 -1 0\n")), Error);
  try {
    static_cast<void>(parse_dimacs("p cnf 4 1\n1 2 3 4 0\n"));
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::input);
  }
}

TEST_CASE("pure literal elimination") {
  auto a = preprocess_pure_literals(parse_dimacs("p cnf 2 2\n1 2 0\n1 -2 0\n"));
  CHECK(a.empty());
  REQUIRE(a.forced.size() >= 1);
  CHECK(a.forced[0] == std::pair<int, bool>{1, true});

  auto b = preprocess_pure_literals(parse_dimacs(kF1));
  CHECK_FALSE(b.empty());
  CHECK(b.forced.empty());
  CHECK(b.reduced.clauses == parse_dimacs(kF1).clauses);

  auto c = preprocess_pure_literals(parse_dimacs(kContradiction));
  CHECK_FALSE(c.empty());
  CHECK(c.reduced.clauses.size() == 2);
}

TEST_CASE("gadget for F1 has 10 vertices and 5 cuts") {
  auto gg = build_gadget(preprocess_pure_literals(parse_dimacs(kF1)).reduced);
  CHECK(gg.graph.n == 10);
  CHECK(gg.cuts.cuts.size() == 5);  // n + m + 1 = 2 + 2 + 1
  CHECK(gg.role_of[gg.u].role == GadgetGraph::Role::u);
  CHECK(gg.role_of[gg.u_prime].role == GadgetGraph::Role::u_prime);
  CHECK(gg.clause_vertex.size() == 2);
  CHECK(gg.shared_vertex.empty());  // F1's clauses share no literal
  CHECK(gg.copy_u.size() == 2);
}

TEST_CASE("gadget for (x) and (not x) has 7 vertices and 4 cuts") {
  auto gg = build_gadget(preprocess_pure_literals(parse_dimacs(kContradiction)).reduced);
  CHECK(gg.graph.n == 7);
  CHECK(gg.cuts.cuts.size() == 4);  // n + m + 1 = 1 + 2 + 1
}

TEST_CASE("cut labels match the construction") {
  auto gg = build_gadget(preprocess_pure_literals(parse_dimacs(kF1)).reduced);
  int uu = 0, clause_cuts = 0, var_cuts = 0;
  for (std::size_t c = 0; c < gg.cuts.cuts.size(); ++c) {
    switch (gg.cut_role[c].role) {
      case GadgetGraph::CutRole::u_uprime: {
        ++uu;
        REQUIRE(gg.cuts.cuts[c].edge_ids.size() == 1);
        auto [a, b] = gg.graph.edges[gg.cuts.cuts[c].edge_ids[0]];
        CHECK(((a == gg.u && b == gg.u_prime) || (a == gg.u_prime && b == gg.u)));
        break;
      }
      case GadgetGraph::CutRole::clause_cut: {
        ++clause_cuts;
        int i = gg.cut_role[c].index;
        // the clause cut contains the {u, d_i} edge
        bool has_udi = false;
        for (int e : gg.cuts.cuts[c].edge_ids) {
          auto [a, b] = gg.graph.edges[e];
          if ((a == gg.u && b == gg.clause_vertex[i]) ||
              (b == gg.u && a == gg.clause_vertex[i]))
            has_udi = true;
        }
        CHECK(has_udi);
        break;
      }
      case GadgetGraph::CutRole::var_cut: {
        ++var_cuts;
        // the variable cut is the matching M_x: every edge joins a copy in
        // G_x to its original
        int x = gg.cut_role[c].index;
        for (int e : gg.cuts.cuts[c].edge_ids) {
          auto [a, b] = gg.graph.edges[e];
          CHECK((gg.in_copy(a, x) != gg.in_copy(b, x)));
        }
        break;
      }
    }
  }
  CHECK(uu == 1);
  CHECK(clause_cuts == 2);
  CHECK(var_cuts == 2);
}

TEST_CASE("assignments translate to hull sets and back") {
  auto gg = build_gadget(preprocess_pure_literals(parse_dimacs(kF1)).reduced);
  auto d = gg.dist;

  auto h_tf = assignment_to_hull_set(gg, {true, false});  // satisfies F1
  CHECK(h_tf.count() == 3);
  CHECK(h_tf.test(gg.u_prime));
  CHECK(is_hull_set(gg.graph, d, h_tf));

  auto h_tt = assignment_to_hull_set(gg, {true, true});  // falsifies clause 2
  CHECK_FALSE(is_hull_set(gg.graph, d, h_tt));

  auto back = hull_set_to_assignment(gg, h_tf);
  CHECK(back == std::vector<bool>{true, false});
  CHECK(evaluate(gg.formula, back));

  auto opt = hull_number_exact(gg.graph, gg.cuts);
  CHECK(opt.size == 3);  // n + 1
  auto a = hull_set_to_assignment(gg, opt.witness);
  CHECK(evaluate(gg.formula, a));
}

TEST_CASE("hull_set_to_assignment rejects oversized inputs") {
  auto gg = build_gadget(preprocess_pure_literals(parse_dimacs(kF1)).reduced);
  VertexSet big(gg.graph.n);
  for (int v = 0; v < 4; ++v) big.set(v);
  try {
    static_cast<void>(hull_set_to_assignment(gg, big));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::input);
  }
}

TEST_CASE("verify_reduction on both polarities of the biconditional") {
  auto sat_report = verify_reduction(parse_dimacs(kF1));
  CHECK(sat_report.satisfiable);
  CHECK(sat_report.hull_number == 3);
  CHECK(sat_report.n_plus_1 == 3);
  CHECK(sat_report.biconditional_holds);
  CHECK(sat_report.recognized);
  CHECK(sat_report.num_cuts == sat_report.expected_cuts);

  auto unsat_report = verify_reduction(parse_dimacs(kContradiction));
  CHECK_FALSE(unsat_report.satisfiable);
  CHECK(unsat_report.hull_number > unsat_report.n_plus_1);
  CHECK(unsat_report.biconditional_holds);

  auto trivial = verify_reduction(parse_dimacs("p cnf 1 1\n1 0\n"));
  CHECK(trivial.reduced_empty);
  CHECK(trivial.satisfiable);
  CHECK(trivial.hull_number == -1);
}

TEST_CASE("shared-literal clause pairs get one shared vertex") {
  // (x v y) (x v z) share the literal x
  auto f = parse_dimacs("p cnf 3 3\n1 2 0\n1 3 0\n-1 -2 -3 0\n");
  auto pre = preprocess_pure_literals(f);
  REQUIRE_FALSE(pre.empty());
  auto gg = build_gadget(pre.reduced);
  CHECK(gg.shared_vertex.count({0, 1}) == 1);
  auto rep = verify_reduction(f);
  CHECK(rep.biconditional_holds);
  CHECK(rep.recognized);
}

TEST_CASE("random corpus instances hold the biconditional") {
  for (auto& f : random_am3(25, 5, 99)) {
    auto rep = verify_reduction(f);
    CHECK(rep.biconditional_holds);
    if (!rep.reduced_empty) {
      CHECK(rep.recognized);
      CHECK(rep.num_cuts == rep.expected_cuts);
    }
  }
}
