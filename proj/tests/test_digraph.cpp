#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "ddpc/digraph.hpp"
#include "ddpc/errors.hpp"

using namespace ddpc;

TEST_CASE("construction normalizes and validates") {
  Digraph d(3, {{0, 1}, {1, 2}, {0, 1}, {2, 0}});
  CHECK(d.order() == 3);
  CHECK(d.arc_count() == 3);  // duplicate collapsed
  CHECK(d.has_arc(0, 1));
  CHECK(!d.has_arc(1, 0));
  CHECK(d.arcs() == std::vector<Arc>{{0, 1}, {1, 2}, {2, 0}});

  CHECK_THROWS_AS(Digraph(3, {{0, 0}}), precondition_error);
  CHECK_THROWS_AS(Digraph(3, {{0, 3}}), precondition_error);
  CHECK_THROWS_AS(Digraph(3, {{-1, 0}}), precondition_error);
  CHECK_THROWS_AS(Digraph(-1, {}), precondition_error);
}

TEST_CASE("neighbor lists sorted, degrees consistent") {
  Digraph d(4, {{2, 0}, {1, 0}, {3, 0}, {0, 1}, {0, 3}});
  CHECK(d.in_neighbors(0) == std::vector<Vertex>{1, 2, 3});
  CHECK(d.out_neighbors(0) == std::vector<Vertex>{1, 3});
  CHECK(d.in_degree(0) == 3);
  CHECK(d.out_degree(0) == 2);
}

TEST_CASE("complete digraph") {
  Digraph d = complete_digraph(4);
  CHECK(d.arc_count() == 12);
  auto deg = degree_summary(d);
  CHECK(deg.min_semi_degree == 3);
  CHECK(!deg.ore_min.has_value());  // no non-arc pair
}

TEST_CASE("complete bipartite digraph") {
  Digraph d = complete_bipartite_digraph(2, 3);
  CHECK(d.order() == 5);
  CHECK(d.arc_count() == 12);
  CHECK(d.has_arc(0, 2));
  CHECK(d.has_arc(2, 0));
  CHECK(!d.has_arc(0, 1));
  CHECK(!d.has_arc(3, 4));
  auto deg = degree_summary(d);
  CHECK(deg.min_semi_degree == 2);
}

TEST_CASE("empty digraph") {
  Digraph d = empty_digraph(3);
  CHECK(d.order() == 3);
  CHECK(d.arc_count() == 0);
}

TEST_CASE("glued cliques") {
  // A = {0..3}, B = {2..5}, overlap {2,3}.
  Digraph d = glued_cliques(4, 4, 2);
  CHECK(d.order() == 6);
  CHECK(d.has_arc(0, 3));
  CHECK(d.has_arc(2, 5));
  CHECK(!d.has_arc(0, 4));   // across private blocks
  CHECK(!d.has_arc(5, 1));
  auto deg = degree_summary(d);
  // Private vertices see their own clique only: degree 3.
  CHECK(deg.out_degree[0] == 3);
  // Overlap vertices see both cliques: 4 + 4 - 2 - 1 = 5.
  CHECK(deg.out_degree[2] == 5);
  CHECK(deg.min_semi_degree == 3);

  CHECK_THROWS_AS(glued_cliques(2, 4, 3), precondition_error);
}

TEST_CASE("glued cliques with full overlap is a complete digraph") {
  CHECK(glued_cliques(4, 4, 4) == complete_digraph(4));
}

TEST_CASE("full join") {
  Digraph d = full_join(complete_digraph(2), empty_digraph(2));
  CHECK(d.order() == 4);
  // K2 arcs + all 8 cross arcs.
  CHECK(d.arc_count() == 10);
  CHECK(d.has_arc(0, 1));
  CHECK(!d.has_arc(2, 3));
  CHECK(d.has_arc(1, 3));
  CHECK(d.has_arc(3, 1));
  CHECK(full_join(complete_digraph(2), complete_digraph(2)) ==
        complete_digraph(4));
}

TEST_CASE("delete vertex relabels order-preservingly") {
  Digraph d(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  auto del = delete_vertex(d, 1);
  CHECK(del.graph.order() == 3);
  CHECK(del.old_to_new == std::vector<int>{0, -1, 1, 2});
  CHECK(del.graph.arcs() == std::vector<Arc>{{1, 2}, {2, 0}});
  CHECK_THROWS_AS(delete_vertex(d, 4), precondition_error);
}

TEST_CASE("contract pair") {
  // 0 -> {1,2}, 3 <- {2}, plus s-t machinery arcs that must vanish.
  Digraph d(4, {{0, 1}, {0, 2}, {2, 3}, {0, 3}, {3, 1}, {1, 0}});
  auto c = contract_pair(d, 0, 3);  // X = {1, 2}, relabeled {0, 1}; r = 2
  CHECK(c.graph.order() == 3);
  CHECK(c.merged == 2);
  CHECK(c.old_to_new == std::vector<int>{-1, 0, 1, -1});
  // N+(r) = N+(0) cap X = {1,2} -> {0,1}; N-(r) = N-(3) cap X = {2} -> {1}.
  CHECK(c.graph.has_arc(2, 0));
  CHECK(c.graph.has_arc(2, 1));
  CHECK(c.graph.has_arc(1, 2));
  CHECK(!c.graph.has_arc(0, 2));
  CHECK_THROWS_AS(contract_pair(d, 0, 0), precondition_error);
  CHECK_THROWS_AS(contract_pair(Digraph(2, {{0, 1}}), 0, 1), precondition_error);
}

TEST_CASE("contraction degree bound") {
  // After contracting in a digraph with delta^0 >= c, every X-vertex loses
  // at most one in- and one out-neighbor.
  Digraph d = complete_digraph(7);
  auto c = contract_pair(d, 0, 6);
  auto deg = degree_summary(c.graph);
  for (Vertex v = 0; v < c.graph.order() - 1; ++v) {
    CHECK(deg.out_degree[v] >= 6 - 1);
    CHECK(deg.in_degree[v] >= 6 - 1);
  }
}

TEST_CASE("degree summary ore minimum") {
  // Directed 4-cycle: d+(x) = d-(y) = 1 and non-arcs exist.
  Digraph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  auto deg = degree_summary(c4);
  CHECK(deg.min_semi_degree == 1);
  CHECK(deg.ore_min == 2);

  // Complete digraph minus one arc: only (0,1) contributes.
  auto arcs = complete_digraph(4).arcs();
  std::erase(arcs, Arc{0, 1});
  auto deg2 = degree_summary(Digraph(4, arcs));
  CHECK(deg2.ore_min == 2 + 2);  // d+(0) = 2, d-(1) = 2
}
