#include <doctest.h>

#include <numeric>

#include "test_util.hpp"
#include "wsat/constructions.hpp"
#include "wsat/percolation.hpp"

using namespace wsat;

TEST_SUITE_BEGIN("constructions");

TEST_CASE("edge-count formulas") {
  for (int s = 1; s <= 9; ++s)
    for (int t = s; s + t <= 20; ++t) {
      int n = s + t;
      CHECK(complement_path(s, t).graph.edge_count() == (n - 1) * (n - 2) / 2);
      CHECK(complement_path_union_k1(s, t).graph.edge_count() == (n - 1) * (n - 2) / 2 + 1);
    }
  for (int t = 3; t <= 8; ++t)
    for (int n = t + 2; n <= 20; ++n)
      CHECK(gnt(n, t).graph.edge_count() == n - 2 + t * (t - 1) / 2);
}

TEST_CASE("complement_path instances") {
  FamilyInstance f = complement_path(2, 3);
  CHECK(f.graph.order() == 5);
  CHECK(f.graph.edge_count() == 6);
  REQUIRE(f.suggested_order.has_value());
  CHECK(f.suggested_order->front() == Edge(1, 2));

  FamilyInstance tiny = complement_path(1, 1);
  CHECK(tiny.graph.order() == 2);
  CHECK(tiny.graph.edge_count() == 0);
  CHECK(tiny.suggested_order->size() == 1);

  CHECK(complement_path(3, 4).graph.edge_count() == 15);
  CHECK(is_weakly_saturated(complement_path(3, 4).graph, PatternSpec(3, 4)));

  // no order carried when gcd != 1; the graph is one edge short of saturation
  FamilyInstance even = complement_path(2, 2);
  CHECK_FALSE(even.suggested_order.has_value());
  CHECK_FALSE(is_weakly_saturated(even.graph, PatternSpec(2, 2)));
}

TEST_CASE("complement_path saturation for coprime sizes") {
  for (int s = 1; s <= 4; ++s)
    for (int t = s; s + t <= 10; ++t) {
      if (std::gcd(s, t) != 1) continue;
      FamilyInstance f = complement_path(s, t);
      CHECK(is_weakly_saturated(f.graph, PatternSpec(s, t)));
      REQUIRE(f.suggested_order.has_value());
      Certificate c = certificate_from_order(f.graph, PatternSpec(s, t), *f.suggested_order);
      CHECK(verify_certificate(c).ok);
    }
}

TEST_CASE("complement_path_union_k1 instances and orders for s >= 2") {
  FamilyInstance f22 = complement_path_union_k1(2, 2);
  CHECK(f22.graph.order() == 4);
  CHECK(f22.graph.edge_count() == 4);
  CHECK(is_weakly_saturated(f22.graph, PatternSpec(2, 2)));

  CHECK(complement_path_union_k1(2, 4).graph.edge_count() == 11);
  CHECK(complement_path_union_k1(3, 3).graph.edge_count() == 11);
  CHECK(is_weakly_saturated(complement_path_union_k1(3, 3).graph, PatternSpec(3, 3)));

  for (int s = 2; s <= 4; ++s)
    for (int t = s; s + t <= 10; ++t) {
      FamilyInstance f = complement_path_union_k1(s, t);
      CHECK(is_weakly_saturated(f.graph, PatternSpec(s, t)));
      REQUIRE(f.suggested_order.has_value());
      CHECK(f.suggested_order->size() == missing_edges(f.graph).size());
      Certificate c = certificate_from_order(f.graph, PatternSpec(s, t), *f.suggested_order);
      CHECK(verify_certificate(c).ok);
    }
}

TEST_CASE("complement_path_union_k1 with s=1 contains the star") {
  // The vertex complementing K_1 is adjacent to everything, so a K_{1,t}
  // copy is always present and the family is not weakly saturated there.
  for (int t = 1; t <= 9; ++t) {
    FamilyInstance f = complement_path_union_k1(1, t);
    CHECK(f.graph.degree(t) == t);
    CHECK_FALSE(is_kst_free(f.graph, PatternSpec(1, t)));
    CHECK_FALSE(is_weakly_saturated(f.graph, PatternSpec(1, t)));
  }
}

TEST_CASE("gnt layout and saturation") {
  FamilyInstance f = gnt(7, 3);
  const Graph& g = f.graph;
  CHECK(g.edge_count() == 8);
  // clique {0,1}, hubs 2 and 3 joined to it, pendant 4 on hub 2,
  // vertices 5,6 on clique vertex 1
  CHECK(g.has_edge(0, 1));
  for (int hub : {2, 3})
    for (int c = 0; c < 2; ++c) CHECK(g.has_edge(c, hub));
  CHECK_FALSE(g.has_edge(2, 3));
  CHECK(g.has_edge(2, 4));
  CHECK(g.degree(4) == 1);
  CHECK(g.neighbors(5) == vbit(1));
  CHECK(g.neighbors(6) == vbit(1));

  CHECK(is_weakly_saturated(g, PatternSpec(2, 3)));
  CHECK(gnt(9, 4).graph.edge_count() == 13);
  CHECK(is_weakly_saturated(gnt(9, 4).graph, PatternSpec(2, 4)));
  // below n = 2t-1 the family is pattern-free but its closure stalls
  CHECK(gnt(6, 4).graph.edge_count() == 10);
  CHECK(is_kst_free(gnt(6, 4).graph, PatternSpec(2, 4)));
  CHECK_FALSE(is_weakly_saturated(gnt(6, 4).graph, PatternSpec(2, 4)));

  CHECK_THROWS_AS(gnt(5, 4), std::invalid_argument);
  CHECK_THROWS_AS(gnt(6, 2), std::invalid_argument);
}

TEST_CASE("gnt saturation across the stated range") {
  for (int t : {3, 4, 5})
    for (int n = 2 * t - 1; n <= 12; ++n)
      CHECK(is_weakly_saturated(gnt(n, t).graph, PatternSpec(2, t)));
}

TEST_CASE("pendant extension") {
  Graph g = complement(path_graph(5));
  Graph ext = pendant_extend(g, {0});
  CHECK(ext.order() == 6);
  CHECK(ext.degree(5) == 1);
  CHECK(is_weakly_saturated(ext, PatternSpec(2, 3)));

  Graph iso = pendant_extend(g, {});
  CHECK(iso.degree(5) == 0);

  // three pendants in a row stay saturated
  Graph cur = g;
  for (int i = 0; i < 3; ++i) {
    cur = pendant_extend(cur, {i});
    CHECK(is_weakly_saturated(cur, PatternSpec(2, 3)));
  }
  CHECK(cur.order() == 8);
  CHECK(cur.edge_count() == g.edge_count() + 3);

  CHECK_THROWS_AS(pendant_extend(g, {7}), std::invalid_argument);
}

TEST_CASE("xyz family") {
  FamilyInstance f = xyz_graph(2, 2, 2);
  CHECK(f.graph.edge_count() == 1 + 4 + 4);
  CHECK_FALSE(f.graph.has_edge(0, 4));  // no X-Z edges
  CHECK_FALSE(f.graph.has_edge(2, 3));  // Y independent

  // the necessary condition read backwards: both disjuncts failing means
  // not weakly saturated
  CHECK_FALSE(is_weakly_saturated(xyz_graph(2, 2, 1).graph, PatternSpec(2, 3)));
  CHECK_FALSE(is_weakly_saturated(xyz_graph(2, 1, 3).graph, PatternSpec(2, 4)));

  // x = t with a single y vertex is saturated
  for (int t : {3, 4}) {
    CHECK(is_weakly_saturated(xyz_graph(t, 1, 1).graph, PatternSpec(2, t)));
    CHECK(is_weakly_saturated(xyz_graph(t, 1, 2).graph, PatternSpec(2, t)));
  }

  CHECK_THROWS_AS(xyz_graph(1, 1, 0), std::invalid_argument);
}

TEST_CASE("h family") {
  CHECK(h_graph(2, 3, 0, 1).graph == xyz_graph(2, 3, 1).graph);

  FamilyInstance f = h_graph(2, 2, 1, 1);
  CHECK(f.graph.subgraph_of(xyz_graph(2, 3, 1).graph));
  Graph closed_h = closure(f.graph, PatternSpec(2, 3)).final;
  Graph closed_xyz = closure(xyz_graph(2, 3, 1).graph, PatternSpec(2, 3)).final;
  CHECK(closed_h.subgraph_of(closed_xyz));

  CHECK_FALSE(is_weakly_saturated(h_graph(3, 1, 1, 2).graph, PatternSpec(2, 4)));
}

TEST_SUITE_END();
