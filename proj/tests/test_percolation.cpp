#include <doctest.h>

#include "test_util.hpp"
#include "wsat/constructions.hpp"
#include "wsat/percolation.hpp"

using namespace wsat;

namespace {

// Closure along a uniformly random addable-edge order.
Graph random_order_closure(std::mt19937_64& rng, const Graph& g, PatternSpec p) {
  Graph cur = g;
  for (;;) {
    std::vector<Edge> addable;
    for (Edge e : missing_edges(cur))
      if (edge_completes_kst_fast(cur, e, p)) addable.push_back(e);
    if (addable.empty()) return cur;
    cur.add_edge(addable[rng() % addable.size()]);
  }
}

}  // namespace

TEST_SUITE_BEGIN("percolation");

TEST_CASE("closure on the complement of a path") {
  Graph g = complement(path_graph(5));
  ClosureOutcome out = closure(g, PatternSpec(2, 3));
  CHECK(out.complete);
  CHECK(out.final == complete_graph(5));
  // the four path edges are the missing ones
  CHECK(out.added.size() == 4);
  CHECK(out.added[0].edge == Edge(1, 2));
  CHECK(out.added[0].witness.side_s == (vbit(0) | vbit(1)));
  CHECK(out.added[0].witness.side_t == (vbit(2) | vbit(3) | vbit(4)));
}

TEST_CASE("closure of complete and empty graphs") {
  ClosureOutcome done = closure(complete_graph(7), PatternSpec(2, 4));
  CHECK(done.complete);
  CHECK(done.added.empty());

  ClosureOutcome stuck = closure(empty_graph(5), PatternSpec(2, 3));
  CHECK_FALSE(stuck.complete);
  CHECK(stuck.final == empty_graph(5));
}

TEST_CASE("weak saturation combines freeness and completeness") {
  CHECK(is_weakly_saturated(complement(path_graph(5)), PatternSpec(2, 3)));
  CHECK(is_weakly_saturated(complement(disjoint_union(path_graph(3), empty_graph(1))), PatternSpec(2, 2)));
  CHECK_FALSE(is_weakly_saturated(complete_graph(5), PatternSpec(2, 3)));
}

TEST_CASE("addable edges in edge-index order") {
  Graph g = complement(path_graph(5));
  auto steps = addable_edges(g, PatternSpec(2, 3));
  REQUIRE_FALSE(steps.empty());
  CHECK(steps.front().edge == Edge(1, 2));
  for (std::size_t i = 1; i < steps.size(); ++i)
    CHECK(edge_index(steps[i - 1].edge, 5) < edge_index(steps[i].edge, 5));

  CHECK(addable_edges(empty_graph(4), PatternSpec(2, 2)).empty());

  Graph nearly = complete_graph(4);
  nearly.remove_edge(1, 3);
  auto st = addable_edges(nearly, PatternSpec(1, 3));
  REQUIRE(st.size() == 1);
  CHECK(st[0].edge == Edge(1, 3));
}

TEST_CASE("certificate extraction and verification round-trip") {
  Graph g = complement(path_graph(5));
  Certificate c = extract_certificate(g, PatternSpec(2, 3));
  CHECK(c.steps.size() == 4);
  CHECK(verify_certificate(c).ok);

  CHECK_THROWS_WITH_AS(extract_certificate(complete_graph(5), PatternSpec(2, 3)),
                       "not weakly saturated: base contains the pattern", std::invalid_argument);
  CHECK_THROWS_WITH_AS(extract_certificate(empty_graph(5), PatternSpec(2, 3)),
                       "not weakly saturated: closure incomplete", std::invalid_argument);
}

TEST_CASE("verifier pinpoints violations") {
  Graph g = complement(path_graph(5));
  Certificate good = extract_certificate(g, PatternSpec(2, 3));

  SUBCASE("swapped steps break a witness") {
    Certificate bad = good;
    std::swap(bad.steps[0], bad.steps[3]);
    CertCheck chk = verify_certificate(bad);
    CHECK_FALSE(chk.ok);
    CHECK(chk.step == 0);
    CHECK(chk.reason == "witness-missing-edge");
  }
  SUBCASE("base containing the pattern") {
    Certificate bad = good;
    bad.base = complete_graph(5);
    CHECK(verify_certificate(bad).reason == "base-not-pattern-free");
  }
  SUBCASE("missing steps leave the graph incomplete") {
    Certificate bad = good;
    bad.steps.pop_back();
    CertCheck chk = verify_certificate(bad);
    CHECK_FALSE(chk.ok);
    CHECK(chk.reason == "closure-incomplete");
  }
  SUBCASE("duplicated step edge") {
    Certificate bad = good;
    bad.steps[1] = bad.steps[0];
    CHECK(verify_certificate(bad).reason == "step-edge-duplicate");
    CHECK(verify_certificate(bad).step == 1);
  }
  SUBCASE("step edge present in base") {
    Certificate bad = good;
    bad.steps[0].edge = Edge(0, 2);
    CHECK(verify_certificate(bad).reason == "step-edge-in-base");
  }
}

TEST_CASE("certificate json round-trip") {
  Graph g = complement(path_graph(5));
  Certificate c = extract_certificate(g, PatternSpec(2, 3));
  Certificate back = certificate_from_json(certificate_to_json(c));
  CHECK(back.base == c.base);
  CHECK(back.pattern == c.pattern);
  REQUIRE(back.steps.size() == c.steps.size());
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    CHECK(back.steps[i].edge == c.steps[i].edge);
    CHECK(back.steps[i].witness == c.steps[i].witness);
  }
  CHECK(verify_certificate(back).ok);
}

TEST_CASE("closure order does not change the final graph") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 5 + static_cast<int>(rng() % 6);
    Graph g = testing::random_graph(rng, n, 0.35);
    int s = 1 + static_cast<int>(rng() % 2);
    int t = std::max(s, 2 + static_cast<int>(rng() % 2));
    PatternSpec p(s, t);
    Graph det = closure(g, p).final;
    for (int run = 0; run < 10; ++run) CHECK(random_order_closure(rng, g, p) == det);
  }
}

TEST_CASE("closure is monotone and idempotent") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 150; ++trial) {
    int n = 5 + static_cast<int>(rng() % 5);
    Graph g = testing::random_graph(rng, n, 0.3);
    Graph big = g;
    for (Edge e : missing_edges(g))
      if (rng() % 4 == 0) big.add_edge(e);
    PatternSpec p(2, 3);
    Graph cg = closure(g, p).final;
    Graph cb = closure(big, p).final;
    CHECK(cg.subgraph_of(cb));
    CHECK(closure(cg, p).added.empty());
  }
}

TEST_CASE("deterministic engine matches the ordering search on small graphs") {
  for (const Graph& g : testing::all_labeled_graphs(4)) {
    for (auto [s, t] : {std::pair{1, 2}, {2, 2}, {1, 3}}) {
      PatternSpec p(s, t);
      CHECK(is_weakly_saturated(g, p) == brute_force_is_weakly_saturated(g, p));
    }
  }
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = testing::random_graph(rng, 5);
    for (auto [s, t] : {std::pair{2, 3}, {2, 2}}) {
      PatternSpec p(s, t);
      CHECK(is_weakly_saturated(g, p) == brute_force_is_weakly_saturated(g, p));
    }
  }
  CHECK_FALSE(brute_force_is_weakly_saturated(empty_graph(4), PatternSpec(2, 2)));
  CHECK(brute_force_is_weakly_saturated(complement(path_graph(5)), PatternSpec(2, 3)));
}

TEST_CASE("clique closure") {
  CHECK(is_weakly_saturated(path_graph(5), CliqueSpec(3)));
  CHECK_FALSE(is_weakly_saturated(complete_graph(4), CliqueSpec(3)));
  CHECK_FALSE(is_weakly_saturated(disjoint_union(path_graph(3), empty_graph(1)), CliqueSpec(3)));
}

TEST_SUITE_END();
