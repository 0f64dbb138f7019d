#include <doctest.h>

#include "test_util.hpp"
#include "wsat/percolation.hpp"
#include "wsat/run_record.hpp"
#include "wsat/search.hpp"

using namespace wsat;

TEST_SUITE_BEGIN("search");

TEST_CASE("closed-form predictions") {
  CHECK(predicted_wsat_k2t(7, 3) == 8);
  CHECK(predicted_wsat_k2t(6, 4) == 11);
  CHECK(predicted_wsat_k2t(7, 4) == 11);
  CHECK_THROWS_AS(predicted_wsat_k2t(4, 3), std::invalid_argument);
  CHECK_THROWS_AS(predicted_wsat_k2t(8, 2), std::invalid_argument);

  CHECK(predicted_wsat_diag(2, 3) == 6);
  CHECK(predicted_wsat_diag(2, 4) == 11);
  CHECK(predicted_wsat_diag(3, 3) == 11);
  CHECK(predicted_wsat_diag(1, 1) == 0);

  CHECK(predicted_classical(ClassicalKind::clique, 5, 3) == 4);
  CHECK(predicted_classical(ClassicalKind::clique, 5, 4) == 7);
  CHECK(predicted_classical(ClassicalKind::star, 5, 3) == 3);
  CHECK(predicted_classical(ClassicalKind::k22, 6, 0) == 6);
  CHECK(predicted_classical(ClassicalKind::k23, 6, 0) == 7);
  CHECK_THROWS_AS(predicted_classical(ClassicalKind::k23, 4, 0), std::invalid_argument);
}

TEST_CASE("exact search on small orders") {
  SearchConfig c1(5, PatternSpec(2, 3));
  WsatResult r1 = wsat_exact(c1);
  CHECK(r1.value == 6);
  CHECK(r1.witness->edge_count() == 6);
  CHECK(is_weakly_saturated(*r1.witness, PatternSpec(2, 3)));
  REQUIRE(r1.certificate.has_value());
  CHECK(verify_certificate(*r1.certificate).ok);

  SearchConfig c2(4, PatternSpec(2, 2));
  CHECK(wsat_exact(c2).value == 4);

  SearchConfig c3(5, PatternSpec(1, 3));
  WsatResult r3 = wsat_exact(c3);
  CHECK(r3.value == 3);
  // the witness family: a triangle plus isolated vertices
  CHECK(is_weakly_saturated(disjoint_union(complete_graph(3), empty_graph(2)), PatternSpec(1, 3)));
}

TEST_CASE("scan window and none-in-range") {
  SearchConfig cfg(5, PatternSpec(2, 3));
  cfg.m_lo = 0;
  cfg.m_hi = 5;
  WsatResult r = wsat_exact(cfg);
  CHECK_FALSE(r.value.has_value());
  CHECK_FALSE(r.witness.has_value());

  cfg.m_hi = 20;
  CHECK_THROWS_AS(wsat_exact(cfg), std::invalid_argument);
}

TEST_CASE("no smaller saturated graph below the exact value") {
  SearchConfig c1(5, PatternSpec(2, 3));
  CHECK(verify_no_smaller(c1, 5));
  SearchConfig c2(4, PatternSpec(2, 2));
  CHECK(verify_no_smaller(c2, 6));  // K_4 is the only 6-edge graph and is not free
  SearchConfig c3(6, PatternSpec(2, 4));
  CHECK(verify_no_smaller(c3, 10));
}

TEST_CASE("determinism across workers and dedup") {
  WsatResult base;
  bool first = true;
  for (bool dedup : {true, false}) {
    for (int workers : {1, 3}) {
      SearchConfig cfg(5, PatternSpec(2, 3));
      cfg.dedup = dedup;
      cfg.worker_count = workers;
      WsatResult r = wsat_exact(cfg);
      if (first) {
        base = r;
        first = false;
        continue;
      }
      CHECK(r.value == base.value);
      CHECK(*r.witness == *base.witness);
      CHECK(r.minimum_witnesses.size() == base.minimum_witnesses.size());
      for (std::size_t i = 0; i < r.minimum_witnesses.size(); ++i)
        CHECK(r.minimum_witnesses[i] == base.minimum_witnesses[i]);
    }
  }
}

TEST_CASE("saturation is isomorphism-invariant") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 150; ++trial) {
    int n = 5 + static_cast<int>(rng() % 4);
    Graph g = testing::random_graph(rng, n, 0.45);
    Graph h = relabel(g, testing::random_permutation(rng, n));
    PatternSpec p(2, 3);
    CHECK(is_weakly_saturated(g, p) == is_weakly_saturated(h, p));
  }
}

TEST_CASE("dedup does not change values on full scans") {
  for (auto [n, s, t] : {std::tuple{4, 2, 2}, {5, 2, 3}, {5, 1, 2}}) {
    SearchConfig with(n, PatternSpec(s, t));
    SearchConfig without(n, PatternSpec(s, t));
    without.dedup = false;
    CHECK(wsat_exact(with).value == wsat_exact(without).value);
  }
}

TEST_CASE("connectivity pruning keeps values for two-side patterns") {
  for (int n : {5, 6}) {
    SearchConfig plain(n, PatternSpec(2, 3));
    SearchConfig pruned(n, PatternSpec(2, 3));
    pruned.prune_connected = true;
    CHECK(wsat_exact(plain).value == wsat_exact(pruned).value);
  }
}

TEST_CASE("clique search reproduces classical values") {
  CHECK(wsat_exact_clique(5, CliqueSpec(3)).value == 4);
  CHECK(wsat_exact_clique(5, CliqueSpec(4)).value == 7);
}

TEST_CASE("table rows of the K_{2,t} results") {
  auto rows = reproduce_table(3, 3, 5, 6, 2);
  REQUIRE(rows.size() == 2);
  for (const TableRow& row : rows) {
    CHECK(row.pass);
    CHECK(row.exact == row.predicted);
    CHECK(row.predicted == row.n + 1);
  }
  CHECK(reproduce_table(4, 4, 5, 5, 1).empty());  // below the formula range
}

TEST_CASE("level hooks drive resume") {
  std::vector<int> done_levels;
  LevelHooks hooks;
  hooks.skip = [](int m) { return m < 4; };
  hooks.done = [&](int m, bool found, std::uint64_t) {
    done_levels.push_back(m);
    (void)found;
  };
  SearchConfig cfg(5, PatternSpec(2, 3));
  WsatResult r = wsat_exact(cfg, hooks);
  CHECK(r.value == 6);
  CHECK(done_levels == std::vector<int>{4, 5, 6});
}

TEST_CASE("run records round-trip") {
  RunRecord r;
  r.command = "search";
  r.params = {{"n", "5"}, {"s", "2"}, {"t", "3"}, {"m", "4"}, {"found", "false"}};
  r.outputs = {"-"};
  r.wall_time_s = 1.25;
  CHECK(run_record_from_json(run_record_to_json(r)) == r);
}

TEST_SUITE_END();
