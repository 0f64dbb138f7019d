#include "wsat/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "wsat/canonical.hpp"
#include "wsat/graph6.hpp"

namespace wsat {

namespace {

int binom2(int k) { return k * (k - 1) / 2; }

// Enumerates all m-subsets of the edge indices lo..E-1 on top of the edges
// already in g, calling visit(g) for each completed graph.
template <typename Visit>
void enum_edge_subsets(Graph& g, int n, int lo, int m, Visit&& visit) {
  if (m == 0) {
    visit(g);
    return;
  }
  int total = binom2(n);
  for (int i = lo; i <= total - m; ++i) {
    Edge e = edge_at_index(i, n);
    g.add_edge(e);
    enum_edge_subsets(g, n, i + 1, m - 1, visit);
    g.remove_edge(e);
  }
}

// One edge-count level: enumerate every m-edge graph on n vertices, keep the
// saturated ones. Work is split across workers by the first edge index;
// each worker keeps its own seen-set, so cross-worker duplicates can occur
// and are removed in the merge.
struct LevelResult {
  std::vector<std::pair<std::string, Graph>> found;  // key -> canonical form, sorted by key
  std::uint64_t tested = 0;
};

template <typename FreeTest, typename SatTest>
LevelResult scan_level(int n, int m, bool dedup, bool prune_connected, int workers,
                       const FreeTest& is_free, const SatTest& is_sat) {
  LevelResult result;
  int total = binom2(n);
  if (m < 0 || m > total) return result;

  std::atomic<int> next_unit{0};
  std::atomic<std::uint64_t> tested{0};
  std::mutex merge_mu;
  std::map<std::string, Graph> merged;

  auto worker = [&]() {
    std::unordered_set<std::string> seen;
    std::vector<std::pair<std::string, Graph>> local;
    auto visit = [&](const Graph& g) {
      tested.fetch_add(1, std::memory_order_relaxed);
      if (!is_free(g)) return;
      if (prune_connected && !is_connected(g)) return;
      if (dedup) {
        Graph cf = canonical_form(g);
        std::string key = graph6_encode(cf);
        if (!seen.insert(key).second) return;
        if (is_sat(g)) local.emplace_back(std::move(key), std::move(cf));
      } else if (is_sat(g)) {
        Graph cf = canonical_form(g);
        local.emplace_back(graph6_encode(cf), std::move(cf));
      }
    };

    if (m == 0) {
      if (next_unit.fetch_add(1) == 0) {
        Graph g(n);
        visit(g);
      }
    } else {
      for (;;) {
        int first = next_unit.fetch_add(1);
        if (first > total - m) break;
        Graph g(n);
        g.add_edge(edge_at_index(first, n));
        enum_edge_subsets(g, n, first + 1, m - 1, visit);
      }
    }

    std::lock_guard<std::mutex> lock(merge_mu);
    for (auto& [key, cf] : local) merged.emplace(std::move(key), std::move(cf));
  };

  int nthreads = std::max(1, workers);
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(nthreads);
    for (int i = 0; i < nthreads; ++i) threads.emplace_back(worker);
    for (auto& th : threads) th.join();
  }

  result.tested = tested.load();
  result.found.assign(merged.begin(), merged.end());
  return result;
}

template <typename FreeTest, typename SatTest>
WsatResult scan_levels(int n, int m_lo, int m_hi, bool dedup, bool prune_connected, int workers,
                       const FreeTest& is_free, const SatTest& is_sat, const LevelHooks& hooks) {
  int total = binom2(n);
  if (m_hi < 0) m_hi = total;
  if (m_lo < 0 || m_lo > m_hi || m_hi > total)
    throw std::invalid_argument("edge-count bounds must satisfy 0 <= m_lo <= m_hi <= n(n-1)/2");

  WsatResult result;
  for (int m = m_lo; m <= m_hi; ++m) {
    if (hooks.skip && hooks.skip(m)) continue;
    LevelResult lr = scan_level(n, m, dedup, prune_connected, workers, is_free, is_sat);
    result.graphs_tested += lr.tested;
    if (hooks.done) hooks.done(m, !lr.found.empty(), lr.tested);
    if (!lr.found.empty()) {
      result.value = m;
      result.witness = lr.found.front().second;
      for (auto& [key, cf] : lr.found) result.minimum_witnesses.push_back(cf);
      return result;
    }
  }
  return result;
}

}  // namespace

int predicted_wsat_k2t(int n, int t) {
  if (t < 3 || n < t + 2) throw std::invalid_argument("K_{2,t} formula needs t >= 3 and n >= t+2");
  int base = n - 2 + binom2(t);
  return (t % 2 == 0 && n <= 2 * t - 2) ? base + 1 : base;
}

int predicted_wsat_diag(int s, int t) {
  if (s < 1 || t < 1) throw std::invalid_argument("diagonal formula needs s,t >= 1");
  return binom2(s + t - 1) + (std::gcd(s, t) == 1 ? 0 : 1);
}

int predicted_classical(ClassicalKind kind, int n, int r_or_t) {
  switch (kind) {
    case ClassicalKind::clique:
      if (r_or_t < 2 || n < r_or_t) throw std::invalid_argument("clique formula needs n >= r >= 2");
      return (r_or_t - 2) * n - binom2(r_or_t - 1);
    case ClassicalKind::star:
      if (n < r_or_t + 1) throw std::invalid_argument("star formula needs n >= t+1");
      return binom2(r_or_t);
    case ClassicalKind::k22:
      if (n < 4) throw std::invalid_argument("K_{2,2} value needs n >= 4");
      return n;
    case ClassicalKind::k23:
      if (n < 5) throw std::invalid_argument("K_{2,3} value needs n >= 5");
      return n + 1;
  }
  throw std::invalid_argument("unknown classical kind");
}

WsatResult wsat_exact(const SearchConfig& cfg) { return wsat_exact(cfg, LevelHooks{}); }

WsatResult wsat_exact(const SearchConfig& cfg, const LevelHooks& hooks) {
  PatternSpec p = cfg.pattern;
  if (p.s + p.t > cfg.n) throw std::invalid_argument("pattern larger than graph");
  bool prune = cfg.prune_connected && p.s == 2;
  WsatResult result = scan_levels(
      cfg.n, cfg.m_lo, cfg.m_hi, cfg.dedup, prune, cfg.worker_count,
      [&](const Graph& g) { return is_kst_free(g, p); },
      [&](const Graph& g) { return closure_complete(g, p); }, hooks);
  if (result.witness) result.certificate = extract_certificate(*result.witness, p);
  return result;
}

bool verify_no_smaller(const SearchConfig& cfg, int m) {
  PatternSpec p = cfg.pattern;
  if (p.s + p.t > cfg.n) throw std::invalid_argument("pattern larger than graph");
  bool prune = cfg.prune_connected && p.s == 2;
  LevelResult lr = scan_level(
      cfg.n, m, cfg.dedup, prune, cfg.worker_count,
      [&](const Graph& g) { return is_kst_free(g, p); },
      [&](const Graph& g) { return closure_complete(g, p); });
  return lr.found.empty();
}

WsatResult wsat_exact_clique(int n, CliqueSpec clique, int m_lo, int m_hi, bool dedup, int workers) {
  if (clique.r > n) throw std::invalid_argument("pattern larger than graph");
  return scan_levels(
      n, m_lo, m_hi, dedup, false, workers,
      [&](const Graph& g) { return is_clique_free(g, clique); },
      [&](const Graph& g) { return closure_complete(g, clique); }, LevelHooks{});
}

std::vector<TableRow> reproduce_table(int t_lo, int t_hi, int n_lo, int n_hi, int workers,
                                      const std::function<void(const TableRow&)>& on_row) {
  std::vector<TableRow> rows;
  for (int t = t_lo; t <= t_hi; ++t) {
    for (int n = n_lo; n <= n_hi; ++n) {
      if (t < 3 || n < t + 2) continue;
      TableRow row{2, t, n, predicted_wsat_k2t(n, t), std::nullopt, false, 0, 0.0};
      SearchConfig cfg(n, PatternSpec(2, t));
      cfg.worker_count = workers;
      auto start = std::chrono::steady_clock::now();
      WsatResult r = wsat_exact(cfg);
      row.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      row.exact = r.value;
      row.graphs_tested = r.graphs_tested;
      row.pass = r.value.has_value() && *r.value == row.predicted;
      if (on_row) on_row(row);
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace wsat
