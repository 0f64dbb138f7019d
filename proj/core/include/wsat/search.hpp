#pragma once

// Exact wsat(n, pattern) at desk scale: scan edge counts m upward, enumerate
// all m-edge graphs on n labeled vertices (optionally deduplicated by
// canonical form), and stop at the first m admitting a weakly saturated
// graph. Closed-form predictions are provided for cross-checking.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "wsat/graph.hpp"
#include "wsat/pattern.hpp"
#include "wsat/percolation.hpp"

namespace wsat {

struct SearchConfig {
  int n;
  PatternSpec pattern;
  int m_lo = 0;
  int m_hi = -1;  // -1: scan up to n(n-1)/2
  bool dedup = true;
  // Skip disconnected candidates. Sound for s = 2 only and applied only
  // then; weakly K_{2,t}-saturated graphs are connected.
  bool prune_connected = false;
  int worker_count = 1;

  SearchConfig(int n_, PatternSpec p) : n(n_), pattern(p) {}
};

struct WsatResult {
  std::optional<int> value;  // empty: no saturated graph in [m_lo, m_hi]
  std::optional<Graph> witness;  // canonical form, smallest key
  std::vector<Graph> minimum_witnesses;  // all isomorphism classes found at `value`
  std::uint64_t graphs_tested = 0;
  std::optional<Certificate> certificate;
};

// wsat(n, K_{2,t}) for t >= 3, n >= t+2: n-2+C(t,2), except n-1+C(t,2) for
// even t with n <= 2t-2.
int predicted_wsat_k2t(int n, int t);

// wsat(s+t, K_{s,t}): C(s+t-1,2), plus one when gcd(s,t) != 1.
int predicted_wsat_diag(int s, int t);

enum class ClassicalKind { clique, star, k22, k23 };

// Known values used as cross-checks: wsat(n,K_r) = (r-2)n - C(r-1,2),
// wsat(n,K_{1,t}) = C(t,2), wsat(n,K_{2,2}) = n, wsat(n,K_{2,3}) = n+1.
int predicted_classical(ClassicalKind kind, int n, int r_or_t);

// Per-m-level hooks, used by the CLI for progress records and resume.
struct LevelHooks {
  std::function<bool(int m)> skip;  // true: trust a prior record, skip level
  std::function<void(int m, bool found, std::uint64_t tested)> done;
};

WsatResult wsat_exact(const SearchConfig& cfg);
WsatResult wsat_exact(const SearchConfig& cfg, const LevelHooks& hooks);

// True iff no graph with exactly m edges on cfg.n vertices is weakly
// saturated for cfg.pattern.
bool verify_no_smaller(const SearchConfig& cfg, int m);

// Clique-pattern search for the classical cross-checks.
WsatResult wsat_exact_clique(int n, CliqueSpec clique, int m_lo = 0, int m_hi = -1,
                             bool dedup = true, int workers = 1);

struct TableRow {
  int s;
  int t;
  int n;
  int predicted;
  std::optional<int> exact;
  bool pass;
  std::uint64_t graphs_tested;
  double wall_time_s;
};

// Predicted vs exact wsat(n, K_{2,t}) over the given ranges; rows with
// n < t+2 (where the closed form does not apply) are skipped. on_row, when set, is called as
// each row completes.
std::vector<TableRow> reproduce_table(int t_lo, int t_hi, int n_lo, int n_hi, int workers = 1,
                                      const std::function<void(const TableRow&)>& on_row = nullptr);

}  // namespace wsat
