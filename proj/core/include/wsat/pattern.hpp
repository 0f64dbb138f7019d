#pragma once

// Complete-bipartite subgraph detection: containment, freeness, and the
// "does adding edge e create a copy through e" test. Copies are ordinary
// subgraphs; edges inside a side are allowed.

#include <optional>

#include "wsat/graph.hpp"

namespace wsat {

struct PatternSpec {
  int s;
  int t;

  PatternSpec(int s_, int t_);

  bool operator==(const PatternSpec&) const = default;
};

// Clique pattern K_r, kept separate from PatternSpec: used only for the
// classical wsat cross-checks.
struct CliqueSpec {
  int r;

  explicit CliqueSpec(int r_);
};

// One concrete K_{s,t} copy: every side_s/side_t pair must be an edge of the
// graph the witness is asserted against.
struct Witness {
  std::uint64_t side_s = 0;
  std::uint64_t side_t = 0;

  bool operator==(const Witness&) const = default;
};

// Direct edge-by-edge validation of a stored witness.
bool witness_valid(const Graph& g, const Witness& w, PatternSpec p);

// Sorted-vertex-list lexicographic order on (side_s, side_t), used for
// deterministic tie-breaking.
bool witness_less(const Witness& a, const Witness& b);

std::optional<Witness> contains_kst(const Graph& g, PatternSpec p);
bool is_kst_free(const Graph& g, PatternSpec p);

// Witness (lexicographically smallest) for a K_{s,t} copy in G+e that has
// e.u and e.v on opposite sides, if one exists. Pre: e not in G.
std::optional<Witness> edge_completes_kst(const Graph& g, Edge e, PatternSpec p);

// Presence-only version with degree / common-neighbor fast paths for s <= 2;
// agrees with edge_completes_kst everywhere.
bool edge_completes_kst_fast(const Graph& g, Edge e, PatternSpec p);

// The pair condition |N(a,b)| >= t-1 and N(a)\{b} != N(b)\{a}: when it
// holds, some missing edge at a or b becomes addable for K_{2,t}; returns
// that edge.
std::optional<Edge> addability_pair_criterion(const Graph& g, int a, int b, int t);

bool contains_clique(const Graph& g, CliqueSpec c);
bool is_clique_free(const Graph& g, CliqueSpec c);
bool edge_completes_clique(const Graph& g, Edge e, CliqueSpec c);

}  // namespace wsat
