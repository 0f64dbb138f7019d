#pragma once

// Bootstrap closure for K_{s,t}: repeatedly add any missing edge whose
// addition creates a pattern copy through it. The closure is
// order-independent; the deterministic engine sweeps missing edges in
// ascending edge-index order so certificates are reproducible.

#include <optional>
#include <string>
#include <vector>

#include "wsat/graph.hpp"
#include "wsat/pattern.hpp"

namespace wsat {

struct Step {
  Edge edge;
  Witness witness;
};

struct ClosureOutcome {
  Graph final;
  std::vector<Step> added;
  bool complete;
};

// Base graph plus a fully ordered, witness-annotated edge-addition sequence
// ending at the complete graph.
struct Certificate {
  PatternSpec pattern;
  Graph base;
  std::vector<Step> steps;
};

ClosureOutcome closure(const Graph& g, PatternSpec p);

// Presence-only closure; avoids witness extraction in search loops.
bool closure_complete(const Graph& g, PatternSpec p);

// Pattern-free and the closure reaches K_n.
bool is_weakly_saturated(const Graph& g, PatternSpec p);

// Missing edges currently addable, in edge-index order.
std::vector<Step> addable_edges(const Graph& g, PatternSpec p);

// Throws unless g is weakly saturated; the message distinguishes a base
// containing the pattern from an incomplete closure.
Certificate extract_certificate(const Graph& g, PatternSpec p);

// Builds a certificate along a caller-supplied edge order (e.g. an order
// taken from a construction); throws when some step is not addable.
Certificate certificate_from_order(const Graph& base, PatternSpec p, const std::vector<Edge>& order);

struct CertCheck {
  bool ok;
  std::string reason;  // machine-readable token, empty when ok
  int step;            // offending step index, -1 when not step-specific
};

// Independent checker: re-validates every stored witness edge-by-edge
// without running closure or any pattern search.
CertCheck verify_certificate(const Certificate& c);

// Oracle for the closure engine: true iff g is pattern-free and SOME
// ordering of all missing edges adds each with a copy created through it.
// Backtracks over orderings (memoized); pre: at most 12 missing edges.
bool brute_force_is_weakly_saturated(const Graph& g, PatternSpec p);

bool closure_complete(const Graph& g, CliqueSpec c);
bool is_weakly_saturated(const Graph& g, CliqueSpec c);

// One JSON object per certificate (single line); vertex lists sorted.
std::string certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const std::string& line);

}  // namespace wsat
