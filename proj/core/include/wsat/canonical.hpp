#pragma once

// Canonical labeling by exact minimization: among all vertex orderings of G,
// pick the one whose upper-triangle adjacency bit string (graph6 column
// order) is lexicographically smallest. Two graphs get the same key exactly
// when they are isomorphic.

#include <string>
#include <vector>

#include "wsat/graph.hpp"

namespace wsat {

// Vertex order realizing the minimum: canonical position i holds original
// vertex order[i].
std::vector<int> canonical_order(const Graph& g);

Graph canonical_form(const Graph& g);

// graph6 encoding of canonical_form(g).
std::string canonical_key(const Graph& g);

}  // namespace wsat
