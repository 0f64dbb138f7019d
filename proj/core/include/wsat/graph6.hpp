#pragma once

// graph6 text codec. Upper-triangle adjacency bits x(i,j), i < j, in column
// order (0,1),(0,2),(1,2),(0,3),..., packed big-endian into 6-bit groups,
// each emitted as value+63. Orders up to 62 use the single header byte n+63;
// 63 and 64 use '~' followed by n as three 6-bit groups.

#include <string>

#include "wsat/graph.hpp"

namespace wsat {

std::string graph6_encode(const Graph& g);

// Throws std::invalid_argument on malformed header, truncated payload,
// trailing bytes, or nonzero padding bits.
Graph graph6_decode(const std::string& text);

}  // namespace wsat
