#pragma once

// Deterministic generators for the graph families used by the saturation
// results, with explicit vertex labelings and, where a proof supplies one,
// the saturation ordering of the missing edges.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wsat/graph.hpp"

namespace wsat {

struct FamilyInstance {
  Graph graph;
  std::string name;
  std::vector<std::pair<std::string, int>> params;
  // When present: a permutation of the missing edges that verifies as a
  // certificate step order for the family's pattern.
  std::optional<std::vector<Edge>> suggested_order;
};

// Complement of the path on s+t vertices. Carries the recursive saturation
// order (first edge (s-1,s), then the recursion on the far side, then the
// near-side path edges) when gcd(s,t) = 1; for s > t the roles are swapped.
FamilyInstance complement_path(int s, int t);

// Complement of P_{s+t-1} plus an isolated vertex; one more edge than
// complement_path. Carries the explicit order e_1=(s-1,s), then
// (i-2,i-1) for i=2..s, then (i-1,i) for i=s+1..s+t-2.
FamilyInstance complement_path_union_k1(int s, int t);

// The K_{2,t} extremal family: a (t-1)-clique {0..t-2}, hubs t-1 and t
// joined to the whole clique but not to each other, a pendant t+1 on hub
// t-1, and vertices t+2..n-1 each attached to clique vertex t-2 only.
// n-2+C(t,2) edges. Pre: t >= 3, n >= t+2.
FamilyInstance gnt(int n, int t);

// New vertex n adjacent exactly to `targets`.
Graph pendant_extend(const Graph& g, const std::vector<int>& targets);

// X = {0..x-1} a clique, Y = {x..x+y-1}, Z the rest; edges X-X, X-Y, Y-Z.
FamilyInstance xyz_graph(int x, int y, int z);

// X clique, X complete to Y1 and Y2, Z complete to Y1; labeled in block
// order X, Y1, Y2, Z. With y2 = 0 this is xyz_graph(x, y1, z).
FamilyInstance h_graph(int x, int y1, int y2, int z);

}  // namespace wsat
