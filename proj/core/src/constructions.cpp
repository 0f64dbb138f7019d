#include "wsat/constructions.hpp"

#include <numeric>
#include <stdexcept>

namespace wsat {

namespace {

// Saturation order for the complement of the path v_base..v_{base+a+b-1}
// under pattern K_{a,b}, gcd(a,b) = 1. First the bridging edge between the
// first a and the last b path vertices, then the same process on the far
// side for K_{a,b-a}, then the near-side path edges, each the only missing
// edge of an explicit bipartition.
void path_order_rec(int a, int b, int base, std::vector<Edge>& out) {
  if (a + b == 2) {
    out.emplace_back(base, base + 1);
    return;
  }
  if (a > b) std::swap(a, b);
  out.emplace_back(base + a - 1, base + a);
  path_order_rec(a, b - a, base + a, out);
  for (int i = 1; i <= a - 1; ++i) out.emplace_back(base + i - 1, base + i);
}

}  // namespace

FamilyInstance complement_path(int s, int t) {
  if (s < 1 || t < 1) throw std::invalid_argument("complement_path needs s,t >= 1");
  if (s + t > kMaxVertices) throw std::invalid_argument("capacity exceeded: s+t > 64");
  Graph g = complement(path_graph(s + t));
  std::optional<std::vector<Edge>> order;
  if (std::gcd(s, t) == 1) {
    std::vector<Edge> o;
    path_order_rec(s, t, 0, o);
    order = std::move(o);
  }
  return {std::move(g), "complement-path", {{"s", s}, {"t", t}}, std::move(order)};
}

FamilyInstance complement_path_union_k1(int s, int t) {
  if (s < 1 || t < 1) throw std::invalid_argument("complement_path_union_k1 needs s,t >= 1");
  if (s + t < 2 || s + t > kMaxVertices) throw std::invalid_argument("capacity exceeded: need 2 <= s+t <= 64");
  Graph g = complement(disjoint_union(path_graph(s + t - 1), empty_graph(1)));
  std::vector<Edge> order;
  if (s + t >= 3) {
    order.emplace_back(s - 1, s);
    for (int i = 2; i <= s; ++i) order.emplace_back(i - 2, i - 1);
    for (int i = s + 1; i <= s + t - 2; ++i) order.emplace_back(i - 1, i);
  }
  return {std::move(g), "complement-path-union-k1", {{"s", s}, {"t", t}}, std::move(order)};
}

FamilyInstance gnt(int n, int t) {
  if (t < 3) throw std::invalid_argument("gnt needs t >= 3");
  if (n < t + 2) throw std::invalid_argument("gnt needs n >= t+2");
  if (n > kMaxVertices) throw std::invalid_argument("capacity exceeded: n > 64");
  Graph g(n);
  int star_center = t - 2;  // clique vertex carrying the degree-one vertices
  int hub_a = t - 1, hub_b = t, pendant = t + 1;
  for (int u = 0; u < t - 1; ++u)
    for (int v = u + 1; v < t - 1; ++v) g.add_edge(u, v);
  for (int u = 0; u < t - 1; ++u) {
    g.add_edge(u, hub_a);
    g.add_edge(u, hub_b);
  }
  g.add_edge(hub_a, pendant);
  for (int w = t + 2; w < n; ++w) g.add_edge(star_center, w);
  return {std::move(g), "gnt", {{"n", n}, {"t", t}}, std::nullopt};
}

Graph pendant_extend(const Graph& g, const std::vector<int>& targets) {
  if (g.order() >= kMaxVertices) throw std::invalid_argument("capacity exceeded: graph already at 64 vertices");
  Graph out(g.order() + 1);
  for (Edge e : edges(g)) out.add_edge(e);
  for (int v : targets) {
    if (v < 0 || v >= g.order()) throw std::invalid_argument("pendant target outside graph");
    out.add_edge(v, g.order());
  }
  return out;
}

FamilyInstance xyz_graph(int x, int y, int z) {
  if (x < 2 || y < 1 || z < 0) throw std::invalid_argument("xyz_graph needs x >= 2, y >= 1, z >= 0");
  if (x + y + z > kMaxVertices) throw std::invalid_argument("capacity exceeded: x+y+z > 64");
  Graph g(x + y + z);
  for (int u = 0; u < x; ++u)
    for (int v = u + 1; v < x; ++v) g.add_edge(u, v);
  for (int u = 0; u < x; ++u)
    for (int v = x; v < x + y; ++v) g.add_edge(u, v);
  for (int u = x; u < x + y; ++u)
    for (int v = x + y; v < x + y + z; ++v) g.add_edge(u, v);
  return {std::move(g), "xyz", {{"x", x}, {"y", y}, {"z", z}}, std::nullopt};
}

FamilyInstance h_graph(int x, int y1, int y2, int z) {
  if (x < 1 || y1 < 0 || y2 < 0 || z < 0) throw std::invalid_argument("h_graph needs x >= 1 and nonnegative sizes");
  if (x + y1 + y2 + z > kMaxVertices) throw std::invalid_argument("capacity exceeded: order > 64");
  Graph g(x + y1 + y2 + z);
  int yb = x, y2b = x + y1, zb = x + y1 + y2;
  for (int u = 0; u < x; ++u)
    for (int v = u + 1; v < x; ++v) g.add_edge(u, v);
  for (int u = 0; u < x; ++u)
    for (int v = yb; v < zb; ++v) g.add_edge(u, v);
  for (int u = yb; u < y2b; ++u)
    for (int v = zb; v < zb + z; ++v) g.add_edge(u, v);
  return {std::move(g), "h", {{"x", x}, {"y1", y1}, {"y2", y2}, {"z", z}}, std::nullopt};
}

}  // namespace wsat
