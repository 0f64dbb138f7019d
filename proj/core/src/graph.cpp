#include "wsat/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace wsat {

std::vector<int> mask_to_vertices(std::uint64_t mask) {
  std::vector<int> out;
  out.reserve(std::popcount(mask));
  for (int v : BitRange(mask)) out.push_back(v);
  return out;
}

std::uint64_t vertices_to_mask(const std::vector<int>& vs) {
  std::uint64_t mask = 0;
  for (int v : vs) {
    if (v < 0 || v >= kMaxVertices) throw std::invalid_argument("vertex label out of range");
    mask |= vbit(v);
  }
  return mask;
}

Edge::Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {
  if (a == b) throw std::invalid_argument("edge endpoints must differ");
  if (a < 0 || b < 0) throw std::invalid_argument("negative vertex label");
}

int edge_index(Edge e, int n) {
  if (e.v >= n) throw std::invalid_argument("edge endpoint outside graph");
  // Edges with first endpoint r occupy a block of n-1-r indices.
  return e.u * (n - 1) - e.u * (e.u - 1) / 2 + (e.v - e.u - 1);
}

Edge edge_at_index(int index, int n) {
  if (index < 0 || index >= n * (n - 1) / 2) throw std::invalid_argument("edge index out of range");
  int u = 0;
  while (index >= n - 1 - u) {
    index -= n - 1 - u;
    ++u;
  }
  return Edge(u, u + 1 + index);
}

Graph::Graph(int n) : n_(n), adj_{} {
  if (n < 1 || n > kMaxVertices) throw std::invalid_argument("capacity exceeded: order must be in 1..64");
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("vertex label outside graph");
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
  return twice / 2;
}

int Graph::min_degree() const {
  int d = n_;
  for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[u] & vbit(v)) != 0;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loops not allowed");
  adj_[u] |= vbit(v);
  adj_[v] |= vbit(u);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[u] &= ~vbit(v);
  adj_[v] &= ~vbit(u);
}

bool Graph::operator==(const Graph& o) const {
  if (n_ != o.n_) return false;
  for (int v = 0; v < n_; ++v)
    if (adj_[v] != o.adj_[v]) return false;
  return true;
}

bool Graph::subgraph_of(const Graph& o) const {
  if (n_ != o.n_) return false;
  for (int v = 0; v < n_; ++v)
    if (adj_[v] & ~o.adj_[v]) return false;
  return true;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph complement(const Graph& g) {
  int n = g.order();
  Graph out(n);
  for (int u = 0; u < n; ++u)
    for (int v : BitRange(full_mask(n) & ~g.neighbors(u) & ~vbit(u)))
      if (v > u) out.add_edge(u, v);
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  int na = a.order(), nb = b.order();
  if (na + nb > kMaxVertices) throw std::invalid_argument("capacity exceeded: union order > 64");
  Graph out(na + nb);
  for (int u = 0; u < na; ++u)
    for (int v : BitRange(a.neighbors(u)))
      if (v > u) out.add_edge(u, v);
  for (int u = 0; u < nb; ++u)
    for (int v : BitRange(b.neighbors(u)))
      if (v > u) out.add_edge(na + u, na + v);
  return out;
}

Graph join(const Graph& a, const Graph& b) {
  Graph out = disjoint_union(a, b);
  for (int u = 0; u < a.order(); ++u)
    for (int v = 0; v < b.order(); ++v) out.add_edge(u, a.order() + v);
  return out;
}

std::uint64_t common_neighbors(const Graph& g, int u, int v) {
  if (u == v) throw std::invalid_argument("common_neighbors needs distinct vertices");
  return g.neighbors(u) & g.neighbors(v);
}

std::vector<std::uint64_t> connected_components(const Graph& g) {
  std::vector<std::uint64_t> comps;
  std::uint64_t unvisited = g.vertex_mask();
  while (unvisited) {
    std::uint64_t comp = vbit(std::countr_zero(unvisited));
    for (;;) {
      std::uint64_t grown = comp;
      for (int v : BitRange(comp)) grown |= g.neighbors(v);
      if (grown == comp) break;
      comp = grown;
    }
    comps.push_back(comp);
    unvisited &= ~comp;
  }
  return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

bool is_forest(const Graph& g) {
  // Acyclic iff every component is a tree: e = n - #components.
  return g.edge_count() == g.order() - static_cast<int>(connected_components(g).size());
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  int n = g.order();
  if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation size mismatch");
  Graph out(n);
  for (int u = 0; u < n; ++u)
    for (int v : BitRange(g.neighbors(u)))
      if (v > u) out.add_edge(perm[u], perm[v]);
  return out;
}

Graph remove_vertex(const Graph& g, int v) {
  int n = g.order();
  if (v < 0 || v >= n) throw std::invalid_argument("vertex label outside graph");
  if (n == 1) throw std::invalid_argument("cannot delete the last vertex");
  Graph out(n - 1);
  for (int u = 0; u < n; ++u) {
    if (u == v) continue;
    int uu = u < v ? u : u - 1;
    for (int w : BitRange(g.neighbors(u))) {
      if (w == v || w < u) continue;
      int ww = w < v ? w : w - 1;
      out.add_edge(uu, ww);
    }
  }
  return out;
}

std::vector<Edge> edges(const Graph& g) {
  std::vector<Edge> out;
  for (int u = 0; u < g.order(); ++u)
    for (int v : BitRange(g.neighbors(u)))
      if (v > u) out.emplace_back(u, v);
  return out;
}

std::vector<Edge> missing_edges(const Graph& g) {
  std::vector<Edge> out;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

}  // namespace wsat
