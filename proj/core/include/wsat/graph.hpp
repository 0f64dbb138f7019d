#pragma once

// Fixed-capacity simple-graph kernel.  Each graph lives on labeled vertices
// 0..n-1 with n <= 64, one 64-bit neighbor mask per vertex, so neighborhood
// algebra (intersections, complements, common neighbors) is single-word.
//
// Graphs are plain values: every library algorithm takes them by const
// reference and returns fresh values, so sharing across threads is safe as
// long as the owner does not mutate concurrently.

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace wsat {

inline constexpr int kMaxVertices = 64;

constexpr std::uint64_t vbit(int v) { return std::uint64_t{1} << v; }

// Mask with bits 0..n-1 set.
constexpr std::uint64_t full_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// Iterate set bits low to high: for (int v : BitRange(mask)) ...
class BitRange {
 public:
  explicit constexpr BitRange(std::uint64_t bits) : bits_(bits) {}
  class iterator {
   public:
    explicit constexpr iterator(std::uint64_t bits) : bits_(bits) {}
    int operator*() const { return std::countr_zero(bits_); }
    iterator& operator++() {
      bits_ &= bits_ - 1;
      return *this;
    }
    bool operator!=(const iterator& o) const { return bits_ != o.bits_; }

   private:
    std::uint64_t bits_;
  };
  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

 private:
  std::uint64_t bits_;
};

std::vector<int> mask_to_vertices(std::uint64_t mask);
std::uint64_t vertices_to_mask(const std::vector<int>& vs);

// Undirected edge, endpoints normalized so u < v.
struct Edge {
  int u;
  int v;

  Edge(int a, int b);

  bool operator==(const Edge&) const = default;
  auto operator<=>(const Edge&) const = default;
};

// Rank of edge (u,v) among all pairs of an n-vertex graph in lexicographic
// (u,v) order: (0,1),(0,2),...,(0,n-1),(1,2),...
int edge_index(Edge e, int n);
Edge edge_at_index(int index, int n);

class Graph {
 public:
  explicit Graph(int n);

  int order() const { return n_; }
  int edge_count() const;

  std::uint64_t neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return std::popcount(adj_[v]); }
  int min_degree() const;
  std::uint64_t vertex_mask() const { return full_mask(n_); }
  bool is_complete() const { return edge_count() == n_ * (n_ - 1) / 2; }

  bool has_edge(int u, int v) const;
  bool has_edge(Edge e) const { return has_edge(e.u, e.v); }

  // Idempotent: adding a present edge / removing an absent one is a no-op.
  void add_edge(int u, int v);
  void add_edge(Edge e) { add_edge(e.u, e.v); }
  void remove_edge(int u, int v);
  void remove_edge(Edge e) { remove_edge(e.u, e.v); }

  bool operator==(const Graph& o) const;

  // True when every edge of this graph is an edge of o (same order).
  bool subgraph_of(const Graph& o) const;

 private:
  int n_;
  std::array<std::uint64_t, kMaxVertices> adj_;

  void check_vertex(int v) const;
};

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph join(const Graph& a, const Graph& b);

// N(u) n N(v); never contains u or v since graphs are loop-free.
std::uint64_t common_neighbors(const Graph& g, int u, int v);

std::vector<std::uint64_t> connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_forest(const Graph& g);

// Image of g under the vertex relabeling v -> perm[v].
Graph relabel(const Graph& g, const std::vector<int>& perm);

// Deletes v; vertices above v shift down by one.
Graph remove_vertex(const Graph& g, int v);

std::vector<Edge> edges(const Graph& g);
std::vector<Edge> missing_edges(const Graph& g);

}  // namespace wsat
