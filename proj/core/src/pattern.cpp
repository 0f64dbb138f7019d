#include "wsat/pattern.hpp"

#include <stdexcept>

namespace wsat {

namespace {

// Lowest k set bits of mask.
std::uint64_t lowest_bits(std::uint64_t mask, int k) {
  std::uint64_t out = 0;
  for (int v : BitRange(mask)) {
    if (k-- == 0) break;
    out |= vbit(v);
  }
  return out;
}

// Visits s-subsets of 0..n-1 in lexicographic order of their sorted vertex
// lists; stops when f returns true.
template <typename F>
void for_each_subset(int n, int s, F&& f) {
  std::vector<int> idx(s);
  for (int i = 0; i < s; ++i) idx[i] = i;
  if (s > n) return;
  for (;;) {
    std::uint64_t mask = 0;
    for (int i : idx) mask |= vbit(i);
    if (f(mask)) return;
    int i = s - 1;
    while (i >= 0 && idx[i] == n - s + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::uint64_t intersect_neighbors(const Graph& g, std::uint64_t side) {
  std::uint64_t cn = g.vertex_mask();
  for (int v : BitRange(side)) cn &= g.neighbors(v);
  return cn;
}

void check_fits(const Graph& g, PatternSpec p) {
  if (p.s + p.t > g.order()) throw std::invalid_argument("pattern larger than graph");
}

}  // namespace

PatternSpec::PatternSpec(int s_, int t_) : s(s_), t(t_) {
  if (s < 1 || t < s) throw std::invalid_argument("pattern needs 1 <= s <= t");
  if (s + t > kMaxVertices) throw std::invalid_argument("capacity exceeded: s+t > 64");
}

CliqueSpec::CliqueSpec(int r_) : r(r_) {
  if (r < 2 || r > kMaxVertices) throw std::invalid_argument("clique order out of range");
}

bool witness_valid(const Graph& g, const Witness& w, PatternSpec p) {
  if (std::popcount(w.side_s) != p.s || std::popcount(w.side_t) != p.t) return false;
  if (w.side_s & w.side_t) return false;
  if ((w.side_s | w.side_t) & ~g.vertex_mask()) return false;
  for (int a : BitRange(w.side_s))
    if ((g.neighbors(a) & w.side_t) != w.side_t) return false;
  return true;
}

bool witness_less(const Witness& a, const Witness& b) {
  // For equal-size sets, the sorted-list order is decided by which set owns
  // the smallest element of the symmetric difference.
  auto set_less = [](std::uint64_t x, std::uint64_t y) {
    std::uint64_t diff = x ^ y;
    if (!diff) return false;
    return (x & (diff & -diff)) != 0;
  };
  if (a.side_s != b.side_s) return set_less(a.side_s, b.side_s);
  return set_less(a.side_t, b.side_t);
}

std::optional<Witness> contains_kst(const Graph& g, PatternSpec p) {
  check_fits(g, p);
  std::optional<Witness> found;
  for_each_subset(g.order(), p.s, [&](std::uint64_t side) {
    std::uint64_t cn = intersect_neighbors(g, side);
    if (std::popcount(cn) >= p.t) {
      found = Witness{side, lowest_bits(cn, p.t)};
      return true;
    }
    return false;
  });
  return found;
}

bool is_kst_free(const Graph& g, PatternSpec p) { return !contains_kst(g, p).has_value(); }

std::optional<Witness> edge_completes_kst(const Graph& g, Edge e, PatternSpec p) {
  check_fits(g, p);
  if (g.has_edge(e)) throw std::invalid_argument("edge already present");
  Graph plus = g;
  plus.add_edge(e);

  // One orientation: anchor on the s-side, other endpoint on the t-side.
  auto best_for = [&](int anchor, int other) -> std::optional<Witness> {
    std::optional<Witness> found;
    for_each_subset(g.order(), p.s, [&](std::uint64_t side) {
      if (!(side & vbit(anchor))) return false;
      if ((side & ~vbit(anchor)) & ~g.neighbors(other)) return false;
      std::uint64_t cn = intersect_neighbors(plus, side);
      if (std::popcount(cn) < p.t) return false;
      // `other` is adjacent in G+e to all of side, so it sits in cn.
      found = Witness{side, vbit(other) | lowest_bits(cn & ~vbit(other), p.t - 1)};
      return true;
    });
    return found;
  };

  std::optional<Witness> a = best_for(e.u, e.v);
  std::optional<Witness> b = best_for(e.v, e.u);
  if (a && b) return witness_less(*a, *b) ? a : b;
  return a ? a : b;
}

bool edge_completes_kst_fast(const Graph& g, Edge e, PatternSpec p) {
  check_fits(g, p);
  if (g.has_edge(e)) throw std::invalid_argument("edge already present");

  if (p.s == 1) return g.degree(e.u) >= p.t - 1 || g.degree(e.v) >= p.t - 1;

  if (p.s == 2) {
    auto side2 = [&](int anchor, int other) {
      for (int b : BitRange(g.neighbors(other) & ~vbit(anchor)))
        if (std::popcount(g.neighbors(anchor) & g.neighbors(b) & ~vbit(other)) >= p.t - 1) return true;
      return false;
    };
    return side2(e.u, e.v) || side2(e.v, e.u);
  }

  Graph plus = g;
  plus.add_edge(e);
  auto generic = [&](int anchor, int other) {
    bool hit = false;
    for_each_subset(g.order(), p.s, [&](std::uint64_t side) {
      if (!(side & vbit(anchor))) return false;
      if ((side & ~vbit(anchor)) & ~g.neighbors(other)) return false;
      if (std::popcount(intersect_neighbors(plus, side)) >= p.t) {
        hit = true;
        return true;
      }
      return false;
    });
    return hit;
  };
  return generic(e.u, e.v) || generic(e.v, e.u);
}

std::optional<Edge> addability_pair_criterion(const Graph& g, int a, int b, int t) {
  if (a == b) throw std::invalid_argument("pair criterion needs distinct vertices");
  if (std::popcount(common_neighbors(g, a, b)) < t - 1) return std::nullopt;
  std::uint64_t from_a = g.neighbors(a) & ~g.neighbors(b) & ~vbit(b);
  std::uint64_t from_b = g.neighbors(b) & ~g.neighbors(a) & ~vbit(a);
  if (!(from_a | from_b)) return std::nullopt;
  int c = std::countr_zero(from_a | from_b);
  // c adjacent to exactly one of a,b: the missing edge goes to the other.
  return (from_a & vbit(c)) ? Edge(b, c) : Edge(a, c);
}

namespace {

bool clique_in_mask(const Graph& g, std::uint64_t cand, int k) {
  if (k == 0) return true;
  if (std::popcount(cand) < k) return false;
  while (cand) {
    int v = std::countr_zero(cand);
    cand &= cand - 1;
    if (clique_in_mask(g, cand & g.neighbors(v), k - 1)) return true;
  }
  return false;
}

}  // namespace

bool contains_clique(const Graph& g, CliqueSpec c) {
  return clique_in_mask(g, g.vertex_mask(), c.r);
}

bool is_clique_free(const Graph& g, CliqueSpec c) { return !contains_clique(g, c); }

bool edge_completes_clique(const Graph& g, Edge e, CliqueSpec c) {
  if (c.r > g.order()) throw std::invalid_argument("pattern larger than graph");
  if (g.has_edge(e)) throw std::invalid_argument("edge already present");
  return clique_in_mask(g, common_neighbors(g, e.u, e.v), c.r - 2);
}

}  // namespace wsat
