#include "wsat/canonical.hpp"

#include <algorithm>
#include <array>

#include "wsat/graph6.hpp"

namespace wsat {

namespace {

// Iterated refinement by (color, neighbor color multiset). The ranks only
// steer candidate order in the search below; correctness never depends on
// them.
std::array<int, kMaxVertices> refinement_ranks(const Graph& g) {
  int n = g.order();
  std::vector<int> color(n);
  for (int v = 0; v < n; ++v) color[v] = g.degree(v);

  for (int round = 0; round < n; ++round) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(color[v]);
      std::vector<int> nb;
      for (int u : BitRange(g.neighbors(v))) nb.push_back(color[u]);
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    std::vector<std::vector<int>> uniq(sig.begin(), sig.end());
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v)
      next[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
    if (next == color) break;
    color = next;
  }

  std::array<int, kMaxVertices> out{};
  for (int v = 0; v < n; ++v) out[v] = color[v];
  return out;
}

struct DisjointSet {
  std::array<int, kMaxVertices> parent;
  explicit DisjointSet(int n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()), pref_(refinement_ranks(g)) {}

  std::vector<int> run() {
    dfs(0);
    return std::vector<int>(best_perm_.begin(), best_perm_.begin() + n_);
  }

 private:
  const Graph& g_;
  int n_;
  std::array<int, kMaxVertices> pref_;

  std::array<int, kMaxVertices> perm_{};
  std::uint64_t used_ = 0;
  // cur_cols_[j] = adjacency bits of perm_[j] against positions 0..j-1;
  // position 0 is the most significant bit, so integer order = lex order.
  std::array<std::uint64_t, kMaxVertices> cur_cols_{};
  std::array<std::uint64_t, kMaxVertices> best_cols_{};
  std::array<int, kMaxVertices> best_perm_{};
  bool have_best_ = false;

  std::vector<std::array<int, kMaxVertices>> gens_;

  // cur_cols_[1..d-1] vs best_cols_[1..d-1]: true when all equal. A greater
  // prefix never survives (such branches are pruned on entry).
  bool prefix_equal(int d) const {
    for (int j = 1; j < d; ++j)
      if (cur_cols_[j] != best_cols_[j]) return false;
    return true;
  }

  std::uint64_t column_of(int v, int d) const {
    std::uint64_t col = 0;
    for (int i = 0; i < d; ++i) col = (col << 1) | (g_.has_edge(perm_[i], v) ? 1 : 0);
    return col;
  }

  void take_leaf() {
    if (have_best_ && prefix_equal(n_)) {
      // Same bit string via a different ordering: an automorphism.
      std::array<int, kMaxVertices> a{};
      for (int i = 0; i < n_; ++i) a[best_perm_[i]] = perm_[i];
      if (std::find(gens_.begin(), gens_.end(), a) == gens_.end() && gens_.size() < 256)
        gens_.push_back(a);
      return;
    }
    best_cols_ = cur_cols_;
    best_perm_ = perm_;
    have_best_ = true;
  }

  void dfs(int d) {
    if (d == n_) {
      take_leaf();
      return;
    }

    struct Cand {
      std::uint64_t col;
      int pref;
      int v;
      bool operator<(const Cand& o) const { return std::tie(col, pref, v) < std::tie(o.col, o.pref, o.v); }
    };
    std::vector<Cand> cands;
    cands.reserve(n_ - d);
    for (int v = 0; v < n_; ++v)
      if (!(used_ & vbit(v))) cands.push_back({column_of(v, d), pref_[v], v});
    std::sort(cands.begin(), cands.end());

    // Orbits of the generators that fix the placed prefix pointwise; trying
    // one vertex per orbit is enough. Child calls can discover generators,
    // so the orbit structure is rebuilt whenever the list grows.
    auto build_orbits = [&](DisjointSet& orbits) {
      for (const auto& a : gens_) {
        bool fixes = true;
        for (int i = 0; i < d && fixes; ++i) fixes = a[perm_[i]] == perm_[i];
        if (!fixes) continue;
        for (int v = 0; v < n_; ++v) orbits.merge(v, a[v]);
      }
    };
    DisjointSet orbits(n_);
    build_orbits(orbits);
    std::size_t gens_seen = gens_.size();
    std::uint64_t tried = 0;

    for (const Cand& c : cands) {
      if (have_best_ && prefix_equal(d) && c.col > best_cols_[d]) break;
      if (gens_.size() != gens_seen) {
        orbits = DisjointSet(n_);
        build_orbits(orbits);
        gens_seen = gens_.size();
      }
      int root = orbits.find(c.v);
      bool seen = false;
      for (int u : BitRange(tried))
        if (orbits.find(u) == root) {
          seen = true;
          break;
        }
      if (seen) continue;
      tried |= vbit(c.v);

      perm_[d] = c.v;
      cur_cols_[d] = c.col;
      used_ |= vbit(c.v);
      dfs(d + 1);
      used_ &= ~vbit(c.v);
    }
  }
};

}  // namespace

std::vector<int> canonical_order(const Graph& g) { return CanonicalSearch(g).run(); }

Graph canonical_form(const Graph& g) {
  std::vector<int> order = canonical_order(g);
  std::vector<int> inv(g.order());
  for (int i = 0; i < g.order(); ++i) inv[order[i]] = i;
  return relabel(g, inv);
}

std::string canonical_key(const Graph& g) { return graph6_encode(canonical_form(g)); }

}  // namespace wsat
