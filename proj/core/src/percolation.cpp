#include "wsat/percolation.hpp"

#include <functional>
#include <stdexcept>

#include <json.hpp>

#include "wsat/graph6.hpp"

namespace wsat {

namespace {

void check_fits(const Graph& g, PatternSpec p) {
  if (p.s + p.t > g.order()) throw std::invalid_argument("pattern larger than graph");
}

// Sweeps missing edges in ascending edge-index order until a full sweep adds
// nothing. `test` decides addability against the current graph; `record` is
// called for each edge right before it is added.
template <typename Test, typename Record>
Graph sweep_closure(const Graph& g, Test&& test, Record&& record) {
  Graph cur = g;
  int n = cur.order();
  int total = n * (n - 1) / 2;
  int present = cur.edge_count();
  bool changed = true;
  while (changed && present < total) {
    changed = false;
    for (int idx = 0; idx < total && present < total; ++idx) {
      Edge e = edge_at_index(idx, n);
      if (cur.has_edge(e)) continue;
      if (!test(cur, e)) continue;
      record(cur, e);
      cur.add_edge(e);
      ++present;
      changed = true;
    }
  }
  return cur;
}

}  // namespace

ClosureOutcome closure(const Graph& g, PatternSpec p) {
  check_fits(g, p);
  std::vector<Step> added;
  Graph final = sweep_closure(
      g, [&](const Graph& cur, Edge e) { return edge_completes_kst_fast(cur, e, p); },
      [&](const Graph& cur, Edge e) { added.push_back({e, edge_completes_kst(cur, e, p).value()}); });
  return {final, std::move(added), final.is_complete()};
}

bool closure_complete(const Graph& g, PatternSpec p) {
  check_fits(g, p);
  Graph final = sweep_closure(
      g, [&](const Graph& cur, Edge e) { return edge_completes_kst_fast(cur, e, p); },
      [](const Graph&, Edge) {});
  return final.is_complete();
}

bool is_weakly_saturated(const Graph& g, PatternSpec p) {
  return is_kst_free(g, p) && closure_complete(g, p);
}

std::vector<Step> addable_edges(const Graph& g, PatternSpec p) {
  check_fits(g, p);
  std::vector<Step> out;
  for (Edge e : missing_edges(g))
    if (auto w = edge_completes_kst(g, e, p)) out.push_back({e, *w});
  return out;
}

Certificate extract_certificate(const Graph& g, PatternSpec p) {
  check_fits(g, p);
  if (!is_kst_free(g, p))
    throw std::invalid_argument("not weakly saturated: base contains the pattern");
  ClosureOutcome out = closure(g, p);
  if (!out.complete)
    throw std::invalid_argument("not weakly saturated: closure incomplete");
  return {p, g, std::move(out.added)};
}

Certificate certificate_from_order(const Graph& base, PatternSpec p, const std::vector<Edge>& order) {
  check_fits(base, p);
  if (!is_kst_free(base, p))
    throw std::invalid_argument("not weakly saturated: base contains the pattern");
  Graph cur = base;
  std::vector<Step> steps;
  for (Edge e : order) {
    if (cur.has_edge(e)) throw std::invalid_argument("order contains a present or repeated edge");
    auto w = edge_completes_kst(cur, e, p);
    if (!w) throw std::invalid_argument("order step creates no pattern copy");
    steps.push_back({e, *w});
    cur.add_edge(e);
  }
  if (!cur.is_complete()) throw std::invalid_argument("order does not end at the complete graph");
  return {p, base, std::move(steps)};
}

CertCheck verify_certificate(const Certificate& c) {
  const int s = c.pattern.s, t = c.pattern.t;
  if (!is_kst_free(c.base, c.pattern)) return {false, "base-not-pattern-free", -1};

  Graph cur = c.base;
  for (int i = 0; i < static_cast<int>(c.steps.size()); ++i) {
    const Step& st = c.steps[i];
    if (st.edge.v >= cur.order()) return {false, "step-edge-outside-graph", i};
    if (c.base.has_edge(st.edge)) return {false, "step-edge-in-base", i};
    if (cur.has_edge(st.edge)) return {false, "step-edge-duplicate", i};

    const Witness& w = st.witness;
    if (std::popcount(w.side_s) != s || std::popcount(w.side_t) != t)
      return {false, "witness-side-size", i};
    if (w.side_s & w.side_t) return {false, "witness-sides-overlap", i};
    if ((w.side_s | w.side_t) & ~cur.vertex_mask()) return {false, "witness-outside-graph", i};
    std::uint64_t ubit = vbit(st.edge.u), wbit = vbit(st.edge.v);
    bool crosses = ((w.side_s & ubit) && (w.side_t & wbit)) || ((w.side_s & wbit) && (w.side_t & ubit));
    if (!crosses) return {false, "witness-missing-step-edge", i};

    cur.add_edge(st.edge);
    for (int a : BitRange(w.side_s))
      if ((cur.neighbors(a) & w.side_t) != w.side_t) return {false, "witness-missing-edge", i};
  }
  if (!cur.is_complete()) return {false, "closure-incomplete", -1};
  return {true, "", -1};
}

bool brute_force_is_weakly_saturated(const Graph& g, PatternSpec p) {
  check_fits(g, p);
  if (!is_kst_free(g, p)) return false;
  std::vector<Edge> miss = missing_edges(g);
  int k = static_cast<int>(miss.size());
  if (k > 12) throw std::invalid_argument("too many missing edges for ordering search");
  std::uint32_t full = (k == 0) ? 0 : ((std::uint32_t{1} << k) - 1);

  std::vector<char> failed(std::size_t{1} << k, 0);
  Graph cur = g;
  std::function<bool(std::uint32_t)> rec = [&](std::uint32_t subset) {
    if (subset == full) return true;
    if (failed[subset]) return false;
    for (int i = 0; i < k; ++i) {
      if (subset & (std::uint32_t{1} << i)) continue;
      if (!edge_completes_kst_fast(cur, miss[i], p)) continue;
      cur.add_edge(miss[i]);
      bool ok = rec(subset | (std::uint32_t{1} << i));
      cur.remove_edge(miss[i]);
      if (ok) return true;
    }
    failed[subset] = 1;
    return false;
  };
  return rec(0);
}

bool closure_complete(const Graph& g, CliqueSpec c) {
  if (c.r > g.order()) throw std::invalid_argument("pattern larger than graph");
  Graph final = sweep_closure(
      g, [&](const Graph& cur, Edge e) { return edge_completes_clique(cur, e, c); },
      [](const Graph&, Edge) {});
  return final.is_complete();
}

bool is_weakly_saturated(const Graph& g, CliqueSpec c) {
  return is_clique_free(g, c) && closure_complete(g, c);
}

std::string certificate_to_json(const Certificate& c) {
  nlohmann::json j;
  j["n"] = c.base.order();
  j["pattern"] = {{"s", c.pattern.s}, {"t", c.pattern.t}};
  j["base"] = graph6_encode(c.base);
  nlohmann::json steps = nlohmann::json::array();
  for (const Step& st : c.steps) {
    steps.push_back({{"edge", {st.edge.u, st.edge.v}},
                     {"side_s", mask_to_vertices(st.witness.side_s)},
                     {"side_t", mask_to_vertices(st.witness.side_t)}});
  }
  j["steps"] = std::move(steps);
  return j.dump();
}

Certificate certificate_from_json(const std::string& line) {
  nlohmann::json j = nlohmann::json::parse(line);
  PatternSpec p(j.at("pattern").at("s").get<int>(), j.at("pattern").at("t").get<int>());
  Graph base = graph6_decode(j.at("base").get<std::string>());
  if (j.at("n").get<int>() != base.order())
    throw std::invalid_argument("certificate order does not match base graph");
  std::vector<Step> steps;
  for (const auto& js : j.at("steps")) {
    const auto& e = js.at("edge");
    Edge edge(e.at(0).get<int>(), e.at(1).get<int>());
    Witness w{vertices_to_mask(js.at("side_s").get<std::vector<int>>()),
              vertices_to_mask(js.at("side_t").get<std::vector<int>>())};
    steps.push_back({edge, w});
  }
  return {p, base, std::move(steps)};
}

}  // namespace wsat
