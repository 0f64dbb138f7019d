// Command-line front end: constructions, closure runs, certificate
// verification, and exact wsat searches with a resumable results log.
//
// Exit codes: 0 success, 1 verification failure or FAIL row, 2 usage error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "wsat/constructions.hpp"
#include "wsat/graph6.hpp"
#include "wsat/percolation.hpp"
#include "wsat/run_record.hpp"
#include "wsat/search.hpp"

namespace {

using namespace wsat;

struct Range {
  int lo = 0;
  int hi = 0;
};

Range parse_range(const std::string& text) {
  Range r;
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    r.lo = r.hi = std::stoi(text);
  } else {
    r.lo = std::stoi(text.substr(0, dots));
    r.hi = std::stoi(text.substr(dots + 2));
  }
  if (r.hi < r.lo) throw std::invalid_argument("range upper bound below lower bound: " + text);
  return r;
}

Graph read_graph6_input(const std::string& path) {
  std::string text;
  if (path.empty() || path == "-") {
    std::getline(std::cin, text);
  } else {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    std::getline(in, text);
  }
  std::istringstream strip(text);
  std::string token;
  if (!(strip >> token)) throw std::invalid_argument("no graph6 input found");
  return graph6_decode(token);
}

std::string pattern_name(int s, int t) {
  return "K_{" + std::to_string(s) + "," + std::to_string(t) + "}";
}

int default_workers() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// ---------------------------------------------------------------- construct

struct ConstructOpts {
  std::string family;
  int s = -1, t = -1, n = -1, x = -1, y = -1, z = -1, y1 = -1, y2 = -1;
  std::string emit_order;
};

int run_construct(const ConstructOpts& o) {
  auto need = [](int v, const char* flag) {
    if (v < 0) throw std::invalid_argument(std::string("missing required option ") + flag);
    return v;
  };

  std::optional<FamilyInstance> fi;
  if (o.family == "complement-path") {
    fi = complement_path(need(o.s, "--s"), need(o.t, "--t"));
  } else if (o.family == "complement-path-union-k1") {
    fi = complement_path_union_k1(need(o.s, "--s"), need(o.t, "--t"));
  } else if (o.family == "gnt") {
    fi = gnt(need(o.n, "--n"), need(o.t, "--t"));
  } else if (o.family == "xyz") {
    fi = xyz_graph(need(o.x, "--x"), need(o.y, "--y"), need(o.z, "--z"));
  } else if (o.family == "h") {
    fi = h_graph(need(o.x, "--x"), need(o.y1, "--y1"), need(o.y2, "--y2"), need(o.z, "--z"));
  } else {
    throw std::invalid_argument("unknown family: " + o.family);
  }

  std::cout << graph6_encode(fi->graph) << "\n";

  if (!o.emit_order.empty()) {
    if (!fi->suggested_order)
      throw std::invalid_argument("family " + o.family + " carries no suggested order");
    PatternSpec p(std::min(o.s, o.t), std::max(o.s, o.t));
    Certificate cert = certificate_from_order(fi->graph, p, *fi->suggested_order);
    std::ofstream out(o.emit_order);
    if (!out) throw std::invalid_argument("cannot open certificate file: " + o.emit_order);
    out << certificate_to_json(cert) << "\n";
  }
  return 0;
}

// ------------------------------------------------------------------ closure

struct ClosureOpts {
  int s = 0, t = 0;
  std::string input;
  std::string cert_path;
  bool json = false;
};

int run_closure(const ClosureOpts& o) {
  PatternSpec p(o.s, o.t);
  Graph g = read_graph6_input(o.input);
  ClosureOutcome out = closure(g, p);

  if (o.json) {
    nlohmann::json j;
    j["n"] = g.order();
    j["pattern"] = {{"s", p.s}, {"t", p.t}};
    j["complete"] = out.complete;
    j["steps"] = out.added.size();
    j["final_edges"] = out.final.edge_count();
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "complete: " << (out.complete ? "true" : "false") << ", steps: " << out.added.size()
              << "\n";
    std::cout << "final edges: " << out.final.edge_count() << "\n";
  }

  if (!o.cert_path.empty()) {
    if (!is_kst_free(g, p)) {
      std::cerr << "cannot write certificate: base contains " << pattern_name(p.s, p.t) << "\n";
      return 1;
    }
    if (!out.complete) {
      std::cerr << "cannot write certificate: closure incomplete\n";
      return 1;
    }
    Certificate cert{p, g, out.added};
    std::ofstream cf(o.cert_path);
    if (!cf) throw std::invalid_argument("cannot open certificate file: " + o.cert_path);
    cf << certificate_to_json(cert) << "\n";
  }
  return 0;
}

// ------------------------------------------------------------------- verify

int run_verify(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open certificate file: " + path);
  std::string line;
  int bad = 0, seen = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ++seen;
    try {
      CertCheck chk = verify_certificate(certificate_from_json(line));
      if (chk.ok) {
        std::cout << "VALID\n";
      } else {
        ++bad;
        std::cout << "INVALID";
        if (chk.step >= 0) std::cout << " (step " << chk.step << ")";
        std::cout << ": " << chk.reason << "\n";
      }
    } catch (const std::exception& e) {
      ++bad;
      std::cout << "INVALID: unparsable certificate (" << e.what() << ")\n";
    }
  }
  if (seen == 0) throw std::invalid_argument("no certificates in " + path);
  return bad == 0 ? 0 : 1;
}

// ------------------------------------------------------------------- search

struct SearchOpts {
  int n = 0, s = 0, t = 0;
  int m_lo = 0, m_hi = -1;
  bool independent = false;
  bool dedup = true;
  bool prune_connected = false;
  int workers = default_workers();
  bool json = false;
  std::string log_path = "wsat-results.log";
  bool no_log = false;
};

std::optional<int> known_prediction(int n, int s, int t) {
  if (s == 2 && t >= 3 && n >= t + 2) return predicted_wsat_k2t(n, t);
  if (n == s + t) return predicted_wsat_diag(s, t);
  if (s == 1 && n >= t + 1) return predicted_classical(ClassicalKind::star, n, t);
  if (s == 2 && t == 2 && n >= 4) return predicted_classical(ClassicalKind::k22, n, 0);
  return std::nullopt;
}

int run_search(const SearchOpts& o) {
  SearchConfig cfg(o.n, PatternSpec(o.s, o.t));
  cfg.m_lo = o.m_lo;
  cfg.m_hi = o.m_hi;
  cfg.dedup = o.dedup;
  cfg.prune_connected = o.prune_connected;
  cfg.worker_count = o.workers;

  std::string mode = o.independent ? "independent" : "fast";
  if (!o.independent) {
    // Fast mode may seed the scan window from a known formula; independent
    // verification never does.
    if (auto pred = known_prediction(o.n, o.s, o.t)) cfg.m_lo = std::max(cfg.m_lo, *pred);
  }

  const bool logging = !o.no_log;
  std::map<std::string, std::string> base_params = {
      {"n", std::to_string(o.n)},   {"s", std::to_string(o.s)},
      {"t", std::to_string(o.t)},   {"dedup", o.dedup ? "true" : "false"},
      {"mode", mode},
  };

  LevelHooks hooks;
  if (logging) {
    std::vector<RunRecord> prior = [&] {
      try {
        return read_run_records(o.log_path);
      } catch (const std::exception&) {
        return std::vector<RunRecord>{};  // a foreign or corrupt log disables resume
      }
    }();
    hooks.skip = [prior, base_params, &o](int m) {
      for (const RunRecord& r : prior) {
        if (r.command != "search-level") continue;
        auto get = [&](const char* k) {
          auto it = r.params.find(k);
          return it == r.params.end() ? std::string() : it->second;
        };
        if (get("n") == base_params.at("n") && get("s") == base_params.at("s") &&
            get("t") == base_params.at("t") && get("dedup") == base_params.at("dedup") &&
            get("m") == std::to_string(m) && get("found") == "false") {
          std::cerr << "resuming: level m=" << m << " already exhausted in " << o.log_path << "\n";
          return true;
        }
      }
      return false;
    };
    hooks.done = [base_params, &o](int m, bool found, std::uint64_t tested) {
      RunRecord r;
      r.command = "search-level";
      r.params = base_params;
      r.params["m"] = std::to_string(m);
      r.params["found"] = found ? "true" : "false";
      r.params["tested"] = std::to_string(tested);
      append_run_record(o.log_path, r);
    };
  }

  auto start = std::chrono::steady_clock::now();
  WsatResult r = wsat_exact(cfg, hooks);
  double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::string witness_g6 = r.witness ? graph6_encode(*r.witness) : "";
  if (o.json) {
    nlohmann::json j;
    j["n"] = o.n;
    j["s"] = o.s;
    j["t"] = o.t;
    j["mode"] = mode;
    if (r.value)
      j["value"] = *r.value;
    else
      j["value"] = nullptr;
    j["witness"] = witness_g6;
    j["witness_classes"] = r.minimum_witnesses.size();
    j["graphs_tested"] = r.graphs_tested;
    j["wall_time_s"] = wall;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "wsat(" << o.n << ", " << pattern_name(o.s, o.t) << ") = ";
    if (r.value)
      std::cout << *r.value << "\n";
    else
      std::cout << "none in range [" << cfg.m_lo << ", "
                << (cfg.m_hi < 0 ? o.n * (o.n - 1) / 2 : cfg.m_hi) << "]\n";
    if (r.witness) {
      std::cout << "witness: " << witness_g6 << "\n";
      std::cout << "witness classes at minimum: " << r.minimum_witnesses.size() << "\n";
    }
    std::cout << "graphs tested: " << r.graphs_tested << "\n";
    std::cout << "mode: " << mode << "\n";
    std::cout << "wall time: " << wall << "s\n";
  }

  if (logging) {
    RunRecord rec;
    rec.command = "search";
    rec.params = base_params;
    rec.params["value"] = r.value ? std::to_string(*r.value) : "none";
    rec.params["witness"] = witness_g6;
    rec.params["graphs_tested"] = std::to_string(r.graphs_tested);
    rec.outputs = {"-"};
    rec.wall_time_s = wall;
    append_run_record(o.log_path, rec);
  }
  return 0;
}

// -------------------------------------------------------------------- table

struct TableOpts {
  std::string t_range;
  std::string n_range;
  int workers = default_workers();
  bool json = false;
};

int run_table(const TableOpts& o) {
  Range tr = parse_range(o.t_range);
  Range nr = parse_range(o.n_range);

  bool any_fail = false;
  int printed = 0;
  auto on_row = [&](const TableRow& row) {
    if (printed == 0 && !o.json)
      std::printf("%3s %3s %3s %10s %6s %7s %14s %10s\n", "s", "t", "n", "predicted", "exact",
                  "status", "graphs_tested", "wall_time");
    ++printed;
    any_fail = any_fail || !row.pass;
    if (o.json) {
      nlohmann::json j;
      j["s"] = row.s;
      j["t"] = row.t;
      j["n"] = row.n;
      j["predicted"] = row.predicted;
      if (row.exact)
        j["exact"] = *row.exact;
      else
        j["exact"] = nullptr;
      j["status"] = row.pass ? "PASS" : "FAIL";
      j["graphs_tested"] = row.graphs_tested;
      j["wall_time_s"] = row.wall_time_s;
      std::cout << j.dump() << "\n";
    } else {
      std::printf("%3d %3d %3d %10d %6s %7s %14llu %9.2fs\n", row.s, row.t, row.n, row.predicted,
                  row.exact ? std::to_string(*row.exact).c_str() : "-", row.pass ? "PASS" : "FAIL",
                  static_cast<unsigned long long>(row.graphs_tested), row.wall_time_s);
    }
  };
  reproduce_table(tr.lo, tr.hi, nr.lo, nr.hi, o.workers, on_row);
  if (printed == 0)
    throw std::invalid_argument("no rows: every requested n is outside the K_{2,t} formula range (need n >= t+2)");
  return any_fail ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weak saturation of complete bipartite graphs: constructions, closure, exact search"};
  app.require_subcommand(1);

  ConstructOpts co;
  CLI::App* construct = app.add_subcommand("construct", "emit a named graph family as graph6");
  construct->add_option("--family", co.family, "complement-path | complement-path-union-k1 | gnt | xyz | h")
      ->required();
  construct->add_option("--s", co.s, "pattern side s");
  construct->add_option("--t", co.t, "pattern side t / family parameter t");
  construct->add_option("--n", co.n, "order for gnt");
  construct->add_option("--x", co.x, "clique side size");
  construct->add_option("--y", co.y, "middle set size (xyz)");
  construct->add_option("--z", co.z, "far set size");
  construct->add_option("--y1", co.y1, "first middle set size (h)");
  construct->add_option("--y2", co.y2, "second middle set size (h)");
  construct->add_option("--emit-order", co.emit_order,
                        "write the family's saturation order as a certificate file");

  ClosureOpts cl;
  CLI::App* closure_cmd = app.add_subcommand("closure", "run the bootstrap closure on a graph6 input");
  closure_cmd->add_option("--s", cl.s, "pattern side s")->required();
  closure_cmd->add_option("--t", cl.t, "pattern side t")->required();
  closure_cmd->add_option("--in", cl.input, "graph6 input file (default: stdin)");
  closure_cmd->add_option("--cert", cl.cert_path, "write the closure certificate here");
  closure_cmd->add_flag("--json", cl.json, "machine-readable output");

  std::string verify_path;
  CLI::App* verify_cmd = app.add_subcommand("verify", "check a certificate file");
  verify_cmd->add_option("certificate", verify_path, "line-delimited certificate file")->required();

  SearchOpts so;
  CLI::App* search_cmd = app.add_subcommand("search", "exact wsat(n, K_{s,t}) by exhaustive search");
  search_cmd->add_option("--n", so.n, "graph order")->required();
  search_cmd->add_option("--s", so.s, "pattern side s")->required();
  search_cmd->add_option("--t", so.t, "pattern side t")->required();
  search_cmd->add_option("--m-lo", so.m_lo, "lowest edge count to scan");
  search_cmd->add_option("--m-hi", so.m_hi, "highest edge count to scan");
  search_cmd->add_flag("--independent", so.independent,
                       "never seed the scan window from the closed-form values");
  search_cmd->add_flag("--dedup,!--no-dedup", so.dedup, "canonical-form isomorphism rejection");
  search_cmd->add_flag("--prune-connected", so.prune_connected,
                       "skip disconnected candidates (s = 2 only)");
  search_cmd->add_option("--workers", so.workers, "worker thread count");
  search_cmd->add_flag("--json", so.json, "machine-readable output");
  search_cmd->add_option("--log", so.log_path, "results log (default ./wsat-results.log)");
  search_cmd->add_flag("--no-log", so.no_log, "do not read or write the results log");

  TableOpts to;
  CLI::App* table_cmd = app.add_subcommand("table", "predicted vs exact wsat(n, K_{2,t}) table");
  table_cmd->add_option("--t", to.t_range, "t value or range a..b")->required();
  table_cmd->add_option("--n", to.n_range, "n value or range a..b")->required();
  table_cmd->add_option("--workers", to.workers, "worker thread count");
  table_cmd->add_flag("--json", to.json, "line-delimited row records");

  int rc = 0;
  construct->callback([&] { rc = run_construct(co); });
  closure_cmd->callback([&] { rc = run_closure(cl); });
  verify_cmd->callback([&] { rc = run_verify(verify_path); });
  search_cmd->callback([&] { rc = run_search(so); });
  table_cmd->callback([&] { rc = run_table(to); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
