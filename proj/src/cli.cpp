#include "pcg/cli.hpp"

#include "pcg/compose.hpp"
#include "pcg/cycle_cache.hpp"
#include "pcg/error.hpp"
#include "pcg/graph_algorithms.hpp"
#include "pcg/graph_io.hpp"
#include "pcg/json_io.hpp"
#include "pcg/normalize.hpp"
#include "pcg/oracle.hpp"
#include "pcg/reduce.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#ifndef PCG_VERSION
#define PCG_VERSION "0.0.0"
#endif

namespace pcg::cli {

namespace {

/// Failure to produce a trustworthy result; maps to exit 65.
struct DataError : Error {
  using Error::Error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw DataError("cannot read '" + path + "'");
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text) || !f.flush()) throw DataError("cannot write '" + path + "'");
}

struct Globals {
  std::string format = "auto";
  std::string cycle_cache;
  std::unique_ptr<CycleCache> loaded;

  Graph graph(const std::string& path) const {
    auto text = read_input(path);
    GraphFormat f = format == "g6"     ? GraphFormat::Graph6
                    : format == "edgelist" ? GraphFormat::EdgeList
                                           : sniff_format(path, text);
    return parse_graph(text, f);
  }

  const CycleCache& cache() {
    if (cycle_cache.empty()) return CycleCache::shared();
    if (!loaded) loaded = std::make_unique<CycleCache>(CycleCache::load(cycle_cache));
    return *loaded;
  }
};

Pcr read_pcr(const std::string& path) { return parse_pcr(read_input(path)); }

// Every Pcr leaves the tool through here.
void emit_pcr(std::ostream& out, const Pcr& p, const Graph& expected) {
  bool ok = false;
  try {
    ok = verify(p, expected);
  } catch (const LabelMismatch&) {
    ok = false;
  }
  if (!ok) throw DataError("internal error: witness does not verify; nothing emitted");
  auto text = dump_pcr(p);
  if (!(parse_pcr(text) == p)) throw DataError("internal error: witness does not round-trip");
  out << text << '\n';
}

BaseClass classify_or_none(const Graph& k) {
  if (k.size() == 0 || !is_connected(k)) return BaseClass::None;
  return classify_base(k);
}

Json kernels_json(const std::vector<Graph>& kernels) {
  Json arr = Json::array();
  for (const auto& k : kernels) arr.push_back(graph_to_json(k));
  return arr;
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> sizes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.size() > 6 || !std::all_of(item.begin(), item.end(), ::isdigit)) {
      throw CLI::ValidationError("sizes", "expected comma-separated positive integers, got '" + text + "'");
    }
    sizes.push_back(std::stoul(item));
  }
  if (sizes.empty()) throw CLI::ValidationError("sizes", "no sizes given");
  return sizes;
}

struct RuleFlags {
  bool no_components = false, no_cut_vertex = false, no_false_twin = false, no_true_twin = false;

  void add_to(CLI::App* app) {
    app->add_flag("--no-components", no_components, "Do not split disconnected graphs");
    app->add_flag("--no-cut-vertex", no_cut_vertex, "Do not split at cut-vertices");
    app->add_flag("--no-false-twin", no_false_twin, "Do not remove false twins");
    app->add_flag("--no-true-twin", no_true_twin, "Do not shrink true-twin classes");
  }
  RuleSet rules() const { return {!no_components, !no_cut_vertex, !no_false_twin, !no_true_twin}; }
};

}  // namespace

std::string version_string() {
  return std::string("pcg ") + PCG_VERSION + " (cycle cache format " + std::to_string(CycleCache::kVersion) + ")";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pairwise compatibility graph toolkit", "pcg"};
  app.require_subcommand(0, 1);
  app.fallthrough();
  Globals g;
  bool show_version = false;
  app.add_flag("--version", show_version, "Print toolkit and cache-file versions");
  app.add_option("--format", g.format, "Graph input format")->check(CLI::IsMember({"auto", "g6", "edgelist"}));
  app.add_option("--cycle-cache", g.cycle_cache, "Cycle witness cache file");

  int code = kOk;
  std::function<void()> action;

  // eval
  std::string pcr_path;
  auto* eval = app.add_subcommand("eval", "Print the graph a PCR induces (graph6)");
  bool eval_edges = false;
  eval->add_option("pcr", pcr_path, "PCR JSON file")->required();
  eval->add_flag("--edge-list", eval_edges, "Print a labeled edge list instead");
  eval->callback([&] {
    action = [&] {
      auto induced = induced_graph(read_pcr(pcr_path));
      if (eval_edges) {
        out << write_edge_list(induced);
      } else {
        out << write_graph6(induced) << '\n';
      }
    };
  });

  // verify
  std::string graph_path;
  auto* ver = app.add_subcommand("verify", "Check that a PCR induces a graph");
  ver->add_option("pcr", pcr_path, "PCR JSON file")->required();
  ver->add_option("graph", graph_path, "Graph file")->required();
  ver->callback([&] {
    action = [&] {
      auto p = read_pcr(pcr_path);
      auto target = g.graph(graph_path);
      Json j;
      try {
        j["verified"] = verify(p, target);
      } catch (const LabelMismatch& e) {
        j["verified"] = false;
        j["reason"] = e.what();
      }
      out << j.dump() << '\n';
      code = j["verified"].get<bool>() ? kOk : kNegative;
    };
  });

  // normalize
  std::string alpha_text, report_path;
  auto* norm = app.add_subcommand("normalize", "Bring a PCR to normalized form");
  norm->add_option("pcr", pcr_path, "PCR JSON file")->required();
  norm->add_option("--alpha", alpha_text, "Target d_min as NUM/DEN");
  norm->add_option("--report", report_path, "Write the step report here");
  norm->callback([&] {
    action = [&] {
      auto p = read_pcr(pcr_path);
      std::optional<Rational> alpha;
      if (!alpha_text.empty()) alpha = Rational::parse(alpha_text);
      auto [result, report] = make_normalized(p, alpha);
      if (!report_path.empty()) write_file(report_path, report_to_json(report).dump(2) + "\n");
      emit_pcr(out, result, induced_graph(p));
    };
  });

  // reduce
  std::string trace_path;
  RuleFlags reduce_rules;
  auto* red = app.add_subcommand("reduce", "Kernelize a graph");
  red->add_option("graph", graph_path, "Graph file")->required();
  red->add_option("--trace", trace_path, "Write the reduction trace here");
  reduce_rules.add_to(red);
  red->callback([&] {
    action = [&] {
      auto trace = reduce_graph(g.graph(graph_path), reduce_rules.rules());
      if (!trace_path.empty()) write_file(trace_path, trace_to_json(trace).dump(2) + "\n");
      Json j;
      j["steps"] = trace.steps.size();
      Json ks = Json::array();
      for (const auto& [id, k] : trace.kernels) {
        ks.push_back(Json{{"id", id}, {"class", to_string(classify_or_none(k))}, {"graph", graph_to_json(k)}});
      }
      j["kernels"] = ks;
      out << j.dump(2) << '\n';
    };
  });

  // recognize
  std::int64_t oracle_budget = -1;
  std::size_t max_n = SearchBudget{}.max_n;
  unsigned jobs = 1;
  std::int64_t time_limit_ms = 0;
  RuleFlags rec_rules;
  auto* rec = app.add_subcommand("recognize", "Decide PCG membership by reduction and oracle");
  rec->add_option("graph", graph_path, "Graph file")->required();
  rec->add_option("--oracle-budget", oracle_budget, "Topologies per oracle call; 0 disables the oracle")
      ->check(CLI::NonNegativeNumber);
  rec->add_option("--max-n", max_n, "Largest kernel handed to the oracle")->check(CLI::Range(1, 12));
  rec->add_option("--jobs", jobs, "Oracle worker threads")->check(CLI::Range(1, 256));
  rec->add_option("--time-limit", time_limit_ms, "Oracle time limit per kernel (ms)")->check(CLI::NonNegativeNumber);
  rec_rules.add_to(rec);
  rec->callback([&] {
    action = [&] {
      auto graph = g.graph(graph_path);
      RecognizeOptions opt;
      opt.rules = rec_rules.rules();
      opt.oracle.max_n = max_n;
      opt.oracle.jobs = jobs;
      if (oracle_budget >= 0) opt.oracle.max_topologies = static_cast<std::uint64_t>(oracle_budget);
      if (time_limit_ms > 0) opt.oracle.time_limit = std::chrono::milliseconds(time_limit_ms);
      opt.use_oracle = oracle_budget != 0;
      opt.cycle_cache = &g.cache();
      auto v = recognize(graph, opt);
      switch (v.kind) {
        case VerdictKind::Pcg:
          emit_pcr(out, *v.witness, graph);
          code = kOk;
          break;
        case VerdictKind::NonPcg:
          out << Json{{"verdict", "NonPcg"}, {"kernels", kernels_json(v.non_pcg_kernels)}}.dump(2) << '\n';
          code = kNegative;
          break;
        case VerdictKind::Unknown:
          out << Json{{"verdict", "Unknown"}, {"kernels", kernels_json(v.unresolved)}}.dump(2) << '\n';
          err << v.unresolved.size() << " kernel(s) unresolved\n";
          code = kInconclusive;
          break;
      }
    };
  });

  // replay
  std::string witnesses_path;
  auto* rep = app.add_subcommand("replay", "Build a full witness from a trace and kernel witnesses");
  rep->add_option("trace", trace_path, "Trace JSON from 'reduce --trace'")->required();
  rep->add_option("witnesses", witnesses_path, "JSON object mapping kernel id to PCR")->required();
  rep->callback([&] {
    action = [&] {
      auto trace = trace_from_json(parse_json(read_input(trace_path)));
      auto wj = parse_json(read_input(witnesses_path));
      if (!wj.is_object()) throw ParseError("kernel witnesses must be a JSON object keyed by kernel id");
      std::map<std::size_t, Pcr> ws;
      for (const auto& [key, value] : wj.items()) {
        std::size_t id = 0;
        std::size_t used = 0;
        try {
          id = std::stoul(key, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used == 0 || used != key.size()) throw ParseError("kernel id '" + key + "' is not a number");
        ws.emplace(id, pcr_from_json(value));
      }
      emit_pcr(out, replay_witness(ws, trace), trace.original);
    };
  });

  // oracle
  std::string emit_cache;
  std::size_t oracle_max_n = SearchBudget{}.max_n;
  std::int64_t max_topologies = -1;
  auto* orc = app.add_subcommand("oracle", "Exhaustive search over tree topologies");
  orc->add_option("graph", graph_path, "Graph file");
  orc->add_option("--max-n", oracle_max_n, "Largest graph attempted")->check(CLI::Range(1, 12));
  orc->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 256));
  orc->add_option("--max-topologies", max_topologies, "Stop after this many topologies")
      ->check(CLI::NonNegativeNumber);
  orc->add_option("--time-limit", time_limit_ms, "Time limit (ms)")->check(CLI::NonNegativeNumber);
  orc->add_option("--emit-cache", emit_cache, "Compute cycle witnesses C_3..C_{max-n} into this file");
  orc->callback([&] {
    action = [&] {
      if (!emit_cache.empty()) {
        auto cache = CycleCache::compute(CycleCache::kDefaultMin, oracle_max_n, jobs);
        write_file(emit_cache, cache.to_json().dump(2) + "\n");
        err << "wrote " << cache.entries().size() << " cycle witnesses to " << emit_cache << '\n';
        if (graph_path.empty()) return;
      }
      if (graph_path.empty()) throw CLI::RequiredError("graph");
      auto graph = g.graph(graph_path);
      SearchBudget b;
      b.max_n = oracle_max_n;
      b.jobs = jobs;
      if (max_topologies >= 0) b.max_topologies = static_cast<std::uint64_t>(max_topologies);
      if (time_limit_ms > 0) b.time_limit = std::chrono::milliseconds(time_limit_ms);
      auto res = exact_search(graph, b);
      switch (res.status) {
        case SearchStatus::Pcg:
          emit_pcr(out, *res.witness, graph);
          code = kOk;
          break;
        case SearchStatus::NonPcg:
          out << "NON-PCG (exhausted " << res.topologies_explored << " topologies)\n";
          code = kNegative;
          break;
        case SearchStatus::BudgetExceeded:
          out << "INCONCLUSIVE (budget)\n";
          code = kInconclusive;
          break;
      }
    };
  });

  // generate
  std::string family, family_arg;
  auto* gen = app.add_subcommand("generate", "Witness for a graph family");
  gen->add_option("family", family, "clique | kpartite | cycle | cactus")
      ->required()
      ->check(CLI::IsMember({"clique", "kpartite", "cycle", "cactus"}));
  gen->add_option("arg", family_arg, "k, comma-separated part sizes, n, or a cactus graph file")->required();
  gen->callback([&] {
    action = [&] {
      FamilyRequest req{Family::Clique, {}, {}};
      if (family == "cactus") {
        req.family = Family::Cactus;
        req.cactus = g.graph(family_arg);
      } else {
        req.sizes = parse_sizes(family_arg);
        if (family == "clique") req.family = Family::Clique;
        if (family == "kpartite") req.family = Family::Kpartite;
        if (family == "cycle") req.family = Family::Cycle;
        std::size_t total = 0;
        for (auto s : req.sizes) total += s;
        if (total > 4096) throw CLI::ValidationError("arg", "family too large");
      }
      auto result = generate(req, g.cache());
      emit_pcr(out, result.witness, result.graph);
    };
  });

  // grow
  std::string seed_path, ops_path;
  auto* grow = app.add_subcommand("grow", "Grow a larger graph from a seed by twin and attach directives");
  grow->add_option("--seed", seed_path, "Seed graph file")->required();
  grow->add_option("--ops", ops_path, "JSON list of directives")->required();
  grow->callback([&] {
    action = [&] {
      auto seed = g.graph(seed_path);
      auto ops = directives_from_json(parse_json(read_input(ops_path)));
      out << graph_to_json(grow_non_pcg(seed, ops)).dump(2) << '\n';
    };
  });

  // dot
  auto* dot = app.add_subcommand("dot", "Render a PCR tree as Graphviz DOT");
  dot->add_option("pcr", pcr_path, "PCR JSON file")->required();
  dot->callback([&] {
    action = [&] { out << to_dot(read_pcr(pcr_path).tree); };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (show_version) {
      out << version_string() << '\n';
      return kOk;
    }
    if (!action) {
      err << app.help();
      return kUsage;
    }
    action();
    return code;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kData;
  } catch (...) {
    err << "error: unknown failure\n";
    return kData;
  }
}

}  // namespace pcg::cli
