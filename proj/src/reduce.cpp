#include "pcg/reduce.hpp"

#include "pcg/error.hpp"
#include "pcg/graph_algorithms.hpp"

#include <algorithm>
#include <deque>

namespace pcg {

namespace {

struct Pending {
  std::size_t id;
  Graph graph;
};

// Splits connected `g` at cut-vertex `v`: the component of g - v holding the
// smallest label forms one side, everything else the other; both keep v.
std::pair<Graph, Graph> split_at(const Graph& g, const Label& v) {
  auto rest = connected_components(g.without(v));
  auto smallest = [](const Graph& c) { return *std::min_element(c.labels().begin(), c.labels().end()); };
  std::size_t first = 0;
  for (std::size_t i = 1; i < rest.size(); ++i) {
    if (smallest(rest[i]) < smallest(rest[first])) first = i;
  }
  std::vector<Label> side1 = rest[first].labels();
  side1.push_back(v);
  std::vector<Label> side2{v};
  for (std::size_t i = 0; i < rest.size(); ++i) {
    if (i == first) continue;
    side2.insert(side2.end(), rest[i].labels().begin(), rest[i].labels().end());
  }
  return {g.induced(side1), g.induced(side2)};
}

}  // namespace

ReductionTrace reduce_graph(const Graph& g, const RuleSet& rules) {
  ReductionTrace trace;
  trace.original = g;
  std::deque<Pending> work;
  work.push_back({0, g});
  auto fresh = [&trace](const Graph& part) {
    return Pending{trace.graph_count++, part};
  };

  while (!work.empty()) {
    Pending cur = std::move(work.front());
    work.pop_front();
    const Graph& h = cur.graph;
    ReductionStep step{ReductionKind::SplitComponents, cur.id, {}, {}};
    std::vector<Pending> produced;

    bool connected = is_connected(h);
    if (rules.components && !connected) {
      for (const auto& c : connected_components(h)) produced.push_back(fresh(c));
    } else if (auto cuts = (rules.cut_vertex && connected) ? cut_vertices(h) : std::vector<Label>{}; !cuts.empty()) {
      step.kind = ReductionKind::SplitAtCutVertex;
      step.labels = {cuts.front()};
      auto [a, b] = split_at(h, cuts.front());
      produced.push_back(fresh(a));
      produced.push_back(fresh(b));
    } else {
      auto twins = (rules.false_twin || rules.true_twin) ? find_twins(h) : TwinReport{};
      auto big = std::find_if(twins.true_twin_classes.begin(), twins.true_twin_classes.end(),
                              [](const TwinClass& c) { return c.reducible; });
      if (rules.false_twin && !twins.false_twins.empty()) {
        const auto& [keep, drop] = twins.false_twins.front();
        step.kind = ReductionKind::RemoveFalseTwin;
        step.labels = {keep, drop};
        produced.push_back(fresh(h.without(drop)));
      } else if (rules.true_twin && big != twins.true_twin_classes.end()) {
        step.kind = ReductionKind::RemoveTrueTwin;
        step.labels = {big->members[0], big->members[1], big->members.back()};
        produced.push_back(fresh(h.without(big->members.back())));
      } else {
        trace.kernels.emplace_back(cur.id, h);
        continue;
      }
    }
    for (const auto& p : produced) step.parts.push_back(p.id);
    trace.steps.push_back(std::move(step));
    for (auto& p : produced) work.push_back(std::move(p));
  }
  return trace;
}

std::vector<Graph> kernels_of(const ReductionTrace& trace) {
  std::vector<Graph> out;
  for (const auto& [id, k] : trace.kernels) out.push_back(k);
  return out;
}

Graph reconstruct_graph(const ReductionTrace& trace) {
  std::vector<std::optional<Graph>> graphs(trace.graph_count);
  for (const auto& [id, k] : trace.kernels) graphs.at(id) = k;
  auto get = [&graphs](std::size_t id) -> const Graph& {
    if (!graphs.at(id)) throw PreconditionError("trace refers to graph " + std::to_string(id) + " before it exists");
    return *graphs[id];
  };
  for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
    const auto& s = *it;
    Graph built;
    switch (s.kind) {
      case ReductionKind::SplitComponents:
      case ReductionKind::SplitAtCutVertex:
        built = get(s.parts.at(0));
        for (std::size_t i = 1; i < s.parts.size(); ++i) built = graph_union(built, get(s.parts[i]));
        break;
      case ReductionKind::RemoveFalseTwin: {
        const auto& part = get(s.parts.at(0));
        built = part.with_vertex(s.labels.at(1), part.open_neighborhood(s.labels.at(0)));
        break;
      }
      case ReductionKind::RemoveTrueTwin: {
        const auto& part = get(s.parts.at(0));
        built = part.with_vertex(s.labels.at(2), part.closed_neighborhood(s.labels.at(0)));
        break;
      }
    }
    graphs.at(s.source) = std::move(built);
  }
  return get(0);
}

Pcr replay_witness(const std::map<std::size_t, Pcr>& kernel_witnesses, const ReductionTrace& trace) {
  std::vector<std::optional<Pcr>> wit(trace.graph_count);
  for (const auto& [id, kernel] : trace.kernels) {
    auto it = kernel_witnesses.find(id);
    if (it == kernel_witnesses.end()) throw PreconditionError("no witness for kernel " + std::to_string(id));
    bool ok = false;
    try {
      ok = verify(it->second, kernel);
    } catch (const LabelMismatch&) {
      ok = false;
    }
    if (!ok) throw PreconditionError("witness for kernel " + std::to_string(id) + " does not verify");
    wit.at(id) = it->second;
  }
  for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
    const auto& s = *it;
    std::vector<Pcr> inputs;
    for (auto part : s.parts) {
      if (!wit.at(part)) throw PreconditionError("trace refers to graph " + std::to_string(part) + " before it exists");
      inputs.push_back(*wit[part]);
    }
    ComposeStep inverse{ComposeKind::JoinComponents, s.labels};
    switch (s.kind) {
      case ReductionKind::SplitComponents: inverse.kind = ComposeKind::JoinComponents; break;
      case ReductionKind::SplitAtCutVertex: inverse.kind = ComposeKind::JoinAtCutVertex; break;
      case ReductionKind::RemoveFalseTwin: inverse.kind = ComposeKind::AddFalseTwin; break;
      case ReductionKind::RemoveTrueTwin: inverse.kind = ComposeKind::AddTrueTwin; break;
    }
    wit.at(s.source) = apply_compose_step(inverse, inputs);
  }
  if (!wit.at(0)) throw PreconditionError("trace does not rebuild the original graph");
  if (!verify(*wit[0], trace.original)) throw Error("internal error: replayed witness does not verify");
  return *wit[0];
}

std::string to_string(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::SplitComponents: return "split-components";
    case ReductionKind::SplitAtCutVertex: return "split-at-cut-vertex";
    case ReductionKind::RemoveFalseTwin: return "remove-false-twin";
    case ReductionKind::RemoveTrueTwin: return "remove-true-twin";
  }
  return "?";
}

Json trace_to_json(const ReductionTrace& trace) {
  Json steps = Json::array();
  for (const auto& s : trace.steps) {
    Json j;
    j["kind"] = to_string(s.kind);
    j["source"] = s.source;
    j["parts"] = s.parts;
    j["labels"] = s.labels;
    steps.push_back(j);
  }
  Json kernels = Json::array();
  for (const auto& [id, k] : trace.kernels) kernels.push_back(Json{{"id", id}, {"graph", graph_to_json(k)}});
  Json j;
  j["original"] = graph_to_json(trace.original);
  j["graph_count"] = trace.graph_count;
  j["steps"] = steps;
  j["kernels"] = kernels;
  return j;
}

ReductionTrace trace_from_json(const Json& j) {
  try {
    ReductionTrace t;
    t.original = graph_from_json(j.at("original"));
    t.graph_count = j.at("graph_count").get<std::size_t>();
    for (const auto& s : j.at("steps")) {
      ReductionStep step;
      auto kind = s.at("kind").get<std::string>();
      if (kind == "split-components") {
        step.kind = ReductionKind::SplitComponents;
      } else if (kind == "split-at-cut-vertex") {
        step.kind = ReductionKind::SplitAtCutVertex;
      } else if (kind == "remove-false-twin") {
        step.kind = ReductionKind::RemoveFalseTwin;
      } else if (kind == "remove-true-twin") {
        step.kind = ReductionKind::RemoveTrueTwin;
      } else {
        throw ParseError("unknown reduction step '" + kind + "'");
      }
      step.source = s.at("source").get<std::size_t>();
      step.parts = s.at("parts").get<std::vector<std::size_t>>();
      step.labels = s.at("labels").get<std::vector<Label>>();
      for (auto id : step.parts) {
        if (id >= t.graph_count) throw ParseError("trace graph id out of range");
      }
      if (step.source >= t.graph_count) throw ParseError("trace graph id out of range");
      t.steps.push_back(std::move(step));
    }
    for (const auto& k : j.at("kernels")) {
      auto id = k.at("id").get<std::size_t>();
      if (id >= t.graph_count) throw ParseError("trace graph id out of range");
      t.kernels.emplace_back(id, graph_from_json(k.at("graph")));
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed trace: ") + e.what());
  }
}

std::optional<Pcr> structured_witness(const Graph& kernel, const CycleCache& cache) {
  if (kernel.empty() || !is_connected(kernel)) return std::nullopt;
  switch (classify_base(kernel)) {
    case BaseClass::SingleVertex: return single_vertex_pcr(kernel.label(0));
    case BaseClass::SingleEdge:
    case BaseClass::Clique: return clique_witness(kernel.labels());
    case BaseClass::Tree: return cactus_witness(kernel, cache);
    case BaseClass::Cycle:
      if (cache.contains(kernel.size())) return cycle_witness(cycle_order(kernel), cache);
      return std::nullopt;
    case BaseClass::CompleteMultipartite: return kpartite_witness(multipartite_parts(kernel));
    case BaseClass::SmallGraph:
    case BaseClass::None: return std::nullopt;
  }
  return std::nullopt;
}

Verdict recognize(const Graph& g, const RecognizeOptions& options) {
  const CycleCache& cache = options.cycle_cache ? *options.cycle_cache : CycleCache::shared();
  Verdict verdict;
  verdict.trace = reduce_graph(g, options.rules);
  std::map<std::size_t, Pcr> witnesses;
  for (const auto& [id, kernel] : verdict.trace.kernels) {
    if (auto w = structured_witness(kernel, cache)) {
      witnesses.emplace(id, std::move(*w));
      continue;
    }
    bool oracle_allowed = options.use_oracle && !kernel.empty() &&
                          (!options.oracle.max_topologies || *options.oracle.max_topologies > 0);
    if (oracle_allowed) {
      auto res = exact_search(kernel, options.oracle);
      if (res.status == SearchStatus::Pcg) {
        witnesses.emplace(id, std::move(*res.witness));
        continue;
      }
      if (res.status == SearchStatus::NonPcg) {
        verdict.non_pcg_kernels.push_back(kernel);
        continue;
      }
    }
    verdict.unresolved.push_back(kernel);
  }
  if (!verdict.non_pcg_kernels.empty()) {
    verdict.kind = VerdictKind::NonPcg;
  } else if (verdict.unresolved.empty()) {
    verdict.witness = replay_witness(witnesses, verdict.trace);
    if (!verify(*verdict.witness, g)) throw Error("internal error: recognized witness does not verify");
    verdict.kind = VerdictKind::Pcg;
  }
  return verdict;
}

std::string to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Pcg: return "Pcg";
    case VerdictKind::NonPcg: return "NonPcg";
    case VerdictKind::Unknown: return "Unknown";
  }
  return "?";
}

Graph grow_non_pcg(const Graph& seed, const std::vector<GrowDirective>& directives) {
  Graph g = seed;
  for (const auto& d : directives) {
    switch (d.kind) {
      case GrowKind::FalseTwin:
        if (g.contains(d.new_label)) throw PreconditionError("label '" + d.new_label + "' already used");
        g = g.with_vertex(d.new_label, g.open_neighborhood(d.vertex));
        break;
      case GrowKind::TrueTwin:
        if (d.vertex == d.partner || g.closed_neighborhood(d.vertex) != g.closed_neighborhood(d.partner)) {
          throw PreconditionError("'" + d.vertex + "' and '" + d.partner + "' are not true twins");
        }
        if (g.contains(d.new_label)) throw PreconditionError("label '" + d.new_label + "' already used");
        g = g.with_vertex(d.new_label, g.closed_neighborhood(d.vertex));
        break;
      case GrowKind::Attach: {
        if (!g.contains(d.vertex)) throw PreconditionError("unknown vertex '" + d.vertex + "'");
        if (!d.attach.contains(d.vertex)) throw PreconditionError("attached graph lacks '" + d.vertex + "'");
        if (d.attach.size() < 2 || !is_connected(d.attach)) {
          throw PreconditionError("attached graph must be connected with at least two vertices");
        }
        for (const auto& l : d.attach.labels()) {
          if (l != d.vertex && g.contains(l)) throw PreconditionError("attached label '" + l + "' already used");
        }
        g = graph_union(g, d.attach);
        break;
      }
    }
  }
  return g;
}

std::vector<GrowDirective> directives_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("grow directives must be a JSON array");
  std::vector<GrowDirective> out;
  try {
    for (const auto& item : j) {
      GrowDirective d{GrowKind::FalseTwin, {}, {}, {}, {}};
      auto op = item.at("op").get<std::string>();
      if (op == "false_twin") {
        d.vertex = item.at("vertex").get<Label>();
        d.new_label = item.at("new").get<Label>();
      } else if (op == "true_twin") {
        d.kind = GrowKind::TrueTwin;
        auto pair = item.at("pair").get<std::vector<Label>>();
        if (pair.size() != 2) throw ParseError("true_twin needs a pair of labels");
        d.vertex = pair[0];
        d.partner = pair[1];
        d.new_label = item.at("new").get<Label>();
      } else if (op == "attach") {
        d.kind = GrowKind::Attach;
        d.vertex = item.at("at").get<Label>();
        d.attach = graph_from_json(item.at("graph"));
      } else {
        throw ParseError("unknown grow op '" + op + "'");
      }
      out.push_back(std::move(d));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed grow directive: ") + e.what());
  }
  return out;
}

Json directives_to_json(const std::vector<GrowDirective>& directives) {
  Json out = Json::array();
  for (const auto& d : directives) {
    switch (d.kind) {
      case GrowKind::FalseTwin: out.push_back(Json{{"op", "false_twin"}, {"vertex", d.vertex}, {"new", d.new_label}}); break;
      case GrowKind::TrueTwin:
        out.push_back(Json{{"op", "true_twin"}, {"pair", {d.vertex, d.partner}}, {"new", d.new_label}});
        break;
      case GrowKind::Attach: out.push_back(Json{{"op", "attach"}, {"at", d.vertex}, {"graph", graph_to_json(d.attach)}}); break;
    }
  }
  return out;
}

}  // namespace pcg
