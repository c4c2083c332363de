#pragma once

#include "pcg/compose.hpp"
#include "pcg/cycle_cache.hpp"
#include "pcg/graph.hpp"
#include "pcg/json_io.hpp"
#include "pcg/oracle.hpp"
#include "pcg/pcr.hpp"

#include <map>
#include <optional>
#include <vector>

namespace pcg {

/// Reduction rules, applied in this priority order. Each preserves
/// PCG-ness in both directions.
struct RuleSet {
  bool components = true;
  bool cut_vertex = true;
  bool false_twin = true;
  bool true_twin = true;  // only classes of three or more
};

enum class ReductionKind { SplitComponents, SplitAtCutVertex, RemoveFalseTwin, RemoveTrueTwin };

/// Graphs are referred to by id; id 0 is the original graph.
struct ReductionStep {
  ReductionKind kind;
  std::size_t source = 0;
  std::vector<std::size_t> parts;
  /// SplitAtCutVertex: {v*}; RemoveFalseTwin: {kept, removed};
  /// RemoveTrueTwin: {kept, kept, removed}.
  std::vector<Label> labels;
};

struct ReductionTrace {
  Graph original;
  std::vector<ReductionStep> steps;
  /// Irreducible graphs by id, in the order they were found.
  std::vector<std::pair<std::size_t, Graph>> kernels;
  std::size_t graph_count = 1;
};

/// Applies the enabled rules to a fixpoint. Ties break towards the
/// lexicographically smallest labels: the smallest cut-vertex, the smallest
/// false-twin pair (dropping its larger member), the true-twin class with the
/// smallest member (dropping its largest member).
ReductionTrace reduce_graph(const Graph& g, const RuleSet& rules = {});

std::vector<Graph> kernels_of(const ReductionTrace& trace);

/// Rebuilds the original graph from the kernels stored in the trace.
Graph reconstruct_graph(const ReductionTrace& trace);

/// Folds the trace backwards with the compose operations. Every kernel id
/// needs a witness that verifies; throws PreconditionError otherwise.
Pcr replay_witness(const std::map<std::size_t, Pcr>& kernel_witnesses, const ReductionTrace& trace);

std::string to_string(ReductionKind kind);
Json trace_to_json(const ReductionTrace& trace);
ReductionTrace trace_from_json(const Json& j);

enum class VerdictKind { Pcg, NonPcg, Unknown };

struct Verdict {
  VerdictKind kind = VerdictKind::Unknown;
  std::optional<Pcr> witness;
  ReductionTrace trace;
  /// Kernels the oracle proved non-PCG by exhaustion.
  std::vector<Graph> non_pcg_kernels;
  /// Kernels left without a witness or a proof.
  std::vector<Graph> unresolved;
};

struct RecognizeOptions {
  RuleSet rules;
  bool use_oracle = true;
  SearchBudget oracle;
  const CycleCache* cycle_cache = nullptr;  // defaults to CycleCache::shared()
};

/// Reduces `g`, builds witnesses for structured kernels, asks the oracle
/// about the rest and replays a full witness when every kernel has one.
Verdict recognize(const Graph& g, const RecognizeOptions& options = {});

/// Witness for one connected kernel from its structure alone, if known.
std::optional<Pcr> structured_witness(const Graph& kernel, const CycleCache& cache);

std::string to_string(VerdictKind kind);

enum class GrowKind { FalseTwin, TrueTwin, Attach };

/// FalseTwin: copy `vertex` without joining the copy to it.
/// TrueTwin: copy `vertex`, whose true twin `partner` already exists.
/// Attach: glue `attach` onto the graph at its vertex `vertex`.
struct GrowDirective {
  GrowKind kind;
  Label vertex;
  Label partner;
  Label new_label;
  Graph attach;
};

/// Grows a (caller-asserted) non-PCG with operations whose inverses are
/// reduction steps, so the result is again a non-PCG.
Graph grow_non_pcg(const Graph& seed, const std::vector<GrowDirective>& directives);

std::vector<GrowDirective> directives_from_json(const Json& j);
Json directives_to_json(const std::vector<GrowDirective>& directives);

}  // namespace pcg
