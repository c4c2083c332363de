#pragma once

#include "pcg/cycle_cache.hpp"
#include "pcg/graph.hpp"
#include "pcg/pcr.hpp"

#include <string>
#include <vector>

namespace pcg {

/// Witness-level inverses of the reduction rules. Joins first bring every
/// input to one common normalized form with bounds (alpha, 1), alpha being
/// the midpoint of (max critical alpha, 1).

/// Disjoint union. Multi-leaf inputs are hung from a new vertex through one
/// of their inner vertices, single-leaf inputs directly; all connecting edges
/// weigh 2.
Pcr join_components(const std::vector<Pcr>& parts);

/// Glues two witnesses at their common leaf `v_star`: both leaf edges of
/// v_star move to a new vertex v', which is tied to v_star by a zero edge.
Pcr join_at_cut_vertex(const Pcr& first, const Pcr& second, const Label& v_star);

/// Adds leaf `v1` with N(v1) = N(v2) and v1 v2 not adjacent.
Pcr add_false_twin(const Pcr& p, const Label& v2, const Label& v1);

/// Adds leaf `v1` at the midpoint of the v2-v3 path; v2 and v3 must be true
/// twins in the induced graph. Bounds are unchanged.
Pcr add_true_twin(const Pcr& p, const Label& v2, const Label& v3, const Label& v1);

enum class ComposeKind { JoinComponents, JoinAtCutVertex, AddFalseTwin, AddTrueTwin };

/// One compose operation with the labels needed to replay it:
/// JoinAtCutVertex {v*}, AddFalseTwin {v2, v1}, AddTrueTwin {v2, v3, v1}.
struct ComposeStep {
  ComposeKind kind;
  std::vector<Label> labels;
};

/// Joins take all inputs; twin steps take exactly one.
Pcr apply_compose_step(const ComposeStep& step, const std::vector<Pcr>& inputs);

// Family generators.

/// Star with leaf weights 1/2 and bounds (1, 1), normalized.
Pcr clique_witness(const std::vector<Label>& labels);
/// Clique on one representative per part, then false twins.
Pcr kpartite_witness(const std::vector<std::vector<Label>>& parts);
/// Cached C_n witness with "v{i}" renamed to order[i].
Pcr cycle_witness(const std::vector<Label>& order, const CycleCache& cache = CycleCache::shared());
/// Per-block edge/cycle witnesses folded together with join_at_cut_vertex.
Pcr cactus_witness(const Graph& g, const CycleCache& cache = CycleCache::shared());

enum class Family { Clique, Kpartite, Cycle, Cactus };

struct FamilyRequest {
  Family family;
  std::vector<std::size_t> sizes;  // clique: {k}; kpartite: part sizes; cycle: {n}
  Graph cactus;                    // cactus input
};

/// Generated witness and the graph it represents (default "v{i}" labels for
/// the numeric families).
struct Generated {
  Pcr witness;
  Graph graph;
};

Generated generate(const FamilyRequest& request, const CycleCache& cache = CycleCache::shared());

}  // namespace pcg
