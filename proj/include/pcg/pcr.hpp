#pragma once

#include "pcg/graph.hpp"
#include "pcg/rational.hpp"
#include "pcg/tree.hpp"

#include <vector>

namespace pcg {

/// Pairwise compatibility representation: a weighted tree and closed
/// distance bounds. Its graph has the tree's leaves as vertices and an edge
/// between two leaves exactly when their distance lies in [d_min, d_max].
struct Pcr {
  WeightedTree tree;
  Rational d_min;
  Rational d_max;

  /// Tree invariants plus 0 <= d_min <= d_max. Throws PreconditionError.
  void validate() const;

  friend bool operator==(const Pcr&, const Pcr&) = default;
};

/// At least three tree vertices, 0 < d_min < d_max and all weights positive.
bool is_nonsingular(const Pcr& p);
/// Non-singular, d_max = 1, d_min < 1 and every leaf edge heavier than 1/4.
bool is_normalized(const Pcr& p);

/// The graph defined by `p`, vertices in tree-leaf order.
Graph induced_graph(const Pcr& p);

/// Minimal subtree spanning `leaves` with the original weights (degree-2
/// vertices left by pruning are kept) and the same bounds.
Pcr restrict(const Pcr& p, const std::vector<Label>& leaves);

/// True iff `p` induces exactly the labeled graph `g`. Throws LabelMismatch
/// when the leaf set and the vertex set differ.
bool verify(const Pcr& p, const Graph& g);

/// Renames leaves through `mapping` and gives inner vertices fresh names
/// "_0", "_1", ... that avoid every leaf label (after renaming) and every
/// label in `reserved`.
Pcr relabel_leaves(const Pcr& p, const std::unordered_map<Label, Label>& mapping,
                   const std::vector<Label>& reserved = {});

/// Witness for a one-vertex graph: the single-vertex tree with bounds (0, 0).
Pcr single_vertex_pcr(const Label& v);

}  // namespace pcg
