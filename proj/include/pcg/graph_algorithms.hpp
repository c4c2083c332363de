#pragma once

#include "pcg/graph.hpp"

#include <string>
#include <vector>

namespace pcg {

/// Maximal connected induced subgraphs, ordered by their first vertex.
std::vector<Graph> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Articulation points, sorted by label.
std::vector<Label> cut_vertices(const Graph& g);

struct Block {
  Graph graph;
  /// Members of this block that are cut-vertices of the whole graph, sorted.
  std::vector<Label> cut_vertices;
};

/// Biconnected components of a connected graph via a single depth-first
/// lowpoint pass. A lone vertex forms one edgeless block. Throws
/// PreconditionError on disconnected input.
std::vector<Block> biconnected_components(const Graph& g);

struct TwinClass {
  std::vector<Label> members;  // sorted
  /// Size >= 3: one member may be removed without changing PCG-ness.
  bool reducible = false;
};

struct TwinReport {
  /// Unordered pairs (first < second) with N(u) = N(v), sorted.
  std::vector<LabelPair> false_twins;
  /// Maximal classes of size >= 2 sharing N[.], sorted by first member.
  std::vector<TwinClass> true_twin_classes;
};

TwinReport find_twins(const Graph& g);

enum class BaseClass {
  SingleVertex,
  SingleEdge,
  Tree,
  Cycle,
  Clique,
  CompleteMultipartite,
  SmallGraph,
  None,
};

inline constexpr std::size_t kSmallGraphBound = 7;

std::string to_string(BaseClass c);

/// First structured class that matches, in the enumerator order above.
/// Throws PreconditionError on disconnected input.
BaseClass classify_base(const Graph& g);

/// Partition classes when `g` is complete multipartite (complement is a
/// disjoint union of cliques); empty otherwise.
std::vector<std::vector<Label>> multipartite_parts(const Graph& g);

/// Every biconnected component is a single edge or a cycle.
bool is_cactus(const Graph& g);

/// Vertices of a cycle graph in traversal order starting at its first vertex.
std::vector<Label> cycle_order(const Graph& g);

}  // namespace pcg
