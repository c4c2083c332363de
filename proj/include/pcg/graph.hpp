#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pcg {

using Label = std::string;
using LabelPair = std::pair<Label, Label>;

/// Simple undirected graph whose vertices are opaque string labels.
///
/// Vertices keep the order they were declared in; that order only matters
/// for serialization. Equality compares label sets and edges, so two graphs
/// built in different orders compare equal when they have the same labeled
/// adjacency. Values are immutable once built; every transformation returns
/// a new graph.
class Graph {
 public:
  Graph() = default;

  /// Throws PreconditionError on duplicate labels, self-loops or edges that
  /// name unknown labels. Repeated edges are merged.
  Graph(std::vector<Label> labels, const std::vector<LabelPair>& edges);

  static Graph from_indices(std::vector<Label> labels,
                            const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  [[nodiscard]] std::size_t size() const { return labels_.size(); }
  [[nodiscard]] std::size_t edge_count() const { return edge_count_; }
  [[nodiscard]] bool empty() const { return labels_.empty(); }

  [[nodiscard]] const std::vector<Label>& labels() const { return labels_; }
  [[nodiscard]] const Label& label(std::size_t v) const { return labels_.at(v); }
  [[nodiscard]] std::optional<std::size_t> find(std::string_view label) const;
  /// Index of `label`; throws PreconditionError if absent.
  [[nodiscard]] std::size_t index(std::string_view label) const;
  [[nodiscard]] bool contains(std::string_view label) const { return find(label).has_value(); }

  [[nodiscard]] const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_.at(v); }
  [[nodiscard]] std::size_t degree(std::size_t v) const { return adj_.at(v).size(); }
  [[nodiscard]] bool adjacent(std::size_t u, std::size_t v) const;
  [[nodiscard]] bool adjacent(std::string_view u, std::string_view v) const;

  /// Edges as index pairs (u < v), sorted.
  [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  /// Edges as label pairs, each pair ordered and the list sorted.
  [[nodiscard]] std::vector<LabelPair> label_edges() const;

  /// Open neighborhood N(v) as a sorted label list.
  [[nodiscard]] std::vector<Label> open_neighborhood(std::string_view v) const;
  /// Closed neighborhood N[v] as a sorted label list.
  [[nodiscard]] std::vector<Label> closed_neighborhood(std::string_view v) const;

  /// G[X]; vertices keep this graph's order.
  [[nodiscard]] Graph induced(const std::vector<Label>& subset) const;
  /// G - v.
  [[nodiscard]] Graph without(std::string_view v) const;
  /// Adds vertex `v` adjacent to exactly `neighbors`.
  [[nodiscard]] Graph with_vertex(const Label& v, const std::vector<Label>& neighbors) const;
  /// Renames vertices; labels missing from `mapping` are kept.
  [[nodiscard]] Graph relabeled(const std::map<Label, Label>& mapping) const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  std::vector<Label> labels_;
  std::unordered_map<Label, std::size_t> index_;
  std::vector<std::vector<std::size_t>> adj_;
  std::size_t edge_count_ = 0;
};

/// Union of vertex and edge sets; shared labels are identified.
Graph graph_union(const Graph& a, const Graph& b);

/// Graph families with default labels "v0".."v{n-1}".
namespace families {
std::vector<Label> default_labels(std::size_t n);
Graph path(const std::vector<Label>& labels);
Graph cycle(const std::vector<Label>& labels);
Graph complete(const std::vector<Label>& labels);
Graph empty(const std::vector<Label>& labels);
/// Parts are consecutive runs of "v0".."v{n-1}".
Graph complete_multipartite(const std::vector<std::size_t>& part_sizes);
Graph complete_multipartite(const std::vector<std::vector<Label>>& parts);
Graph petersen();
}  // namespace families

}  // namespace pcg
