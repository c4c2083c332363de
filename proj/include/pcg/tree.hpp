#pragma once

#include "pcg/graph.hpp"
#include "pcg/rational.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace pcg {

struct TreeEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  Rational weight;
};

/// Edge-weighted tree with labeled vertices. Leaves are exactly the
/// vertices of degree <= 1.
///
/// The building API (add_vertex/add_edge/...) may produce intermediate
/// forests; `validate()` checks the tree invariants and is called by every
/// operation that hands a tree back to callers.
class WeightedTree {
 public:
  WeightedTree() = default;

  static WeightedTree single(const Label& label);

  std::size_t add_vertex(const Label& label);
  std::size_t add_edge(std::size_t u, std::size_t v, Rational weight);
  std::size_t add_edge(std::string_view u, std::string_view v, Rational weight);
  void set_weight(std::size_t edge, Rational weight);

  /// Throws PreconditionError unless connected, acyclic, weights >= 0.
  void validate() const;

  [[nodiscard]] std::size_t vertex_count() const { return labels_.size(); }
  [[nodiscard]] std::size_t edge_count() const { return edges_.size(); }
  [[nodiscard]] const std::vector<Label>& labels() const { return labels_; }
  [[nodiscard]] const Label& label(std::size_t v) const { return labels_.at(v); }
  [[nodiscard]] std::optional<std::size_t> find(std::string_view label) const;
  [[nodiscard]] std::size_t index(std::string_view label) const;
  [[nodiscard]] bool contains(std::string_view label) const { return find(label).has_value(); }

  [[nodiscard]] const std::vector<TreeEdge>& edges() const { return edges_; }
  [[nodiscard]] const TreeEdge& edge(std::size_t e) const { return edges_.at(e); }
  [[nodiscard]] const std::vector<std::size_t>& incident(std::size_t v) const { return incident_.at(v); }
  [[nodiscard]] std::size_t degree(std::size_t v) const { return incident_.at(v).size(); }
  [[nodiscard]] std::size_t other_end(std::size_t e, std::size_t v) const;
  [[nodiscard]] std::optional<std::size_t> edge_between(std::size_t u, std::size_t v) const;

  [[nodiscard]] bool is_leaf(std::size_t v) const { return degree(v) <= 1; }
  [[nodiscard]] bool is_leaf_edge(std::size_t e) const;
  /// Leaf indices in vertex order.
  [[nodiscard]] std::vector<std::size_t> leaves() const;
  [[nodiscard]] std::vector<Label> leaf_labels() const;

  /// Exact path weight between two vertices.
  [[nodiscard]] Rational distance(std::size_t u, std::size_t v) const;
  [[nodiscard]] Rational distance(std::string_view u, std::string_view v) const;
  /// Distances from `source` to every vertex.
  [[nodiscard]] std::vector<Rational> distances_from(std::size_t source) const;
  /// Vertices along the u-v path, inclusive, and the edges between them.
  [[nodiscard]] std::pair<std::vector<std::size_t>, std::vector<std::size_t>> path(std::size_t u,
                                                                                   std::size_t v) const;

  /// "_0", "_1", ... skipping labels already used here or in `avoid`.
  [[nodiscard]] Label fresh_label(const std::vector<Label>& avoid = {}) const;

  /// Renames vertices; labels absent from the map are kept.
  [[nodiscard]] WeightedTree relabeled(const std::unordered_map<Label, Label>& mapping) const;

  /// Rebuilds the tree keeping only the listed vertices and the edges among them.
  [[nodiscard]] WeightedTree restricted_to(const std::vector<bool>& keep) const;

  /// Identifies the endpoints of `e`; the merged vertex keeps the label of
  /// the endpoint that is not a leaf (or `e.u` when both are inner).
  [[nodiscard]] WeightedTree contracted(std::size_t e) const;

  /// Structural equality: same labels, same edges and same weights.
  friend bool operator==(const WeightedTree& a, const WeightedTree& b);

 private:
  std::vector<Label> labels_;
  std::unordered_map<Label, std::size_t> index_;
  std::vector<TreeEdge> edges_;
  std::vector<std::vector<std::size_t>> incident_;
};

/// Replaces edge (u1,u2) by u1 -- label -- u2 with weights (offset, w - offset).
WeightedTree subdivide_at_point(const WeightedTree& t, std::string_view u1, std::string_view u2,
                                const Rational& offset, const Label& label);

/// Resolves every inner vertex of degree >= 4 into a chain of degree-3
/// vertices joined by zero-weight edges and smooths degree-2 inner vertices,
/// so every inner vertex ends with degree exactly 3. Leaf distances are kept.
WeightedTree binarize(const WeightedTree& t);

/// Graphviz text; leaves are boxes, edges carry their weights.
std::string to_dot(const WeightedTree& t);

}  // namespace pcg
