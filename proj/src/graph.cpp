#include "pcg/graph.hpp"

#include "pcg/error.hpp"

#include <algorithm>

namespace pcg {

Graph Graph::from_indices(std::vector<Label> labels,
                          const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  Graph g;
  g.labels_ = std::move(labels);
  g.adj_.assign(g.labels_.size(), {});
  for (std::size_t i = 0; i < g.labels_.size(); ++i) {
    if (!g.index_.emplace(g.labels_[i], i).second) {
      throw PreconditionError("duplicate vertex label '" + g.labels_[i] + "'");
    }
  }
  for (auto [u, v] : edges) {
    if (u >= g.size() || v >= g.size()) throw PreconditionError("edge endpoint out of range");
    if (u == v) throw PreconditionError("self-loop at '" + g.labels_[u] + "'");
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& list : g.adj_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    g.edge_count_ += list.size();
  }
  g.edge_count_ /= 2;
  return g;
}

Graph::Graph(std::vector<Label> labels, const std::vector<LabelPair>& edges) {
  std::unordered_map<Label, std::size_t> idx;
  for (std::size_t i = 0; i < labels.size(); ++i) idx.emplace(labels[i], i);
  std::vector<std::pair<std::size_t, std::size_t>> ie;
  ie.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto ia = idx.find(a);
    auto ib = idx.find(b);
    if (ia == idx.end() || ib == idx.end()) {
      throw PreconditionError("edge " + a + "-" + b + " names an unknown vertex");
    }
    ie.emplace_back(ia->second, ib->second);
  }
  *this = from_indices(std::move(labels), ie);
}

std::optional<std::size_t> Graph::find(std::string_view label) const {
  auto it = index_.find(Label(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Graph::index(std::string_view label) const {
  auto i = find(label);
  if (!i) throw PreconditionError("unknown vertex '" + std::string(label) + "'");
  return *i;
}

bool Graph::adjacent(std::size_t u, std::size_t v) const {
  const auto& list = adj_.at(u);
  return std::binary_search(list.begin(), list.end(), v);
}

bool Graph::adjacent(std::string_view u, std::string_view v) const {
  return adjacent(index(u), index(v));
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < size(); ++u) {
    for (auto v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<LabelPair> Graph::label_edges() const {
  std::vector<LabelPair> out;
  out.reserve(edge_count_);
  for (auto [u, v] : edges()) {
    const Label& a = labels_[u];
    const Label& b = labels_[v];
    out.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Label> Graph::open_neighborhood(std::string_view v) const {
  std::vector<Label> out;
  for (auto u : adj_[index(v)]) out.push_back(labels_[u]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Label> Graph::closed_neighborhood(std::string_view v) const {
  auto out = open_neighborhood(v);
  out.insert(std::upper_bound(out.begin(), out.end(), Label(v)), Label(v));
  return out;
}

Graph Graph::induced(const std::vector<Label>& subset) const {
  std::vector<bool> keep(size(), false);
  for (const auto& l : subset) keep[index(l)] = true;
  std::vector<std::size_t> remap(size(), 0);
  std::vector<Label> labels;
  for (std::size_t i = 0; i < size(); ++i) {
    if (keep[i]) {
      remap[i] = labels.size();
      labels.push_back(labels_[i]);
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> es;
  for (auto [u, v] : edges()) {
    if (keep[u] && keep[v]) es.emplace_back(remap[u], remap[v]);
  }
  return from_indices(std::move(labels), es);
}

Graph Graph::without(std::string_view v) const {
  std::size_t drop = index(v);
  std::vector<Label> rest;
  for (std::size_t i = 0; i < size(); ++i) {
    if (i != drop) rest.push_back(labels_[i]);
  }
  return induced(rest);
}

Graph Graph::with_vertex(const Label& v, const std::vector<Label>& neighbors) const {
  if (contains(v)) throw PreconditionError("vertex '" + v + "' already present");
  auto labels = labels_;
  labels.push_back(v);
  auto es = edges();
  for (const auto& n : neighbors) es.emplace_back(index(n), labels_.size());
  return from_indices(std::move(labels), es);
}

Graph Graph::relabeled(const std::map<Label, Label>& mapping) const {
  std::vector<Label> labels;
  labels.reserve(size());
  for (const auto& l : labels_) {
    auto it = mapping.find(l);
    labels.push_back(it == mapping.end() ? l : it->second);
  }
  return from_indices(std::move(labels), edges());
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
  for (const auto& l : a.labels_) {
    if (!b.contains(l)) return false;
  }
  for (auto [u, v] : a.edges()) {
    if (!b.adjacent(a.labels_[u], a.labels_[v])) return false;
  }
  return true;
}

Graph graph_union(const Graph& a, const Graph& b) {
  std::vector<Label> labels = a.labels();
  for (const auto& l : b.labels()) {
    if (!a.contains(l)) labels.push_back(l);
  }
  std::vector<LabelPair> es = a.label_edges();
  auto eb = b.label_edges();
  es.insert(es.end(), eb.begin(), eb.end());
  return Graph(std::move(labels), es);
}

namespace families {

std::vector<Label> default_labels(std::size_t n) {
  std::vector<Label> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back("v" + std::to_string(i));
  return out;
}

Graph path(const std::vector<Label>& labels) {
  std::vector<std::pair<std::size_t, std::size_t>> es;
  for (std::size_t i = 1; i < labels.size(); ++i) es.emplace_back(i - 1, i);
  return Graph::from_indices(labels, es);
}

Graph cycle(const std::vector<Label>& labels) {
  if (labels.size() < 3) throw PreconditionError("a cycle needs at least 3 vertices");
  std::vector<std::pair<std::size_t, std::size_t>> es;
  for (std::size_t i = 0; i < labels.size(); ++i) es.emplace_back(i, (i + 1) % labels.size());
  return Graph::from_indices(labels, es);
}

Graph complete(const std::vector<Label>& labels) {
  std::vector<std::pair<std::size_t, std::size_t>> es;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) es.emplace_back(i, j);
  }
  return Graph::from_indices(labels, es);
}

Graph empty(const std::vector<Label>& labels) { return Graph::from_indices(labels, {}); }

Graph complete_multipartite(const std::vector<std::vector<Label>>& parts) {
  std::vector<Label> labels;
  std::vector<std::size_t> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    for (const auto& l : parts[p]) {
      labels.push_back(l);
      part_of.push_back(p);
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> es;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      if (part_of[i] != part_of[j]) es.emplace_back(i, j);
    }
  }
  return Graph::from_indices(std::move(labels), es);
}

Graph complete_multipartite(const std::vector<std::size_t>& part_sizes) {
  std::vector<std::vector<Label>> parts;
  std::size_t next = 0;
  for (auto s : part_sizes) {
    std::vector<Label> part;
    for (std::size_t i = 0; i < s; ++i) part.push_back("v" + std::to_string(next++));
    parts.push_back(std::move(part));
  }
  return complete_multipartite(parts);
}

Graph petersen() {
  std::vector<std::pair<std::size_t, std::size_t>> es;
  for (std::size_t i = 0; i < 5; ++i) {
    es.emplace_back(i, (i + 1) % 5);          // outer cycle
    es.emplace_back(i, i + 5);                // spokes
    es.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return Graph::from_indices(default_labels(10), es);
}

}  // namespace families

}  // namespace pcg
