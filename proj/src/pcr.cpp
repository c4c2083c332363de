#include "pcg/pcr.hpp"

#include "pcg/error.hpp"

#include <algorithm>
#include <unordered_set>

namespace pcg {

void Pcr::validate() const {
  tree.validate();
  if (d_min.sign() < 0 || d_max < d_min) throw PreconditionError("bounds must satisfy 0 <= d_min <= d_max");
}

bool is_nonsingular(const Pcr& p) {
  if (p.tree.vertex_count() < 3) return false;
  if (p.d_min.sign() <= 0 || !(p.d_min < p.d_max)) return false;
  return std::all_of(p.tree.edges().begin(), p.tree.edges().end(),
                     [](const TreeEdge& e) { return e.weight.sign() > 0; });
}

bool is_normalized(const Pcr& p) {
  if (!is_nonsingular(p) || p.d_max != Rational(1)) return false;
  const Rational quarter(1, 4);
  for (std::size_t e = 0; e < p.tree.edge_count(); ++e) {
    if (p.tree.is_leaf_edge(e) && !(quarter < p.tree.edge(e).weight)) return false;
  }
  return true;
}

Graph induced_graph(const Pcr& p) {
  const auto& t = p.tree;
  auto leaves = t.leaves();
  std::vector<Label> labels;
  labels.reserve(leaves.size());
  for (auto v : leaves) labels.push_back(t.label(v));
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  if (t.vertex_count() > 1) {
    for (std::size_t i = 0; i < leaves.size(); ++i) {
      auto dist = t.distances_from(leaves[i]);
      for (std::size_t j = i + 1; j < leaves.size(); ++j) {
        const auto& d = dist[leaves[j]];
        if (p.d_min <= d && d <= p.d_max) edges.emplace_back(i, j);
      }
    }
  }
  return Graph::from_indices(std::move(labels), edges);
}

Pcr restrict(const Pcr& p, const std::vector<Label>& leaves) {
  const auto& t = p.tree;
  if (leaves.empty()) throw PreconditionError("restriction to an empty leaf set");
  std::vector<bool> wanted(t.vertex_count(), false);
  for (const auto& l : leaves) {
    auto v = t.find(l);
    if (!v) throw PreconditionError("unknown leaf '" + l + "'");
    if (!t.is_leaf(*v)) throw PreconditionError("'" + l + "' is not a leaf");
    wanted[*v] = true;
  }
  std::vector<bool> keep(t.vertex_count(), true);
  std::vector<std::size_t> degree(t.vertex_count());
  std::vector<std::size_t> queue;
  for (std::size_t v = 0; v < t.vertex_count(); ++v) {
    degree[v] = t.degree(v);
    if (degree[v] <= 1 && !wanted[v]) queue.push_back(v);
  }
  while (!queue.empty()) {
    auto v = queue.back();
    queue.pop_back();
    if (!keep[v]) continue;
    keep[v] = false;
    for (auto e : t.incident(v)) {
      auto u = t.other_end(e, v);
      if (!keep[u]) continue;
      if (--degree[u] <= 1 && !wanted[u]) queue.push_back(u);
    }
  }
  Pcr out{t.restricted_to(keep), p.d_min, p.d_max};
  out.validate();
  return out;
}

bool verify(const Pcr& p, const Graph& g) {
  auto h = induced_graph(p);
  if (h.size() != g.size()) throw LabelMismatch("witness leaf count differs from graph vertex count");
  for (const auto& l : g.labels()) {
    if (!h.contains(l)) throw LabelMismatch("graph vertex '" + l + "' is not a witness leaf");
  }
  return h == g;
}

Pcr relabel_leaves(const Pcr& p, const std::unordered_map<Label, Label>& mapping,
                   const std::vector<Label>& reserved) {
  const auto& t = p.tree;
  std::unordered_set<Label> taken(reserved.begin(), reserved.end());
  std::unordered_map<Label, Label> full;
  for (auto v : t.leaves()) {
    auto it = mapping.find(t.label(v));
    const Label& to = it == mapping.end() ? t.label(v) : it->second;
    full.emplace(t.label(v), to);
    taken.insert(to);
  }
  std::size_t k = 0;
  for (std::size_t v = 0; v < t.vertex_count(); ++v) {
    if (t.is_leaf(v)) continue;
    Label cand;
    do {
      cand = "_" + std::to_string(k++);
    } while (taken.contains(cand));
    full.emplace(t.label(v), cand);
  }
  return Pcr{t.relabeled(full), p.d_min, p.d_max};
}

Pcr single_vertex_pcr(const Label& v) { return Pcr{WeightedTree::single(v), Rational(0), Rational(0)}; }

}  // namespace pcg
