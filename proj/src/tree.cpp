#include "pcg/tree.hpp"

#include "pcg/error.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace pcg {

WeightedTree WeightedTree::single(const Label& label) {
  WeightedTree t;
  t.add_vertex(label);
  return t;
}

std::size_t WeightedTree::add_vertex(const Label& label) {
  if (!index_.emplace(label, labels_.size()).second) {
    throw PreconditionError("tree label '" + label + "' already in use");
  }
  labels_.push_back(label);
  incident_.emplace_back();
  return labels_.size() - 1;
}

std::size_t WeightedTree::add_edge(std::size_t u, std::size_t v, Rational weight) {
  if (u >= labels_.size() || v >= labels_.size() || u == v) throw PreconditionError("invalid tree edge");
  if (weight.sign() < 0) throw PreconditionError("negative tree edge weight");
  edges_.push_back(TreeEdge{u, v, std::move(weight)});
  incident_[u].push_back(edges_.size() - 1);
  incident_[v].push_back(edges_.size() - 1);
  return edges_.size() - 1;
}

std::size_t WeightedTree::add_edge(std::string_view u, std::string_view v, Rational weight) {
  return add_edge(index(u), index(v), std::move(weight));
}

void WeightedTree::set_weight(std::size_t edge, Rational weight) {
  if (weight.sign() < 0) throw PreconditionError("negative tree edge weight");
  edges_.at(edge).weight = std::move(weight);
}

void WeightedTree::validate() const {
  if (labels_.empty()) throw PreconditionError("tree has no vertices");
  if (edges_.size() + 1 != labels_.size()) throw PreconditionError("tree must have |E| = |V| - 1");
  std::vector<bool> seen(labels_.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto e : incident_[v]) {
      auto u = other_end(e, v);
      if (!seen[u]) {
        seen[u] = true;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  if (reached != labels_.size()) throw PreconditionError("tree is not connected");
  for (const auto& e : edges_) {
    if (e.weight.sign() < 0) throw PreconditionError("negative tree edge weight");
  }
}

std::optional<std::size_t> WeightedTree::find(std::string_view label) const {
  auto it = index_.find(Label(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t WeightedTree::index(std::string_view label) const {
  auto i = find(label);
  if (!i) throw PreconditionError("unknown tree vertex '" + std::string(label) + "'");
  return *i;
}

std::size_t WeightedTree::other_end(std::size_t e, std::size_t v) const {
  const auto& ed = edges_.at(e);
  return ed.u == v ? ed.v : ed.u;
}

std::optional<std::size_t> WeightedTree::edge_between(std::size_t u, std::size_t v) const {
  for (auto e : incident_.at(u)) {
    if (other_end(e, u) == v) return e;
  }
  return std::nullopt;
}

bool WeightedTree::is_leaf_edge(std::size_t e) const {
  return is_leaf(edges_.at(e).u) || is_leaf(edges_.at(e).v);
}

std::vector<std::size_t> WeightedTree::leaves() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    if (is_leaf(v)) out.push_back(v);
  }
  return out;
}

std::vector<Label> WeightedTree::leaf_labels() const {
  std::vector<Label> out;
  for (auto v : leaves()) out.push_back(labels_[v]);
  return out;
}

std::vector<Rational> WeightedTree::distances_from(std::size_t source) const {
  std::vector<Rational> dist(labels_.size());
  std::vector<bool> seen(labels_.size(), false);
  std::vector<std::size_t> stack{source};
  seen.at(source) = true;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto e : incident_[v]) {
      auto u = other_end(e, v);
      if (seen[u]) continue;
      seen[u] = true;
      dist[u] = dist[v] + edges_[e].weight;
      stack.push_back(u);
    }
  }
  return dist;
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> WeightedTree::path(std::size_t u,
                                                                                 std::size_t v) const {
  const std::size_t none = labels_.size();
  std::vector<std::size_t> parent(labels_.size(), none), via(labels_.size(), 0);
  std::vector<std::size_t> stack{u};
  parent.at(u) = u;
  while (!stack.empty()) {
    auto x = stack.back();
    stack.pop_back();
    if (x == v) break;
    for (auto e : incident_[x]) {
      auto y = other_end(e, x);
      if (parent[y] != none) continue;
      parent[y] = x;
      via[y] = e;
      stack.push_back(y);
    }
  }
  if (parent.at(v) == none) throw PreconditionError("vertices are not connected");
  std::vector<std::size_t> verts{v};
  std::vector<std::size_t> es;
  for (auto x = v; x != u; x = parent[x]) {
    es.push_back(via[x]);
    verts.push_back(parent[x]);
  }
  std::reverse(verts.begin(), verts.end());
  std::reverse(es.begin(), es.end());
  return {verts, es};
}

Rational WeightedTree::distance(std::size_t u, std::size_t v) const {
  Rational d;
  for (auto e : path(u, v).second) d += edges_[e].weight;
  return d;
}

Rational WeightedTree::distance(std::string_view u, std::string_view v) const {
  return distance(index(u), index(v));
}

Label WeightedTree::fresh_label(const std::vector<Label>& avoid) const {
  std::unordered_set<Label> blocked(avoid.begin(), avoid.end());
  for (std::size_t k = labels_.size();; ++k) {
    Label cand = "_" + std::to_string(k);
    if (!contains(cand) && !blocked.contains(cand)) return cand;
  }
}

WeightedTree WeightedTree::relabeled(const std::unordered_map<Label, Label>& mapping) const {
  WeightedTree t;
  for (const auto& l : labels_) {
    auto it = mapping.find(l);
    t.add_vertex(it == mapping.end() ? l : it->second);
  }
  for (const auto& e : edges_) t.add_edge(e.u, e.v, e.weight);
  return t;
}

WeightedTree WeightedTree::restricted_to(const std::vector<bool>& keep) const {
  WeightedTree t;
  std::vector<std::size_t> remap(labels_.size(), 0);
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    if (keep.at(v)) remap[v] = t.add_vertex(labels_[v]);
  }
  for (const auto& e : edges_) {
    if (keep[e.u] && keep[e.v]) t.add_edge(remap[e.u], remap[e.v], e.weight);
  }
  return t;
}

WeightedTree WeightedTree::contracted(std::size_t e) const {
  const auto& ed = edges_.at(e);
  std::size_t keep = is_leaf(ed.u) && !is_leaf(ed.v) ? ed.v : ed.u;
  std::size_t drop = keep == ed.u ? ed.v : ed.u;
  WeightedTree t;
  std::vector<std::size_t> remap(labels_.size(), 0);
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    if (v != drop) remap[v] = t.add_vertex(labels_[v]);
  }
  remap[drop] = remap[keep];
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i == e) continue;
    t.add_edge(remap[edges_[i].u], remap[edges_[i].v], edges_[i].weight);
  }
  return t;
}

bool operator==(const WeightedTree& a, const WeightedTree& b) {
  if (a.labels_ != b.labels_ || a.edges_.size() != b.edges_.size()) return false;
  for (std::size_t i = 0; i < a.edges_.size(); ++i) {
    const auto& x = a.edges_[i];
    const auto& y = b.edges_[i];
    if (x.u != y.u || x.v != y.v || x.weight != y.weight) return false;
  }
  return true;
}

WeightedTree subdivide_at_point(const WeightedTree& t, std::string_view u1, std::string_view u2,
                                const Rational& offset, const Label& label) {
  auto a = t.index(u1);
  auto b = t.index(u2);
  auto e = t.edge_between(a, b);
  if (!e) throw PreconditionError("no tree edge " + std::string(u1) + "-" + std::string(u2));
  const Rational& w = t.edge(*e).weight;
  if (offset.sign() < 0 || w < offset) throw PreconditionError("subdivision offset outside [0, w]");
  if (t.contains(label)) throw PreconditionError("label '" + label + "' already in the tree");

  WeightedTree out;
  for (const auto& l : t.labels()) out.add_vertex(l);
  auto mid = out.add_vertex(label);
  for (std::size_t i = 0; i < t.edge_count(); ++i) {
    if (i == *e) {
      out.add_edge(a, mid, offset);
      out.add_edge(mid, b, w - offset);
    } else {
      out.add_edge(t.edge(i).u, t.edge(i).v, t.edge(i).weight);
    }
  }
  return out;
}

WeightedTree binarize(const WeightedTree& t) {
  t.validate();
  // Work on an adjacency map so vertices can be rewired freely, then rebuild.
  struct Half {
    std::size_t to;
    Rational w;
  };
  std::vector<Label> labels = t.labels();
  std::vector<std::vector<Half>> adj(labels.size());
  for (const auto& e : t.edges()) {
    adj[e.u].push_back({e.v, e.weight});
    adj[e.v].push_back({e.u, e.weight});
  }
  std::vector<bool> alive(labels.size(), true);
  auto drop_half = [&](std::size_t from, std::size_t to) {
    auto& list = adj[from];
    list.erase(std::find_if(list.begin(), list.end(), [to](const Half& h) { return h.to == to; }));
  };

  // Smooth degree-2 vertices.
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (adj[v].size() != 2) continue;
    auto [a, wa] = adj[v][0];
    auto [b, wb] = adj[v][1];
    drop_half(a, v);
    drop_half(b, v);
    adj[a].push_back({b, wa + wb});
    adj[b].push_back({a, wa + wb});
    adj[v].clear();
    alive[v] = false;
  }

  // Split high-degree vertices: keep two neighbors, move the rest to a new
  // vertex hanging off a zero-weight edge, repeat.
  std::vector<Label> used = labels;
  auto fresh = [&]() {
    for (std::size_t k = used.size();; ++k) {
      Label cand = "_" + std::to_string(k);
      if (std::find(used.begin(), used.end(), cand) == used.end()) {
        used.push_back(cand);
        return cand;
      }
    }
  };
  std::vector<std::size_t> work;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (adj[v].size() > 3) work.push_back(v);
  }
  while (!work.empty()) {
    auto v = work.back();
    work.pop_back();
    std::size_t nv = labels.size();
    labels.push_back(fresh());
    adj.emplace_back();
    alive.push_back(true);
    while (adj[v].size() > 2) {
      auto h = adj[v].back();
      adj[v].pop_back();
      drop_half(h.to, v);
      adj[h.to].push_back({nv, h.w});
      adj[nv].push_back({h.to, h.w});
    }
    adj[v].push_back({nv, Rational(0)});
    adj[nv].push_back({v, Rational(0)});
    if (adj[nv].size() > 3) work.push_back(nv);
  }

  WeightedTree out;
  std::vector<std::size_t> remap(labels.size(), 0);
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (alive[v]) remap[v] = out.add_vertex(labels[v]);
  }
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (!alive[v]) continue;
    for (const auto& h : adj[v]) {
      if (v < h.to) out.add_edge(remap[v], remap[h.to], h.w);
    }
  }
  out.validate();
  return out;
}

std::string to_dot(const WeightedTree& t) {
  std::ostringstream out;
  out << "graph pct {\n";
  for (std::size_t v = 0; v < t.vertex_count(); ++v) {
    out << "  \"" << t.label(v) << "\" [shape=" << (t.is_leaf(v) ? "box" : "circle") << "];\n";
  }
  for (const auto& e : t.edges()) {
    out << "  \"" << t.label(e.u) << "\" -- \"" << t.label(e.v) << "\" [label=\"" << e.weight << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace pcg
