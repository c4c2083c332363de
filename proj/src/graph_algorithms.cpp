#include "pcg/graph_algorithms.hpp"

#include "pcg/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pcg {

std::vector<Graph> connected_components(const Graph& g) {
  std::vector<int> comp(g.size(), -1);
  std::vector<std::vector<Label>> groups;
  for (std::size_t s = 0; s < g.size(); ++s) {
    if (comp[s] >= 0) continue;
    int id = static_cast<int>(groups.size());
    groups.emplace_back();
    std::vector<std::size_t> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      groups.back().push_back(g.label(v));
      for (auto u : g.neighbors(v)) {
        if (comp[u] < 0) {
          comp[u] = id;
          stack.push_back(u);
        }
      }
    }
  }
  std::vector<Graph> out;
  out.reserve(groups.size());
  for (const auto& grp : groups) out.push_back(g.induced(grp));
  return out;
}

bool is_connected(const Graph& g) { return g.size() <= 1 || connected_components(g).size() == 1; }

namespace {

struct LowpointResult {
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> blocks;  // edge lists
  std::vector<bool> articulation;
};

// Iterative Hopcroft-Tarjan over one connected component rooted at `root`.
LowpointResult lowpoint_blocks(const Graph& g, std::size_t root) {
  const std::size_t n = g.size();
  LowpointResult res;
  res.articulation.assign(n, false);
  std::vector<std::size_t> disc(n, 0), low(n, 0), parent(n, n), next_child(n, 0);
  std::vector<bool> visited(n, false);
  std::vector<std::pair<std::size_t, std::size_t>> edge_stack;
  std::size_t timer = 0;
  std::size_t root_children = 0;

  std::vector<std::size_t> stack{root};
  visited[root] = true;
  disc[root] = low[root] = timer++;
  while (!stack.empty()) {
    auto v = stack.back();
    const auto& nbrs = g.neighbors(v);
    if (next_child[v] < nbrs.size()) {
      auto u = nbrs[next_child[v]++];
      if (!visited[u]) {
        visited[u] = true;
        parent[u] = v;
        disc[u] = low[u] = timer++;
        edge_stack.emplace_back(v, u);
        if (v == root) ++root_children;
        stack.push_back(u);
      } else if (u != parent[v] && disc[u] < disc[v]) {
        edge_stack.emplace_back(v, u);
        low[v] = std::min(low[v], disc[u]);
      }
      continue;
    }
    stack.pop_back();
    if (stack.empty()) break;
    auto p = stack.back();
    low[p] = std::min(low[p], low[v]);
    if (low[v] >= disc[p]) {
      if (p != root) res.articulation[p] = true;
      std::vector<std::pair<std::size_t, std::size_t>> block;
      while (true) {
        auto e = edge_stack.back();
        edge_stack.pop_back();
        block.push_back(e);
        if (e == std::make_pair(p, v)) break;
      }
      res.blocks.push_back(std::move(block));
    }
  }
  if (root_children > 1) res.articulation[root] = true;
  return res;
}

}  // namespace

std::vector<Label> cut_vertices(const Graph& g) {
  std::vector<Label> out;
  std::vector<bool> covered(g.size(), false);
  for (const auto& comp : connected_components(g)) {
    auto res = lowpoint_blocks(comp, 0);
    for (std::size_t i = 0; i < comp.size(); ++i) {
      if (res.articulation[i]) out.push_back(comp.label(i));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Block> biconnected_components(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("biconnected decomposition needs a connected graph");
  if (g.empty()) return {};
  if (g.size() == 1) return {Block{g, {}}};
  auto res = lowpoint_blocks(g, 0);
  std::vector<Block> out;
  for (const auto& block : res.blocks) {
    std::set<std::size_t> verts;
    for (auto [a, b] : block) {
      verts.insert(a);
      verts.insert(b);
    }
    std::vector<Label> labels;
    std::vector<Label> cuts;
    for (auto v : verts) {
      labels.push_back(g.label(v));
      if (res.articulation[v]) cuts.push_back(g.label(v));
    }
    std::sort(cuts.begin(), cuts.end());
    out.push_back(Block{g.induced(labels), std::move(cuts)});
  }
  return out;
}

TwinReport find_twins(const Graph& g) {
  TwinReport rep;
  std::map<std::vector<Label>, std::vector<Label>> open_groups;
  std::map<std::vector<Label>, std::vector<Label>> closed_groups;
  for (const auto& l : g.labels()) {
    open_groups[g.open_neighborhood(l)].push_back(l);
    closed_groups[g.closed_neighborhood(l)].push_back(l);
  }
  for (auto& [nbhd, members] : open_groups) {
    std::sort(members.begin(), members.end());
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) rep.false_twins.emplace_back(members[i], members[j]);
    }
  }
  std::sort(rep.false_twins.begin(), rep.false_twins.end());
  for (auto& [nbhd, members] : closed_groups) {
    if (members.size() < 2) continue;
    std::sort(members.begin(), members.end());
    rep.true_twin_classes.push_back(TwinClass{members, members.size() >= 3});
  }
  std::sort(rep.true_twin_classes.begin(), rep.true_twin_classes.end(),
            [](const TwinClass& a, const TwinClass& b) { return a.members < b.members; });
  return rep;
}

std::string to_string(BaseClass c) {
  switch (c) {
    case BaseClass::SingleVertex: return "SingleVertex";
    case BaseClass::SingleEdge: return "SingleEdge";
    case BaseClass::Tree: return "Tree";
    case BaseClass::Cycle: return "Cycle";
    case BaseClass::Clique: return "Clique";
    case BaseClass::CompleteMultipartite: return "CompleteMultipartite";
    case BaseClass::SmallGraph: return "SmallGraph";
    case BaseClass::None: return "None";
  }
  return "None";
}

std::vector<std::vector<Label>> multipartite_parts(const Graph& g) {
  // In the complement every class must be a clique, i.e. non-adjacency is an
  // equivalence relation: group by open neighborhood and check each group
  // is exactly the complement of its neighborhood.
  std::map<std::vector<Label>, std::vector<Label>> groups;
  for (const auto& l : g.labels()) groups[g.open_neighborhood(l)].push_back(l);
  std::vector<std::vector<Label>> parts;
  for (auto& [nbhd, members] : groups) {
    if (nbhd.size() + members.size() != g.size()) return {};
    std::sort(members.begin(), members.end());
    parts.push_back(members);
  }
  std::sort(parts.begin(), parts.end());
  return parts;
}

BaseClass classify_base(const Graph& g) {
  if (g.empty() || !is_connected(g)) throw PreconditionError("classification needs a connected, non-empty graph");
  const auto n = g.size();
  const auto m = g.edge_count();
  if (n == 1) return BaseClass::SingleVertex;
  if (n == 2) return BaseClass::SingleEdge;
  if (m == n - 1) return BaseClass::Tree;
  bool all_two = true;
  for (std::size_t v = 0; v < n; ++v) all_two = all_two && g.degree(v) == 2;
  if (all_two) return BaseClass::Cycle;
  if (m == n * (n - 1) / 2) return BaseClass::Clique;
  if (!multipartite_parts(g).empty()) return BaseClass::CompleteMultipartite;
  if (n <= kSmallGraphBound) return BaseClass::SmallGraph;
  return BaseClass::None;
}

bool is_cactus(const Graph& g) {
  if (g.empty() || !is_connected(g)) return false;
  for (const auto& b : biconnected_components(g)) {
    const auto& bg = b.graph;
    if (bg.size() <= 2) continue;
    bool all_two = true;
    for (std::size_t v = 0; v < bg.size(); ++v) all_two = all_two && bg.degree(v) == 2;
    if (!all_two) return false;
  }
  return true;
}

std::vector<Label> cycle_order(const Graph& g) {
  std::vector<Label> order;
  if (g.empty()) return order;
  std::size_t prev = g.size();
  std::size_t cur = 0;
  do {
    order.push_back(g.label(cur));
    if (g.degree(cur) != 2) throw PreconditionError("not a cycle");
    auto next = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
    prev = cur;
    cur = next;
  } while (cur != 0 && order.size() <= g.size());
  if (order.size() != g.size()) throw PreconditionError("not a single cycle");
  return order;
}

}  // namespace pcg
