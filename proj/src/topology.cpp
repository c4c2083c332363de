#include "pcg/topology.hpp"

#include "pcg/error.hpp"

#include <algorithm>

namespace pcg {

std::string Topology::canonical_code() const {
  const std::size_t nv = vertex_count();
  std::vector<std::vector<std::size_t>> adj(nv);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  // Leaf set below each inner edge, taken on the side without leaf 0.
  std::vector<std::string> splits;
  for (auto [a, b] : edges) {
    if (a < leaf_count || b < leaf_count) continue;
    std::string side(leaf_count, '0');
    std::vector<std::size_t> stack{b};
    std::vector<bool> seen(nv, false);
    seen[a] = seen[b] = true;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      if (v < leaf_count) side[v] = '1';
      for (auto u : adj[v]) {
        if (!seen[u]) {
          seen[u] = true;
          stack.push_back(u);
        }
      }
    }
    if (side[0] == '1') {
      for (auto& c : side) c = c == '1' ? '0' : '1';
    }
    splits.push_back(side);
  }
  std::sort(splits.begin(), splits.end());
  std::string code = std::to_string(leaf_count) + ":";
  for (const auto& s : splits) code += s + "|";
  return code;
}

std::uint64_t topology_count(std::size_t n) {
  std::uint64_t c = 1;
  for (std::uint64_t k = 3; n >= 3 && k <= 2 * n - 5; k += 2) c *= k;
  return c;
}

namespace {

bool insert_leaves(Topology& t, std::size_t next_leaf, std::size_t n,
                   const std::function<bool(const Topology&)>& visit) {
  if (next_leaf == n) return visit(t);
  // Inner vertex ids are assigned after all leaves: the k-th inserted inner
  // vertex (k >= 1) gets id n + k.
  const std::size_t inner = n + (next_leaf - 2);
  const std::size_t edge_total = t.edges.size();
  for (std::size_t e = 0; e < edge_total; ++e) {
    auto [a, b] = t.edges[e];
    t.edges[e] = {a, inner};
    t.edges.emplace_back(inner, b);
    t.edges.emplace_back(inner, next_leaf);
    bool go_on = insert_leaves(t, next_leaf + 1, n, visit);
    t.edges.pop_back();
    t.edges.pop_back();
    t.edges[e] = {a, b};
    if (!go_on) return false;
  }
  return true;
}

}  // namespace

bool for_each_topology(std::size_t n, const std::function<bool(const Topology&)>& visit) {
  if (n == 0) throw PreconditionError("topologies need at least one leaf");
  Topology t;
  t.leaf_count = n;
  if (n == 1) return visit(t);
  if (n == 2) {
    t.edges = {{0, 1}};
    return visit(t);
  }
  t.edges = {{0, n}, {1, n}, {2, n}};
  return insert_leaves(t, 3, n, visit);
}

std::vector<Topology> enumerate_topologies(std::size_t n) {
  std::vector<Topology> out;
  for_each_topology(n, [&out](const Topology& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

}  // namespace pcg
