#include "pcg/compose.hpp"

#include "pcg/error.hpp"
#include "pcg/graph_algorithms.hpp"
#include "pcg/normalize.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace pcg {

namespace {

// Allocates inner-vertex names that avoid a fixed set of leaf labels.
class NameAllocator {
 public:
  explicit NameAllocator(std::unordered_set<Label> taken) : taken_(std::move(taken)) {}
  Label next() {
    for (;;) {
      Label cand = "_" + std::to_string(counter_++);
      if (taken_.insert(cand).second) return cand;
    }
  }

 private:
  std::unordered_set<Label> taken_;
  std::size_t counter_ = 0;
};

// Copies `src` into `dst`. Leaves keep their label (or reuse an existing dst
// vertex of that label when `share` names it); inner vertices get fresh names.
std::vector<std::size_t> graft(WeightedTree& dst, const WeightedTree& src, NameAllocator& names,
                               const Label* share = nullptr, std::optional<std::size_t> skip_edge = {}) {
  std::vector<std::size_t> map(src.vertex_count());
  for (std::size_t v = 0; v < src.vertex_count(); ++v) {
    if (src.is_leaf(v)) {
      if (share && src.label(v) == *share && dst.contains(*share)) {
        map[v] = dst.index(*share);
      } else {
        map[v] = dst.add_vertex(src.label(v));
      }
    } else {
      map[v] = dst.add_vertex(names.next());
    }
  }
  for (std::size_t e = 0; e < src.edge_count(); ++e) {
    if (skip_edge && *skip_edge == e) continue;
    const auto& ed = src.edge(e);
    dst.add_edge(map[ed.u], map[ed.v], ed.weight);
  }
  return map;
}

std::vector<Pcr> normalize_common(const std::vector<const Pcr*>& ps, Rational& alpha) {
  std::vector<Pcr> nonsingular;
  Rational c_max(1, 2);
  for (const auto* p : ps) {
    nonsingular.push_back(make_nonsingular(*p).first);
    c_max = max(c_max, critical_alpha(nonsingular.back()));
  }
  alpha = (c_max + Rational(1)) / Rational(2);
  std::vector<Pcr> out;
  for (const auto& p : nonsingular) out.push_back(make_normalized(p, alpha).first);
  return out;
}

std::unordered_set<Label> leaf_set(const WeightedTree& t) {
  auto l = t.leaf_labels();
  return {l.begin(), l.end()};
}

// Inner vertices renamed so that none of them is called `label`.
Pcr free_label(const Pcr& p, const Label& label) {
  if (!p.tree.contains(label)) return p;
  if (p.tree.is_leaf(p.tree.index(label))) throw PreconditionError("label '" + label + "' is already a leaf");
  return relabel_leaves(p, {}, {label});
}

std::size_t leaf_index(const WeightedTree& t, const Label& v) {
  auto i = t.find(v);
  if (!i || !t.is_leaf(*i)) throw PreconditionError("'" + v + "' is not a leaf of the witness");
  return *i;
}

}  // namespace

Pcr join_components(const std::vector<Pcr>& parts) {
  if (parts.size() < 2) throw PreconditionError("join_components needs at least two inputs");
  std::unordered_set<Label> leaves;
  std::vector<const Pcr*> multi;
  for (const auto& p : parts) {
    p.validate();
    for (const auto& l : p.tree.leaf_labels()) {
      if (!leaves.insert(l).second) throw PreconditionError("leaf '" + l + "' appears in two components");
    }
    if (p.tree.vertex_count() > 1) multi.push_back(&p);
  }
  Rational alpha(1, 2);
  std::vector<Pcr> normalized;
  if (!multi.empty()) normalized = normalize_common(multi, alpha);

  NameAllocator names(leaves);
  Pcr out;
  out.d_min = alpha;
  out.d_max = Rational(1);
  auto root = out.tree.add_vertex(names.next());
  std::size_t k = 0;
  for (const auto& p : parts) {
    if (p.tree.vertex_count() == 1) {
      auto leaf = out.tree.add_vertex(p.tree.label(0));
      out.tree.add_edge(root, leaf, Rational(2));
      continue;
    }
    const auto& np = normalized[k++];
    auto map = graft(out.tree, np.tree, names);
    std::size_t hook = 0;
    while (np.tree.is_leaf(hook)) ++hook;
    out.tree.add_edge(root, map[hook], Rational(2));
  }
  out.validate();
  return out;
}

Pcr join_at_cut_vertex(const Pcr& first, const Pcr& second, const Label& v_star) {
  first.validate();
  second.validate();
  leaf_index(first.tree, v_star);
  leaf_index(second.tree, v_star);
  auto l1 = leaf_set(first.tree);
  for (const auto& l : second.tree.leaf_labels()) {
    if (l != v_star && l1.contains(l)) throw PreconditionError("leaf '" + l + "' appears on both sides");
  }
  if (first.tree.vertex_count() == 1) return second;
  if (second.tree.vertex_count() == 1) return first;

  Rational alpha;
  auto normalized = normalize_common({&first, &second}, alpha);
  const auto& t1 = normalized[0].tree;
  const auto& t2 = normalized[1].tree;
  auto s1 = t1.index(v_star);
  auto s2 = t2.index(v_star);
  auto e1 = t1.incident(s1).front();
  auto e2 = t2.incident(s2).front();

  auto all = l1;
  for (const auto& l : t2.leaf_labels()) all.insert(l);
  NameAllocator names(all);
  Pcr out;
  out.d_min = alpha;
  out.d_max = Rational(1);
  auto m1 = graft(out.tree, t1, names, nullptr, e1);
  auto m2 = graft(out.tree, t2, names, &v_star, e2);
  auto vp = out.tree.add_vertex(names.next());
  out.tree.add_edge(m1[t1.other_end(e1, s1)], vp, t1.edge(e1).weight);
  out.tree.add_edge(m2[t2.other_end(e2, s2)], vp, t2.edge(e2).weight);
  out.tree.add_edge(vp, m1[s1], Rational(0));
  out.validate();
  return out;
}

Pcr add_false_twin(const Pcr& p, const Label& v2, const Label& v1) {
  p.validate();
  leaf_index(p.tree, v2);
  if (p.tree.vertex_count() == 1) {
    // Two isolated vertices: both hang from a centre by zero edges.
    Pcr out;
    out.tree.add_vertex(v2);
    out.tree.add_vertex(v1);
    auto c = out.tree.add_vertex(out.tree.fresh_label());
    out.tree.add_edge(0, c, Rational(0));
    out.tree.add_edge(1, c, Rational(0));
    out.d_min = Rational(1, 2);
    out.d_max = Rational(1);
    return out;
  }
  Pcr base = free_label(ensure_normalized(p), v1);
  const auto& t = base.tree;
  auto s = leaf_index(t, v2);
  auto e = t.incident(s).front();
  auto vprime = t.other_end(e, s);

  Pcr out;
  out.d_min = base.d_min;
  out.d_max = base.d_max;
  for (const auto& l : t.labels()) out.tree.add_vertex(l);
  for (std::size_t i = 0; i < t.edge_count(); ++i) {
    if (i != e) out.tree.add_edge(t.edge(i).u, t.edge(i).v, t.edge(i).weight);
  }
  auto vpp = out.tree.add_vertex(out.tree.fresh_label({v1}));
  auto nv1 = out.tree.add_vertex(v1);
  out.tree.add_edge(vprime, vpp, t.edge(e).weight);
  out.tree.add_edge(vpp, s, Rational(0));
  out.tree.add_edge(vpp, nv1, Rational(0));
  out.validate();
  return out;
}

Pcr add_true_twin(const Pcr& p, const Label& v2, const Label& v3, const Label& v1) {
  p.validate();
  leaf_index(p.tree, v2);
  leaf_index(p.tree, v3);
  if (v2 == v3) throw PreconditionError("true-twin construction needs two distinct leaves");
  auto g = induced_graph(p);
  if (g.closed_neighborhood(v2) != g.closed_neighborhood(v3)) {
    throw PreconditionError("'" + v2 + "' and '" + v3 + "' are not true twins");
  }
  Pcr base = free_label(p, v1);
  auto& t = base.tree;
  auto a = t.index(v2);
  auto b = t.index(v3);
  auto [verts, es] = t.path(a, b);
  Rational total;
  for (auto e : es) total += t.edge(e).weight;
  Rational half = total / Rational(2);

  std::size_t centre = 0;
  if (half.is_zero()) {
    // Zero-length twin path: attach beside v2's neighbor when it is inner.
    auto nb = verts[1];
    if (!t.is_leaf(nb)) {
      centre = nb;
    } else {
      auto label = t.fresh_label({v1});
      t = subdivide_at_point(t, v2, t.label(nb), Rational(0), label);
      centre = t.index(label);
    }
  } else {
    Rational cum;
    bool placed = false;
    for (std::size_t i = 0; i < es.size() && !placed; ++i) {
      Rational next = cum + t.edge(es[i]).weight;
      if (next == half) {
        centre = verts[i + 1];
        placed = true;
      } else if (half < next) {
        auto label = t.fresh_label({v1});
        t = subdivide_at_point(t, t.label(verts[i]), t.label(verts[i + 1]), half - cum, label);
        centre = t.index(label);
        placed = true;
      }
      cum = next;
    }
  }
  auto leaf = t.add_vertex(v1);
  t.add_edge(centre, leaf, half);
  base.validate();
  return base;
}

Pcr apply_compose_step(const ComposeStep& step, const std::vector<Pcr>& inputs) {
  auto need = [&](std::size_t inputs_n, std::size_t labels_n) {
    if (inputs.size() != inputs_n || step.labels.size() != labels_n) {
      throw PreconditionError("compose step has the wrong number of inputs or labels");
    }
  };
  switch (step.kind) {
    case ComposeKind::JoinComponents: return join_components(inputs);
    case ComposeKind::JoinAtCutVertex:
      need(2, 1);
      return join_at_cut_vertex(inputs[0], inputs[1], step.labels[0]);
    case ComposeKind::AddFalseTwin:
      need(1, 2);
      return add_false_twin(inputs[0], step.labels[0], step.labels[1]);
    case ComposeKind::AddTrueTwin:
      need(1, 3);
      return add_true_twin(inputs[0], step.labels[0], step.labels[1], step.labels[2]);
  }
  throw PreconditionError("unknown compose step");
}

Pcr clique_witness(const std::vector<Label>& labels) {
  if (labels.empty()) throw PreconditionError("clique needs at least one vertex");
  if (labels.size() == 1) return single_vertex_pcr(labels[0]);
  Pcr star;
  for (const auto& l : labels) star.tree.add_vertex(l);
  auto centre = star.tree.add_vertex(star.tree.fresh_label());
  for (std::size_t i = 0; i < labels.size(); ++i) star.tree.add_edge(i, centre, Rational(1, 2));
  star.d_min = Rational(1);
  star.d_max = Rational(1);
  return make_normalized(star).first;
}

Pcr kpartite_witness(const std::vector<std::vector<Label>>& parts) {
  if (parts.empty()) throw PreconditionError("k-partite graph needs at least one part");
  for (const auto& part : parts) {
    if (part.empty()) throw PreconditionError("k-partite part sizes must be positive");
  }
  if (parts.size() == 1) {
    std::vector<Pcr> singles;
    for (const auto& l : parts[0]) singles.push_back(single_vertex_pcr(l));
    return singles.size() == 1 ? singles[0] : join_components(singles);
  }
  std::vector<Label> reps;
  for (const auto& part : parts) reps.push_back(part[0]);
  Pcr p = clique_witness(reps);
  for (const auto& part : parts) {
    for (std::size_t i = 1; i < part.size(); ++i) p = add_false_twin(p, part[0], part[i]);
  }
  return p;
}

Pcr cycle_witness(const std::vector<Label>& order, const CycleCache& cache) {
  const auto& cached = cache.witness(order.size());
  std::unordered_map<Label, Label> mapping;
  for (std::size_t i = 0; i < order.size(); ++i) mapping.emplace("v" + std::to_string(i), order[i]);
  return relabel_leaves(cached, mapping);
}

Pcr cactus_witness(const Graph& g, const CycleCache& cache) {
  if (!is_cactus(g)) throw PreconditionError("input is not a cactus");
  if (g.size() == 1) return single_vertex_pcr(g.label(0));
  auto blocks = biconnected_components(g);
  auto block_witness = [&](const Graph& b) {
    return b.size() == 2 ? clique_witness(b.labels()) : cycle_witness(cycle_order(b), cache);
  };

  std::vector<bool> done(blocks.size(), false);
  std::set<Label> covered(blocks[0].graph.labels().begin(), blocks[0].graph.labels().end());
  Pcr acc = block_witness(blocks[0].graph);
  done[0] = true;
  for (std::size_t joined = 1; joined < blocks.size();) {
    bool progress = false;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (done[i]) continue;
      const auto& labels = blocks[i].graph.labels();
      auto shared = std::find_if(labels.begin(), labels.end(), [&](const Label& l) { return covered.contains(l); });
      if (shared == labels.end()) continue;
      acc = join_at_cut_vertex(acc, block_witness(blocks[i].graph), *shared);
      covered.insert(labels.begin(), labels.end());
      done[i] = true;
      ++joined;
      progress = true;
    }
    if (!progress) throw Error("internal error: block-cut tree is not connected");
  }
  return acc;
}

Generated generate(const FamilyRequest& request, const CycleCache& cache) {
  switch (request.family) {
    case Family::Clique: {
      if (request.sizes.size() != 1 || request.sizes[0] == 0) throw PreconditionError("clique needs k >= 1");
      auto labels = families::default_labels(request.sizes[0]);
      return {clique_witness(labels), families::complete(labels)};
    }
    case Family::Kpartite: {
      std::vector<std::vector<Label>> parts;
      std::size_t next = 0;
      for (auto s : request.sizes) {
        if (s == 0) throw PreconditionError("k-partite part sizes must be positive");
        std::vector<Label> part;
        for (std::size_t i = 0; i < s; ++i) part.push_back("v" + std::to_string(next++));
        parts.push_back(std::move(part));
      }
      return {kpartite_witness(parts), families::complete_multipartite(parts)};
    }
    case Family::Cycle: {
      if (request.sizes.size() != 1) throw PreconditionError("cycle needs a length");
      auto labels = families::default_labels(request.sizes[0]);
      if (!cache.contains(labels.size())) {
        throw PreconditionError("cycle length " + std::to_string(labels.size()) + " is outside the cache");
      }
      return {cycle_witness(labels, cache), families::cycle(labels)};
    }
    case Family::Cactus: return {cactus_witness(request.cactus, cache), request.cactus};
  }
  throw PreconditionError("unknown family");
}

}  // namespace pcg
