#include "pcg/normalize.hpp"

#include "pcg/error.hpp"

namespace pcg {

namespace {

Pcr shrink_zero_edges(Pcr p) {
  for (;;) {
    const auto& t = p.tree;
    std::optional<std::size_t> target;
    for (std::size_t e = 0; e < t.edge_count(); ++e) {
      if (t.edge(e).weight.is_zero() && !t.is_leaf_edge(e)) {
        target = e;
        break;
      }
    }
    if (!target) return p;
    p.tree = t.contracted(*target);
  }
}

bool has_zero_inner_edge(const Pcr& p) {
  for (std::size_t e = 0; e < p.tree.edge_count(); ++e) {
    if (p.tree.edge(e).weight.is_zero() && !p.tree.is_leaf_edge(e)) return true;
  }
  return false;
}

Pcr subdivide_two_vertex(const Pcr& p, const Label& label) {
  const auto& e = p.tree.edge(0);
  Rational half = e.weight / Rational(2);
  Pcr out = p;
  out.tree = subdivide_at_point(p.tree, p.tree.label(e.u), p.tree.label(e.v), half, label);
  return out;
}

Pcr add_to_leaf_edges(Pcr p, const Rational& per_edge, const Rational& per_bound) {
  for (std::size_t e = 0; e < p.tree.edge_count(); ++e) {
    if (p.tree.is_leaf_edge(e)) p.tree.set_weight(e, p.tree.edge(e).weight + per_edge);
  }
  p.d_min += per_bound;
  p.d_max += per_bound;
  return p;
}

Pcr scale(Pcr p, const Rational& factor) {
  for (std::size_t e = 0; e < p.tree.edge_count(); ++e) p.tree.set_weight(e, p.tree.edge(e).weight * factor);
  p.d_min *= factor;
  p.d_max *= factor;
  return p;
}

Pcr apply_step(const Pcr& p, const NormalizationStep& step) {
  switch (step.kind) {
    case NormalizationStepKind::ShrinkZeroEdges: return shrink_zero_edges(p);
    case NormalizationStepKind::SubdivideTwoVertex: return subdivide_two_vertex(p, step.label);
    case NormalizationStepKind::RaiseLeafWeights: return add_to_leaf_edges(p, step.value, step.value * Rational(2));
    case NormalizationStepKind::WidenDmax: {
      Pcr out = p;
      out.d_max += step.value;
      return out;
    }
    case NormalizationStepKind::AddDelta: return add_to_leaf_edges(p, step.value / Rational(2), step.value);
    case NormalizationStepKind::Scale: return scale(p, step.value);
  }
  throw PreconditionError("unknown normalization step");
}

// Half of the smallest positive excess over d_max among leaf pairs, or
// d_max / 2 when no pair lies above d_max.
Rational widening_epsilon(const Pcr& p) {
  const auto& t = p.tree;
  auto leaves = t.leaves();
  std::optional<Rational> gap;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    auto dist = t.distances_from(leaves[i]);
    for (std::size_t j = i + 1; j < leaves.size(); ++j) {
      const auto& d = dist[leaves[j]];
      if (p.d_max < d && (!gap || d - p.d_max < *gap)) gap = d - p.d_max;
    }
  }
  return (gap ? *gap : p.d_max) / Rational(2);
}

}  // namespace

std::string to_string(NormalizationStepKind kind) {
  switch (kind) {
    case NormalizationStepKind::ShrinkZeroEdges: return "shrink-zero-edges";
    case NormalizationStepKind::SubdivideTwoVertex: return "subdivide-two-vertex";
    case NormalizationStepKind::RaiseLeafWeights: return "raise-leaf-weights";
    case NormalizationStepKind::WidenDmax: return "widen-dmax";
    case NormalizationStepKind::AddDelta: return "add-delta";
    case NormalizationStepKind::Scale: return "scale";
  }
  return "?";
}

Json report_to_json(const NormalizationReport& report) {
  Json steps = Json::array();
  for (const auto& s : report.steps) {
    Json j;
    j["step"] = to_string(s.kind);
    j["value"] = s.value.str();
    if (!s.label.empty()) j["label"] = s.label;
    steps.push_back(j);
  }
  return Json{{"steps", steps}};
}

std::pair<Pcr, NormalizationReport> make_nonsingular(const Pcr& p) {
  p.validate();
  if (p.tree.leaves().size() < 2) throw PreconditionError("normalization needs at least two leaves");
  NormalizationReport report;
  Pcr cur = p;
  auto run = [&](NormalizationStep step) {
    cur = apply_step(cur, step);
    report.steps.push_back(std::move(step));
  };

  if (has_zero_inner_edge(cur)) run({NormalizationStepKind::ShrinkZeroEdges, Rational(0), {}});
  if (cur.tree.vertex_count() == 2) run({NormalizationStepKind::SubdivideTwoVertex, Rational(0), cur.tree.fresh_label()});

  bool zero_leaf_edge = false;
  for (std::size_t e = 0; e < cur.tree.edge_count(); ++e) {
    zero_leaf_edge = zero_leaf_edge || (cur.tree.is_leaf_edge(e) && cur.tree.edge(e).weight.is_zero());
  }
  if (zero_leaf_edge || cur.d_min.is_zero()) run({NormalizationStepKind::RaiseLeafWeights, Rational(1), {}});
  if (cur.d_min == cur.d_max) run({NormalizationStepKind::WidenDmax, widening_epsilon(cur), {}});
  return {std::move(cur), std::move(report)};
}

Rational critical_alpha(const Pcr& p) {
  if (!is_nonsingular(p)) throw PreconditionError("critical alpha needs a non-singular representation");
  return (p.d_min + p.d_max) / (p.d_max + p.d_max);
}

std::pair<Pcr, NormalizationReport> make_normalized(const Pcr& p, const std::optional<Rational>& alpha) {
  auto [cur, report] = make_nonsingular(p);
  Rational c = critical_alpha(cur);
  Rational a = alpha ? *alpha : (c + Rational(1)) / Rational(2);
  if (!(c < a && a < Rational(1))) {
    throw PreconditionError("alpha " + a.str() + " outside (" + c.str() + ", 1)");
  }
  Rational delta = (a * cur.d_max - cur.d_min) / (Rational(1) - a);
  NormalizationStep add{NormalizationStepKind::AddDelta, delta, {}};
  cur = apply_step(cur, add);
  report.steps.push_back(add);
  NormalizationStep shrink{NormalizationStepKind::Scale, Rational(1) / cur.d_max, {}};
  cur = apply_step(cur, shrink);
  report.steps.push_back(shrink);
  return {std::move(cur), std::move(report)};
}

Pcr replay_normalization(const Pcr& p, const NormalizationReport& report) {
  Pcr cur = p;
  for (const auto& s : report.steps) cur = apply_step(cur, s);
  return cur;
}

Pcr ensure_normalized(const Pcr& p) { return is_normalized(p) ? p : make_normalized(p).first; }

}  // namespace pcg
