#pragma once

#include "pcg/json_io.hpp"
#include "pcg/pcr.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pcg {

enum class NormalizationStepKind {
  ShrinkZeroEdges,     // contract zero-weight edges between inner vertices
  SubdivideTwoVertex,  // split the only edge of a two-vertex tree in halves
  RaiseLeafWeights,    // leaf edges += value, both bounds += 2 * value
  WidenDmax,           // d_max += value
  AddDelta,            // leaf edges += value / 2, both bounds += value
  Scale,               // every weight and both bounds *= value
};

struct NormalizationStep {
  NormalizationStepKind kind;
  Rational value;
  Label label;  // new vertex of SubdivideTwoVertex

  friend bool operator==(const NormalizationStep&, const NormalizationStep&) = default;
};

struct NormalizationReport {
  std::vector<NormalizationStep> steps;
};

std::string to_string(NormalizationStepKind kind);
Json report_to_json(const NormalizationReport& report);

/// Rewrites `p` into a non-singular representation of the same graph.
/// Needs at least two leaves.
std::pair<Pcr, NormalizationReport> make_nonsingular(const Pcr& p);

/// (d_min + d_max) / (2 d_max) of a non-singular representation.
Rational critical_alpha(const Pcr& p);

/// Normalized representation with bounds (alpha, 1). Without `alpha` the
/// midpoint of (c, 1) is used, c being critical_alpha after make_nonsingular.
std::pair<Pcr, NormalizationReport> make_normalized(const Pcr& p, const std::optional<Rational>& alpha = {});

/// Re-applies a report's steps to the original input.
Pcr replay_normalization(const Pcr& p, const NormalizationReport& report);

/// Auto-normalizes `p` unless it already is normalized.
Pcr ensure_normalized(const Pcr& p);

}  // namespace pcg
