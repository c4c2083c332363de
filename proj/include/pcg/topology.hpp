#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace pcg {

/// Unrooted tree whose leaves are 0..n-1 and whose inner vertices
/// n..2n-3 all have degree 3 (n >= 3). For n = 2 it is a single edge and
/// for n = 1 a lone vertex.
struct Topology {
  std::size_t leaf_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  [[nodiscard]] std::size_t vertex_count() const { return leaf_count <= 2 ? leaf_count : 2 * leaf_count - 2; }

  /// Sorted list of non-trivial splits; equal for equal unrooted topologies.
  [[nodiscard]] std::string canonical_code() const;
};

/// (2n-5)!! for n >= 3, 1 for n <= 2.
std::uint64_t topology_count(std::size_t n);

/// Streams every binary topology on n leaves exactly once, built by
/// inserting leaf k into each of the 2k-5 edges of every topology on k-1
/// leaves. `visit` returns false to stop early; returns false if stopped.
bool for_each_topology(std::size_t n, const std::function<bool(const Topology&)>& visit);

std::vector<Topology> enumerate_topologies(std::size_t n);

}  // namespace pcg
