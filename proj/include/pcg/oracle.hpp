#pragma once

#include "pcg/graph.hpp"
#include "pcg/pcr.hpp"
#include "pcg/topology.hpp"

#include <chrono>
#include <cstdint>
#include <optional>

namespace pcg {

/// Decides whether `g` has a witness on topology `t` (leaf i = vertex i of
/// g). Edge pairs must lie in [d_min, d_max]; every non-edge pair is
/// branched to d <= d_min - 1 or d >= d_max + 1, which loses nothing because
/// the constraint system is positively homogeneous. Returned witnesses pass
/// verify(., g).
std::optional<Pcr> solve_topology(const Topology& t, const Graph& g);

struct SearchBudget {
  /// Graphs with more vertices are not attempted.
  std::size_t max_n = 6;
  /// Only the first `max_topologies` topologies are tried.
  std::optional<std::uint64_t> max_topologies;
  std::optional<std::chrono::milliseconds> time_limit;
  /// Worker threads; results do not depend on this.
  unsigned jobs = 1;
};

enum class SearchStatus { Pcg, NonPcg, BudgetExceeded };

struct SearchResult {
  SearchStatus status = SearchStatus::BudgetExceeded;
  std::optional<Pcr> witness;
  /// Topologies fully examined.
  std::uint64_t topologies_explored = 0;
  /// Index (in enumeration order) of the topology carrying the witness.
  std::optional<std::uint64_t> topology_index;
};

/// Tries topologies in enumeration order; the lowest-index success wins, so
/// serial and parallel runs return the same witness. NonPcg is only
/// reported after every topology was exhausted.
SearchResult exact_search(const Graph& g, const SearchBudget& budget = {});

std::string to_string(SearchStatus s);

}  // namespace pcg
