#include "pcg/oracle.hpp"

#include "pcg/error.hpp"
#include "pcg/linear_feasibility.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

namespace pcg {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
  std::optional<Clock::time_point> at;
  [[nodiscard]] bool passed() const { return at && Clock::now() >= *at; }
};

struct TimedOut {};

class TopologySolver {
 public:
  TopologySolver(const Topology& t, const Graph& g, const Deadline& deadline)
      : t_(t), g_(g), deadline_(deadline), m_(t.edges.size()), dmin_(m_), dmax_(m_ + 1) {
    build_paths();
    base_.push_back(row({{dmin_, 1}, {dmax_, -1}}, 0));
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
      auto [u, v] = pairs_[p];
      if (g_.adjacent(u, v)) {
        base_.push_back(path_row(p, -1, {{dmin_, 1}}, 0));
        base_.push_back(path_row(p, 1, {{dmax_, -1}}, 0));
      } else {
        non_edges_.push_back(p);
      }
    }
  }

  std::optional<Pcr> solve() {
    std::vector<Decision> decided;
    return search(decided);
  }

 private:
  struct Decision {
    std::size_t pair;
    bool above;
  };

  LinearConstraint row(std::vector<std::pair<std::size_t, int>> terms, int bound) const {
    LinearConstraint c{std::vector<Rational>(m_ + 2), Rational(bound)};
    for (auto [var, coef] : terms) c.coeffs[var] += Rational(coef);
    return c;
  }

  LinearConstraint path_row(std::size_t pair, int sign, std::vector<std::pair<std::size_t, int>> extra,
                            int bound) const {
    for (auto e : paths_[pair]) extra.emplace_back(e, sign);
    return row(std::move(extra), bound);
  }

  LinearConstraint decision_row(const Decision& d) const {
    // below: dist - d_min <= -1; above: d_max - dist <= -1
    return d.above ? path_row(d.pair, -1, {{dmax_, 1}}, -1) : path_row(d.pair, 1, {{dmin_, -1}}, -1);
  }

  void build_paths() {
    const std::size_t nv = t_.vertex_count();
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(nv);
    for (std::size_t e = 0; e < t_.edges.size(); ++e) {
      adj[t_.edges[e].first].emplace_back(t_.edges[e].second, e);
      adj[t_.edges[e].second].emplace_back(t_.edges[e].first, e);
    }
    const std::size_t n = t_.leaf_count;
    for (std::size_t u = 0; u < n; ++u) {
      std::vector<std::size_t> parent(nv, nv), via(nv, 0);
      std::vector<std::size_t> stack{u};
      parent[u] = u;
      while (!stack.empty()) {
        auto x = stack.back();
        stack.pop_back();
        for (auto [y, e] : adj[x]) {
          if (parent[y] != nv) continue;
          parent[y] = x;
          via[y] = e;
          stack.push_back(y);
        }
      }
      for (std::size_t v = u + 1; v < n; ++v) {
        std::vector<std::size_t> es;
        for (auto x = v; x != u; x = parent[x]) es.push_back(via[x]);
        std::sort(es.begin(), es.end());
        pairs_.emplace_back(u, v);
        paths_.push_back(std::move(es));
      }
    }
  }

  Rational path_length(const std::vector<Rational>& x, std::size_t pair) const {
    Rational d;
    for (auto e : paths_[pair]) d += x[e];
    return d;
  }

  std::size_t shared_edges(std::size_t a, std::size_t b) const {
    std::size_t count = 0;
    auto i = paths_[a].begin();
    auto j = paths_[b].begin();
    while (i != paths_[a].end() && j != paths_[b].end()) {
      if (*i < *j) {
        ++i;
      } else if (*j < *i) {
        ++j;
      } else {
        ++count;
        ++i;
        ++j;
      }
    }
    return count;
  }

  std::optional<Pcr> search(std::vector<Decision>& decided) {
    if (deadline_.passed()) throw TimedOut{};
    auto rows = base_;
    for (const auto& d : decided) rows.push_back(decision_row(d));
    auto x = find_feasible_point(m_ + 2, rows);
    if (!x) return std::nullopt;

    const Rational one(1);
    const Rational low = (*x)[dmin_] - one;
    const Rational high = (*x)[dmax_] + one;
    // Only non-edges the current point leaves inside (d_min - 1, d_max + 1)
    // need branching; pick the one sharing most path edges with earlier
    // decisions.
    std::optional<std::size_t> pick;
    std::size_t pick_score = 0;
    Rational pick_dist;
    for (auto p : non_edges_) {
      Rational dist = path_length(*x, p);
      if (dist <= low || high <= dist) continue;
      std::size_t score = 0;
      for (const auto& d : decided) score += shared_edges(p, d.pair);
      if (!pick || score > pick_score) {
        pick = p;
        pick_score = score;
        pick_dist = dist;
      }
    }
    if (!pick) return package(*x);

    bool above_first = (*x)[dmax_] - pick_dist <= pick_dist - (*x)[dmin_];
    for (bool above : {above_first, !above_first}) {
      decided.push_back({*pick, above});
      auto found = search(decided);
      decided.pop_back();
      if (found) return found;
    }
    return std::nullopt;
  }

  Pcr package(const std::vector<Rational>& x) const {
    Pcr p;
    const std::size_t n = t_.leaf_count;
    for (std::size_t v = 0; v < n; ++v) p.tree.add_vertex(g_.label(v));
    for (std::size_t v = n; v < t_.vertex_count(); ++v) p.tree.add_vertex(p.tree.fresh_label(g_.labels()));
    for (std::size_t e = 0; e < m_; ++e) p.tree.add_edge(t_.edges[e].first, t_.edges[e].second, x[e]);
    p.d_min = x[dmin_];
    p.d_max = x[dmax_];
    p.validate();
    return p;
  }

  const Topology& t_;
  const Graph& g_;
  const Deadline& deadline_;
  std::size_t m_;
  std::size_t dmin_;
  std::size_t dmax_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::vector<std::vector<std::size_t>> paths_;
  std::vector<std::size_t> non_edges_;
  std::vector<LinearConstraint> base_;
};

std::optional<Pcr> solve_with_deadline(const Topology& t, const Graph& g, const Deadline& deadline) {
  if (t.leaf_count != g.size()) throw PreconditionError("topology leaf count differs from graph order");
  if (g.size() == 1) return single_vertex_pcr(g.label(0));
  auto found = TopologySolver(t, g, deadline).solve();
  if (found && !verify(*found, g)) throw Error("internal error: oracle produced a witness that fails verification");
  return found;
}

}  // namespace

std::optional<Pcr> solve_topology(const Topology& t, const Graph& g) { return solve_with_deadline(t, g, Deadline{}); }

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Pcg: return "Pcg";
    case SearchStatus::NonPcg: return "NonPcg";
    case SearchStatus::BudgetExceeded: return "BudgetExceeded";
  }
  return "?";
}

SearchResult exact_search(const Graph& g, const SearchBudget& budget) {
  if (g.empty()) throw PreconditionError("exact search needs at least one vertex");
  SearchResult result;
  if (g.size() > budget.max_n) return result;
  if (g.size() == 1) {
    result.status = SearchStatus::Pcg;
    result.witness = single_vertex_pcr(g.label(0));
    result.topologies_explored = 1;
    result.topology_index = 0;
    return result;
  }

  Deadline deadline;
  if (budget.time_limit) deadline.at = Clock::now() + *budget.time_limit;
  const std::uint64_t total = topology_count(g.size());
  const std::uint64_t limit = budget.max_topologies ? std::min(total, *budget.max_topologies) : total;
  auto topologies = enumerate_topologies(g.size());

  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best{limit};
  std::atomic<std::uint64_t> explored{0};
  std::atomic<bool> timed_out{false};
  std::mutex mu;
  std::optional<Pcr> best_witness;

  auto worker = [&]() {
    for (;;) {
      std::uint64_t i = next.fetch_add(1);
      if (i >= limit || i > best.load() || timed_out.load()) return;
      try {
        auto found = solve_with_deadline(topologies[i], g, deadline);
        explored.fetch_add(1);
        if (found) {
          std::lock_guard lock(mu);
          if (i < best.load()) {
            best.store(i);
            best_witness = std::move(found);
          }
        }
      } catch (const TimedOut&) {
        timed_out.store(true);
        return;
      }
    }
  };

  unsigned jobs = std::max(1u, budget.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < jobs; ++k) pool.emplace_back(worker);
  }

  result.topologies_explored = explored.load();
  if (best_witness) {
    result.status = SearchStatus::Pcg;
    result.witness = std::move(best_witness);
    result.topology_index = best.load();
  } else if (!timed_out.load() && limit == total) {
    result.status = SearchStatus::NonPcg;
  }
  return result;
}

}  // namespace pcg
