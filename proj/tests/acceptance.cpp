// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
//
// Environment:
//   PCG_ACCEPTANCE_N6=1      also run criteria 1 and 2 on the 156 graphs with 6 vertices
//   PCG_NONPCG_SEED=<file>   seed graph for criterion 6 (graph6 or edge list)

#include "pcg/compose.hpp"
#include "pcg/error.hpp"
#include "pcg/graph_algorithms.hpp"
#include "pcg/graph_io.hpp"
#include "pcg/normalize.hpp"
#include "pcg/oracle.hpp"
#include "pcg/reduce.hpp"
#include "test_support.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace pcg;
using testing::Rng;
using testing::uniform;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::size_t failures = 0;

  void fail(const std::string& why) {
    if (failures++ < 3) detail += (detail.empty() ? "" : "; ") + why;
    pass = false;
  }
  void expect(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

bool safe_verify(const Pcr& p, const Graph& g) {
  try {
    return verify(p, g);
  } catch (const Error&) {
    return false;
  }
}

std::string str(const Graph& g) { return write_edge_list(g); }

std::vector<Graph> small_graphs(Outcome& o) {
  const std::size_t expected[] = {1, 1, 2, 4, 11, 34, 156};  // indexed by n
  std::size_t top = std::getenv("PCG_ACCEPTANCE_N6") ? 6 : 5;
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= top; ++n) {
    auto classes = testing::graphs_up_to_isomorphism(n);
    o.expect(classes.size() == expected[n], "n=" + std::to_string(n) + " gave " + std::to_string(classes.size()) +
                                                 " classes");
    out.insert(out.end(), classes.begin(), classes.end());
  }
  return out;
}

Outcome exhaustive_small() {
  Outcome o;
  auto graphs = small_graphs(o);
  std::size_t n5 = 0;
  for (const auto& g : graphs) {
    auto r = exact_search(g);
    if (r.status != SearchStatus::Pcg) {
      o.fail("no witness for\n" + str(g));
      continue;
    }
    o.expect(safe_verify(*r.witness, g), "witness does not verify");
    n5 += g.size() == 5;
  }
  o.detail = std::to_string(graphs.size()) + " graphs, " + std::to_string(n5) + " on 5 vertices" +
             (o.detail.empty() ? "" : ": " + o.detail);
  return o;
}

Outcome reduction_agrees() {
  Outcome o;
  auto graphs = small_graphs(o);
  for (const auto& g : graphs) {
    auto direct = exact_search(g);
    auto v = recognize(g);
    bool same = (direct.status == SearchStatus::Pcg && v.kind == VerdictKind::Pcg) ||
                (direct.status == SearchStatus::NonPcg && v.kind == VerdictKind::NonPcg);
    if (!same) {
      o.fail("verdicts differ on\n" + str(g));
      continue;
    }
    if (v.witness) o.expect(safe_verify(*v.witness, g), "recognize witness does not verify");
    if (direct.witness) o.expect(safe_verify(*direct.witness, g), "oracle witness does not verify");
  }
  o.detail = std::to_string(graphs.size()) + " graphs" + (o.detail.empty() ? "" : ": " + o.detail);
  return o;
}

Outcome construction_properties() {
  Outcome o;
  Rng rng(1001);
  constexpr int kTrials = 1000;

  for (int t = 0; t < kTrials; ++t) {
    auto p = testing::random_pcr(rng, testing::labels("l", uniform(rng, 1, 9)));
    auto leaves = p.tree.leaf_labels();
    std::vector<Label> x;
    for (const auto& l : leaves) {
      if (testing::coin(rng)) x.push_back(l);
    }
    if (x.empty()) x.push_back(leaves[uniform(rng, 0, leaves.size() - 1)]);
    o.expect(induced_graph(restrict(p, x)) == induced_graph(p).induced(x), "restriction does not commute");
  }

  for (int t = 0; t < kTrials; ++t) {
    auto p = testing::random_pcr(rng, testing::labels("l", uniform(rng, 2, 9)), 0.3);
    auto g = induced_graph(p);
    auto [ns, r1] = make_nonsingular(p);
    o.expect(is_nonsingular(ns) && induced_graph(ns) == g, "make_nonsingular failed");
    auto c = critical_alpha(ns);
    std::int64_t steps = 16;
    Rational alpha = c + (Rational(1) - c) * Rational(static_cast<std::int64_t>(uniform(rng, 1, steps - 1)), steps);
    auto [nm, r2] = make_normalized(p, alpha);
    bool leaves_ok = true;
    for (std::size_t e = 0; e < nm.tree.edge_count(); ++e) {
      if (nm.tree.is_leaf_edge(e) && !(nm.tree.edge(e).weight > Rational(1, 4))) leaves_ok = false;
    }
    o.expect(is_normalized(nm) && induced_graph(nm) == g && nm.d_min == alpha && c < alpha && alpha < Rational(1) &&
                 leaves_ok,
             "make_normalized failed");
    auto [auto_nm, r3] = make_normalized(p);
    o.expect(is_normalized(auto_nm) && induced_graph(auto_nm) == g && auto_nm.d_min > c, "auto alpha failed");
  }

  for (int t = 0; t < kTrials; ++t) {
    auto a = testing::labels("a", uniform(rng, 0, 5));
    auto b = testing::labels("b", uniform(rng, 0, 5));
    a.push_back("s");
    b.push_back("s");
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    auto p1 = testing::random_pcr(rng, a);
    auto p2 = testing::random_pcr(rng, b);
    auto j = join_at_cut_vertex(p1, p2, "s");
    o.expect(induced_graph(j) == graph_union(induced_graph(p1), induced_graph(p2)), "cut-vertex join graph wrong");
  }

  for (int t = 0; t < kTrials; ++t) {
    auto p = testing::random_pcr(rng, testing::labels("l", uniform(rng, 1, 9)));
    auto before = induced_graph(p);
    auto v2 = p.tree.leaf_labels()[uniform(rng, 0, p.tree.leaf_labels().size() - 1)];
    auto q = add_false_twin(p, v2, "new");
    auto g = induced_graph(q);
    o.expect(g.open_neighborhood("new") == g.open_neighborhood(v2) && !g.adjacent("new", v2) &&
                 g.without("new") == before,
             "false twin wrong");
  }

  int done = 0;
  for (int attempts = 0; done < kTrials && attempts < 200 * kTrials; ++attempts) {
    auto p = testing::random_pcr(rng, testing::labels("l", uniform(rng, 2, 9)));
    auto before = induced_graph(p);
    std::vector<LabelPair> pairs;
    for (const auto& [u, v] : before.label_edges()) {
      if (before.closed_neighborhood(u) == before.closed_neighborhood(v)) pairs.emplace_back(u, v);
    }
    if (pairs.empty()) continue;
    ++done;
    auto [v2, v3] = pairs[uniform(rng, 0, pairs.size() - 1)];
    auto q = add_true_twin(p, v2, v3, "new");
    auto g = induced_graph(q);
    o.expect(g.closed_neighborhood("new") == g.closed_neighborhood(v2) &&
                 g.closed_neighborhood("new") == g.closed_neighborhood(v3) && g.without("new") == before,
             "true twin wrong");
  }
  o.expect(done == kTrials, "only " + std::to_string(done) + " true-twin trials");
  o.detail = "5 properties x " + std::to_string(kTrials) + " trials" + (o.detail.empty() ? "" : ": " + o.detail);
  return o;
}

void partitions(std::size_t n, std::size_t max_part, std::vector<std::size_t>& cur,
                const std::function<void(const std::vector<std::size_t>&)>& visit) {
  if (n == 0) {
    visit(cur);
    return;
  }
  for (std::size_t p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions(n - p, p, cur, visit);
    cur.pop_back();
  }
}

Outcome family_witnesses() {
  Outcome o;
  Rng rng(2002);
  for (int t = 0; t < 100; ++t) {
    auto g = testing::random_cactus(rng, 25, 7);
    auto r = generate({Family::Cactus, {}, g});
    o.expect(r.graph == g && safe_verify(r.witness, g), "cactus witness fails:\n" + str(g));
  }
  std::size_t count = 0;
  auto check = [&](const std::vector<std::size_t>& sizes) {
    auto r = generate({Family::Kpartite, sizes, {}});
    o.expect(safe_verify(r.witness, families::complete_multipartite(sizes)), "kpartite witness fails");
    ++count;
  };
  for (std::size_t n = 1; n <= 12; ++n) {
    std::vector<std::size_t> cur;
    partitions(n, n, cur, check);
  }
  check({1, 2, 2});
  check({2, 2, 2});
  o.detail = "100 cacti, " + std::to_string(count) + " complete multipartite graphs" +
             (o.detail.empty() ? "" : ": " + o.detail);
  return o;
}

// Random graph on `labels` with at most 5 vertices, connected.
Graph random_kernel(Rng& rng, const std::vector<Label>& labels) {
  for (;;) {
    auto g = testing::random_graph(rng, labels, 0.6);
    if (is_connected(g)) return g;
  }
}

Outcome round_trip() {
  Outcome o;
  Rng rng(3003);
  std::size_t ops_total = 0;
  for (int t = 0; t < 200; ++t) {
    std::size_t counter = 0;
    auto fresh = [&counter] {
      std::ostringstream s;
      s << 'x' << counter++;
      return s.str();
    };
    auto make_kernel = [&] {
      std::vector<Label> ls;
      for (std::size_t i = 0, n = uniform(rng, 1, 5); i < n; ++i) ls.push_back(fresh());
      return random_kernel(rng, ls);
    };
    Graph g = make_kernel();
    for (std::size_t k = 0, ops = uniform(rng, 1, 8); k < ops; ++k, ++ops_total) {
      auto pick = [&] { return g.label(uniform(rng, 0, g.size() - 1)); };
      switch (uniform(rng, 0, 3)) {
        case 0:
          g = graph_union(g, make_kernel());
          break;
        case 1: {
          auto h = make_kernel();
          auto v = pick();
          std::map<Label, Label> rename{{h.label(0), v}};
          g = graph_union(g, h.relabeled(rename));
          break;
        }
        case 2: {
          auto v = pick();
          g = g.with_vertex(fresh(), g.open_neighborhood(v));
          break;
        }
        default: {
          std::vector<LabelPair> pairs;
          for (const auto& [a, b] : g.label_edges()) {
            if (g.closed_neighborhood(a) == g.closed_neighborhood(b)) pairs.emplace_back(a, b);
          }
          auto v = pairs.empty() ? pick() : pairs[uniform(rng, 0, pairs.size() - 1)].first;
          auto nb = pairs.empty() ? g.open_neighborhood(v) : g.closed_neighborhood(v);
          g = g.with_vertex(fresh(), nb);
          break;
        }
      }
    }
    auto trace = reduce_graph(g);
    o.expect(reconstruct_graph(trace) == g, "trace does not rebuild the graph");
    std::map<std::size_t, Pcr> ws;
    bool all = true;
    for (const auto& [id, k] : trace.kernels) {
      auto w = structured_witness(k, CycleCache::shared());
      if (!w) {
        SearchBudget b;
        b.max_n = 7;
        auto r = exact_search(k, b);
        if (r.witness) w = r.witness;
      }
      if (!w) {
        all = false;
        o.fail("no kernel witness for\n" + str(k));
        break;
      }
      ws.emplace(id, *w);
    }
    if (!all) continue;
    try {
      auto full = replay_witness(ws, trace);
      o.expect(safe_verify(full, g), "replayed witness does not verify");
    } catch (const std::exception& e) {
      o.fail(std::string("replay threw: ") + e.what());
    }
  }
  o.detail = "200 graphs, " + std::to_string(ops_total) + " compose operations" +
             (o.detail.empty() ? "" : ": " + o.detail);
  return o;
}

Outcome grow_recovers_seed() {
  Outcome o;
  Graph seed = families::petersen();
  std::string origin = "synthetic placeholder seed (Petersen graph); trace test only";
  if (const char* path = std::getenv("PCG_NONPCG_SEED"); path && *path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    seed = parse_graph(ss.str(), sniff_format(path, ss.str()));
    origin = std::string("seed from ") + path;
  }
  auto has_seed = [&seed](const Graph& g) {
    for (const auto& k : kernels_of(reduce_graph(g))) {
      if (k == seed) return true;
    }
    return false;
  };
  if (!has_seed(seed)) {
    o.fail("seed is not irreducible");
    o.detail = origin + ": " + o.detail;
    return o;
  }
  Rng rng(4004);
  std::size_t directives = 0;
  for (int t = 0; t < 100; ++t) {
    Graph g = seed;
    std::size_t counter = 0;
    auto fresh = [&counter] { return "~" + std::to_string(counter++); };
    std::vector<GrowDirective> ds;
    for (std::size_t k = 0, n = uniform(rng, 1, 6); k < n; ++k) {
      Label v = g.label(uniform(rng, 0, g.size() - 1));
      std::vector<LabelPair> twin_pairs;
      for (const auto& [a, b] : g.label_edges()) {
        if (g.closed_neighborhood(a) == g.closed_neighborhood(b)) twin_pairs.emplace_back(a, b);
      }
      auto choice = uniform(rng, 0, 2);
      GrowDirective d{GrowKind::FalseTwin, v, "", "", {}};
      if (choice == 1 && !twin_pairs.empty()) {
        auto [a, b] = twin_pairs[uniform(rng, 0, twin_pairs.size() - 1)];
        d = {GrowKind::TrueTwin, a, b, fresh(), {}};
      } else if (choice == 0) {
        d.new_label = fresh();
      } else {
        std::vector<Label> ls{v};
        for (std::size_t i = 0, m = uniform(rng, 1, 5); i < m; ++i) ls.push_back(fresh());
        d = {GrowKind::Attach, v, "", "", random_kernel(rng, ls)};
      }
      g = grow_non_pcg(g, {d});
      ds.push_back(d);
    }
    directives += ds.size();
    o.expect(grow_non_pcg(seed, ds) == g, "directive replay differs");
    o.expect(has_seed(g), "seed not among kernels after\n" + directives_to_json(ds).dump());
  }
  o.detail = origin + ", 100 sequences, " + std::to_string(directives) + " directives" +
             (o.detail.empty() ? "" : ": " + o.detail);
  return o;
}

Outcome binarization() {
  Outcome o;
  Rng rng(5005);
  int done = 0;
  for (int attempts = 0; done < 100 && attempts < 10000; ++attempts) {
    Generated gen{};
    switch (uniform(rng, 0, 2)) {
      case 0: {
        std::vector<std::size_t> sizes;
        for (std::size_t i = 0, k = uniform(rng, 1, 5); i < k; ++i) sizes.push_back(uniform(rng, 1, 3));
        gen = generate({Family::Kpartite, sizes, {}});
        break;
      }
      case 1:
        gen = generate({Family::Clique, {uniform(rng, 4, 9)}, {}});
        break;
      default:
        gen = generate({Family::Cactus, {}, testing::random_cactus(rng, 20, 7)});
        break;
    }
    std::size_t max_degree = 0;
    for (std::size_t v = 0; v < gen.witness.tree.vertex_count(); ++v) {
      max_degree = std::max(max_degree, gen.witness.tree.degree(v));
    }
    if (max_degree <= 3) continue;
    ++done;
    Pcr b = gen.witness;
    b.tree = binarize(gen.witness.tree);
    bool binary = true;
    for (std::size_t v = 0; v < b.tree.vertex_count(); ++v) {
      if (b.tree.degree(v) != 1 && b.tree.degree(v) != 3) binary = false;
    }
    o.expect(binary, "binarized tree has a vertex of degree other than 1 or 3");
    o.expect(safe_verify(b, gen.graph), "binarized witness does not verify");
  }
  o.expect(done == 100, "only " + std::to_string(done) + " multifurcating witnesses");
  o.detail = std::to_string(done) + " multifurcating witnesses" + (o.detail.empty() ? "" : ": " + o.detail);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"1 exhaustive small-n: every graph has a verified oracle witness", exhaustive_small},
      {"2 recognize agrees with exact_search", reduction_agrees},
      {"3 construction properties (restrict, normalize, joins, twins)", construction_properties},
      {"4 family witnesses (cacti, complete multipartite)", family_witnesses},
      {"5 round-trip kernelization", round_trip},
      {"6 growth from a seed recovers the seed", grow_recovers_seed},
      {"7 binarized witnesses still verify", binarization},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.pass ? "PASS " : "FAIL ") << c.name << " [" << o.detail << "] (" << ms << " ms)" << std::endl;
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
