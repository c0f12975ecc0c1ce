// Copyright 2026 The wep Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "wep/wep.hpp"

namespace {

using namespace wep;
using Clock = std::chrono::steady_clock;

// Tolerances and limits.
constexpr double kSpiderNuTol = 1e-3;
constexpr double kMeetExampleNuTol = 1e-9;
constexpr double kSweepTol = 1e-8;
constexpr double kSpiderSeconds = 1e-3;
constexpr double kMeetExampleSeconds = 10e-3;
constexpr int kSweepMaxN = 7;
constexpr int kDoublyStochasticCount = 100;
constexpr int kClosureMaxN = 6;
constexpr int kCographMaxN = 10;
constexpr double kDoublingRatio = 5.0;
constexpr double kLargestTreeSeconds = 1.0;
constexpr double kExperimentSeconds = 60.0;
constexpr int kExperimentModeMax = 8;
constexpr int kRoundTrips = 1000;
constexpr int kCographRoundTripMaxN = 50;

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, const std::function<Outcome()>& fn) {
  Outcome o;
  try {
    o = fn();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.pass) ++failures;
  std::printf("%s %2d  %s: %s\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), o.detail.c_str());
  std::fflush(stdout);
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Best of several timed runs.
template <typename Fn>
double best_time(int reps, Fn&& fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = Clock::now();
    fn();
    best = std::min(best, seconds_since(t0));
  }
  return best;
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

Graph graph1(int n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<Edge> e;
  for (auto [u, v] : edges) e.push_back({u - 1, v - 1});
  return Graph(n, e);
}

Partition cells1(int n, std::initializer_list<std::initializer_list<int>> cells) {
  std::vector<std::vector<int>> c;
  for (const auto& cell : cells) {
    c.emplace_back();
    for (int v : cell) c.back().push_back(v - 1);
  }
  return make_partition(n, c);
}

Graph spider() { return graph1(6, {{1, 4}, {1, 5}, {1, 6}, {2, 5}, {3, 6}}); }

Graph meet_example() {
  return graph1(6, {{1, 2}, {2, 3}, {3, 6}, {6, 5}, {5, 4}, {4, 1}, {4, 2}, {2, 5}, {5, 3}, {1, 5}, {2, 6}});
}

struct SweepItem {
  Graph g;
  PerronData pd;
  std::vector<Partition> we;
};

// Every connected graph with n <= kSweepMaxN and all of its weight-equitable
// partitions; the characterization checks run over every partition.
struct Sweep {
  std::vector<SweepItem> items;
  long partitions_checked = 0;
  long disagreements = 0;
  double worst_commutator = 0.0;
  std::string first_disagreement;
};

const Sweep& sweep() {
  static const Sweep s = [] {
    Sweep out;
    for (int n = 1; n <= kSweepMaxN; ++n) {
      for (Graph& g : enumerate_connected_graphs(n)) {
        SweepItem item{std::move(g), {}, {}};
        item.pd = perron(item.g);
        for_each_partition(n, EnumerationBudget{}, [&](const Partition& p) {
          const bool direct = is_weight_equitable(item.g, item.pd.nu, p, kSweepTol);
          const bool comm = is_weight_equitable_commute(item.g, item.pd.nu, p, kSweepTol);
          const bool binv = is_B_invariant(item.g, item.pd.nu, p, kSweepTol);
          ++out.partitions_checked;
          if (direct != comm || direct != binv) {
            if (out.disagreements++ == 0) out.first_disagreement = emit_graph6(item.g);
          }
          if (direct) {
            item.we.push_back(p);
            out.worst_commutator = std::max(out.worst_commutator, commutator_norm(item.g, item.pd.nu, p));
          }
          return true;
        });
        out.items.push_back(std::move(item));
      }
    }
    return out;
  }();
  return s;
}

Outcome criterion_spider() {
  const Graph g = spider();
  const std::vector<double> expected{2.732, 1, 1, 1.414, 1.932, 1.932};
  const Partition bip = cells1(6, {{1, 2, 3}, {4, 5, 6}});
  bool holds = false;
  PerronData pd;
  const double t = best_time(20, [&] {
    pd = perron(g);
    holds = is_weight_equitable(g, pd.nu, bip);
  });
  double err = 0;
  for (int i = 0; i < 6; ++i) err = std::max(err, std::abs(pd.nu[i] - expected[i]));
  return {err <= kSpiderNuTol && holds && t < kSpiderSeconds,
          "max |nu - expected| = " + fmt(err) + ", bipartition weight-equitable = " + (holds ? "true" : "false") +
              ", time " + fmt(t * 1e3) + " ms"};
}

Outcome criterion_meet_example() {
  const Graph g = meet_example();
  const double r2 = std::sqrt(2.0);
  const std::vector<double> expected{1, r2, 1, 1, r2, 1};
  const Partition p = cells1(6, {{1, 3, 5}, {2, 4, 6}}), q = cells1(6, {{1, 5, 6}, {2, 3, 4}});
  const Partition expected_meet = cells1(6, {{1, 5}, {3}, {6}, {2, 4}});
  bool ok = false;
  double err = 0;
  const double t = best_time(20, [&] {
    const PerronData pd = perron(g);
    err = 0;
    for (int i = 0; i < 6; ++i) err = std::max(err, std::abs(pd.nu[i] - expected[i]));
    const Partition m = meet(p, q), j = join(p, q);
    ok = is_weight_equitable(g, pd.nu, p) && is_weight_equitable(g, pd.nu, q) && !is_equitable(g, p) &&
         !is_equitable(g, q) && m == expected_meet && !is_weight_equitable(g, pd.nu, m) &&
         j == Partition::trivial(6) && is_weight_equitable(g, pd.nu, j);
  });
  return {err <= kMeetExampleNuTol && ok && t < kMeetExampleSeconds,
          "max |nu - expected| = " + fmt(err) + ", lattice facts " + (ok ? "hold" : "FAIL") + ", time " +
              fmt(t * 1e3) + " ms"};
}

Outcome criterion_path_count() {
  const Graph p4 = graphs::path(4);
  std::vector<Partition> two;
  for (const Partition& p : enumerate_weight_equitable(p4))
    if (p.cell_count() == 2) two.push_back(p);
  const std::set<Partition> got(two.begin(), two.end());
  const std::set<Partition> want{cells1(4, {{1, 3}, {2, 4}}), cells1(4, {{1, 4}, {2, 3}})};
  return {got == want && two.size() == 2, std::to_string(two.size()) + " two-cell weight-equitable partitions"};
}

Outcome criterion_quotient_spectrum() {
  const Sweep& s = sweep();
  double worst_radius = 0, worst_vec = 0;
  long count = 0;
  for (const SweepItem& it : s.items)
    for (const Partition& p : it.we) {
      const WeightedView v = build_weighted_view(it.g, it.pd.nu, p);
      worst_radius = std::max(worst_radius, std::abs(spectral_radius(v.B_bar) - it.pd.lambda1));
      worst_vec = std::max(worst_vec, quotient_eigen_residual(it.g, it.pd, p));
      ++count;
    }
  return {worst_radius <= kSweepTol && worst_vec <= kSweepTol,
          std::to_string(s.items.size()) + " graphs, " + std::to_string(count) +
              " weight-equitable partitions; max |lambda1 - rho(B_bar)| = " + fmt(worst_radius) +
              ", max |B_bar x - lambda1 x| = " + fmt(worst_vec)};
}

Outcome criterion_characterizations() {
  const Sweep& s = sweep();
  return {s.disagreements == 0 && s.worst_commutator <= kSweepTol,
          std::to_string(s.partitions_checked) + " (graph, partition) pairs, " + std::to_string(s.disagreements) +
              " disagreements" + (s.disagreements ? " first on " + s.first_disagreement : std::string()) +
              "; max commutator on weight-equitable = " + fmt(s.worst_commutator)};
}

Outcome criterion_cell_constant() {
  long checked = 0, bad = 0;
  for (const SweepItem& it : sweep().items)
    for (const Partition& p : it.we) {
      ++checked;
      if (is_equitable(it.g, p) != perron_constant_on_cells(it.pd.nu, p, kSweepTol)) ++bad;
    }
  return {bad == 0, std::to_string(checked) + " weight-equitable partitions, " + std::to_string(bad) + " mismatches"};
}

Outcome criterion_doubly_stochastic() {
  Rng rng(20260101);
  int made = 0, bad = 0;
  double worst_comm = 0, worst_stochastic = 0;
  std::vector<Graph> pool;
  for (int n = 3; n <= 7; ++n)
    for (Graph& g : enumerate_connected_graphs(n)) pool.push_back(std::move(g));
  while (made < kDoublyStochasticCount * 2) {
    const Graph& g = pool[rng.below(pool.size())];
    const int n = g.order();
    const PerronData pd = perron(g);
    const auto equitable = enumerate_equitable(g);
    Matrix x = Matrix::identity(n);
    double w0 = rng.uniform01(), total = w0;
    x *= w0;
    const int terms = 1 + static_cast<int>(rng.below(3));
    for (int k = 0; k < terms; ++k) {
      Matrix t = build_weighted_view(g, pd.nu, equitable[rng.below(equitable.size())]).X;
      const double w = 0.01 + rng.uniform01();
      t *= w;
      x += t;
      total += w;
    }
    x *= 1.0 / total;
    for (int i = 0; i < n; ++i) {
      double row = 0;
      for (int j = 0; j < n; ++j) {
        row += x(i, j);
        worst_stochastic = std::max({worst_stochastic, std::abs(x(i, j) - x(j, i)), std::max(0.0, -x(i, j))});
      }
      worst_stochastic = std::max(worst_stochastic, std::abs(row - 1.0));
    }
    worst_comm = std::max(worst_comm, max_abs_diff(adjacency_times(g, x), times_adjacency(x, g)));
    if (!is_weight_equitable(g, pd.nu, scc_partition(x))) ++bad;
    ++made;
  }
  return {bad == 0 && made >= kDoublyStochasticCount && worst_comm <= 1e-10 && worst_stochastic <= 1e-10,
          std::to_string(made) + " symmetric doubly stochastic commuting matrices (max commutator " +
              fmt(worst_comm) + ", max stochasticity defect " + fmt(worst_stochastic) + "), " +
              std::to_string(bad) + " non-weight-equitable component partitions"};
}

Outcome criterion_join_closure() {
  long pairs = 0, bad = 0;
  for (const SweepItem& it : sweep().items) {
    if (it.g.order() > kClosureMaxN) continue;
    for (std::size_t a = 0; a < it.we.size(); ++a)
      for (std::size_t b = a + 1; b < it.we.size(); ++b) {
        ++pairs;
        if (!is_weight_equitable(it.g, it.pd.nu, join(it.we[a], it.we[b]))) ++bad;
      }
  }
  const Graph g = meet_example();
  const PerronData pd = perron(g);
  const Partition m = meet(cells1(6, {{1, 3, 5}, {2, 4, 6}}), cells1(6, {{1, 5, 6}, {2, 3, 4}}));
  const bool counterexample = !is_weight_equitable(g, pd.nu, m);
  return {bad == 0 && counterexample, std::to_string(pairs) + " pairs, " + std::to_string(bad) +
                                          " non-weight-equitable joins; meet counterexample reproduced = " +
                                          (counterexample ? "true" : "false")};
}

Outcome criterion_algorithm_vs_oracle() {
  long graphs = 0, disagreements = 0;
  const auto t0 = Clock::now();
  for (int n = 1; n <= kCographMaxN; ++n)
    for (const Graph& g : enumerate_connected_cographs(n)) {
      ++graphs;
      const bool fast = has_nice_automorphism(build_cotree(g));
      const bool brute = n % 2 == 0 && find_fixed_point_free_involution(g).has_value();
      if (fast != brute) ++disagreements;
    }
  return {disagreements == 0, std::to_string(graphs) + " connected cographs, " + std::to_string(disagreements) +
                                  " disagreements, " + fmt(seconds_since(t0)) + " s"};
}

Outcome criterion_involution_bijection() {
  long involutions = 0, partitions = 0, bad = 0;
  for (int n : {4, 6})
    for (const Graph& g : enumerate_connected_graphs(n)) {
      for (const Permutation& p : all_automorphisms(g)) {
        if (!p.is_involution() || !p.is_fixed_point_free()) continue;
        ++involutions;
        if (!is_equitable(g, involution_to_partition(p))) ++bad;
      }
      for (const Partition& p : enumerate_equitable(g)) {
        bool homog = true;
        for (const auto& c : p.cells()) homog = homog && c.size() == 2;
        if (!homog) continue;
        ++partitions;
        if (!is_automorphism(g, partition_to_involution(p))) ++bad;
      }
    }
  return {bad == 0, std::to_string(involutions) + " involutions, " + std::to_string(partitions) +
                        " 2-homogeneous equitable partitions, " + std::to_string(bad) + " failures"};
}

Outcome criterion_scaling() {
  const std::vector<int> sizes{1000, 2000, 4000};
  constexpr int kTrees = 20;
  std::vector<double> times;
  for (int n : sizes) {
    std::vector<std::vector<CotreeNode>> raw;
    std::vector<int> roots;
    for (int s = 0; s < kTrees; ++s) {
      const Cotree t = random_cotree(n, mix_seed(n, s));
      raw.push_back(t.nodes());
      roots.push_back(t.root());
    }
    int sink = 0;
    times.push_back(best_time(5, [&] {
      for (int s = 0; s < kTrees; ++s) {
        const Cotree t(raw[s], roots[s]);
        sink += has_nice_automorphism(t) ? 1 : 0;
      }
    }) / kTrees);
    if (sink < 0) std::puts("");
  }
  const double r1 = times[1] / times[0], r2 = times[2] / times[1];
  return {r1 <= kDoublingRatio && r2 <= kDoublingRatio && times[2] < kLargestTreeSeconds,
          "per-tree time " + fmt(times[0] * 1e3) + " / " + fmt(times[1] * 1e3) + " / " + fmt(times[2] * 1e3) +
              " ms at n = 1000/2000/4000; doubling ratios " + fmt(r1) + ", " + fmt(r2)};
}

Outcome criterion_experiment() {
  ExperimentConfig cfg;
  cfg.source = ExperimentSource::Random;
  cfg.count = 50;
  cfg.n = 20;
  cfg.seed = 1;
  cfg.verify_rate = 1.0;
  const auto t0 = Clock::now();
  const ExperimentResult r = run_experiment(cfg);
  const double t = seconds_since(t0);
  long reverified = 0, bad = 0;
  for (const ExperimentGraph& eg : r.graphs)
    for (std::uint32_t s = 1; s < (1u << eg.partitions.size()); ++s) {
      ++reverified;
      if (!verify_record(eg.graph, eg.partitions, s)) ++bad;
    }
  const bool monotone = monotone_along_chains(r.records);
  const auto mode = histogram_mode(histogram(r.records), 10);
  return {t < kExperimentSeconds && bad == 0 && monotone && mode && *mode <= kExperimentModeMax &&
              reverified == static_cast<long>(r.records.size()),
          std::to_string(r.graphs.size()) + " graphs (" + std::to_string(r.skipped) + " skipped), " +
              std::to_string(reverified) + " subset joins re-verified, " + std::to_string(bad) + " failures, monotone = " +
              (monotone ? "true" : "false") + ", k = 10 mode = " + (mode ? std::to_string(*mode) : "none") +
              " cells, " + fmt(t) + " s"};
}

Outcome criterion_round_trips() {
  Rng rng(99);
  int g6_bad = 0, cotree_bad = 0;
  for (int i = 0; i < kRoundTrips; ++i) {
    const int n = 1 + static_cast<int>(rng.below(100));
    const double p = rng.uniform01();
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.uniform01() < p) e.push_back({u, v});
    const Graph g(n, e);
    const std::string s = emit_graph6(g);
    if (!(parse_graph6(s) == g) || emit_graph6(parse_graph6(s)) != s) ++g6_bad;
  }
  for (int i = 0; i < kRoundTrips; ++i) {
    const int n = 1 + static_cast<int>(rng.below(kCographRoundTripMaxN));
    const Graph g = reconstruct(random_cotree(n, rng.next()));
    if (!(reconstruct(build_cotree(g)) == g)) ++cotree_bad;
  }
  return {g6_bad == 0 && cotree_bad == 0, std::to_string(g6_bad) + " graph6 and " + std::to_string(cotree_bad) +
                                              " cotree round-trip failures over " + std::to_string(kRoundTrips) +
                                              " inputs each"};
}

}  // namespace

int main() {
  report(1, "six-vertex spider: Perron vector and weight-equitable bipartition", criterion_spider);
  report(2, "meet example: weights, weight-equitable bipartitions, meet and join", criterion_meet_example);
  report(3, "path on four vertices: two-cell weight-equitable partitions", criterion_path_count);
  report(4, "quotient spectral radius and Perron eigenvector of cell norms", criterion_quotient_spectrum);
  report(5, "direct, commutator and B-invariance characterizations agree", criterion_characterizations);
  report(6, "equitable iff Perron vector constant on cells", criterion_cell_constant);
  report(7, "strongly connected components of doubly stochastic commuting matrices", criterion_doubly_stochastic);
  report(8, "joins of weight-equitable partitions stay weight-equitable", criterion_join_closure);
  report(9, "cotree involution search against brute force", criterion_algorithm_vs_oracle);
  report(10, "fixed-point-free involutions and 2-homogeneous equitable partitions", criterion_involution_bijection);
  report(11, "cotree involution search scales at most quadratically", criterion_scaling);
  report(12, "join-coarseness experiment on 50 random cographs with n = 20", criterion_experiment);
  report(13, "graph6 and cotree round trips", criterion_round_trips);
  std::printf("%s: %d of 13 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
