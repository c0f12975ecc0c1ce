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

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "wep/cotree.hpp"
#include "wep/equitability.hpp"
#include "wep/error.hpp"
#include "wep/graph.hpp"
#include "wep/partition.hpp"
#include "wep/permutation.hpp"
#include "wep/rng.hpp"
#include "wep/spectral.hpp"

// Join-coarseness experiment on connected cographs: one 2-homogeneous
// partition from the cotree, nine automorphic images of it, and the cell
// count of the join over every nonempty subset of the ten.

namespace wep {

struct ExperimentRecord {
  std::string graph_id;
  int n = 0;
  int k = 0;
  std::uint32_t subset_id = 0;
  int cells = 0;
  std::uint64_t seed = 0;
};

enum class ExperimentSource { Enumerate, Random };

struct ExperimentConfig {
  ExperimentSource source = ExperimentSource::Random;
  int n = 0;
  int count = 0;  // graphs to accept in Random mode
  std::optional<std::uint64_t> seed;
  int partitions = 10;
  double verify_rate = 0.1;
  double tol = kDefaultTolerance;
  long max_attempts_per_graph = 1000;
};

struct ExperimentGraph {
  std::string graph_id;
  Graph graph;
  std::uint64_t seed = 0;
  std::vector<Partition> partitions;
};

struct ExperimentResult {
  std::vector<ExperimentGraph> graphs;
  std::vector<ExperimentRecord> records;
  int skipped = 0;  // graphs without a 2-homogeneous partition
  long verified = 0;
};

/// The join over the partitions selected by the bits of subset is
/// weight-equitable.
inline bool verify_record(const Graph& g, const std::vector<Partition>& partitions, std::uint32_t subset,
                          double tol = kDefaultTolerance) {
  std::vector<Partition> chosen;
  for (std::size_t i = 0; i < partitions.size(); ++i)
    if (subset & (1u << i)) chosen.push_back(partitions[i]);
  if (chosen.empty()) return false;
  const PerronData pd = perron(g);
  return is_weight_equitable(g, pd.nu, join_all(chosen), tol);
}

/// Ten partition slots for one graph: the nice-automorphism pairing, then
/// its images under g_1^{m_1} ... g_r^{m_r} with m_i uniform in
/// {1, ..., ord(g_i)}. Empty when the cotree has no nice automorphism.
inline std::vector<Partition> sample_partitions(const Cotree& t, int count, Rng& rng) {
  if (!has_nice_automorphism(t)) return {};
  const Partition base = involution_to_partition(nice_automorphism(t));
  const std::vector<Permutation> gens = aut_generators(t);
  std::vector<long> orders;
  for (const Permutation& g : gens) orders.push_back(g.order());
  std::vector<Partition> out{base};
  while (static_cast<int>(out.size()) < count) {
    Permutation gamma = Permutation::identity(t.leaf_count());
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const long m = rng.between(1, orders[i]);
      gamma = gamma * gens[i].pow(m);
    }
    out.push_back(apply_automorphism(base, gamma));
  }
  return out;
}

namespace detail {

inline void run_graph(ExperimentResult& result, const ExperimentConfig& cfg, std::string graph_id, const Cotree& t,
                      std::uint64_t sub_seed) {
  Rng rng(sub_seed);
  std::vector<Partition> parts = sample_partitions(t, cfg.partitions, rng);
  if (parts.empty()) {
    ++result.skipped;
    return;
  }
  Graph g = reconstruct(t);
  const std::uint32_t full = (1u << parts.size()) - 1;
  std::vector<std::optional<Partition>> joins(full + 1);
  Rng verify_rng(mix_seed(sub_seed, 1));
  std::optional<PerronData> pd;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const int low = std::countr_zero(mask);
    const std::uint32_t rest = mask & (mask - 1);
    joins[mask] = rest == 0 ? parts[low] : join(*joins[rest], parts[low]);
    result.records.push_back(
        {graph_id, g.order(), std::popcount(mask), mask, joins[mask]->cell_count(), sub_seed});
    if (verify_rng.uniform01() < cfg.verify_rate) {
      if (!pd) pd = perron(g);
      if (!is_weight_equitable(g, pd->nu, *joins[mask], cfg.tol))
        fail(ErrorKind::NotWeightEquitable, graph_id + ": join of subset " + std::to_string(mask) +
                                                " is not weight-equitable");
      ++result.verified;
    }
  }
  result.graphs.push_back({std::move(graph_id), std::move(g), sub_seed, std::move(parts)});
}

}  // namespace detail

/// Enumerate mode runs every connected cograph on n vertices; Random mode
/// draws random cotrees until `count` of them admit a 2-homogeneous
/// partition. Graph i uses sub-seed mix_seed(seed, i).
inline ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  detail::require(cfg.seed.has_value(), ErrorKind::SeedRequired, "experiment needs an explicit seed");
  detail::require(cfg.n >= 1, ErrorKind::BadN, "n must be positive");
  detail::require(cfg.partitions >= 1 && cfg.partitions <= 20, ErrorKind::BadN, "partition slots must be in 1..20");
  const std::uint64_t seed = *cfg.seed;
  ExperimentResult result;
  if (cfg.source == ExperimentSource::Enumerate) {
    const std::vector<Graph> graphs = enumerate_connected_cographs(cfg.n);
    for (std::size_t i = 0; i < graphs.size(); ++i)
      detail::run_graph(result, cfg, "cograph-" + std::to_string(cfg.n) + "-" + std::to_string(i + 1),
                        build_cotree(graphs[i]), mix_seed(seed, i));
    return result;
  }
  const long cap = cfg.max_attempts_per_graph * std::max(cfg.count, 1);
  for (long attempt = 0; static_cast<int>(result.graphs.size()) < cfg.count; ++attempt) {
    if (attempt >= cap)
      detail::fail(ErrorKind::NoHomogeneousPartition,
                   "only " + std::to_string(result.graphs.size()) + " of " + std::to_string(cfg.count) +
                       " graphs admit a 2-homogeneous partition after " + std::to_string(cap) + " draws");
    const std::uint64_t sub = mix_seed(seed, static_cast<std::uint64_t>(attempt));
    detail::run_graph(result, cfg, "random-" + std::to_string(attempt + 1), random_cotree(cfg.n, sub), sub);
  }
  return result;
}

/// For every record and every bit of its subset, dropping that bit never
/// yields fewer cells. Records of one graph must cover all nonempty subsets.
inline bool monotone_along_chains(const std::vector<ExperimentRecord>& records) {
  std::map<std::string, std::map<std::uint32_t, int>> cells;
  for (const auto& r : records) cells[r.graph_id][r.subset_id] = r.cells;
  for (const auto& [id, by_subset] : cells) {
    for (const auto& [mask, c] : by_subset) {
      for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
        const std::uint32_t sub = mask & ~(rest & (0u - rest));
        if (sub == 0) continue;
        auto it = by_subset.find(sub);
        if (it == by_subset.end() || it->second < c) return false;
      }
    }
  }
  return true;
}

/// (k, cells) -> frequency, normalized so each k sums to 1 over all graphs
/// and all C(slots, k) subsets.
inline std::map<std::pair<int, int>, double> histogram(const std::vector<ExperimentRecord>& records) {
  std::map<std::pair<int, int>, long> counts;
  std::map<int, long> per_k;
  for (const auto& r : records) {
    ++counts[{r.k, r.cells}];
    ++per_k[r.k];
  }
  std::map<std::pair<int, int>, double> out;
  for (const auto& [key, c] : counts) out[key] = static_cast<double>(c) / static_cast<double>(per_k[key.first]);
  return out;
}

/// Most frequent cell count for joins of k partitions; ties go to fewer cells.
inline std::optional<int> histogram_mode(const std::map<std::pair<int, int>, double>& hist, int k) {
  std::optional<int> best;
  double best_f = -1.0;
  for (const auto& [key, f] : hist) {
    if (key.first != k || f <= best_f) continue;
    best = key.second;
    best_f = f;
  }
  return best;
}

inline void write_records_csv(std::ostream& os, const std::vector<ExperimentRecord>& records) {
  os << "graph_id,n,k,subset_id,cells,seed\n";
  for (const auto& r : records)
    os << r.graph_id << ',' << r.n << ',' << r.k << ',' << r.subset_id << ',' << r.cells << ',' << r.seed << '\n';
}

inline void write_histogram_csv(std::ostream& os, const std::map<std::pair<int, int>, double>& hist) {
  os << "k,cells,frequency\n";
  char buf[32];
  for (const auto& [key, f] : hist) {
    std::snprintf(buf, sizeof buf, "%.10g", f);
    os << key.first << ',' << key.second << ',' << buf << '\n';
  }
}

}  // namespace wep
