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

// wep: command-line front end for the weight-equitable partition library.
//
// Exit status: 0 ok / property holds, 1 property fails, 2 usage or data error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wep/wep.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFails = 1;
constexpr int kUsage = 2;

struct Globals {
  double tol = wep::kDefaultTolerance;
  std::string format = "auto";
  std::optional<std::uint64_t> seed;
  std::string out;
};

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

wep::Graph load_graph(const Globals& g, const std::string& path) {
  wep::GraphFormat f = wep::GraphFormat::Auto;
  if (g.format == "graph6") f = wep::GraphFormat::Graph6;
  if (g.format == "edges") f = wep::GraphFormat::EdgeList;
  return wep::read_graph(slurp(path), f);
}

wep::Partition load_partition(const std::string& path, int n = -1) { return wep::parse_partition(slurp(path), n); }

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void print_matrix(std::ostream& os, const wep::Matrix& m) {
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) os << (j ? " " : "") << num(m(i, j));
    os << '\n';
  }
}

// Output goes to --out when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw std::runtime_error("cannot write " + path);
    }
  }
  std::ostream& os() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

int run_experiment_cmd(const Globals& g, std::optional<int> enumerate_n, std::optional<int> random_count,
                       std::optional<int> n, double verify_rate) {
  wep::ExperimentConfig cfg;
  if (enumerate_n.has_value() == random_count.has_value())
    throw CLI::ValidationError("experiment", "give exactly one of --enumerate N or --random COUNT");
  if (enumerate_n) {
    cfg.source = wep::ExperimentSource::Enumerate;
    cfg.n = *enumerate_n;
    cfg.seed = g.seed.value_or(0);
  } else {
    if (!n) throw CLI::ValidationError("experiment", "--random needs --n");
    cfg.source = wep::ExperimentSource::Random;
    cfg.count = *random_count;
    cfg.n = *n;
    cfg.seed = g.seed;
  }
  cfg.verify_rate = verify_rate;
  cfg.tol = g.tol;
  const wep::ExperimentResult result = wep::run_experiment(cfg);
  if (!wep::monotone_along_chains(result.records)) {
    std::cerr << "error: cell counts not monotone along subset chains\n";
    return kFails;
  }

  const std::filesystem::path dir = g.out.empty() ? std::filesystem::path(".") : std::filesystem::path(g.out);
  std::filesystem::create_directories(dir);
  std::ofstream records(dir / "experiment.csv", std::ios::binary);
  wep::write_records_csv(records, result.records);
  std::ofstream hist(dir / "hist_k.csv", std::ios::binary);
  wep::write_histogram_csv(hist, wep::histogram(result.records));

  nlohmann::json meta;
  meta["rng"] = wep::Rng::kAlgorithm;
  meta["seed_derivation"] = "splitmix64(seed, graph index)";
  meta["seed"] = *cfg.seed;
  meta["source"] = enumerate_n ? "enumerate" : "random";
  meta["n"] = cfg.n;
  meta["partitions_per_graph"] = cfg.partitions;
  meta["graphs"] = result.graphs.size();
  meta["skipped_without_2_homogeneous_partition"] = result.skipped;
  meta["records"] = result.records.size();
  meta["verified_records"] = result.verified;
  meta["verify_rate"] = cfg.verify_rate;
  meta["tolerance"] = cfg.tol;
  std::ofstream(dir / "meta.json", std::ios::binary) << meta.dump(2) << '\n';

  std::cout << "graphs " << result.graphs.size() << ", skipped " << result.skipped << ", records "
            << result.records.size() << ", verified " << result.verified << " -> " << dir.string() << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weight-equitable partitions of graphs"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--tol", g.tol, "Equitability tolerance")->capture_default_str();
  app.add_option("--format", g.format, "Graph input format")
      ->check(CLI::IsMember({"auto", "graph6", "edges"}))
      ->capture_default_str();
  app.add_option("--seed", g.seed, "Random seed");
  app.add_option("--out", g.out, "Output file (experiment: output directory)");

  int exit_code = kOk;
  std::string graph_path, graph2_path, part_path, part2_path, mode = "weight";

  auto perron_cmd = app.add_subcommand("perron", "Spectral radius and Perron vector (min entry 1)");
  perron_cmd->add_option("graph", graph_path, "Graph file or - for stdin")->required();
  perron_cmd->callback([&] {
    const wep::PerronData pd = wep::perron(load_graph(g, graph_path));
    Output out(g.out);
    out.os() << num(pd.lambda1) << '\n';
    for (double x : pd.nu) out.os() << num(x) << '\n';
  });

  auto check_cmd = app.add_subcommand("check", "Test a partition; exit 0 if it holds, 1 if not");
  check_cmd->add_option("graph", graph_path)->required();
  check_cmd->add_option("partition", part_path)->required();
  check_cmd->add_option("--mode", mode)
      ->check(CLI::IsMember({"equitable", "weight", "commute", "binv"}))
      ->capture_default_str();
  check_cmd->callback([&] {
    const wep::Graph graph = load_graph(g, graph_path);
    const wep::Partition p = load_partition(part_path, graph.order());
    bool holds = false;
    if (mode == "equitable") {
      holds = wep::is_equitable(graph, p);
    } else {
      const wep::PerronData pd = wep::perron(graph);
      if (mode == "weight") holds = wep::is_weight_equitable(graph, pd.nu, p, g.tol);
      if (mode == "commute") holds = wep::is_weight_equitable_commute(graph, pd.nu, p, g.tol);
      if (mode == "binv") holds = wep::is_B_invariant(graph, pd.nu, p, g.tol);
    }
    Output out(g.out);
    out.os() << (holds ? "true" : "false") << '\n';
    exit_code = holds ? kOk : kFails;
  });

  auto condense_cmd = app.add_subcommand("condense", "Normalized weight-quotient matrix and cell norms");
  condense_cmd->add_option("graph", graph_path)->required();
  condense_cmd->add_option("partition", part_path)->required();
  condense_cmd->callback([&] {
    const wep::Graph graph = load_graph(g, graph_path);
    const wep::Partition p = load_partition(part_path, graph.order());
    const wep::WeightedView v = wep::build_weighted_view(graph, wep::perron(graph).nu, p);
    Output out(g.out);
    out.os() << "B_bar\n";
    print_matrix(out.os(), v.B_bar);
    out.os() << "D\n";
    print_matrix(out.os(), v.D);
  });

  for (const char* op : {"join", "meet"}) {
    auto cmd = app.add_subcommand(op, std::string(op) == "join" ? "Join of two partitions" : "Meet of two partitions");
    cmd->add_option("first", part_path)->required();
    cmd->add_option("second", part2_path)->required();
    const bool is_join = std::string(op) == "join";
    cmd->callback([&, is_join] {
      const wep::Partition a = load_partition(part_path);
      const wep::Partition b = load_partition(part2_path);
      Output out(g.out);
      out.os() << wep::format_partition(is_join ? wep::join(a, b) : wep::meet(a, b));
    });
  }

  auto cotree_cmd = app.add_subcommand("cotree", "Canonical cotree term of a cograph");
  cotree_cmd->add_option("graph", graph_path)->required();
  cotree_cmd->callback([&] {
    Output out(g.out);
    out.os() << wep::cotree_term(wep::build_cotree(load_graph(g, graph_path))) << '\n';
  });

  auto homog2_cmd = app.add_subcommand("homog2", "2-homogeneous equitable partition of a connected cograph");
  homog2_cmd->add_option("graph", graph_path)->required();
  homog2_cmd->callback([&] {
    const wep::Graph graph = load_graph(g, graph_path);
    if (!wep::is_connected(graph)) throw wep::Error(wep::ErrorKind::NotConnected, "graph is not connected");
    const auto p = wep::two_homogeneous_partition(graph);
    Output out(g.out);
    out.os() << (p ? wep::format_partition(*p) : std::string("none\n"));
    exit_code = p ? kOk : kFails;
  });

  int c = 2;
  auto chomog_cmd = app.add_subcommand("chomog", "c-homogeneous search on the cotree");
  chomog_cmd->add_option("graph", graph_path)->required();
  chomog_cmd->add_option("-c,--cell-size", c, "Cell size c >= 2")->capture_default_str();
  chomog_cmd->callback([&] {
    const bool found = wep::c_homogeneous_search(wep::build_cotree(load_graph(g, graph_path)), c);
    Output out(g.out);
    out.os() << (found ? "true" : "false") << '\n';
    exit_code = found ? kOk : kFails;
  });

  auto joint_cmd = app.add_subcommand("joint", "Report on a joint partition of two graphs");
  joint_cmd->add_option("graph_g", graph_path)->required();
  joint_cmd->add_option("graph_h", graph2_path)->required();
  joint_cmd->add_option("partition", part_path)->required();
  joint_cmd->callback([&] {
    const wep::JointContext ctx = wep::make_joint_context(load_graph(g, graph_path), load_graph(g, graph2_path), g.tol);
    const wep::Partition p = load_partition(part_path, ctx.union_graph.order());
    const bool balanced = wep::is_balanced(ctx, p);
    const bool we = wep::is_joint_weight_equitable(ctx, p, g.tol);
    std::string ratio = "n/a", witness = "n/a";
    if (balanced && we) {
      ratio = wep::ratio_check(ctx, p, g.tol) ? "yes" : "no";
      try {
        wep::fractional_isomorphism_witness(ctx, p, g.tol);
        witness = "yes";
      } catch (const wep::Error& e) {
        witness = std::string("no (") + std::string(wep::to_string(e.kind())) + ")";
      }
    }
    Output out(g.out);
    out.os() << "lambda1           " << num(ctx.lambda) << '\n'
             << "balanced          " << (balanced ? "yes" : "no") << '\n'
             << "weight-equitable  " << (we ? "yes" : "no") << '\n'
             << "ratio law         " << ratio << '\n'
             << "witness           " << witness << '\n';
    exit_code = balanced && we ? kOk : kFails;
  });

  auto oracle_cmd = app.add_subcommand("oracle", "Brute-force ground truth");
  oracle_cmd->require_subcommand(1);
  int cells = 0;
  auto we_enum = oracle_cmd->add_subcommand("we-enum", "All weight-equitable partitions, blank-line separated");
  we_enum->add_option("graph", graph_path)->required();
  we_enum->add_option("--cells", cells, "Only partitions with this many cells");
  we_enum->callback([&] {
    const auto all = wep::enumerate_weight_equitable(load_graph(g, graph_path), g.tol);
    Output out(g.out);
    bool first = true;
    for (const wep::Partition& p : all) {
      if (cells > 0 && p.cell_count() != cells) continue;
      out.os() << (first ? "" : "\n") << wep::format_partition(p);
      first = false;
    }
  });
  auto aut = oracle_cmd->add_subcommand("aut", "Automorphism group, one permutation per line");
  aut->add_option("graph", graph_path)->required();
  aut->callback([&] {
    Output out(g.out);
    for (const wep::Permutation& p : wep::all_automorphisms(load_graph(g, graph_path)))
      out.os() << wep::format_cycles(p) << '\n';
  });
  auto fpf = oracle_cmd->add_subcommand("fpf-involution", "A fixed-point-free involutory automorphism");
  fpf->add_option("graph", graph_path)->required();
  fpf->callback([&] {
    const auto p = wep::find_fixed_point_free_involution(load_graph(g, graph_path));
    Output out(g.out);
    out.os() << (p ? wep::format_cycles(*p) : std::string("none")) << '\n';
    exit_code = p ? kOk : kFails;
  });
  auto max_refine = oracle_cmd->add_subcommand("max-refine", "Maximal weight-equitable refinement");
  max_refine->add_option("graph", graph_path)->required();
  max_refine->add_option("partition", part_path)->required();
  max_refine->callback([&] {
    const wep::Graph graph = load_graph(g, graph_path);
    const wep::Partition p = load_partition(part_path, graph.order());
    Output out(g.out);
    out.os() << wep::format_partition(wep::max_we_refinement(graph, p, g.tol));
  });

  std::optional<int> enumerate_n, random_count, exp_n;
  double verify_rate = 0.1;
  auto exp_cmd = app.add_subcommand("experiment", "Join-coarseness experiment on connected cographs");
  exp_cmd->add_option("--enumerate", enumerate_n, "All connected cographs on N vertices");
  exp_cmd->add_option("--random", random_count, "Number of random cographs to accept");
  exp_cmd->add_option("--n", exp_n, "Vertex count for --random");
  exp_cmd->add_option("--verify-rate", verify_rate, "Fraction of records re-verified")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  exp_cmd->callback([&] { exit_code = run_experiment_cmd(g, enumerate_n, random_count, exp_n, verify_rate); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  } catch (const wep::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return exit_code;
}
