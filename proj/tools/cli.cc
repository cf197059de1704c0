// Copyright 2026 The hypnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "hypnet/embed.h"
#include "hypnet/graph.h"
#include "hypnet/graphgen.h"
#include "hypnet/hkde.h"
#include "hypnet/nettest.h"

namespace hypnet::cli {
namespace {

// Thrown for bad flag values found after CLI11 has parsed successfully.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SeedOption {
  std::optional<std::uint64_t> value;

  std::uint64_t Resolve(std::ostream& err) const {
    std::uint64_t seed = 0;
    if (value) {
      seed = *value;
    } else {
      const char* ci = std::getenv("CI");
      if (ci != nullptr && *ci != '\0' && std::string(ci) != "0" && std::string(ci) != "false") {
        throw UsageError("--seed is required when CI is set");
      }
      std::random_device device;
      seed = (static_cast<std::uint64_t>(device()) << 32) | device();
    }
    err << "seed: " << seed << '\n';
    return seed;
  }
};

struct FamilyOptions {
  std::string family = "quasi-uniform";
  double delta = 1.0;
  double radius = 1.0;
  double sigma = 0.1;
  std::size_t nodes = 100;
  std::size_t k = 40;
  double rewire = 0.1;
  double threshold = 1.5;
};

void AddFamilyOptions(CLI::App* cmd, FamilyOptions& f) {
  cmd->add_option("--family", f.family, "Generator family")
      ->check(CLI::IsMember({"quasi-uniform", "hyp-gaussian", "watts-strogatz"}))
      ->capture_default_str();
  cmd->add_option("--delta", f.delta, "Quasi-uniform dispersion")->capture_default_str();
  cmd->add_option("--R,--radius", f.radius, "Quasi-uniform scale")->capture_default_str();
  cmd->add_option("--sigma", f.sigma, "Hyperbolic Gaussian spread")->capture_default_str();
  cmd->add_option("--n", f.nodes, "Number of nodes")->capture_default_str();
  cmd->add_option("--k", f.k, "Watts-Strogatz lattice degree")->capture_default_str();
  cmd->add_option("--p", f.rewire, "Watts-Strogatz rewiring probability")->capture_default_str();
  cmd->add_option("--c", f.threshold, "Link distance threshold")->capture_default_str();
}

GeneratorSpec MakeSpec(const FamilyOptions& f) {
  GeneratorSpec spec;
  spec.nodes = f.nodes;
  spec.link = LinkRule{f.threshold};
  if (f.family == "quasi-uniform") {
    spec.family = QuasiUniformFamily{{f.delta, f.radius}};
  } else if (f.family == "hyp-gaussian") {
    spec.family = HypGaussianFamily{{f.sigma}};
  } else {
    spec.family = WattsStrogatzFamily{f.k, f.rewire};
  }
  try {
    Validate(spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return spec;
}

struct TestOptions {
  std::size_t replicates = 50;
  double alpha = 0.1;
  std::size_t pairs = 100;
  double threshold = 1.5;
  std::size_t max_retries = 100;
  unsigned threads = 1;
};

void AddTestOptions(CLI::App* cmd, TestOptions& t, bool with_threshold) {
  cmd->add_option("--B", t.replicates, "Bootstrap replicates")->capture_default_str();
  cmd->add_option("--alpha", t.alpha, "Nominal test size")->capture_default_str();
  cmd->add_option("--m", t.pairs, "Monte Carlo quadrature pairs")->capture_default_str();
  if (with_threshold) {
    cmd->add_option("--c", t.threshold, "Link threshold for bootstrap graphs")->capture_default_str();
  }
  cmd->add_option("--max-retries", t.max_retries, "Embedding retries per replicate")
      ->capture_default_str();
  cmd->add_option("--threads", t.threads, "Worker threads (0 = all cores)")->capture_default_str();
}

ComparisonConfig MakeConfig(const TestOptions& t, double threshold, std::uint64_t seed) {
  ComparisonConfig cfg;
  cfg.bootstrap_replicates = t.replicates;
  cfg.alpha = t.alpha;
  cfg.quadrature_pairs = t.pairs;
  cfg.link_threshold = threshold;
  cfg.max_retries = t.max_retries;
  cfg.threads = t.threads;
  cfg.seed = seed;
  try {
    Validate(cfg);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return cfg;
}

// Writes `text` to `path`, or to `out` when the path is empty.
void Emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + path);
  file << text;
  if (!file) throw std::runtime_error("write failed for " + path);
}

Graph LoadGraph(const std::string& path) {
  try {
    return ReadEdgeList(path);
  } catch (const EdgeListError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void ReportDropped(const ModelEstimate& e, const std::string& path, std::ostream& err) {
  if (e.retained_nodes != e.graph_nodes) {
    err << path << ": embedded largest component, dropped " << e.graph_nodes - e.retained_nodes
        << " of " << e.graph_nodes << " nodes\n";
  }
}

std::vector<double> ParseSweep(const std::string& text, const char* flag) {
  std::vector<double> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string(flag) + ": not a number: \"" + item + "\"");
    }
  }
  if (values.empty()) throw UsageError(std::string(flag) + " is empty");
  return values;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-sample network comparison through hyperbolic node densities", "hypnet"};
  app.require_subcommand(1);

  std::string output;
  SeedOption seed;

  FamilyOptions gen_family;
  auto* generate = app.add_subcommand("generate", "Sample a graph, write an edge list");
  AddFamilyOptions(generate, gen_family);
  generate->add_option("--seed", seed.value, "Master seed");
  generate->add_option("-o,--output", output, "Output edge-list path");

  std::string embed_input;
  auto* embed = app.add_subcommand("embed", "Embed a graph, write one \"x y\" line per node");
  embed->add_option("input", embed_input, "Edge-list file")->required();
  embed->add_option("-o,--output", output, "Output coordinate path");

  std::string density_input;
  double xmin = -2.0, xmax = 2.0, ymin = 0.1, ymax = 4.0;
  std::size_t nx = 41, ny = 40;
  DensityGrid grid;
  auto* density = app.add_subcommand("density", "Estimate a node density, write an x,y,density CSV");
  density->add_option("input", density_input, "Edge-list file")->required();
  density->add_option("--xmin", xmin)->capture_default_str();
  density->add_option("--xmax", xmax)->capture_default_str();
  density->add_option("--ymin", ymin)->capture_default_str();
  density->add_option("--ymax", ymax)->capture_default_str();
  density->add_option("--nx", nx, "Grid columns")->capture_default_str();
  density->add_option("--ny", ny, "Grid rows")->capture_default_str();
  density->add_option("--t-nodes", grid.t_nodes, "Spectral quadrature nodes")->capture_default_str();
  density->add_option("--theta-nodes", grid.theta_nodes, "Angular quadrature nodes")
      ->capture_default_str();
  density->add_option("-o,--output", output, "Output CSV path");

  std::string compare_first, compare_second;
  TestOptions compare_opts;
  auto* compare = app.add_subcommand("compare", "Test whether two graphs share a node density");
  compare->add_option("first", compare_first, "First edge-list file")->required();
  compare->add_option("second", compare_second, "Second edge-list file")->required();
  AddTestOptions(compare, compare_opts, /*with_threshold=*/true);
  compare->add_option("--seed", seed.value, "Master seed");
  compare->add_option("-o,--output", output, "Output result document path");

  FamilyOptions power_family;
  TestOptions power_opts;
  std::size_t pairs = 25;
  std::string delta_sweep, sigma_sweep, p_sweep;
  auto* power = app.add_subcommand("power", "Estimate power against a parameter sweep");
  AddFamilyOptions(power, power_family);
  AddTestOptions(power, power_opts, /*with_threshold=*/false);
  power->add_option("--pairs", pairs, "Independent graph pairs per sweep value")
      ->capture_default_str();
  power->add_option("--delta-sweep", delta_sweep, "Comma-separated delta values (quasi-uniform)");
  power->add_option("--sigma-sweep", sigma_sweep, "Comma-separated sigma values (hyp-gaussian)");
  power->add_option("--p-sweep", p_sweep, "Comma-separated rewiring values (watts-strogatz)");
  power->add_option("--seed", seed.value, "Master seed");
  power->add_option("-o,--output", output, "Output CSV path");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*generate) {
      const GeneratorSpec spec = MakeSpec(gen_family);
      Rng rng = DeriveStream(seed.Resolve(err), "generate");
      std::ostringstream text;
      FormatEdgeList(Generate(spec, rng), text);
      Emit(text.str(), output, out);
    } else if (*embed) {
      const ModelEstimate e = EstimateModel(LoadGraph(embed_input));
      ReportDropped(e, embed_input, err);
      std::ostringstream text;
      for (const HPoint& z : e.model.centers()) {
        text << FormatDouble(z.x) << ' ' << FormatDouble(z.y) << '\n';
      }
      Emit(text.str(), output, out);
    } else if (*density) {
      if (nx < 1 || ny < 1 || !(xmax >= xmin) || !(ymin > 0.0 && ymax >= ymin)) {
        throw UsageError("density grid needs nx, ny >= 1, xmin <= xmax and 0 < ymin <= ymax");
      }
      const ModelEstimate e = EstimateModel(LoadGraph(density_input));
      ReportDropped(e, density_input, err);
      const DensityEvaluator evaluate(e.model, grid);
      std::ostringstream text;
      text << "x,y,density\n";
      for (std::size_t row = 0; row < ny; ++row) {
        const double y = ny == 1 ? ymin : ymin + (ymax - ymin) * static_cast<double>(row) /
                                                     static_cast<double>(ny - 1);
        for (std::size_t col = 0; col < nx; ++col) {
          const double x = nx == 1 ? xmin : xmin + (xmax - xmin) * static_cast<double>(col) /
                                                       static_cast<double>(nx - 1);
          text << FormatDouble(x) << ',' << FormatDouble(y) << ','
               << FormatDouble(evaluate(HPoint{x, y})) << '\n';
        }
      }
      Emit(text.str(), output, out);
    } else if (*compare) {
      const Graph g1 = LoadGraph(compare_first);
      const Graph g2 = LoadGraph(compare_second);
      const ComparisonConfig cfg =
          MakeConfig(compare_opts, compare_opts.threshold, seed.Resolve(err));
      const TestResult result = Compare(g1, g2, cfg);
      Emit(FormatResult(result, cfg), output, out);
    } else if (*power) {
      const GeneratorSpec base = MakeSpec(power_family);
      std::vector<double> sweep;
      if (power_family.family == "quasi-uniform") {
        if (delta_sweep.empty()) throw UsageError("quasi-uniform power needs --delta-sweep");
        sweep = ParseSweep(delta_sweep, "--delta-sweep");
      } else if (power_family.family == "hyp-gaussian") {
        if (sigma_sweep.empty()) throw UsageError("hyp-gaussian power needs --sigma-sweep");
        sweep = ParseSweep(sigma_sweep, "--sigma-sweep");
      } else {
        if (p_sweep.empty()) throw UsageError("watts-strogatz power needs --p-sweep");
        sweep = ParseSweep(p_sweep, "--p-sweep");
      }
      if (pairs < 1) throw UsageError("--pairs must be >= 1");
      const ComparisonConfig cfg = MakeConfig(power_opts, power_family.threshold, seed.Resolve(err));

      std::ostringstream text;
      text << "param,power\n";
      for (std::size_t i = 0; i < sweep.size(); ++i) {
        FamilyOptions alt_family = power_family;
        if (power_family.family == "quasi-uniform") {
          alt_family.delta = sweep[i];
        } else if (power_family.family == "hyp-gaussian") {
          alt_family.sigma = sweep[i];
        } else {
          alt_family.rewire = sweep[i];
        }
        const GeneratorSpec alternative = MakeSpec(alt_family);
        ComparisonConfig point_cfg = cfg;
        point_cfg.seed = DeriveStream(cfg.seed, "sweep", i)();
        const PowerResult r = PowerSimulation(base, alternative, pairs, point_cfg);
        err << Describe(base) << " vs " << Describe(alternative) << ": " << r.rejections << "/"
            << r.pairs << " rejected\n";
        text << FormatDouble(sweep[i]) << ',' << FormatDouble(r.power) << '\n';
      }
      Emit(text.str(), output, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const EmbeddingError& e) {
    err << "embedding failed (" << ToString(e.reason()) << "): " << e.what() << '\n';
    return kExitEmbedding;
  } catch (const RetryLimitExceeded& e) {
    err << "embedding failed: " << e.what() << '\n';
    return kExitEmbedding;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace hypnet::cli
