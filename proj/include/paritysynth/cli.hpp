// Copyright 2026 The paritysynth Authors
//
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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "paritysynth/core.hpp"
#include "paritysynth/graph.hpp"
#include "paritysynth/synth_unconstrained.hpp"

namespace paritysynth {

enum class OutputFormat : std::uint8_t { Table, Records };

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInputError = 2;

struct RunConfig {
  /// synth, route, compare, verify or bench.
  std::string command;
  std::vector<std::string> inputs;
  /// Family shorthand ("line:16"), bare family name sized per instance
  /// ("line", "grid"; comma-separated for sweeps), or a graph file path.
  std::string graph;
  /// Strategy name; bench also takes "all".
  std::string strategy = "dfs";
  std::uint64_t seed = 1;
  std::vector<std::size_t> n_values;
  std::vector<std::size_t> g_values;
  std::size_t seeds = 1;
  std::string out;
  bool verify = false;
  OutputFormat format = OutputFormat::Records;
  /// 0 means PARITYSYNTH_THREADS, or the hardware concurrency when unset.
  std::size_t threads = 0;
};

nlohmann::ordered_json to_json(const RunConfig& config);

/// Seed of instance `index` in the (n, g) cell of a sweep rooted at `base`.
std::uint64_t instance_seed(std::uint64_t base, std::size_t n, std::size_t g, std::size_t index);

/// Resolves a --graph value for an instance on n qubits. Throws
/// DimensionError when a sized spec or file does not have n vertices.
CouplingGraph resolve_graph(const std::string& spec, std::size_t n);

/// Worker count: config.threads, else PARITYSYNTH_THREADS, else the hardware
/// concurrency. Always at least 1.
std::size_t worker_count(const RunConfig& config);

/// Runs job(i) for i in [0, count) on `workers` threads. Results land in
/// index order whatever the scheduling.
void parallel_for(std::size_t count, std::size_t workers, const std::function<void(std::size_t)>& job);

struct PipelineComparison {
  /// Unconstrained recursive synthesis, before routing.
  std::size_t baseline_cnots = 0;
  /// Same circuit after SWAP routing, three CNOTs per SWAP.
  std::size_t routed_cnots = 0;
  std::size_t swaps = 0;
  std::size_t constrained_cnots = 0;
  std::size_t routed_depth = 0;
  std::size_t constrained_violations = 0;
  std::size_t constrained_depth = 0;
  /// routed / baseline and constrained / baseline; empty for a zero baseline.
  std::optional<double> routed_alpha;
  std::optional<double> constrained_alpha;
  /// Filled only when verification was requested.
  std::optional<bool> verified;
};

/// Runs both pipelines on one instance.
PipelineComparison compare_pipelines(const PhasePolynomial& p, const CouplingGraph& g, Strategy constrained,
                                     bool verify);

struct ScalingFit {
  double exponent = 0.0;
  double intercept = 0.0;
  std::size_t points = 0;
};

/// Least-squares fit of log y = exponent * log x + intercept. Points with a
/// non-positive coordinate are dropped.
ScalingFit fit_power_law(const std::vector<double>& x, const std::vector<double>& y);

// Each command writes its report to `out` and diagnostics to `err`, and
// returns an exit code. Library errors propagate; run() maps them to
// kExitInputError.
int cmd_synth(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_route(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_compare(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_bench(const RunConfig& config, std::ostream& out, std::ostream& err);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace paritysynth
