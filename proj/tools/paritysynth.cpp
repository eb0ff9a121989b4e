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

// paritysynth: synthesize, route, compare, verify and benchmark CNOT+RZ
// circuits from the command line.

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "paritysynth/cli.hpp"

using paritysynth::OutputFormat;
using paritysynth::RunConfig;

namespace {

void add_common(CLI::App* sub, RunConfig& config) {
  sub->add_option("--graph", config.graph,
                  "coupling graph: family spec (line:16, grid:4x4, heavyhex:2, complete:8, ring:12, "
                  "randomtree:16:seed7), bare family name, or graph file");
  sub->add_option("--strategy", config.strategy, "naive, recursive, steiner or dfs")->capture_default_str();
  sub->add_option("--seed", config.seed, "base seed")->capture_default_str();
  sub->add_option("--out", config.out, "output path");
  sub->add_flag("--verify", config.verify, "check every produced circuit; exit 1 on mismatch");
  sub->add_option("--format", config.format, "table or records")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, OutputFormat>{{"table", OutputFormat::Table}, {"records", OutputFormat::Records}}))
      ->option_text("table|records [records]");
  sub->add_option("--threads", config.threads, "worker threads (default: PARITYSYNTH_THREADS or all cores)");
}

void add_sweep(CLI::App* sub, RunConfig& config) {
  sub->add_option("--n", config.n_values, "qubit counts")->delimiter(',');
  sub->add_option("--g", config.g_values, "term counts")->delimiter(',');
  sub->add_option("--seeds", config.seeds, "instances per (n, g) cell")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Phase polynomial synthesis with and without connectivity constraints"};
  app.require_subcommand(1);
  RunConfig config;

  auto* synth = app.add_subcommand("synth", "synthesize a .poly file, a QASM circuit, or a random instance");
  synth->add_option("input", config.inputs, "polynomial (.poly) or QASM file");
  add_common(synth, config);
  add_sweep(synth, config);

  auto* route = app.add_subcommand("route", "route a QASM circuit with SWAP insertion and report alpha");
  route->add_option("input", config.inputs, "QASM file")->required();
  add_common(route, config);

  auto* compare = app.add_subcommand("compare", "constrained synthesis against synthesis plus SWAP routing");
  add_common(compare, config);
  add_sweep(compare, config);

  auto* verify = app.add_subcommand("verify", "check equivalence and connectivity");
  verify->add_option("inputs", config.inputs, "circuit, then a circuit or .poly file")->required();
  add_common(verify, config);

  auto* bench = app.add_subcommand("bench", "timing and CNOT-count sweeps with scaling fits");
  add_common(bench, config);
  add_sweep(bench, config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return paritysynth::kExitInputError;
  }
  config.command = app.get_subcommands().front()->get_name();
  return paritysynth::run(config, std::cout, std::cerr);
}
