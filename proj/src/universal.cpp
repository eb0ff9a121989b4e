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

#include "paritysynth/universal.hpp"

#include "paritysynth/errors.hpp"

namespace paritysynth {

std::size_t Segmentation::total_terms() const {
  std::size_t total = 0;
  for (auto g : segment_term_counts) total += g;
  return total;
}

Segmentation segment(const Circuit& c) {
  const std::size_t n = c.num_qubits();
  Segmentation out;
  out.num_qubits = n;
  Circuit run(n);
  std::vector<Qubit> layer;
  std::vector<bool> in_layer(n, false);

  auto close_segment = [&] {
    Extraction e = extract(run);
    out.segment_term_counts.push_back(e.polynomial.size());
    out.segments.push_back(std::move(e));
    run = Circuit(n);
  };
  auto close_layer = [&] {
    out.hadamard_layers.push_back(layer);
    for (Qubit q : layer) in_layer[q] = false;
    layer.clear();
  };

  for (const auto& g : c.gates()) {
    if (g.kind == GateKind::SWAP) throw UnsupportedGateError("segment: SWAP is not supported");
    if (g.kind == GateKind::H) {
      if (layer.empty()) {
        close_segment();
      } else if (in_layer[g.q0]) {
        close_layer();
        close_segment();
      }
      layer.push_back(g.q0);
      in_layer[g.q0] = true;
      continue;
    }
    if (!layer.empty()) close_layer();
    run.add(g);
  }
  if (!layer.empty()) close_layer();
  close_segment();
  return out;
}

namespace {

void append_layer(Circuit& c, const std::vector<Qubit>& layer) {
  for (Qubit q : layer) c.h(q);
}

}  // namespace

Circuit reassemble(const Segmentation& s) {
  Circuit out(s.num_qubits);
  for (std::size_t i = 0; i < s.segments.size(); ++i) {
    out.append(synth_naive(s.segments[i].polynomial).circuit);
    out.append(synth_linear(s.segments[i].linear));
    if (i < s.hadamard_layers.size()) append_layer(out, s.hadamard_layers[i]);
  }
  return out;
}

UniversalReport resynthesize(const Circuit& c, const CouplingGraph* g, Strategy strategy) {
  if (g != nullptr && g->num_vertices() != c.num_qubits()) {
    throw DimensionError("coupling graph and circuit sizes differ");
  }
  const Segmentation s = segment(c);
  UniversalReport report;
  report.strategy = strategy;
  report.circuit = Circuit(c.num_qubits());
  for (std::size_t i = 0; i < s.segments.size(); ++i) {
    const ConstrainedReport part = synthesize(s.segments[i].polynomial, strategy, g);
    report.circuit.append(part.circuit);
    report.splits += part.splits;
    report.cnots_per_split_max = std::max(report.cnots_per_split_max, part.cnots_per_split_max);
    report.circuit.append(g != nullptr ? synth_linear_constrained(s.segments[i].linear, *g)
                                       : synth_linear(s.segments[i].linear));
    if (i < s.hadamard_layers.size()) append_layer(report.circuit, s.hadamard_layers[i]);
  }
  report.segment_term_counts = s.segment_term_counts;
  report.hadamard_layers = s.hadamard_layers.size();
  report.cnots = cnot_count(report.circuit);
  report.depth = cnot_depth(report.circuit);
  if (g != nullptr) {
    report.graph_id = g->name();
    report.violations = check_connectivity(report.circuit, *g).size();
  }
  return report;
}

}  // namespace paritysynth
