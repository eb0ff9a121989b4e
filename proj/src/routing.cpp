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

#include "paritysynth/routing.hpp"

#include "paritysynth/errors.hpp"
#include "paritysynth/semantics.hpp"

namespace paritysynth {

Mapping identity_mapping(std::size_t n) {
  Mapping m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = i;
  return m;
}

namespace {

void check_bijection(const Mapping& m, std::size_t n) {
  if (m.size() != n) throw MappingError("mapping has the wrong size");
  std::vector<bool> seen(n, false);
  for (Qubit p : m) {
    if (p >= n || seen[p]) throw MappingError("mapping is not a permutation");
    seen[p] = true;
  }
}

}  // namespace

RoutingReport route_swaps(const Circuit& c, const CouplingGraph& g, const Mapping& mapping) {
  const std::size_t n = g.num_vertices();
  if (c.num_qubits() != n) throw DimensionError("circuit and coupling graph sizes differ");
  check_bijection(mapping, n);

  RoutingReport report;
  report.initial_mapping = mapping;
  report.routed_circuit = Circuit(n);
  Mapping l2p = mapping;
  Mapping p2l(n);
  for (Qubit l = 0; l < n; ++l) p2l[l2p[l]] = l;

  for (const auto& gate : c.gates()) {
    switch (gate.kind) {
      case GateKind::RZ:
        report.routed_circuit.rz(gate.angle, l2p[gate.q0]);
        break;
      case GateKind::H:
        report.routed_circuit.h(l2p[gate.q0]);
        break;
      case GateKind::SWAP:
        throw UnsupportedGateError("route_swaps: input must not contain SWAP gates");
      case GateKind::CNOT: {
        Qubit pc = l2p[gate.q0];
        const Qubit pt = l2p[gate.q1];
        while (!g.has_edge(pc, pt)) {
          const Qubit next = shortest_path(g, pc, pt)[1];
          report.routed_circuit.swap(pc, next);
          ++report.swaps_inserted;
          const Qubit moved = p2l[next];
          std::swap(p2l[pc], p2l[next]);
          l2p[moved] = pc;
          l2p[gate.q0] = next;
          pc = next;
        }
        report.routed_circuit.cnot(pc, pt);
        break;
      }
    }
  }
  report.final_mapping = l2p;
  report.c_routed = cnot_count(report.routed_circuit);
  report.c_baseline = cnot_count(c);
  if (report.c_baseline > 0) report.alpha = overhead_factor(report.c_routed, report.c_baseline);
  return report;
}

double overhead_factor(std::size_t c_routed, std::size_t c_baseline) {
  if (c_baseline == 0) throw UndefinedOverheadError("overhead factor against a zero CNOT baseline");
  return static_cast<double>(c_routed) / static_cast<double>(c_baseline);
}

bool routing_equivalent(const Circuit& original, const RoutingReport& report) {
  const std::size_t n = original.num_qubits();
  if (report.routed_circuit.num_qubits() != n) return false;
  Circuit relabelled(n);
  for (Gate gate : original.gates()) {
    gate.q0 = report.initial_mapping[gate.q0];
    if (gate.is_two_qubit()) gate.q1 = report.initial_mapping[gate.q1];
    relabelled.add(gate);
  }
  const Extraction want = extract(relabelled);
  const Extraction got = extract(expand_swaps(report.routed_circuit));
  if (!(want.polynomial == got.polynomial)) return false;
  for (Qubit l = 0; l < n; ++l) {
    if (!(got.linear.row(report.final_mapping[l]) == want.linear.row(report.initial_mapping[l]))) return false;
  }
  return true;
}

}  // namespace paritysynth
