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
#include <optional>
#include <vector>

#include "paritysynth/core.hpp"
#include "paritysynth/graph.hpp"

namespace paritysynth {

/// mapping[logical] = physical.
using Mapping = std::vector<Qubit>;

Mapping identity_mapping(std::size_t n);

struct RoutingReport {
  /// Over physical qubits; contains SWAP gates.
  Circuit routed_circuit;
  /// CNOTs of the routed circuit, three per SWAP.
  std::size_t c_routed = 0;
  /// CNOTs of the input circuit.
  std::size_t c_baseline = 0;
  /// c_routed / c_baseline; empty when the input has no CNOTs.
  std::optional<double> alpha;
  std::size_t swaps_inserted = 0;
  Mapping initial_mapping;
  Mapping final_mapping;
};

/**
 * Greedy SWAP router. Every gate is applied to the current physical location
 * of its operands. Before a CNOT whose operands are not adjacent, the control
 * is swapped one step at a time along a shortest path toward the target
 * (lowest-index next vertex on ties).
 *
 * Throws MappingError if `mapping` is not a permutation of the graph's
 * vertices, UnsupportedGateError on SWAP input, DimensionError on size
 * mismatch.
 */
RoutingReport route_swaps(const Circuit& c, const CouplingGraph& g, const Mapping& mapping);

/// c_routed / c_baseline. Throws UndefinedOverheadError for a zero baseline.
double overhead_factor(std::size_t c_routed, std::size_t c_baseline);

/**
 * Checks a routed CNOT+RZ circuit against its source: same phase polynomial
 * once logical qubit l is read as physical wire initial_mapping[l], and
 * physical wire final_mapping[l] ends holding what logical wire l held.
 */
bool routing_equivalent(const Circuit& original, const RoutingReport& report);

}  // namespace paritysynth
