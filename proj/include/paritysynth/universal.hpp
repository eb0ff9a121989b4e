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
#include <vector>

#include "paritysynth/core.hpp"
#include "paritysynth/graph.hpp"
#include "paritysynth/semantics.hpp"
#include "paritysynth/synth_constrained.hpp"

namespace paritysynth {

/**
 * A CNOT+H+RZ circuit cut at its Hadamards:
 * segments[0], layer[0], segments[1], ..., layer[k-1], segments[k].
 * Consecutive H gates on distinct qubits share a layer.
 */
struct Segmentation {
  std::size_t num_qubits = 0;
  std::vector<Extraction> segments;
  std::vector<std::vector<Qubit>> hadamard_layers;
  /// Folded term count of each segment.
  std::vector<std::size_t> segment_term_counts;

  std::size_t total_terms() const;
};

/// Throws UnsupportedGateError on SWAP.
Segmentation segment(const Circuit& c);

/// Rebuilds a circuit from a segmentation, each segment emitted as a naive
/// ladder followed by synth_linear. Useful to check that nothing is lost in
/// the cut.
Circuit reassemble(const Segmentation& s);

struct UniversalReport : ConstrainedReport {
  std::vector<std::size_t> segment_term_counts;
  std::size_t hadamard_layers = 0;
};

/**
 * Resynthesizes every segment: its polynomial with `strategy` (on g when
 * given), then its linear map with synth_linear_constrained (or synth_linear
 * without a graph), with the Hadamard layers in between unchanged.
 */
UniversalReport resynthesize(const Circuit& c, const CouplingGraph* g, Strategy strategy);

}  // namespace paritysynth
