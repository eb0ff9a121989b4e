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
#include <string>
#include <vector>

#include "paritysynth/core.hpp"
#include "paritysynth/graph.hpp"
#include "paritysynth/synth_unconstrained.hpp"

namespace paritysynth {

inline constexpr std::size_t kOracleMaxQubits = 4;
inline constexpr std::size_t kOracleMaxBudget = 12;

struct OptimalityCertificate {
  std::string instance;
  /// Empty when the budget ran out first.
  std::optional<std::size_t> optimal_cnots;
  Circuit witness;
  std::size_t nodes_explored = 0;
  bool budget_hit = false;
};

/**
 * Exact minimum CNOT count for p (on g when given) by breadth-first search over
 * (wire parities, unrealized terms). A term is realized for free whenever some
 * wire holds its parity; the goal is every term realized with the wires back
 * at the identity. Throws CapacityError for n > 4 or a budget above 12.
 */
OptimalityCertificate optimal_cnot_count(const PhasePolynomial& p, const CouplingGraph* g, std::size_t max_cnots);

struct RatioSummary {
  std::size_t count = 0;
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
  double median = 0.0;
  std::vector<double> ratios;
  /// Instances where the oracle gave up within budget; not in `ratios`.
  std::size_t skipped = 0;
};

/// strategy count / optimal count over `instances` (on g when given). An
/// instance whose optimum is 0 counts as ratio 1 when the strategy also
/// needs no CNOTs.
RatioSummary ratio_vs_optimal(Strategy strategy, const std::vector<PhasePolynomial>& instances,
                              const CouplingGraph* g = nullptr, std::size_t max_cnots = kOracleMaxBudget);

/// Every polynomial on n qubits with between 1 and max_terms distinct terms,
/// all at angle pi/4.
std::vector<PhasePolynomial> enumerate_polynomials(std::size_t n, std::size_t max_terms);

inline constexpr std::size_t kSteinerOracleMaxVertices = 20;

/// Minimum edge count of a tree in g spanning `terminals`, by trying every
/// subset of non-terminal vertices. Throws CapacityError above 20 vertices.
std::size_t exact_steiner_edges(const CouplingGraph& g, const std::vector<Qubit>& terminals);

}  // namespace paritysynth
