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
#include <string>
#include <vector>

#include "paritysynth/core.hpp"
#include "paritysynth/graph.hpp"
#include "paritysynth/synth_unconstrained.hpp"

namespace paritysynth {

/// Accounting for one disconnect_qubit_dfs call.
struct DisconnectStats {
  Qubit qubit = 0;
  std::size_t cnots = 0;
  /// descends + in_place + fold_cnots. Each of these separates at least one
  /// term from the rest of its group.
  std::size_t splits = 0;
  std::size_t descends = 0;
  std::size_t ascends = 0;
  std::size_t in_place = 0;
  std::size_t fold_cnots = 0;
  /// Where the logical row of q ended up. Differs from q only when every term
  /// was realized before the walk returned to the root.
  Qubit final_position = 0;
};

struct ConstrainedReport : SynthesisReport {
  std::string graph_id;
  std::size_t violations = 0;
  std::size_t splits = 0;
  /// max over disconnect calls of cnots / splits; the per-call bound is 4.
  double cnots_per_split_max = 0.0;
  std::vector<DisconnectStats> disconnects;
};

/**
 * Per-term Steiner ladders. For each term: a Steiner tree over its support,
 * rooted at the lowest participating qubit; one CNOT pulls each Steiner node
 * into the parity, one CNOT per edge folds it toward the root, RZ on the
 * root, then the mirror image. Throws DimensionError on a size mismatch.
 */
ConstrainedReport synth_steiner_naive(const PhasePolynomial& p, const CouplingGraph& g);

struct DfsDisconnectResult {
  std::vector<Gate> gates;
  ParityMatrix matrix;
  std::size_t splits = 0;
  Qubit final_position = 0;
  std::vector<std::size_t> realized;
  DisconnectStats stats;
};

/**
 * Empties row q using only CNOTs on edges of `tree` (which must be rooted at
 * q, else OperandError).
 *
 * The logical row of q walks the tree depth first. Stepping from a to a child
 * b is CNOT(b, a) CNOT(a, b), i.e. row a += row b followed by swapping rows a
 * and b; stepping back is the inverse pair. At each position a child's row is
 * added into q's row in place when that separates more terms than it joins.
 * Terms that no walk separates are folded onto the root along their tree
 * span. Weight-1 columns are realized as they appear.
 */
DfsDisconnectResult disconnect_qubit_dfs(const ParityMatrix& m, Qubit q, const SpanningTree& tree);

/**
 * Architecture-aware synthesis. Qubits are eliminated leaves-first along a BFS
 * tree of `g` from vertex 0, so the remaining vertices always stay connected;
 * each is disconnected with disconnect_qubit_dfs over a BFS tree of the
 * remaining graph. The residual linear map is undone by the cheaper of
 * replaying the CNOTs backwards and synth_linear_constrained.
 */
ConstrainedReport synth_constrained_dfs(const PhasePolynomial& p, const CouplingGraph& g);

/**
 * Steiner-tree Gaussian elimination (RowCol). Vertices are eliminated in
 * leaves-first order; for each, a Steiner tree over the column support clears
 * the column, then one over a solving set of rows clears the row. Every CNOT
 * is on an edge of g. Throws RankError for singular f, DimensionError on a
 * size mismatch.
 */
Circuit synth_linear_constrained(const LinearFunction& f, const CouplingGraph& g);

/**
 * Runs `strategy` on p. With a graph, Steiner and Dfs respect it, while Naive
 * and Recursive ignore it and report their violations. Steiner and Dfs
 * without a graph run on the complete graph.
 */
ConstrainedReport synthesize(const PhasePolynomial& p, Strategy strategy, const CouplingGraph* g = nullptr);

}  // namespace paritysynth
