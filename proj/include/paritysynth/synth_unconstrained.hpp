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
#include <optional>
#include <string_view>
#include <vector>

#include "paritysynth/core.hpp"

namespace paritysynth {

enum class Strategy : std::uint8_t { Naive, Recursive, Steiner, Dfs };

std::string_view to_string(Strategy s);
std::optional<Strategy> parse_strategy(std::string_view name);
/// Steiner and Dfs respect a coupling graph; Naive and Recursive do not.
inline bool is_constrained(Strategy s) { return s == Strategy::Steiner || s == Strategy::Dfs; }

/// How the residual linear map was returned to the identity.
enum class Cleanup : std::uint8_t { None, Uncompute, LinearSynthesis };
std::string_view to_string(Cleanup c);

struct SynthesisReport {
  Circuit circuit;
  std::size_t cnots = 0;
  std::size_t depth = 0;
  Strategy strategy = Strategy::Naive;
  /// CNOTs spent on each term, in polynomial order. Filled by the per-term
  /// strategies only.
  std::vector<std::size_t> per_term_cnots;
  Cleanup cleanup = Cleanup::None;
  std::size_t cleanup_cnots = 0;
};

/// CNOT ladder per term: fold the participants onto the lowest one in index
/// order, RZ, unfold. Exactly 2(h-1) CNOTs per term.
SynthesisReport synth_naive(const PhasePolynomial& p);

/**
 * Divide-and-conquer synthesis: repeatedly take the qubit that participates
 * in the most remaining terms and disconnect it from all of them (see
 * disconnect_qubit), emitting each RZ as soon as its term sits on a single
 * wire. The residual linear map is then undone by whichever is cheaper:
 * replaying the CNOTs in reverse or synth_linear.
 */
SynthesisReport synth_recursive(const PhasePolynomial& p);

/// A row operation "row[target] ^= row[control]" on a LinearFunction, which
/// is exactly CNOT(control, target) appended to a circuit.
using RowOp = Gate;

/**
 * Patel-Markov-Hayes elimination: the CNOTs that, appended to a circuit whose
 * linear map is f, bring every wire back to its input. Block size is
 * max(1, round(log2(n) / 2)) unless `section_size` is given.
 */
std::vector<RowOp> pmh_reduce(const LinearFunction& f, std::size_t section_size = 0);

/// Plain Gauss-Jordan elimination with the same contract as pmh_reduce.
std::vector<RowOp> gauss_reduce(const LinearFunction& f);

/// The shorter of pmh_reduce and gauss_reduce (PMH on ties). At small n the
/// block heuristic occasionally spends one or two CNOTs more than plain
/// elimination.
std::vector<RowOp> linear_reduce(const LinearFunction& f);

/// CNOT circuit implementing f, built from linear_reduce.
Circuit synth_linear(const LinearFunction& f);

/// CNOT circuit implementing f by plain Gaussian elimination; the baseline
/// synth_linear is measured against.
Circuit synth_linear_gauss(const LinearFunction& f);

struct DisconnectResult {
  /// Emitted CNOTs in order.
  std::vector<Gate> cnots;
  /// The input matrix after the CNOTs, with realized columns removed.
  ParityMatrix matrix;
  /// Input column indices that reached weight 1 (and would receive their RZ),
  /// in realization order.
  std::vector<std::size_t> realized;
};

/**
 * Empties row q: afterwards no unrealized term involves qubit q.
 *
 * Columns of weight 1 count as realized and are dropped (also those already
 * of weight 1 on input). Each step either adds another row into row q
 * (CNOT(q, r): every term containing r is split off from q at once) picking
 * the r that disconnects the most terms, or, when no such addition makes
 * progress, folds the lightest remaining term onto q with CNOT(r, q) so it is
 * realized there.
 */
DisconnectResult disconnect_qubit(const ParityMatrix& m, Qubit q);

}  // namespace paritysynth
