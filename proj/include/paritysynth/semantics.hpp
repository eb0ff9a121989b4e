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

#include <complex>
#include <cstddef>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "paritysynth/core.hpp"
#include "paritysynth/graph.hpp"

namespace paritysynth {

/**
 * Path-sum view of a CNOT+RZ circuit: which input parity each wire holds, and
 * the accumulated angle per parity. Zero angles and the all-zero parity
 * (a global phase) never appear in the table.
 */
class PathSumState {
 public:
  explicit PathSumState(std::size_t n);

  /// CNOT(control, target): wire[target] ^= wire[control].
  void cnot(Qubit control, Qubit target);
  void rz(double theta, Qubit q);

  const std::vector<BitVec>& wire_parities() const { return wires_; }
  PhasePolynomial polynomial() const;
  LinearFunction linear_function() const { return LinearFunction(wires_); }

 private:
  std::size_t n_;
  std::vector<BitVec> wires_;
  std::vector<ParityTerm> table_;
  std::unordered_map<BitVec, std::size_t, BitVecHash> index_;
};

struct Extraction {
  PhasePolynomial polynomial;
  LinearFunction linear;

  friend bool operator==(const Extraction&, const Extraction&) = default;
};

/// Folded phase polynomial and final linear map of a CNOT+RZ circuit.
/// Throws UnsupportedGateError on H or SWAP.
Extraction extract(const Circuit& circuit);

/// Same (polynomial, linear function) pair; angles compared with tolerance.
bool equivalent(const Circuit& a, const Circuit& b);

/// True when `circuit` implements exactly `p` and returns every wire to its
/// input.
bool implements(const Circuit& circuit, const PhasePolynomial& p);

using Amplitudes = std::vector<std::complex<double>>;

inline constexpr std::size_t kMaxStatevectorQubits = 12;

/// Dense simulation of {CNOT, RZ, H, SWAP} from basis state |input>. Qubit i
/// is bit i of the basis index. RZ(t) = diag(e^{-it/2}, e^{it/2}).
Amplitudes statevector_sim(const Circuit& circuit, std::size_t input);

/// Compares the two unitaries column by column over every basis input with a
/// single global phase shared by all columns.
bool unitary_equivalent(const Circuit& a, const Circuit& b, double tolerance = 1e-7);

struct Violation {
  std::size_t gate_index;
  Edge pair;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Every two-qubit gate whose operands are not adjacent in `g`.
std::vector<Violation> check_connectivity(const Circuit& circuit, const CouplingGraph& g);

}  // namespace paritysynth
