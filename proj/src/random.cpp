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

#include "paritysynth/random.hpp"

#include <limits>
#include <string>
#include <unordered_set>

#include "paritysynth/errors.hpp"

namespace paritysynth {

std::uint64_t Rng::below(std::uint64_t bound) {
  // Largest multiple of bound that fits; values at or above it are rejected.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % bound;
}

PhasePolynomial random_polynomial(std::size_t n, std::size_t g, Rng& rng) {
  if (n < 64 && g > (std::uint64_t{1} << n) - 1) {
    throw DimensionError("cannot draw " + std::to_string(g) + " distinct parities on " + std::to_string(n) +
                         " qubits");
  }
  std::unordered_set<BitVec, BitVecHash> seen;
  std::vector<ParityTerm> terms;
  terms.reserve(g);
  while (terms.size() < g) {
    BitVec parity(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rng.next() & 1U) parity.set(i);
    }
    if (parity.none() || !seen.insert(parity).second) continue;
    double theta = 0.0;
    while (Angle(theta).is_zero()) theta = rng.uniform01() * kTwoPi;
    terms.push_back({std::move(parity), Angle(theta)});
  }
  return make_phase_polynomial(n, terms);
}

Circuit random_universal_circuit(std::size_t n, std::size_t hadamards, std::size_t rotations,
                                 std::size_t cnots, Rng& rng) {
  if (cnots > 0 && n < 2) throw DimensionError("CNOTs need at least two qubits");
  std::vector<Gate> gates;
  for (std::size_t i = 0; i < hadamards; ++i) gates.push_back(Gate::h(rng.below(n)));
  for (std::size_t i = 0; i < rotations; ++i) {
    gates.push_back(Gate::rz(rng.uniform01() * kTwoPi, rng.below(n)));
  }
  for (std::size_t i = 0; i < cnots; ++i) {
    const Qubit c = rng.below(n);
    Qubit t = rng.below(n - 1);
    if (t >= c) ++t;
    gates.push_back(Gate::cnot(c, t));
  }
  for (std::size_t i = gates.size(); i > 1; --i) std::swap(gates[i - 1], gates[rng.below(i)]);
  Circuit out(n);
  for (const auto& g : gates) out.add(g);
  return out;
}

}  // namespace paritysynth
