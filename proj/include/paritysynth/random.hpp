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

#include <cstdint>
#include <random>

#include "paritysynth/core.hpp"

namespace paritysynth {

/**
 * Seeded generator for benchmark instances.
 *
 * The engine is std::mt19937_64, whose output sequence is fixed by the
 * standard. Distributions are implemented here (rejection sampling for
 * integers, 53-bit mantissa for reals) because the std:: distributions are
 * not portable across standard libraries.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  /// Uniform in [0, 1).
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

/// g distinct uniformly random non-zero parities on n qubits, angles uniform
/// in (0, 2*pi). Throws DimensionError when g > 2^n - 1.
PhasePolynomial random_polynomial(std::size_t n, std::size_t g, Rng& rng);

/// Random CNOT+H+RZ circuit with exactly `hadamards` H gates and `rotations`
/// RZ gates, padded with `cnots` CNOTs, in shuffled order.
Circuit random_universal_circuit(std::size_t n, std::size_t hadamards, std::size_t rotations,
                                 std::size_t cnots, Rng& rng);

}  // namespace paritysynth
