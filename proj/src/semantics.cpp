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

#include "paritysynth/semantics.hpp"

#include <cmath>
#include <string>

#include "paritysynth/errors.hpp"

namespace paritysynth {

PathSumState::PathSumState(std::size_t n) : n_(n) {
  wires_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) wires_.push_back(BitVec::unit(n, i));
}

void PathSumState::cnot(Qubit control, Qubit target) {
  if (control == target || control >= n_ || target >= n_) throw OperandError("bad CNOT operands");
  wires_[target] ^= wires_[control];
}

void PathSumState::rz(double theta, Qubit q) {
  if (q >= n_) throw OperandError("RZ operand out of range");
  const BitVec& parity = wires_[q];
  auto [it, inserted] = index_.try_emplace(parity, table_.size());
  if (inserted) {
    table_.push_back({parity, Angle(theta)});
  } else {
    table_[it->second].angle += Angle(theta);
  }
}

PhasePolynomial PathSumState::polynomial() const { return make_phase_polynomial(n_, table_); }

Extraction extract(const Circuit& circuit) {
  PathSumState state(circuit.num_qubits());
  for (const auto& g : circuit.gates()) {
    switch (g.kind) {
      case GateKind::CNOT:
        state.cnot(g.q0, g.q1);
        break;
      case GateKind::RZ:
        state.rz(g.angle, g.q0);
        break;
      case GateKind::H:
        throw UnsupportedGateError("extract: H is not a phase-polynomial gate");
      case GateKind::SWAP:
        throw UnsupportedGateError("extract: expand SWAP gates first");
    }
  }
  return {state.polynomial(), state.linear_function()};
}

bool equivalent(const Circuit& a, const Circuit& b) {
  if (a.num_qubits() != b.num_qubits()) return false;
  return extract(a) == extract(b);
}

bool implements(const Circuit& circuit, const PhasePolynomial& p) {
  if (circuit.num_qubits() != p.num_qubits()) return false;
  const Extraction e = extract(circuit);
  return e.linear.is_identity() && e.polynomial == p;
}

Amplitudes statevector_sim(const Circuit& circuit, std::size_t input) {
  const std::size_t n = circuit.num_qubits();
  if (n > kMaxStatevectorQubits) {
    throw CapacityError("statevector simulation is capped at " + std::to_string(kMaxStatevectorQubits) + " qubits");
  }
  const std::size_t dim = std::size_t{1} << n;
  if (input >= dim) throw OperandError("basis input out of range");
  Amplitudes state(dim, 0.0);
  state[input] = 1.0;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (const auto& g : circuit.gates()) {
    const std::size_t m0 = std::size_t{1} << g.q0;
    const std::size_t m1 = std::size_t{1} << g.q1;
    switch (g.kind) {
      case GateKind::CNOT:
        for (std::size_t i = 0; i < dim; ++i) {
          if ((i & m0) && !(i & m1)) std::swap(state[i], state[i | m1]);
        }
        break;
      case GateKind::SWAP:
        for (std::size_t i = 0; i < dim; ++i) {
          if ((i & m0) && !(i & m1)) std::swap(state[i], state[(i & ~m0) | m1]);
        }
        break;
      case GateKind::RZ: {
        const std::complex<double> lo = std::polar(1.0, -g.angle / 2);
        const std::complex<double> hi = std::polar(1.0, g.angle / 2);
        for (std::size_t i = 0; i < dim; ++i) state[i] *= (i & m0) ? hi : lo;
        break;
      }
      case GateKind::H:
        for (std::size_t i = 0; i < dim; ++i) {
          if (i & m0) continue;
          const auto a = state[i];
          const auto b = state[i | m0];
          state[i] = (a + b) * inv_sqrt2;
          state[i | m0] = (a - b) * inv_sqrt2;
        }
        break;
    }
  }
  return state;
}

bool unitary_equivalent(const Circuit& a, const Circuit& b, double tolerance) {
  if (a.num_qubits() != b.num_qubits()) return false;
  const std::size_t dim = std::size_t{1} << a.num_qubits();
  std::complex<double> phase = 0.0;
  bool phase_fixed = false;
  for (std::size_t input = 0; input < dim; ++input) {
    const Amplitudes va = statevector_sim(a, input);
    const Amplitudes vb = statevector_sim(b, input);
    if (!phase_fixed) {
      std::size_t k = 0;
      for (std::size_t i = 1; i < dim; ++i) {
        if (std::abs(va[i]) > std::abs(va[k])) k = i;
      }
      if (std::abs(vb[k]) < 1e-12) return false;
      phase = vb[k] / va[k];
      phase /= std::abs(phase);
      phase_fixed = true;
    }
    for (std::size_t i = 0; i < dim; ++i) {
      if (std::abs(vb[i] - phase * va[i]) > tolerance) return false;
    }
  }
  return true;
}

std::vector<Violation> check_connectivity(const Circuit& circuit, const CouplingGraph& g) {
  std::vector<Violation> out;
  const auto& gates = circuit.gates();
  for (std::size_t i = 0; i < gates.size(); ++i) {
    if (gates[i].is_two_qubit() && !g.has_edge(gates[i].q0, gates[i].q1)) {
      out.push_back({i, {gates[i].q0, gates[i].q1}});
    }
  }
  return out;
}

}  // namespace paritysynth
