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

namespace paritysynth::detail {

/**
 * Working state of a phase-polynomial synthesis run.
 *
 * Holds the parity matrix in the current wire basis (column-major), the
 * circuit emitted so far and the linear map of its CNOTs. A column is
 * "realized" the moment it reaches Hamming weight 1: its RZ goes on that wire
 * and the column leaves the table.
 */
class TermTable {
 public:
  TermTable(std::size_t n, std::vector<BitVec> columns, std::vector<double> angles)
      : n_(n),
        columns_(std::move(columns)),
        angles_(std::move(angles)),
        alive_(columns_.size(), true),
        alive_count_(columns_.size()),
        circuit_(n),
        linear_(LinearFunction::identity(n)) {
    realize();
  }

  static TermTable from_polynomial(const PhasePolynomial& p) {
    std::vector<BitVec> cols;
    std::vector<double> angles;
    for (const auto& t : p.terms()) {
      cols.push_back(t.parity);
      angles.push_back(t.angle.radians());
    }
    return TermTable(p.num_qubits(), std::move(cols), std::move(angles));
  }

  std::size_t num_qubits() const { return n_; }
  std::size_t num_columns() const { return columns_.size(); }
  std::size_t alive_count() const { return alive_count_; }
  bool alive(std::size_t j) const { return alive_[j]; }
  const BitVec& column(std::size_t j) const { return columns_[j]; }
  const std::vector<BitVec>& columns() const { return columns_; }

  /// Emits CNOT(control, target); in the parity matrix row[control] ^=
  /// row[target].
  void cnot(Qubit control, Qubit target) {
    for (std::size_t j = 0; j < columns_.size(); ++j) {
      if (alive_[j] && columns_[j].get(target)) columns_[j].flip(control);
    }
    circuit_.cnot(control, target);
    cnots_.push_back(Gate::cnot(control, target));
    linear_.apply_cnot(control, target);
    realize();
  }

  /// Number of live columns in which qubit q participates.
  std::size_t participation(Qubit q) const {
    std::size_t count = 0;
    for (std::size_t j = 0; j < columns_.size(); ++j) {
      if (alive_[j] && columns_[j].get(q)) ++count;
    }
    return count;
  }

  const Circuit& circuit() const { return circuit_; }
  Circuit& circuit() { return circuit_; }
  const std::vector<Gate>& cnots() const { return cnots_; }
  const LinearFunction& linear() const { return linear_; }
  const std::vector<std::size_t>& realized_order() const { return realized_; }

 private:
  void realize() {
    for (std::size_t j = 0; j < columns_.size(); ++j) {
      if (alive_[j] && columns_[j].popcount() == 1) {
        circuit_.rz(angles_[j], columns_[j].first_set());
        alive_[j] = false;
        --alive_count_;
        realized_.push_back(j);
      }
    }
  }

  std::size_t n_;
  std::vector<BitVec> columns_;
  std::vector<double> angles_;
  std::vector<bool> alive_;
  std::size_t alive_count_;
  Circuit circuit_;
  std::vector<Gate> cnots_;
  LinearFunction linear_;
  std::vector<std::size_t> realized_;
};

/// Circuit of the CNOTs in reverse order; undoes their linear map.
inline Circuit reversed_cnots(std::size_t n, const std::vector<Gate>& cnots) {
  Circuit out(n);
  for (auto it = cnots.rbegin(); it != cnots.rend(); ++it) out.add(*it);
  return out;
}

/// Reverses a CNOT-only circuit.
inline Circuit reversed(const Circuit& c) { return reversed_cnots(c.num_qubits(), c.gates()); }

}  // namespace paritysynth::detail
