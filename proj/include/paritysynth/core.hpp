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
#include <numbers>
#include <span>
#include <utility>
#include <vector>

#include "paritysynth/bitvec.hpp"

namespace paritysynth {

using Qubit = std::size_t;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
/// Absolute tolerance for angle equality after reduction modulo 2*pi.
inline constexpr double kAngleTolerance = 1e-9;

/**
 * Rotation angle in radians, canonicalized to [0, 2*pi).
 *
 * Equality is circular: two angles compare equal when their distance on the
 * circle is below kAngleTolerance, so 2*pi - 1e-12 equals 0.
 */
class Angle {
 public:
  Angle() = default;
  explicit Angle(double radians);

  double radians() const { return value_; }
  bool is_zero() const;

  Angle& operator+=(Angle other) {
    *this = Angle(value_ + other.value_);
    return *this;
  }
  friend Angle operator+(Angle a, Angle b) { return a += b; }
  Angle operator-() const { return Angle(-value_); }

  friend bool operator==(Angle a, Angle b);

 private:
  double value_ = 0.0;
};

/// One term of a phase polynomial: rotate by `angle` when the parity of the
/// participating qubits is 1.
struct ParityTerm {
  BitVec parity;
  Angle angle;

  friend bool operator==(const ParityTerm&, const ParityTerm&) = default;
};

std::size_t hamming_weight(const ParityTerm& term);

/**
 * A set of parity terms on `n` qubits with pairwise distinct, non-zero
 * parities and non-zero angles.
 *
 * Terms keep insertion order (synthesis heuristics are order sensitive);
 * equality ignores order.
 */
class PhasePolynomial {
 public:
  explicit PhasePolynomial(std::size_t n = 0) : n_(n) {}

  std::size_t num_qubits() const { return n_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const std::vector<ParityTerm>& terms() const { return terms_; }
  const ParityTerm& operator[](std::size_t i) const { return terms_[i]; }

  friend bool operator==(const PhasePolynomial& a, const PhasePolynomial& b);

 private:
  friend PhasePolynomial make_phase_polynomial(std::size_t, std::span<const ParityTerm>);

  std::size_t n_;
  std::vector<ParityTerm> terms_;
};

/// Folds duplicate parities by angle addition and drops zero-angle and
/// all-zero-parity terms. Throws DimensionError on a parity of the wrong
/// length.
PhasePolynomial make_phase_polynomial(std::size_t n, std::span<const ParityTerm> raw_terms);

/**
 * n x g matrix over GF(2) whose column j is the parity of term j, expressed
 * in the current wire basis.
 *
 * Stored column-major: synthesis works column by column.
 */
class ParityMatrix {
 public:
  ParityMatrix() = default;
  ParityMatrix(std::size_t n, std::vector<BitVec> columns);
  static ParityMatrix from_polynomial(const PhasePolynomial& p);

  std::size_t rows() const { return n_; }
  std::size_t cols() const { return columns_.size(); }
  const BitVec& column(std::size_t j) const { return columns_[j]; }
  const std::vector<BitVec>& columns() const { return columns_; }
  bool at(std::size_t row, std::size_t col) const { return columns_[col].get(row); }
  BitVec row(std::size_t i) const;

  /// Pairs each column with the matching angle. Sizes must agree.
  PhasePolynomial to_polynomial(std::span<const Angle> angles) const;

  /// CNOT(control, target): row[control] ^= row[target].
  void apply_cnot_inplace(Qubit control, Qubit target);

  friend bool operator==(const ParityMatrix&, const ParityMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<BitVec> columns_;
};

ParityMatrix apply_cnot(ParityMatrix matrix, Qubit control, Qubit target);

enum class GateKind : std::uint8_t { CNOT, RZ, H, SWAP };

struct Gate {
  GateKind kind = GateKind::CNOT;
  /// Control for CNOT, first operand for SWAP, the qubit for RZ and H.
  Qubit q0 = 0;
  /// Target for CNOT, second operand for SWAP, unused otherwise.
  Qubit q1 = 0;
  double angle = 0.0;

  static Gate cnot(Qubit control, Qubit target) { return {GateKind::CNOT, control, target, 0.0}; }
  static Gate rz(double theta, Qubit q) { return {GateKind::RZ, q, 0, theta}; }
  static Gate h(Qubit q) { return {GateKind::H, q, 0, 0.0}; }
  static Gate swap(Qubit a, Qubit b) { return {GateKind::SWAP, a, b, 0.0}; }

  bool is_two_qubit() const { return kind == GateKind::CNOT || kind == GateKind::SWAP; }

  /// Structural equality; RZ angles compared modulo 2*pi with tolerance.
  friend bool operator==(const Gate& a, const Gate& b);
};

class Circuit {
 public:
  explicit Circuit(std::size_t n = 0) : n_(n) {}

  std::size_t num_qubits() const { return n_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  /// Validates operands; throws OperandError.
  Circuit& add(const Gate& gate);
  Circuit& cnot(Qubit control, Qubit target) { return add(Gate::cnot(control, target)); }
  Circuit& rz(double theta, Qubit q) { return add(Gate::rz(theta, q)); }
  Circuit& h(Qubit q) { return add(Gate::h(q)); }
  Circuit& swap(Qubit a, Qubit b) { return add(Gate::swap(a, b)); }
  Circuit& append(const Circuit& other);

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  std::size_t n_;
  std::vector<Gate> gates_;
};

/// CNOTs plus three per SWAP.
std::size_t cnot_count(const Circuit& circuit);

/// Greedy ASAP layering of two-qubit gates (a SWAP occupies three layers);
/// single-qubit gates are ignored.
std::size_t cnot_depth(const Circuit& circuit);

/// Replaces each SWAP(a, b) by CNOT(a, b) CNOT(b, a) CNOT(a, b).
Circuit expand_swaps(const Circuit& circuit);

/// Removes pairs of identical adjacent CNOTs until none remain.
Circuit cancel_adjacent_cnots(const Circuit& circuit);

/**
 * Invertible n x n matrix over GF(2). Row i is the parity of the circuit
 * inputs that wire i holds, so the identity means every wire holds its own
 * input.
 */
class LinearFunction {
 public:
  LinearFunction() = default;
  /// Throws RankError when the rows are not linearly independent.
  explicit LinearFunction(std::vector<BitVec> rows);
  static LinearFunction identity(std::size_t n);

  std::size_t size() const { return rows_.size(); }
  const BitVec& row(std::size_t i) const { return rows_[i]; }
  const std::vector<BitVec>& rows() const { return rows_; }
  bool is_identity() const;

  /// Wire rule for CNOT(control, target): row[target] ^= row[control].
  void apply_cnot(Qubit control, Qubit target);
  void swap_rows(std::size_t a, std::size_t b) { std::swap(rows_[a], rows_[b]); }

  LinearFunction inverse() const;
  LinearFunction transpose() const;

  friend bool operator==(const LinearFunction&, const LinearFunction&) = default;

 private:
  std::vector<BitVec> rows_;
};

/// Rank of a set of equal-length vectors over GF(2).
std::size_t gf2_rank(std::vector<BitVec> rows);

}  // namespace paritysynth
