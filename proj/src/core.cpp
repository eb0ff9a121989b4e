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

#include "paritysynth/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

#include "paritysynth/errors.hpp"

namespace paritysynth {

std::optional<BitVec> BitVec::from_string(std::string_view bits) {
  BitVec v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      return std::nullopt;
    }
  }
  return v;
}

std::string BitVec::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

Angle::Angle(double radians) {
  double v = std::fmod(radians, kTwoPi);
  if (v < 0) v += kTwoPi;
  // fmod of a tiny negative number can round up to exactly 2*pi
  if (v >= kTwoPi) v = 0.0;
  value_ = v;
}

bool Angle::is_zero() const { return value_ < kAngleTolerance || kTwoPi - value_ < kAngleTolerance; }

bool operator==(Angle a, Angle b) {
  const double d = std::fabs(a.value_ - b.value_);
  return std::min(d, kTwoPi - d) < kAngleTolerance;
}

std::size_t hamming_weight(const ParityTerm& term) { return term.parity.popcount(); }

PhasePolynomial make_phase_polynomial(std::size_t n, std::span<const ParityTerm> raw_terms) {
  PhasePolynomial out(n);
  std::unordered_map<BitVec, std::size_t, BitVecHash> index;
  std::vector<ParityTerm> merged;
  for (const auto& term : raw_terms) {
    if (term.parity.size() != n) {
      throw DimensionError("parity length " + std::to_string(term.parity.size()) +
                           " does not match qubit count " + std::to_string(n));
    }
    if (term.parity.none()) continue;
    auto [it, inserted] = index.try_emplace(term.parity, merged.size());
    if (inserted) {
      merged.push_back(term);
    } else {
      merged[it->second].angle += term.angle;
    }
  }
  for (auto& term : merged) {
    if (!term.angle.is_zero()) out.terms_.push_back(std::move(term));
  }
  return out;
}

bool operator==(const PhasePolynomial& a, const PhasePolynomial& b) {
  if (a.n_ != b.n_ || a.terms_.size() != b.terms_.size()) return false;
  auto sorted = [](std::vector<ParityTerm> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const ParityTerm& x, const ParityTerm& y) { return x.parity < y.parity; });
    return terms;
  };
  return sorted(a.terms_) == sorted(b.terms_);
}

ParityMatrix::ParityMatrix(std::size_t n, std::vector<BitVec> columns)
    : n_(n), columns_(std::move(columns)) {
  for (const auto& c : columns_) {
    if (c.size() != n_) throw DimensionError("parity matrix column has wrong length");
  }
}

ParityMatrix ParityMatrix::from_polynomial(const PhasePolynomial& p) {
  std::vector<BitVec> cols;
  cols.reserve(p.size());
  for (const auto& t : p.terms()) cols.push_back(t.parity);
  return ParityMatrix(p.num_qubits(), std::move(cols));
}

BitVec ParityMatrix::row(std::size_t i) const {
  BitVec r(columns_.size());
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    if (columns_[j].get(i)) r.set(j);
  }
  return r;
}

PhasePolynomial ParityMatrix::to_polynomial(std::span<const Angle> angles) const {
  if (angles.size() != columns_.size()) throw DimensionError("angle count does not match column count");
  std::vector<ParityTerm> terms;
  terms.reserve(columns_.size());
  for (std::size_t j = 0; j < columns_.size(); ++j) terms.push_back({columns_[j], angles[j]});
  return make_phase_polynomial(n_, terms);
}

void ParityMatrix::apply_cnot_inplace(Qubit control, Qubit target) {
  if (control == target) throw OperandError("CNOT operands must differ");
  if (control >= n_ || target >= n_) throw OperandError("CNOT operand out of range");
  for (auto& c : columns_) {
    if (c.get(target)) c.flip(control);
  }
}

ParityMatrix apply_cnot(ParityMatrix matrix, Qubit control, Qubit target) {
  matrix.apply_cnot_inplace(control, target);
  return matrix;
}

bool operator==(const Gate& a, const Gate& b) {
  if (a.kind != b.kind || a.q0 != b.q0) return false;
  switch (a.kind) {
    case GateKind::CNOT:
    case GateKind::SWAP:
      return a.q1 == b.q1;
    case GateKind::RZ:
      return Angle(a.angle) == Angle(b.angle);
    case GateKind::H:
      return true;
  }
  return false;
}

Circuit& Circuit::add(const Gate& gate) {
  if (gate.q0 >= n_ || (gate.is_two_qubit() && gate.q1 >= n_)) {
    throw OperandError("gate operand out of range for " + std::to_string(n_) + " qubits");
  }
  if (gate.is_two_qubit() && gate.q0 == gate.q1) throw OperandError("two-qubit gate operands must differ");
  gates_.push_back(gate);
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.n_ != n_) throw DimensionError("cannot append circuits of different width");
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  return *this;
}

std::size_t cnot_count(const Circuit& circuit) {
  std::size_t count = 0;
  for (const auto& g : circuit.gates()) {
    if (g.kind == GateKind::CNOT) count += 1;
    if (g.kind == GateKind::SWAP) count += 3;
  }
  return count;
}

std::size_t cnot_depth(const Circuit& circuit) {
  std::vector<std::size_t> layer(circuit.num_qubits(), 0);
  std::size_t depth = 0;
  for (const auto& g : circuit.gates()) {
    if (!g.is_two_qubit()) continue;
    const std::size_t cost = g.kind == GateKind::SWAP ? 3 : 1;
    const std::size_t l = std::max(layer[g.q0], layer[g.q1]) + cost;
    layer[g.q0] = layer[g.q1] = l;
    depth = std::max(depth, l);
  }
  return depth;
}

Circuit expand_swaps(const Circuit& circuit) {
  Circuit out(circuit.num_qubits());
  for (const auto& g : circuit.gates()) {
    if (g.kind == GateKind::SWAP) {
      out.cnot(g.q0, g.q1).cnot(g.q1, g.q0).cnot(g.q0, g.q1);
    } else {
      out.add(g);
    }
  }
  return out;
}

Circuit cancel_adjacent_cnots(const Circuit& circuit) {
  std::vector<Gate> kept;
  kept.reserve(circuit.size());
  for (const auto& g : circuit.gates()) {
    if (g.kind == GateKind::CNOT && !kept.empty() && kept.back().kind == GateKind::CNOT &&
        kept.back().q0 == g.q0 && kept.back().q1 == g.q1) {
      kept.pop_back();
    } else {
      kept.push_back(g);
    }
  }
  Circuit out(circuit.num_qubits());
  for (const auto& g : kept) out.add(g);
  return out;
}

std::size_t gf2_rank(std::vector<BitVec> rows) {
  std::size_t rank = 0;
  if (rows.empty()) return 0;
  const std::size_t width = rows.front().size();
  for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot].get(col)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r].get(col)) rows[r] ^= rows[rank];
    }
    ++rank;
  }
  return rank;
}

LinearFunction::LinearFunction(std::vector<BitVec> rows) : rows_(std::move(rows)) {
  for (const auto& r : rows_) {
    if (r.size() != rows_.size()) throw DimensionError("linear function must be square");
  }
  if (gf2_rank(rows_) != rows_.size()) throw RankError("linear function is singular over GF(2)");
}

LinearFunction LinearFunction::identity(std::size_t n) {
  LinearFunction f;
  f.rows_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) f.rows_.push_back(BitVec::unit(n, i));
  return f;
}

bool LinearFunction::is_identity() const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] != BitVec::unit(rows_.size(), i)) return false;
  }
  return true;
}

void LinearFunction::apply_cnot(Qubit control, Qubit target) {
  if (control == target) throw OperandError("CNOT operands must differ");
  if (control >= rows_.size() || target >= rows_.size()) throw OperandError("CNOT operand out of range");
  rows_[target] ^= rows_[control];
}

LinearFunction LinearFunction::inverse() const {
  const std::size_t n = rows_.size();
  std::vector<BitVec> a = rows_;
  std::vector<BitVec> inv = identity(n).rows_;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && !a[pivot].get(col)) ++pivot;
    if (pivot == n) throw RankError("linear function is singular over GF(2)");
    std::swap(a[col], a[pivot]);
    std::swap(inv[col], inv[pivot]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r != col && a[r].get(col)) {
        a[r] ^= a[col];
        inv[r] ^= inv[col];
      }
    }
  }
  LinearFunction out;
  out.rows_ = std::move(inv);
  return out;
}

LinearFunction LinearFunction::transpose() const {
  const std::size_t n = rows_.size();
  LinearFunction out;
  out.rows_.assign(n, BitVec(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j : rows_[i].ones()) out.rows_[j].set(i);
  }
  return out;
}

}  // namespace paritysynth
