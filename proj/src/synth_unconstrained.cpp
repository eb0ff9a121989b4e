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

#include "paritysynth/synth_unconstrained.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "paritysynth/errors.hpp"
#include "term_table.hpp"

namespace paritysynth {

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::Naive:
      return "naive";
    case Strategy::Recursive:
      return "recursive";
    case Strategy::Steiner:
      return "steiner";
    case Strategy::Dfs:
      return "dfs";
  }
  return "?";
}

std::optional<Strategy> parse_strategy(std::string_view name) {
  for (auto s : {Strategy::Naive, Strategy::Recursive, Strategy::Steiner, Strategy::Dfs}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view to_string(Cleanup c) {
  switch (c) {
    case Cleanup::None:
      return "none";
    case Cleanup::Uncompute:
      return "uncompute";
    case Cleanup::LinearSynthesis:
      return "linear";
  }
  return "?";
}

namespace {

void finish(SynthesisReport& r) {
  r.cnots = cnot_count(r.circuit);
  r.depth = cnot_depth(r.circuit);
}

// One greedy step of disconnect: the r maximising (terms split off q) -
// (terms newly joined to q) + (terms realized). Returns n when nothing scores.
Qubit best_split(const detail::TermTable& t, Qubit q) {
  const std::size_t n = t.num_qubits();
  Qubit best = n;
  long best_score = 0;
  for (Qubit r = 0; r < n; ++r) {
    if (r == q) continue;
    long score = 0;
    for (std::size_t j = 0; j < t.num_columns(); ++j) {
      if (!t.alive(j)) continue;
      const BitVec& col = t.column(j);
      if (!col.get(r)) continue;
      if (col.get(q)) {
        score += col.popcount() == 2 ? 2 : 1;
      } else {
        score -= 1;
      }
    }
    if (score > best_score) {
      best_score = score;
      best = r;
    }
  }
  return best;
}

void fold_lightest(detail::TermTable& t, Qubit q) {
  std::size_t pick = t.num_columns();
  std::size_t weight = 0;
  for (std::size_t j = 0; j < t.num_columns(); ++j) {
    if (!t.alive(j) || !t.column(j).get(q)) continue;
    const std::size_t w = t.column(j).popcount();
    if (pick == t.num_columns() || w < weight) {
      pick = j;
      weight = w;
    }
  }
  const std::vector<std::size_t> support = t.column(pick).ones();
  for (Qubit r : support) {
    if (r != q) t.cnot(r, q);
  }
}

void disconnect(detail::TermTable& t, Qubit q) {
  while (t.participation(q) > 0) {
    const Qubit r = best_split(t, q);
    if (r < t.num_qubits()) {
      t.cnot(q, r);
    } else {
      fold_lightest(t, q);
    }
  }
}

std::vector<RowOp> lower_pass(std::vector<BitVec>& rows, std::size_t section) {
  const std::size_t n = rows.size();
  std::vector<RowOp> ops;
  auto add = [&](std::size_t c, std::size_t t) {
    rows[t] ^= rows[c];
    ops.push_back(Gate::cnot(c, t));
  };
  for (std::size_t start = 0; start < n; start += section) {
    const std::size_t end = std::min(start + section, n);
    std::unordered_map<std::uint64_t, std::size_t> seen;
    for (std::size_t row = start; row < n; ++row) {
      std::uint64_t pattern = 0;
      for (std::size_t c = start; c < end; ++c) {
        if (rows[row].get(c)) pattern |= std::uint64_t{1} << (c - start);
      }
      if (pattern == 0) continue;
      auto [it, inserted] = seen.try_emplace(pattern, row);
      if (!inserted) add(it->second, row);
    }
    for (std::size_t col = start; col < end; ++col) {
      bool diag = rows[col].get(col);
      for (std::size_t row = col + 1; row < n; ++row) {
        if (!rows[row].get(col)) continue;
        if (!diag) {
          add(row, col);
          diag = true;
        }
        add(col, row);
      }
    }
  }
  return ops;
}

std::vector<BitVec> transposed(const std::vector<BitVec>& rows) {
  const std::size_t n = rows.size();
  std::vector<BitVec> out(n, BitVec(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (rows[i].get(j)) out[j].set(i);
    }
  }
  return out;
}

Circuit reduction_to_circuit(std::size_t n, const std::vector<RowOp>& ops) {
  return detail::reversed_cnots(n, ops);
}

}  // namespace

SynthesisReport synth_naive(const PhasePolynomial& p) {
  SynthesisReport report;
  report.strategy = Strategy::Naive;
  report.circuit = Circuit(p.num_qubits());
  Circuit& c = report.circuit;
  for (const auto& term : p.terms()) {
    const std::vector<std::size_t> idx = term.parity.ones();
    const std::size_t h = idx.size();
    for (std::size_t k = h - 1; k >= 1; --k) c.cnot(idx[k], idx[k - 1]);
    c.rz(term.angle.radians(), idx[0]);
    for (std::size_t k = 1; k < h; ++k) c.cnot(idx[k], idx[k - 1]);
    report.per_term_cnots.push_back(2 * (h - 1));
  }
  finish(report);
  return report;
}

SynthesisReport synth_recursive(const PhasePolynomial& p) {
  const std::size_t n = p.num_qubits();
  auto table = detail::TermTable::from_polynomial(p);
  while (table.alive_count() > 0) {
    Qubit q = 0;
    std::size_t most = 0;
    for (Qubit i = 0; i < n; ++i) {
      const std::size_t part = table.participation(i);
      if (part > most) {
        most = part;
        q = i;
      }
    }
    disconnect(table, q);
  }

  SynthesisReport report;
  report.strategy = Strategy::Recursive;
  report.circuit = table.circuit();
  const std::vector<RowOp> reduce = linear_reduce(table.linear());
  if (reduce.size() < table.cnots().size()) {
    report.cleanup = Cleanup::LinearSynthesis;
    for (const auto& g : reduce) report.circuit.add(g);
    report.cleanup_cnots = reduce.size();
  } else if (!table.cnots().empty()) {
    report.cleanup = Cleanup::Uncompute;
    report.circuit.append(detail::reversed_cnots(n, table.cnots()));
    report.cleanup_cnots = table.cnots().size();
  }
  report.circuit = cancel_adjacent_cnots(report.circuit);
  finish(report);
  return report;
}

std::vector<RowOp> pmh_reduce(const LinearFunction& f, std::size_t section_size) {
  const std::size_t n = f.size();
  if (n == 0) return {};
  if (section_size == 0) {
    const double half_log = std::log2(static_cast<double>(n)) / 2.0;
    section_size = std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(half_log)));
  }
  section_size = std::min<std::size_t>(section_size, 63);
  std::vector<BitVec> rows = f.rows();
  std::vector<RowOp> ops = lower_pass(rows, section_size);
  std::vector<BitVec> t = transposed(rows);
  const std::vector<RowOp> second = lower_pass(t, section_size);
  for (auto it = second.rbegin(); it != second.rend(); ++it) ops.push_back(Gate::cnot(it->q1, it->q0));
  return ops;
}

std::vector<RowOp> gauss_reduce(const LinearFunction& f) {
  const std::size_t n = f.size();
  std::vector<BitVec> rows = f.rows();
  std::vector<RowOp> ops;
  auto add = [&](std::size_t c, std::size_t t) {
    rows[t] ^= rows[c];
    ops.push_back(Gate::cnot(c, t));
  };
  for (std::size_t col = 0; col < n; ++col) {
    if (!rows[col].get(col)) {
      std::size_t r = col + 1;
      while (r < n && !rows[r].get(col)) ++r;
      if (r == n) throw RankError("linear function is singular");
      add(r, col);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r != col && rows[r].get(col)) add(col, r);
    }
  }
  return ops;
}

std::vector<RowOp> linear_reduce(const LinearFunction& f) {
  std::vector<RowOp> pmh = pmh_reduce(f);
  std::vector<RowOp> gauss = gauss_reduce(f);
  return gauss.size() < pmh.size() ? gauss : pmh;
}

Circuit synth_linear(const LinearFunction& f) { return reduction_to_circuit(f.size(), linear_reduce(f)); }

Circuit synth_linear_gauss(const LinearFunction& f) { return reduction_to_circuit(f.size(), gauss_reduce(f)); }

DisconnectResult disconnect_qubit(const ParityMatrix& m, Qubit q) {
  if (q >= m.rows()) throw OperandError("disconnect_qubit: qubit out of range");
  detail::TermTable table(m.rows(), m.columns(), std::vector<double>(m.cols(), 1.0));
  disconnect(table, q);
  DisconnectResult out;
  out.cnots = table.cnots();
  out.realized = table.realized_order();
  std::vector<BitVec> rest;
  for (std::size_t j = 0; j < table.num_columns(); ++j) {
    if (table.alive(j)) rest.push_back(table.column(j));
  }
  out.matrix = ParityMatrix(m.rows(), std::move(rest));
  return out;
}

}  // namespace paritysynth
