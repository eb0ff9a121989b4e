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

#include "paritysynth/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numbers>
#include <unordered_map>
#include <utility>

#include "paritysynth/errors.hpp"
#include "paritysynth/synth_constrained.hpp"

namespace paritysynth {

namespace {

// Search state: wire t's parity in bits [4t, 4t+4), unrealized term mask
// above bit 16.
using State = std::uint64_t;
constexpr unsigned kWireBits = 4;
constexpr unsigned kMaskShift = 16;

unsigned wire(State s, Qubit t) { return static_cast<unsigned>((s >> (kWireBits * t)) & 0xFU); }

State with_wire(State s, Qubit t, unsigned value) {
  const State clear = ~(State{0xF} << (kWireBits * t));
  return (s & clear) | (State{value} << (kWireBits * t));
}

struct Problem {
  std::size_t n;
  std::vector<unsigned> parity;
  std::vector<std::pair<Qubit, Qubit>> moves;
};

State realize(const Problem& pr, State s) {
  std::uint64_t mask = s >> kMaskShift;
  for (std::size_t j = 0; j < pr.parity.size(); ++j) {
    if (!((mask >> j) & 1U)) continue;
    for (Qubit t = 0; t < pr.n; ++t) {
      if (wire(s, t) == pr.parity[j]) {
        mask &= ~(std::uint64_t{1} << j);
        break;
      }
    }
  }
  return (s & ((State{1} << kMaskShift) - 1)) | (mask << kMaskShift);
}

State identity_wires(std::size_t n) {
  State s = 0;
  for (Qubit t = 0; t < n; ++t) s = with_wire(s, t, 1U << t);
  return s;
}

std::string describe(const PhasePolynomial& p, const CouplingGraph* g) {
  std::string out = "n=" + std::to_string(p.num_qubits()) + " terms=";
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (j > 0) out += ",";
    out += p[j].parity.to_string();
  }
  out += " graph=" + (g == nullptr ? std::string("none") : g->name());
  return out;
}

// Replays the CNOT sequence, placing each RZ on the first wire that holds its
// parity.
Circuit build_witness(const PhasePolynomial& p, const Problem& pr, const std::vector<std::pair<Qubit, Qubit>>& cnots) {
  Circuit c(pr.n);
  State s = identity_wires(pr.n) | (((State{1} << pr.parity.size()) - 1) << kMaskShift);
  auto emit_realized = [&](State before, State after) {
    const std::uint64_t gone = (before >> kMaskShift) & ~(after >> kMaskShift);
    for (std::size_t j = 0; j < pr.parity.size(); ++j) {
      if (!((gone >> j) & 1U)) continue;
      for (Qubit t = 0; t < pr.n; ++t) {
        if (wire(after, t) == pr.parity[j]) {
          c.rz(p[j].angle.radians(), t);
          break;
        }
      }
    }
  };
  State next = realize(pr, s);
  emit_realized(s, next);
  s = next;
  for (const auto& [ctl, tgt] : cnots) {
    c.cnot(ctl, tgt);
    const State moved = with_wire(s, tgt, wire(s, tgt) ^ wire(s, ctl));
    next = realize(pr, moved);
    emit_realized(moved, next);
    s = next;
  }
  return c;
}

}  // namespace

OptimalityCertificate optimal_cnot_count(const PhasePolynomial& p, const CouplingGraph* g, std::size_t max_cnots) {
  const std::size_t n = p.num_qubits();
  if (n > kOracleMaxQubits) throw CapacityError("oracle is limited to " + std::to_string(kOracleMaxQubits) + " qubits");
  if (max_cnots > kOracleMaxBudget) {
    throw CapacityError("oracle budget is limited to " + std::to_string(kOracleMaxBudget) + " CNOTs");
  }
  if (g != nullptr && g->num_vertices() != n) throw DimensionError("coupling graph and polynomial sizes differ");

  Problem pr{n, {}, {}};
  for (const auto& t : p.terms()) {
    unsigned v = 0;
    for (Qubit i = 0; i < n; ++i) {
      if (t.parity.get(i)) v |= 1U << i;
    }
    pr.parity.push_back(v);
  }
  for (Qubit a = 0; a < n; ++a) {
    for (Qubit b = 0; b < n; ++b) {
      if (a != b && (g == nullptr || g->has_edge(a, b))) pr.moves.emplace_back(a, b);
    }
  }

  OptimalityCertificate cert;
  cert.instance = describe(p, g);
  const State goal = identity_wires(n);
  const State start = realize(pr, goal | (((State{1} << pr.parity.size()) - 1) << kMaskShift));

  // parent[state] = (previous state, index of the move that led here)
  std::unordered_map<State, std::pair<State, std::size_t>> parent;
  parent.emplace(start, std::make_pair(start, std::numeric_limits<std::size_t>::max()));
  std::vector<State> frontier = {start};
  std::optional<State> found;
  if (start == goal) found = start;
  std::size_t depth = 0;
  while (!found && !frontier.empty() && depth < max_cnots) {
    ++depth;
    std::vector<State> next;
    for (State s : frontier) {
      for (std::size_t m = 0; m < pr.moves.size() && !found; ++m) {
        const auto [ctl, tgt] = pr.moves[m];
        const State t = realize(pr, with_wire(s, tgt, wire(s, tgt) ^ wire(s, ctl)));
        if (!parent.emplace(t, std::make_pair(s, m)).second) continue;
        if (t == goal) found = t;
        next.push_back(t);
      }
      if (found) break;
    }
    frontier = std::move(next);
  }
  cert.nodes_explored = parent.size();
  if (!found) {
    cert.budget_hit = true;
    return cert;
  }

  std::vector<std::pair<Qubit, Qubit>> cnots;
  for (State s = *found; s != start;) {
    const auto& [prev, move] = parent.at(s);
    cnots.push_back(pr.moves[move]);
    s = prev;
  }
  std::reverse(cnots.begin(), cnots.end());
  cert.optimal_cnots = cnots.size();
  cert.witness = build_witness(p, pr, cnots);
  return cert;
}

RatioSummary ratio_vs_optimal(Strategy strategy, const std::vector<PhasePolynomial>& instances, const CouplingGraph* g,
                              std::size_t max_cnots) {
  RatioSummary out;
  for (const auto& p : instances) {
    const OptimalityCertificate cert = optimal_cnot_count(p, g, max_cnots);
    if (!cert.optimal_cnots) {
      ++out.skipped;
      continue;
    }
    const double got = static_cast<double>(synthesize(p, strategy, g).cnots);
    const double best = static_cast<double>(*cert.optimal_cnots);
    if (best == 0.0) {
      out.ratios.push_back(got == 0.0 ? 1.0 : std::numeric_limits<double>::infinity());
    } else {
      out.ratios.push_back(got / best);
    }
  }
  out.count = out.ratios.size();
  if (out.count == 0) return out;
  std::vector<double> sorted = out.ratios;
  std::sort(sorted.begin(), sorted.end());
  out.min = sorted.front();
  out.max = sorted.back();
  double sum = 0.0;
  for (double r : sorted) sum += r;
  out.mean = sum / static_cast<double>(out.count);
  const std::size_t mid = out.count / 2;
  out.median = out.count % 2 == 1 ? sorted[mid] : (sorted[mid - 1] + sorted[mid]) / 2.0;
  return out;
}

std::vector<PhasePolynomial> enumerate_polynomials(std::size_t n, std::size_t max_terms) {
  const std::size_t parities = (std::size_t{1} << n) - 1;
  if (parities > 20) throw CapacityError("enumerate_polynomials: too many parities");
  std::vector<PhasePolynomial> out;
  for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << parities); ++subset) {
    if (static_cast<std::size_t>(std::popcount(subset)) > max_terms) continue;
    std::vector<ParityTerm> raw;
    for (std::size_t j = 0; j < parities; ++j) {
      if (!((subset >> j) & 1U)) continue;
      BitVec b(n);
      for (Qubit i = 0; i < n; ++i) {
        if (((j + 1) >> i) & 1U) b.set(i);
      }
      raw.push_back({b, Angle(std::numbers::pi / 4)});
    }
    out.push_back(make_phase_polynomial(n, raw));
  }
  return out;
}

std::size_t exact_steiner_edges(const CouplingGraph& g, const std::vector<Qubit>& terminals) {
  const std::size_t n = g.num_vertices();
  if (n > kSteinerOracleMaxVertices) throw CapacityError("exact Steiner search is capped at 20 vertices");
  if (terminals.empty()) throw GraphError("Steiner tree needs at least one terminal");
  std::vector<std::uint32_t> adjacency(n, 0);
  for (const auto& [a, b] : g.edges()) {
    adjacency[a] |= std::uint32_t{1} << b;
    adjacency[b] |= std::uint32_t{1} << a;
  }
  std::uint32_t required = 0;
  for (Qubit t : terminals) {
    if (t >= n) throw GraphError("terminal out of range");
    required |= std::uint32_t{1} << t;
  }
  std::vector<Qubit> optional;
  for (Qubit v = 0; v < n; ++v) {
    if (!(required >> v & 1U)) optional.push_back(v);
  }

  auto connected = [&](std::uint32_t set) {
    std::uint32_t seen = set & (~set + 1);
    std::uint32_t frontier = seen;
    while (frontier != 0) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f != 0; f &= f - 1) next |= adjacency[std::countr_zero(f)];
      next &= set & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen == set;
  };

  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::uint32_t pick = 0; pick < (std::uint32_t{1} << optional.size()); ++pick) {
    std::uint32_t set = required;
    for (std::size_t i = 0; i < optional.size(); ++i) {
      if (pick >> i & 1U) set |= std::uint32_t{1} << optional[i];
    }
    const auto size = static_cast<std::size_t>(std::popcount(set));
    if (size - 1 < best && connected(set)) best = size - 1;
  }
  if (best == std::numeric_limits<std::size_t>::max()) throw DisconnectedGraphError("terminals are not connected");
  return best;
}

}  // namespace paritysynth
