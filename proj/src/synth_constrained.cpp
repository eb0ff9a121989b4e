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

#include "paritysynth/synth_constrained.hpp"

#include <algorithm>
#include <map>

#include "paritysynth/errors.hpp"
#include "paritysynth/semantics.hpp"
#include "term_table.hpp"

namespace paritysynth {

namespace {

constexpr Qubit kNone = SpanningTree::kNoParent;

// A Steiner tree hung from `root`: BFS order (parents before children) and
// parent pointers.
struct RootedTree {
  std::vector<Qubit> order;
  std::vector<Qubit> parent;
  std::vector<bool> member;
};

RootedTree hang(std::size_t n, const std::vector<Edge>& edges, Qubit root) {
  std::vector<std::vector<Qubit>> adj(n);
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  RootedTree t{{root}, std::vector<Qubit>(n, kNone), std::vector<bool>(n, false)};
  t.member[root] = true;
  t.parent[root] = root;
  for (std::size_t head = 0; head < t.order.size(); ++head) {
    const Qubit v = t.order[head];
    for (Qubit w : adj[v]) {
      if (t.member[w]) continue;
      t.member[w] = true;
      t.parent[w] = v;
      t.order.push_back(w);
    }
  }
  return t;
}

void check_sizes(const PhasePolynomial& p, const CouplingGraph& g) {
  if (g.num_vertices() != p.num_qubits()) {
    throw DimensionError("coupling graph has " + std::to_string(g.num_vertices()) + " vertices but the polynomial has " +
                         std::to_string(p.num_qubits()) + " qubits");
  }
}

void finish(ConstrainedReport& r, const CouplingGraph& g) {
  r.cnots = cnot_count(r.circuit);
  r.depth = cnot_depth(r.circuit);
  r.graph_id = g.name();
  r.violations = check_connectivity(r.circuit, g).size();
}

// Depth-first disconnect of one qubit over a TermTable. Rows are physical
// wires; the logical row of q is wherever `pos_` is.
class DfsDisconnector {
 public:
  DfsDisconnector(detail::TermTable& table, const SpanningTree& tree)
      : t_(table), tree_(tree), n_(table.num_qubits()), pos_(tree.root), path_mask_(n_), below_(n_, BitVec(n_)) {
    for (auto it = tree_.order.rbegin(); it != tree_.order.rend(); ++it) {
      const Qubit v = *it;
      for (Qubit c : tree_.children[v]) {
        below_[v] |= below_[c];
        below_[v].set(c);
      }
    }
  }

  DisconnectStats run() {
    stats_.qubit = tree_.root;
    const std::size_t start = t_.cnots().size();
    // Each round tries a full walk and a single fold from the same state and
    // keeps whichever lowers phi more per CNOT.
    while (!finished_ && s_count() > 0) {
      const std::size_t phi0 = phi();
      const std::size_t cost0 = t_.cnots().size();
      const detail::TermTable saved = t_;
      const DisconnectStats saved_stats = stats_;
      visit(tree_.root);
      if (finished_) break;
      const std::size_t walk_gain = phi0 - phi();
      const std::size_t walk_cost = t_.cnots().size() - cost0;
      if (walk_gain == 0) {
        t_ = saved;
        stats_ = saved_stats;
        fold_cheapest();
        continue;
      }
      const detail::TermTable walked = t_;
      const DisconnectStats walked_stats = stats_;
      t_ = saved;
      stats_ = saved_stats;
      fold_cheapest();
      if (finished_) break;
      const std::size_t fold_gain = phi0 - phi();
      const std::size_t fold_cost = t_.cnots().size() - cost0;
      if (walk_gain * fold_cost > fold_gain * walk_cost) {
        t_ = walked;
        stats_ = walked_stats;
      }
    }
    stats_.cnots = t_.cnots().size() - start;
    stats_.splits = stats_.descends + stats_.in_place + stats_.fold_cnots;
    stats_.final_position = pos_;
    return stats_;
  }

 private:
  // Value q's row will have on column j once the walk is back at the root.
  bool lasting(std::size_t j) const {
    const BitVec& col = t_.column(j);
    return col.get(pos_) != col.dot(path_mask_);
  }

  std::size_t s_count() const {
    std::size_t s = 0;
    for (std::size_t j = 0; j < t_.num_columns(); ++j) {
      if (t_.alive(j) && lasting(j)) ++s;
    }
    return s;
  }

  std::size_t phi() const { return s_count() + t_.alive_count(); }

  // Live terms still tied to q with support in the subtree of v, v included
  // when `inclusive`.
  std::size_t pending_below(Qubit v, bool inclusive) const {
    BitVec region = below_[v];
    if (inclusive) region.set(v);
    std::size_t count = 0;
    for (std::size_t j = 0; j < t_.num_columns(); ++j) {
      if (!t_.alive(j) || !lasting(j)) continue;
      BitVec hit = t_.column(j);
      hit &= region;
      if (hit.any()) ++count;
    }
    return count;
  }

  // Decrease of phi from row[pos] ^= row[c].
  long in_place_score(Qubit c) const {
    long score = 0;
    for (std::size_t j = 0; j < t_.num_columns(); ++j) {
      if (!t_.alive(j)) continue;
      const BitVec& col = t_.column(j);
      if (!col.get(c)) continue;
      const bool in_s = lasting(j);
      const std::size_t w = col.popcount();
      const bool realizes = col.get(pos_) && w == 2;
      if (realizes) {
        score += in_s ? 2 : 1;
      } else {
        score += in_s ? 1 : -1;
      }
    }
    return score;
  }

  void visit(Qubit a) {
    std::vector<Qubit> kids = tree_.children[a];
    std::vector<std::size_t> weight(n_, 0);
    for (Qubit b : kids) weight[b] = pending_below(b, true);
    std::stable_sort(kids.begin(), kids.end(), [&](Qubit x, Qubit y) { return weight[x] > weight[y]; });
    for (Qubit b : kids) {
      if (s_count() == 0) return;
      if (in_place_score(b) > 0) {
        t_.cnot(pos_, b);
        ++stats_.in_place;
        if (t_.alive_count() == 0) {
          finished_ = true;
          return;
        }
      }
      if (pending_below(b, false) == 0) continue;
      t_.cnot(b, a);
      t_.cnot(a, b);
      ++stats_.descends;
      path_mask_.set(a);
      pos_ = b;
      if (t_.alive_count() > 0) visit(b);
      if (finished_ || t_.alive_count() == 0) {
        finished_ = true;
        return;
      }
      t_.cnot(a, b);
      t_.cnot(b, a);
      ++stats_.ascends;
      path_mask_.set(a, false);
      pos_ = a;
    }
  }

  // Tree span of column j: vertices whose subtree meets its support.
  std::vector<bool> span(std::size_t j) const {
    std::vector<bool> in(n_, false);
    const BitVec& col = t_.column(j);
    for (auto it = tree_.order.rbegin(); it != tree_.order.rend(); ++it) {
      const Qubit v = *it;
      if (col.get(v)) in[v] = true;
      if (in[v] && v != tree_.root) in[tree_.parent[v]] = true;
    }
    return in;
  }

  void fold_cheapest() {
    std::size_t pick = t_.num_columns();
    std::size_t best = 0;
    for (std::size_t j = 0; j < t_.num_columns(); ++j) {
      if (!t_.alive(j) || !lasting(j)) continue;
      const std::vector<bool> in = span(j);
      std::size_t cost = 0;
      for (Qubit v : tree_.order) {
        if (!in[v]) continue;
        if (v != tree_.root) ++cost;
        if (!t_.column(j).get(v)) ++cost;
      }
      if (pick == t_.num_columns() || cost < best) {
        pick = j;
        best = cost;
      }
    }
    const std::vector<bool> in = span(pick);
    for (auto it = tree_.order.rbegin(); it != tree_.order.rend(); ++it) {
      const Qubit v = *it;
      if (!in[v] || t_.column(pick).get(v)) continue;
      for (Qubit c : tree_.children[v]) {
        if (in[c] && t_.column(pick).get(c)) {
          t_.cnot(v, c);
          ++stats_.fold_cnots;
          break;
        }
      }
    }
    for (auto it = tree_.order.rbegin(); it != tree_.order.rend(); ++it) {
      const Qubit v = *it;
      if (!in[v] || v == tree_.root) continue;
      t_.cnot(v, tree_.parent[v]);
      ++stats_.fold_cnots;
    }
    if (t_.alive_count() == 0) finished_ = true;
  }

  detail::TermTable& t_;
  const SpanningTree& tree_;
  std::size_t n_;
  Qubit pos_;
  BitVec path_mask_;
  std::vector<BitVec> below_;
  DisconnectStats stats_;
  bool finished_ = false;
};

// Row ops (control -> target, row[target] ^= row[control]) reducing f to the
// identity using only edges of g.
std::vector<RowOp> rowcol_reduce(const LinearFunction& f, const CouplingGraph& g) {
  const std::size_t n = f.size();
  std::vector<BitVec> rows = f.rows();
  std::vector<RowOp> ops;
  auto add = [&](Qubit c, Qubit t) {
    rows[t] ^= rows[c];
    ops.push_back(Gate::cnot(c, t));
  };
  const SpanningTree global = spanning_tree(g, 0, TreeMode::Bfs);
  std::vector<bool> alive(n, true);
  for (auto it = global.order.rbegin(); it != global.order.rend(); ++it) {
    const Qubit i = *it;

    std::vector<Qubit> terminals = {i};
    for (Qubit j = 0; j < n; ++j) {
      if (alive[j] && j != i && rows[j].get(i)) terminals.push_back(j);
    }
    if (terminals.size() == 1 && !rows[i].get(i)) throw RankError("linear function is singular");
    if (terminals.size() > 1) {
      const RootedTree t = hang(n, steiner_tree(g, terminals, &alive).edges, i);
      for (auto v = t.order.rbegin(); v != t.order.rend(); ++v) {
        const Qubit c = *v;
        if (c == i) continue;
        const Qubit p = t.parent[c];
        if (!rows[p].get(i) && rows[c].get(i)) add(c, p);
      }
      for (auto v = t.order.rbegin(); v != t.order.rend(); ++v) {
        const Qubit c = *v;
        if (c != i) add(t.parent[c], c);
      }
    }

    // Rows other than i now vanish on column i; find the alive rows summing
    // to row[i] - e_i.
    BitVec target = rows[i];
    target.flip(i);
    if (target.any()) {
      std::map<std::size_t, std::pair<BitVec, BitVec>> basis;
      for (Qubit j = 0; j < n; ++j) {
        if (!alive[j] || j == i) continue;
        BitVec v = rows[j];
        BitVec tag = BitVec::unit(n, j);
        for (const auto& [pivot, entry] : basis) {
          if (v.get(pivot)) {
            v ^= entry.first;
            tag ^= entry.second;
          }
        }
        const std::size_t pivot = v.first_set();
        if (pivot == n) throw RankError("linear function is singular");
        for (auto& [other, entry] : basis) {
          if (entry.first.get(pivot)) {
            entry.first ^= v;
            entry.second ^= tag;
          }
        }
        basis.emplace(pivot, std::make_pair(v, tag));
      }
      BitVec chosen(n);
      BitVec rest = target;
      for (const auto& [pivot, entry] : basis) {
        if (rest.get(pivot)) {
          rest ^= entry.first;
          chosen ^= entry.second;
        }
      }
      if (rest.any()) throw RankError("linear function is singular");
      std::vector<Qubit> row_terminals = {i};
      for (Qubit j : chosen.ones()) row_terminals.push_back(j);
      const SteinerTree st = steiner_tree(g, row_terminals, &alive);
      const RootedTree t = hang(n, st.edges, i);
      std::vector<bool> steiner(n, false);
      for (Qubit s : st.steiner_nodes) steiner[s] = true;
      for (Qubit c : t.order) {
        if (c != i && steiner[c]) add(c, t.parent[c]);
      }
      for (auto v = t.order.rbegin(); v != t.order.rend(); ++v) {
        if (*v != i) add(*v, t.parent[*v]);
      }
    }
    alive[i] = false;
  }
  return ops;
}

}  // namespace

ConstrainedReport synth_steiner_naive(const PhasePolynomial& p, const CouplingGraph& g) {
  check_sizes(p, g);
  const std::size_t n = p.num_qubits();
  ConstrainedReport report;
  report.strategy = Strategy::Steiner;
  report.circuit = Circuit(n);
  for (const auto& term : p.terms()) {
    const std::vector<Qubit> support = term.parity.ones();
    const SteinerTree st = steiner_tree(g, support);
    const Qubit root = support.front();
    const RootedTree t = hang(n, st.edges, root);
    BitVec col = term.parity;
    std::vector<Gate> forward;
    auto cnot = [&](Qubit c, Qubit tg) {
      if (col.get(tg)) col.flip(c);
      forward.push_back(Gate::cnot(c, tg));
    };
    for (auto it = t.order.rbegin(); it != t.order.rend(); ++it) {
      const Qubit v = *it;
      if (col.get(v)) continue;
      for (auto c = t.order.rbegin(); c != t.order.rend(); ++c) {
        if (t.parent[*c] == v && *c != v && col.get(*c)) {
          cnot(v, *c);
          break;
        }
      }
    }
    for (auto it = t.order.rbegin(); it != t.order.rend(); ++it) {
      if (*it != root) cnot(*it, t.parent[*it]);
    }
    for (const auto& gate : forward) report.circuit.add(gate);
    report.circuit.rz(term.angle.radians(), root);
    for (auto it = forward.rbegin(); it != forward.rend(); ++it) report.circuit.add(*it);
    report.per_term_cnots.push_back(2 * forward.size());
    report.splits += forward.size();
  }
  finish(report, g);
  return report;
}

DfsDisconnectResult disconnect_qubit_dfs(const ParityMatrix& m, Qubit q, const SpanningTree& tree) {
  if (tree.root != q) throw OperandError("disconnect_qubit_dfs: tree must be rooted at q");
  if (tree.parent.size() != m.rows()) throw DimensionError("disconnect_qubit_dfs: tree and matrix sizes differ");
  detail::TermTable table(m.rows(), m.columns(), std::vector<double>(m.cols(), 1.0));
  DfsDisconnector d(table, tree);
  DfsDisconnectResult out;
  out.stats = d.run();
  out.gates = table.cnots();
  out.splits = out.stats.splits;
  out.final_position = out.stats.final_position;
  out.realized = table.realized_order();
  std::vector<BitVec> rest;
  for (std::size_t j = 0; j < table.num_columns(); ++j) {
    if (table.alive(j)) rest.push_back(table.column(j));
  }
  out.matrix = ParityMatrix(m.rows(), std::move(rest));
  return out;
}

ConstrainedReport synth_constrained_dfs(const PhasePolynomial& p, const CouplingGraph& g) {
  check_sizes(p, g);
  const std::size_t n = p.num_qubits();
  auto table = detail::TermTable::from_polynomial(p);
  ConstrainedReport report;
  report.strategy = Strategy::Dfs;

  const SpanningTree global = spanning_tree(g, 0, TreeMode::Bfs);
  std::vector<bool> alive(n, true);
  for (auto it = global.order.rbegin(); it != global.order.rend() && table.alive_count() > 0; ++it) {
    const Qubit q = *it;
    if (table.participation(q) > 0) {
      const SpanningTree tree = spanning_tree(g, q, TreeMode::Bfs, &alive);
      DfsDisconnector d(table, tree);
      const DisconnectStats s = d.run();
      report.splits += s.splits;
      if (s.splits > 0) {
        report.cnots_per_split_max =
            std::max(report.cnots_per_split_max, static_cast<double>(s.cnots) / static_cast<double>(s.splits));
      }
      report.disconnects.push_back(s);
    }
    alive[q] = false;
  }

  report.circuit = table.circuit();
  if (!table.cnots().empty()) {
    const Circuit linear = synth_linear_constrained(table.linear().inverse(), g);
    if (linear.size() < table.cnots().size()) {
      report.cleanup = Cleanup::LinearSynthesis;
      report.circuit.append(linear);
      report.cleanup_cnots = linear.size();
    } else {
      report.cleanup = Cleanup::Uncompute;
      report.circuit.append(detail::reversed_cnots(n, table.cnots()));
      report.cleanup_cnots = table.cnots().size();
    }
  }
  report.circuit = cancel_adjacent_cnots(report.circuit);
  finish(report, g);
  return report;
}

Circuit synth_linear_constrained(const LinearFunction& f, const CouplingGraph& g) {
  if (g.num_vertices() != f.size()) throw DimensionError("coupling graph and linear function sizes differ");
  return detail::reversed_cnots(f.size(), rowcol_reduce(f, g));
}

ConstrainedReport synthesize(const PhasePolynomial& p, Strategy strategy, const CouplingGraph* g) {
  if (g != nullptr) check_sizes(p, *g);
  if (is_constrained(strategy)) {
    const CouplingGraph complete = g == nullptr ? complete_graph(std::max<std::size_t>(p.num_qubits(), 1)) : *g;
    return strategy == Strategy::Steiner ? synth_steiner_naive(p, complete) : synth_constrained_dfs(p, complete);
  }
  ConstrainedReport report;
  static_cast<SynthesisReport&>(report) = strategy == Strategy::Naive ? synth_naive(p) : synth_recursive(p);
  if (g != nullptr) {
    report.graph_id = g->name();
    report.violations = check_connectivity(report.circuit, *g).size();
  }
  return report;
}

}  // namespace paritysynth
