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
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "paritysynth/core.hpp"

namespace paritysynth {

using Edge = std::pair<Qubit, Qubit>;

/**
 * Undirected, connected coupling graph over physical qubits [0, n).
 *
 * Edges are normalized to (min, max) and kept sorted; adjacency lists are
 * sorted ascending, which is what makes every traversal below break ties by
 * lowest vertex index.
 */
class CouplingGraph {
 public:
  CouplingGraph() = default;
  /// Throws GraphError on self-loops, duplicates or out-of-range endpoints and
  /// DisconnectedGraphError when the graph is not connected.
  CouplingGraph(std::size_t n, const std::vector<Edge>& edges, std::string name = "");

  std::size_t num_vertices() const { return adjacency_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Qubit>& neighbours(Qubit v) const { return adjacency_[v]; }
  bool has_edge(Qubit a, Qubit b) const;
  /// Short identifier such as "line:5"; empty for anonymous graphs.
  const std::string& name() const { return name_; }

  friend bool operator==(const CouplingGraph& a, const CouplingGraph& b) {
    return a.edges_ == b.edges_ && a.adjacency_.size() == b.adjacency_.size();
  }

 private:
  std::vector<std::vector<Qubit>> adjacency_;
  std::vector<Edge> edges_;
  std::string name_;
};

/// line(n), ring(n), grid(w, h), heavy_hex(scale), complete(n),
/// random_tree(n, seed). Each throws GraphError on non-positive sizes.
CouplingGraph line_graph(std::size_t n);
CouplingGraph ring_graph(std::size_t n);
CouplingGraph grid_graph(std::size_t width, std::size_t height);
/// Heavy-hexagon lattice with `scale` rows of `scale` hexagonal cells: rows are
/// paths of 4*scale+1 qubits joined by single bridge qubits every fourth
/// column, alternating offset per row.
CouplingGraph heavy_hex_graph(std::size_t scale);
CouplingGraph complete_graph(std::size_t n);
CouplingGraph random_tree_graph(std::size_t n, std::uint64_t seed);

/// Parses family shorthand: "line:16", "ring:12", "grid:4x4", "heavyhex:2",
/// "complete:8", "randomtree:16:seed7". Throws GraphError.
CouplingGraph graph_family(std::string_view spec);

/**
 * A connected member of `family` ("line", "ring", "grid", "heavyhex",
 * "complete", "randomtree") with exactly n vertices. Grid and heavy-hex take
 * the first n vertices in BFS order of a large enough lattice.
 */
CouplingGraph graph_of_size(std::string_view family, std::size_t n, std::uint64_t seed = 0);

/// Subgraph induced by the first `n` vertices of `g` in BFS order from 0,
/// relabelled 0..n-1 in that order.
CouplingGraph bfs_patch(const CouplingGraph& g, std::size_t n, std::string name);

enum class TreeMode : std::uint8_t { Bfs, Dfs };

struct SpanningTree {
  Qubit root = 0;
  /// parent[v]; parent[root] == root. Vertices outside the tree have
  /// parent == kNoParent.
  std::vector<Qubit> parent;
  std::vector<std::vector<Qubit>> children;
  /// Tree vertices in discovery order (root first).
  std::vector<Qubit> order;

  static constexpr Qubit kNoParent = static_cast<Qubit>(-1);

  bool contains(Qubit v) const { return parent[v] != kNoParent; }
  std::size_t size() const { return order.size(); }
  std::vector<Edge> edges() const;
};

/**
 * Spanning tree rooted at `root`. BFS gives the shortest-path tree; DFS
 * follows lowest-index neighbours first, which yields the Hamiltonian path on
 * line graphs. When `alive` is given only those vertices take part, and they
 * must induce a connected subgraph.
 */
SpanningTree spanning_tree(const CouplingGraph& g, Qubit root, TreeMode mode = TreeMode::Bfs,
                           const std::vector<bool>* alive = nullptr);

struct SteinerTree {
  std::vector<Qubit> terminals;
  std::vector<Edge> edges;
  std::vector<Qubit> vertices;
  /// Tree vertices that are not terminals.
  std::vector<Qubit> steiner_nodes;
};

/// Shortest-path heuristic: grow from the lowest terminal, repeatedly joining
/// the nearest unconnected terminal by a shortest path. Optionally limited to
/// the `alive` vertices.
SteinerTree steiner_tree(const CouplingGraph& g, const std::vector<Qubit>& terminals,
                         const std::vector<bool>* alive = nullptr);

/// Minimum-hop path a -> b; at every step the lowest-index neighbour that
/// stays on a shortest path is taken.
std::vector<Qubit> shortest_path(const CouplingGraph& g, Qubit a, Qubit b);

/// All-pairs hop distances.
std::vector<std::vector<std::size_t>> distance_matrix(const CouplingGraph& g);

}  // namespace paritysynth
