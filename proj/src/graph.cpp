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

#include "paritysynth/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <deque>
#include <limits>
#include <set>

#include "paritysynth/errors.hpp"
#include "paritysynth/random.hpp"

namespace paritysynth {

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

void require_positive(std::size_t v, const char* what) {
  if (v == 0) throw GraphError(std::string(what) + " must be positive");
}

std::vector<std::size_t> bfs_distances(const CouplingGraph& g, Qubit source,
                                       const std::vector<bool>* alive = nullptr) {
  std::vector<std::size_t> dist(g.num_vertices(), kUnreached);
  std::deque<Qubit> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Qubit v = queue.front();
    queue.pop_front();
    for (Qubit w : g.neighbours(v)) {
      if (alive != nullptr && !(*alive)[w]) continue;
      if (dist[w] == kUnreached) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::optional<std::size_t> parse_size(std::string_view s) {
  std::size_t value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end || s.empty()) return std::nullopt;
  return value;
}

}  // namespace

CouplingGraph::CouplingGraph(std::size_t n, const std::vector<Edge>& edges, std::string name)
    : adjacency_(n), name_(std::move(name)) {
  if (n == 0) throw GraphError("coupling graph needs at least one vertex");
  std::set<Edge> seen;
  for (auto [a, b] : edges) {
    if (a >= n || b >= n) throw GraphError("edge endpoint out of range");
    if (a == b) throw GraphError("self-loop on vertex " + std::to_string(a));
    const Edge e{std::min(a, b), std::max(a, b)};
    if (!seen.insert(e).second) {
      throw GraphError("duplicate edge " + std::to_string(e.first) + "-" + std::to_string(e.second));
    }
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  edges_.assign(seen.begin(), seen.end());
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
  const auto dist = bfs_distances(*this, 0);
  if (std::find(dist.begin(), dist.end(), kUnreached) != dist.end()) {
    throw DisconnectedGraphError("coupling graph is not connected");
  }
}

bool CouplingGraph::has_edge(Qubit a, Qubit b) const {
  if (a >= adjacency_.size() || b >= adjacency_.size()) return false;
  const auto& adj = adjacency_[a];
  return std::binary_search(adj.begin(), adj.end(), b);
}

CouplingGraph line_graph(std::size_t n) {
  require_positive(n, "line length");
  std::vector<Edge> edges;
  for (Qubit i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return CouplingGraph(n, edges, "line:" + std::to_string(n));
}

CouplingGraph ring_graph(std::size_t n) {
  require_positive(n, "ring length");
  std::vector<Edge> edges;
  for (Qubit i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  if (n >= 3) edges.emplace_back(n - 1, 0);
  return CouplingGraph(n, edges, "ring:" + std::to_string(n));
}

CouplingGraph grid_graph(std::size_t width, std::size_t height) {
  require_positive(width, "grid width");
  require_positive(height, "grid height");
  std::vector<Edge> edges;
  for (std::size_t r = 0; r < height; ++r) {
    for (std::size_t c = 0; c < width; ++c) {
      const Qubit v = r * width + c;
      if (c + 1 < width) edges.emplace_back(v, v + 1);
      if (r + 1 < height) edges.emplace_back(v, v + width);
    }
  }
  return CouplingGraph(width * height, edges,
                       "grid:" + std::to_string(width) + "x" + std::to_string(height));
}

CouplingGraph heavy_hex_graph(std::size_t scale) {
  require_positive(scale, "heavy-hex scale");
  const std::size_t rows = scale + 1;
  const std::size_t width = 4 * scale + 1;
  std::vector<Edge> edges;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c + 1 < width; ++c) edges.emplace_back(r * width + c, r * width + c + 1);
  }
  Qubit next = rows * width;
  for (std::size_t r = 0; r + 1 < rows; ++r) {
    for (std::size_t c = (r % 2 == 0) ? 0 : 2; c < width; c += 4) {
      const Qubit bridge = next++;
      edges.emplace_back(r * width + c, bridge);
      edges.emplace_back(bridge, (r + 1) * width + c);
    }
  }
  return CouplingGraph(next, edges, "heavyhex:" + std::to_string(scale));
}

CouplingGraph complete_graph(std::size_t n) {
  require_positive(n, "complete graph size");
  std::vector<Edge> edges;
  for (Qubit a = 0; a < n; ++a) {
    for (Qubit b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  }
  return CouplingGraph(n, edges, "complete:" + std::to_string(n));
}

CouplingGraph random_tree_graph(std::size_t n, std::uint64_t seed) {
  require_positive(n, "random tree size");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Qubit v = 1; v < n; ++v) edges.emplace_back(rng.below(v), v);
  return CouplingGraph(n, edges, "randomtree:" + std::to_string(n) + ":seed" + std::to_string(seed));
}

CouplingGraph graph_family(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw GraphError("graph spec needs 'family:size', got '" + std::string(spec) + "'");
  const std::string_view family = spec.substr(0, colon);
  std::string_view rest = spec.substr(colon + 1);
  auto size_or_throw = [&](std::string_view s) {
    auto v = parse_size(s);
    if (!v) throw GraphError("invalid size '" + std::string(s) + "' in graph spec '" + std::string(spec) + "'");
    return *v;
  };
  if (family == "line") return line_graph(size_or_throw(rest));
  if (family == "ring") return ring_graph(size_or_throw(rest));
  if (family == "complete") return complete_graph(size_or_throw(rest));
  if (family == "heavyhex") return heavy_hex_graph(size_or_throw(rest));
  if (family == "grid") {
    const auto x = rest.find('x');
    if (x == std::string_view::npos) throw GraphError("grid spec needs WxH, got '" + std::string(rest) + "'");
    return grid_graph(size_or_throw(rest.substr(0, x)), size_or_throw(rest.substr(x + 1)));
  }
  if (family == "randomtree") {
    std::uint64_t seed = 0;
    const auto c2 = rest.find(':');
    if (c2 != std::string_view::npos) {
      std::string_view s = rest.substr(c2 + 1);
      if (s.substr(0, 4) == "seed") s.remove_prefix(4);
      seed = size_or_throw(s);
      rest = rest.substr(0, c2);
    }
    return random_tree_graph(size_or_throw(rest), seed);
  }
  throw GraphError("unknown graph family '" + std::string(family) + "'");
}

CouplingGraph bfs_patch(const CouplingGraph& g, std::size_t n, std::string name) {
  if (n == 0 || n > g.num_vertices()) throw GraphError("patch size out of range");
  const SpanningTree tree = spanning_tree(g, 0);
  std::vector<Qubit> relabel(g.num_vertices(), SpanningTree::kNoParent);
  for (std::size_t i = 0; i < n; ++i) relabel[tree.order[i]] = i;
  std::vector<Edge> edges;
  for (auto [a, b] : g.edges()) {
    if (relabel[a] != SpanningTree::kNoParent && relabel[b] != SpanningTree::kNoParent) {
      edges.emplace_back(relabel[a], relabel[b]);
    }
  }
  return CouplingGraph(n, edges, std::move(name));
}

CouplingGraph graph_of_size(std::string_view family, std::size_t n, std::uint64_t seed) {
  require_positive(n, "graph size");
  if (family == "line") return line_graph(n);
  if (family == "ring") return ring_graph(n);
  if (family == "complete") return complete_graph(n);
  if (family == "randomtree") return random_tree_graph(n, seed);
  if (family == "grid") {
    const auto width = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
    const std::size_t height = (n + width - 1) / width;
    if (width * height == n) return grid_graph(width, height);
    // Row-major prefixes of a grid are connected.
    CouplingGraph full = grid_graph(width, height);
    std::vector<Edge> edges;
    for (auto [a, b] : full.edges()) {
      if (a < n && b < n) edges.emplace_back(a, b);
    }
    return CouplingGraph(n, edges, "grid:" + std::to_string(n));
  }
  if (family == "heavyhex") {
    std::size_t scale = 1;
    while (heavy_hex_graph(scale).num_vertices() < n) ++scale;
    return bfs_patch(heavy_hex_graph(scale), n, "heavyhex:" + std::to_string(n));
  }
  throw GraphError("unknown graph family '" + std::string(family) + "'");
}

std::vector<Edge> SpanningTree::edges() const {
  std::vector<Edge> out;
  for (Qubit v : order) {
    if (v != root) out.emplace_back(parent[v], v);
  }
  return out;
}

SpanningTree spanning_tree(const CouplingGraph& g, Qubit root, TreeMode mode, const std::vector<bool>* alive) {
  const std::size_t n = g.num_vertices();
  if (root >= n) throw GraphError("spanning tree root out of range");
  if (alive != nullptr && !(*alive)[root]) throw GraphError("spanning tree root is not alive");
  SpanningTree tree;
  tree.root = root;
  tree.parent.assign(n, SpanningTree::kNoParent);
  tree.children.assign(n, {});
  tree.parent[root] = root;
  tree.order.push_back(root);
  auto usable = [&](Qubit w) { return (alive == nullptr || (*alive)[w]) && !tree.contains(w); };
  if (mode == TreeMode::Bfs) {
    for (std::size_t head = 0; head < tree.order.size(); ++head) {
      const Qubit v = tree.order[head];
      for (Qubit w : g.neighbours(v)) {
        if (!usable(w)) continue;
        tree.parent[w] = v;
        tree.children[v].push_back(w);
        tree.order.push_back(w);
      }
    }
  } else {
    std::vector<Qubit> stack{root};
    while (!stack.empty()) {
      const Qubit v = stack.back();
      const auto& adj = g.neighbours(v);
      auto it = std::find_if(adj.begin(), adj.end(), usable);
      if (it == adj.end()) {
        stack.pop_back();
        continue;
      }
      tree.parent[*it] = v;
      tree.children[v].push_back(*it);
      tree.order.push_back(*it);
      stack.push_back(*it);
    }
  }
  const std::size_t expected =
      alive == nullptr ? n : static_cast<std::size_t>(std::count(alive->begin(), alive->end(), true));
  if (tree.order.size() != expected) throw DisconnectedGraphError("graph is not connected");
  return tree;
}

SteinerTree steiner_tree(const CouplingGraph& g, const std::vector<Qubit>& terminals, const std::vector<bool>* alive) {
  if (terminals.empty()) throw GraphError("Steiner tree needs at least one terminal");
  const std::size_t n = g.num_vertices();
  SteinerTree result;
  result.terminals = terminals;
  std::sort(result.terminals.begin(), result.terminals.end());
  result.terminals.erase(std::unique(result.terminals.begin(), result.terminals.end()), result.terminals.end());
  for (Qubit t : result.terminals) {
    if (t >= n) throw GraphError("terminal out of range");
  }
  std::vector<bool> in_tree(n, false);
  std::vector<bool> is_terminal(n, false);
  for (Qubit t : result.terminals) is_terminal[t] = true;
  in_tree[result.terminals.front()] = true;
  result.vertices.push_back(result.terminals.front());
  std::size_t connected = 1;
  while (connected < result.terminals.size()) {
    // Multi-source BFS from the current tree; sources and neighbours are
    // visited in ascending order so ties resolve to the lowest index.
    std::vector<std::size_t> dist(n, kUnreached);
    std::vector<Qubit> pred(n, SpanningTree::kNoParent);
    std::deque<Qubit> queue;
    for (Qubit v = 0; v < n; ++v) {
      if (in_tree[v]) {
        dist[v] = 0;
        queue.push_back(v);
      }
    }
    while (!queue.empty()) {
      const Qubit v = queue.front();
      queue.pop_front();
      for (Qubit w : g.neighbours(v)) {
        if (alive != nullptr && !(*alive)[w]) continue;
        if (dist[w] == kUnreached) {
          dist[w] = dist[v] + 1;
          pred[w] = v;
          queue.push_back(w);
        }
      }
    }
    Qubit best = SpanningTree::kNoParent;
    for (Qubit t : result.terminals) {
      if (in_tree[t]) continue;
      if (dist[t] == kUnreached) throw DisconnectedGraphError("terminals are not connected");
      if (best == SpanningTree::kNoParent || dist[t] < dist[best]) best = t;
    }
    for (Qubit v = best; !in_tree[v]; v = pred[v]) {
      in_tree[v] = true;
      result.vertices.push_back(v);
      result.edges.emplace_back(std::min(v, pred[v]), std::max(v, pred[v]));
      if (is_terminal[v]) ++connected;
    }
  }
  std::sort(result.vertices.begin(), result.vertices.end());
  std::sort(result.edges.begin(), result.edges.end());
  for (Qubit v : result.vertices) {
    if (!is_terminal[v]) result.steiner_nodes.push_back(v);
  }
  return result;
}

std::vector<Qubit> shortest_path(const CouplingGraph& g, Qubit a, Qubit b) {
  if (a >= g.num_vertices() || b >= g.num_vertices()) throw GraphError("path endpoint out of range");
  const auto dist = bfs_distances(g, b);
  if (dist[a] == kUnreached) throw DisconnectedGraphError("no path between endpoints");
  std::vector<Qubit> path{a};
  while (path.back() != b) {
    const Qubit v = path.back();
    for (Qubit w : g.neighbours(v)) {
      if (dist[w] + 1 == dist[v]) {
        path.push_back(w);
        break;
      }
    }
  }
  return path;
}

std::vector<std::vector<std::size_t>> distance_matrix(const CouplingGraph& g) {
  std::vector<std::vector<std::size_t>> out;
  out.reserve(g.num_vertices());
  for (Qubit v = 0; v < g.num_vertices(); ++v) out.push_back(bfs_distances(g, v));
  return out;
}

}  // namespace paritysynth
