#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace udg {

using Edge = std::pair<int, int>;

/// Immutable undirected simple graph on vertices 0..n-1.
///
/// Adjacency lists are sorted ascending, which every deterministic
/// "lowest id first" rule in the library relies on.
class Graph {
 public:
  Graph() = default;

  /// Canonicalizes `edges`: duplicates and reversed duplicates collapse.
  /// Throws IdOutOfRange or SelfLoop.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t num_vertices() const { return adjacency_.size(); }
  std::size_t num_edges() const { return num_edges_; }

  std::span<const int> neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  std::size_t degree(int v) const { return adjacency_[static_cast<std::size_t>(v)].size(); }
  std::size_t max_degree() const;
  bool has_edge(int u, int v) const;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::vector<int>> adjacency_;
  std::size_t num_edges_ = 0;
};

inline Graph build_graph(std::size_t n, std::span<const Edge> edges) {
  return Graph::from_edges(n, edges);
}

Graph complement(const Graph& g);

/// Sorted, duplicate-free set of vertex ids of a host graph with host_n vertices.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::size_t host_n, std::vector<int> members);

  static VertexSet all(std::size_t host_n);

  std::size_t host_n() const { return host_n_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(int v) const;
  const std::vector<int>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  /// Indicator vector of length host_n.
  std::vector<bool> mask() const;

  bool operator==(const VertexSet&) const = default;

 private:
  std::size_t host_n_ = 0;
  std::vector<int> members_;
};

struct InducedSubgraph {
  Graph graph;
  std::vector<int> id_map;  // new id -> original id, ascending
};

/// Subgraph induced on `subset`; vertex order is preserved.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& subset);

struct DegeneracyResult {
  std::vector<int> order;  // removal order
  int delta = 0;
};

/// Smallest-last removal order. Ties on current degree go to the lowest id.
DegeneracyResult degeneracy_ordering(const Graph& g);

/// First triangle found scanning edges (u < v) lexicographically; the third
/// vertex is the smallest common neighbor. Returned ascending.
std::optional<std::array<int, 3>> find_triangle(const Graph& g);

/// Picks vertices in `order`, skipping those already adjacent to a pick.
VertexSet greedy_maximal_independent_set(const Graph& g, std::span<const int> order);
VertexSet greedy_maximal_independent_set(const Graph& g);

struct BfsLevels {
  std::vector<std::vector<int>> levels;  // levels[i] ascending
  std::vector<int> level;                // per vertex
  std::vector<int> parent;               // -1 for the root
  int depth() const { return static_cast<int>(levels.size()) - 1; }
};

/// BFS tree rooted at `root`, neighbors explored in ascending id order.
/// Throws NotConnected if some vertex is unreachable.
BfsLevels bfs_levels(const Graph& g, int root);

bool is_connected(const Graph& g);
std::vector<std::vector<int>> components(const Graph& g);

/// True when `order` lists every vertex 0..n-1 exactly once.
bool is_permutation_of_vertices(std::span<const int> order, std::size_t n);

}  // namespace udg
