#pragma once

#include <optional>
#include <vector>

#include "udg/geometry.hpp"
#include "udg/graph.hpp"

namespace udg {

/// True when G(candidates) has an independent set of at least `size` vertices.
/// Branches on the closed neighborhood of a minimum-degree candidate, so the
/// search depth is `size`.
bool has_independent_subset(const Graph& g, std::span<const int> candidates, int size);

/// Repeatedly takes the lowest-id remaining vertex whose remaining
/// neighborhood has independence number <= bound, then deletes it and its
/// neighbors. bound 3 gives a 1/3-approximation on unit disk graphs, 5 on
/// disks of arbitrary radius. Throws NoEligibleVertex (witness = remaining
/// vertices) when no vertex qualifies.
VertexSet independent_set_graph(const Graph& g, int bound = 3);

/// Sweep by x: take the leftmost remaining disk, delete it and everything it
/// meets. O(n log n + m); neighbors are found from the geometry directly.
VertexSet independent_set_geometric(const GeometricInstance& inst);

/// Greedy maximal independent set in id order; dominating and independent.
VertexSet dominating_set(const Graph& g);

/// Maximal independent set X plus, for each x in X, its lowest-id neighbor.
/// Throws IsolatedVertex.
VertexSet total_dominating_set(const Graph& g);

struct CdomLevel {
  std::vector<int> level;        // S_i
  std::vector<int> dominated;    // DS_i, dominated by IS_{i-1}
  std::vector<int> independent;  // IS_i
  std::vector<int> parents;      // NS_i, BFS parents of IS_i
};

struct CdomTrace {
  int root = 0;
  std::vector<CdomLevel> levels;  // index i = BFS depth i
  int depth() const { return static_cast<int>(levels.size()) - 1; }
};

struct CdomResult {
  VertexSet vertices;
  CdomTrace trace;
};

/// BFS-level connected dominating set: per level, a maximal independent set
/// of the vertices not yet dominated by the previous level's picks, plus the
/// BFS parents of those picks. Throws NotConnected.
CdomResult connected_dominating_set(const Graph& g, std::optional<int> root = std::nullopt);

}  // namespace udg
