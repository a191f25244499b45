#pragma once

#include <optional>
#include <span>
#include <vector>

#include "udg/geometry.hpp"
#include "udg/graph.hpp"

namespace udg {

/// Proper vertex coloring with colors 1..num_colors.
struct Coloring {
  std::vector<int> color;
  int num_colors = 0;

  /// Vertices per color; classes[c - 1] holds color c, ascending.
  std::vector<std::vector<int>> classes() const;
};

/// Smallest-last coloring for graphs where every induced subgraph has a
/// vertex of degree <= degree_bound: peel the lowest-id such vertex, then
/// color in reverse with the first color free among its neighbors.
/// Uses at most degree_bound + 1 colors. Throws MinDegreeExceeded with the
/// unpeelable remainder as witness.
Coloring color_triangle_free(const Graph& g, int degree_bound);

/// Vertex cover by triangle stripping, NT decomposition and dropping the
/// largest color class of a (color_bound)-coloring of G(Q).
/// color_bound 4 targets unit disk graphs (ratio 1.5), 6 targets disks of
/// arbitrary radius (ratio 5/3). Throws MinDegreeExceeded if G(Q) cannot be
/// colored that way, which certifies g is outside the class.
VertexSet vcover(const Graph& g, int color_bound = 4);

/// Worst-case ratio vcover guarantees for a given color bound.
double vcover_guarantee(int color_bound);

/// First fit along the reverse degeneracy order: at most delta + 1 colors.
Coloring color_offline(const Graph& g);

/// On-line first fit: each vertex of `arrival` gets the smallest color not
/// used by previously presented neighbors. Colors are never revised.
Coloring color_online_firstfit(const Graph& g, std::span<const int> arrival);

/// Certified lower bound on the chromatic number of a unit disk graph:
/// max(ceil(delta / 3) + 1, |sector_clique|). Returns 0 for the empty graph.
/// Throws ModelMismatch if `inst` does not generate g.
int coloring_lower_bound(const Graph& g, const GeometricInstance* inst = nullptr);

}  // namespace udg
