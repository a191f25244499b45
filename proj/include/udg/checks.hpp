#pragma once

#include <span>

#include "udg/graph.hpp"

// Solution validators. Every heuristic and oracle result is run through
// these in the tests and by `udgapx verify`.
namespace udg {

bool is_independent(const Graph& g, const VertexSet& s);
bool is_maximal_independent(const Graph& g, const VertexSet& s);
bool is_clique(const Graph& g, const VertexSet& s);
bool is_vertex_cover(const Graph& g, const VertexSet& s);
bool is_dominating(const Graph& g, const VertexSet& s);
bool is_total_dominating(const Graph& g, const VertexSet& s);
bool induces_connected(const Graph& g, const VertexSet& s);
bool is_connected_dominating(const Graph& g, const VertexSet& s);

/// Colors are 1-based; a proper coloring has no monochromatic edge and no
/// zero/negative entries.
bool is_proper_coloring(const Graph& g, std::span<const int> colors);

}  // namespace udg
