#include "udg/checks.hpp"

#include <vector>

namespace udg {

namespace {

bool same_host(const Graph& g, const VertexSet& s) { return s.host_n() == g.num_vertices(); }

}  // namespace

bool is_independent(const Graph& g, const VertexSet& s) {
  if (!same_host(g, s)) return false;
  for (int u : s)
    for (int v : g.neighbors(u))
      if (s.contains(v)) return false;
  return true;
}

bool is_maximal_independent(const Graph& g, const VertexSet& s) {
  return is_independent(g, s) && is_dominating(g, s);
}

bool is_clique(const Graph& g, const VertexSet& s) {
  if (!same_host(g, s)) return false;
  const auto& m = s.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (!g.has_edge(m[i], m[j])) return false;
  return true;
}

bool is_vertex_cover(const Graph& g, const VertexSet& s) {
  if (!same_host(g, s)) return false;
  for (const auto& [u, v] : g.edges())
    if (!s.contains(u) && !s.contains(v)) return false;
  return true;
}

bool is_dominating(const Graph& g, const VertexSet& s) {
  if (!same_host(g, s)) return false;
  std::vector<bool> dominated(g.num_vertices(), false);
  for (int u : s) {
    dominated[static_cast<std::size_t>(u)] = true;
    for (int v : g.neighbors(u)) dominated[static_cast<std::size_t>(v)] = true;
  }
  for (bool d : dominated)
    if (!d) return false;
  return true;
}

bool is_total_dominating(const Graph& g, const VertexSet& s) {
  if (!same_host(g, s)) return false;
  std::vector<bool> dominated(g.num_vertices(), false);
  for (int u : s)
    for (int v : g.neighbors(u)) dominated[static_cast<std::size_t>(v)] = true;
  for (bool d : dominated)
    if (!d) return false;
  return true;
}

bool induces_connected(const Graph& g, const VertexSet& s) {
  if (!same_host(g, s)) return false;
  return is_connected(induced_subgraph(g, s).graph);
}

bool is_connected_dominating(const Graph& g, const VertexSet& s) {
  if (g.num_vertices() > 0 && s.empty()) return false;
  return is_dominating(g, s) && induces_connected(g, s);
}

bool is_proper_coloring(const Graph& g, std::span<const int> colors) {
  if (colors.size() != g.num_vertices()) return false;
  for (int c : colors)
    if (c < 1) return false;
  for (const auto& [u, v] : g.edges())
    if (colors[static_cast<std::size_t>(u)] == colors[static_cast<std::size_t>(v)]) return false;
  return true;
}

}  // namespace udg
