#pragma once

// Test-only graph builders and brute-force reference solvers. Nothing here
// calls into the library's algorithms beyond Graph itself, so the references
// stay independent of the code they check.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

#include "udg/graph.hpp"
#include "udg/rng.hpp"

namespace udg::testing {

inline Graph complete(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edges(static_cast<std::size_t>(n), e);
}

inline Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(static_cast<std::size_t>(n), e);
}

inline Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(static_cast<std::size_t>(n), e);
}

/// Center 0, leaves 1..leaves.
inline Graph star(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph::from_edges(static_cast<std::size_t>(leaves + 1), e);
}

inline Graph edgeless(int n) { return Graph::from_edges(static_cast<std::size_t>(n), {}); }

inline Graph random_graph(int n, double p, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.uniform01() < p) e.emplace_back(u, v);
  return Graph::from_edges(static_cast<std::size_t>(n), e);
}

/// Labeled graph on n vertices whose edge set is the bit pattern `code`
/// over the pairs (u < v) in lexicographic order.
inline Graph labeled_graph(int n, std::uint64_t code) {
  std::vector<Edge> e;
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if (code >> bit & 1) e.emplace_back(u, v);
  return Graph::from_edges(static_cast<std::size_t>(n), e);
}

inline int pair_count(int n) { return n * (n - 1) / 2; }

namespace naive {

using Mask = std::uint64_t;

inline bool edge(const Graph& g, int u, int v) { return g.has_edge(u, v); }

inline bool independent(const Graph& g, Mask s) {
  const int n = static_cast<int>(g.num_vertices());
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if ((s >> u & 1) && (s >> v & 1) && edge(g, u, v)) return false;
  return true;
}

inline bool clique(const Graph& g, Mask s) {
  const int n = static_cast<int>(g.num_vertices());
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if ((s >> u & 1) && (s >> v & 1) && !edge(g, u, v)) return false;
  return true;
}

inline bool covers(const Graph& g, Mask s) {
  for (const auto& [u, v] : g.edges())
    if (!(s >> u & 1) && !(s >> v & 1)) return false;
  return true;
}

inline bool dominating(const Graph& g, Mask s, bool total) {
  const int n = static_cast<int>(g.num_vertices());
  for (int v = 0; v < n; ++v) {
    bool hit = !total && (s >> v & 1);
    for (int w : g.neighbors(v)) hit = hit || (s >> w & 1);
    if (!hit) return false;
  }
  return true;
}

inline bool connected(const Graph& g, Mask s) {
  if (s == 0) return true;
  Mask seen = Mask{1} << std::countr_zero(s);
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& [u, v] : g.edges()) {
      const bool in_u = s >> u & 1, in_v = s >> v & 1;
      if (!in_u || !in_v) continue;
      if ((seen >> u & 1) != (seen >> v & 1)) {
        seen |= (Mask{1} << u) | (Mask{1} << v);
        grew = true;
      }
    }
  }
  return seen == s;
}

/// Best popcount over all subsets satisfying `ok`; `maximize` picks max.
inline int best_subset(const Graph& g, const std::function<bool(Mask)>& ok, bool maximize) {
  const int n = static_cast<int>(g.num_vertices());
  int best = maximize ? -1 : n + 1;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    const int c = std::popcount(s);
    if (maximize ? c <= best : c >= best) continue;
    if (ok(s)) best = c;
  }
  return best;
}

inline int mis(const Graph& g) {
  return best_subset(g, [&](Mask s) { return independent(g, s); }, true);
}
inline int vc(const Graph& g) {
  return best_subset(g, [&](Mask s) { return covers(g, s); }, false);
}
inline int clique_number(const Graph& g) {
  return best_subset(g, [&](Mask s) { return clique(g, s); }, true);
}
inline int domination(const Graph& g) {
  return best_subset(g, [&](Mask s) { return dominating(g, s, false); }, false);
}
inline int independent_domination(const Graph& g) {
  return best_subset(g, [&](Mask s) { return independent(g, s) && dominating(g, s, false); }, false);
}
inline int total_domination(const Graph& g) {
  return best_subset(g, [&](Mask s) { return dominating(g, s, true); }, false);
}
inline int connected_domination(const Graph& g) {
  return best_subset(g, [&](Mask s) { return s != 0 && dominating(g, s, false) && connected(g, s); }, false);
}

/// Every minimum vertex cover, as masks.
inline std::vector<Mask> all_minimum_covers(const Graph& g) {
  const int n = static_cast<int>(g.num_vertices());
  const int opt = vc(g);
  std::vector<Mask> out;
  for (Mask s = 0; s < (Mask{1} << n); ++s)
    if (std::popcount(s) == opt && covers(g, s)) out.push_back(s);
  return out;
}

/// Smallest k such that some assignment in {1..k}^n is proper.
inline int chromatic(const Graph& g) {
  const int n = static_cast<int>(g.num_vertices());
  if (n == 0) return 0;
  for (int k = 1;; ++k) {
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    while (true) {
      bool proper = true;
      for (const auto& [u, v] : g.edges())
        if (c[static_cast<std::size_t>(u)] == c[static_cast<std::size_t>(v)]) proper = false;
      if (proper) return k;
      int i = 0;
      while (i < n && ++c[static_cast<std::size_t>(i)] == k) c[static_cast<std::size_t>(i++)] = 0;
      if (i == n) break;
    }
  }
}

/// max over nonempty vertex subsets of the minimum induced degree.
inline int degeneracy(const Graph& g) {
  const int n = static_cast<int>(g.num_vertices());
  int best = 0;
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    int mn = n;
    for (int v = 0; v < n; ++v) {
      if (!(s >> v & 1)) continue;
      int d = 0;
      for (int w : g.neighbors(v)) d += static_cast<int>(s >> w & 1);
      mn = std::min(mn, d);
    }
    best = std::max(best, mn);
  }
  return best;
}

inline bool has_triangle(const Graph& g) {
  const int n = static_cast<int>(g.num_vertices());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (edge(g, a, b) && edge(g, b, c) && edge(g, a, c)) return true;
  return false;
}

/// Fractional vertex cover LP optimum over half-integral points, times 2.
/// Half-integral optima always exist, so this is the LP optimum.
inline int twice_lp_vertex_cover(const Graph& g) {
  const int n = static_cast<int>(g.num_vertices());
  std::vector<int> x(static_cast<std::size_t>(n), 0);  // 0, 1, 2 = 0, 1/2, 1
  int best = 2 * n;
  while (true) {
    bool feasible = true;
    for (const auto& [u, v] : g.edges())
      if (x[static_cast<std::size_t>(u)] + x[static_cast<std::size_t>(v)] < 2) feasible = false;
    if (feasible) {
      int s = 0;
      for (int xi : x) s += xi;
      best = std::min(best, s);
    }
    int i = 0;
    while (i < n && ++x[static_cast<std::size_t>(i)] == 3) x[static_cast<std::size_t>(i++)] = 0;
    if (i == n) break;
  }
  return best;
}

}  // namespace naive

}  // namespace udg::testing
