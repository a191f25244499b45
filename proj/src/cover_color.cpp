#include "udg/cover_color.hpp"

#include <algorithm>
#include <set>

#include "udg/error.hpp"
#include "udg/matching.hpp"

namespace udg {

std::vector<std::vector<int>> Coloring::classes() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(num_colors));
  for (std::size_t v = 0; v < color.size(); ++v)
    out[static_cast<std::size_t>(color[v] - 1)].push_back(static_cast<int>(v));
  return out;
}

namespace {

/// Smallest color >= 1 not held by an already-colored neighbor (0 = uncolored).
int first_free_color(const Graph& g, int v, const std::vector<int>& color) {
  std::vector<bool> used(g.degree(v) + 2, false);
  for (int w : g.neighbors(v)) {
    const int c = color[static_cast<std::size_t>(w)];
    if (c > 0 && static_cast<std::size_t>(c) < used.size()) used[static_cast<std::size_t>(c)] = true;
  }
  int c = 1;
  while (used[static_cast<std::size_t>(c)]) ++c;
  return c;
}

Coloring color_in_order(const Graph& g, std::span<const int> order) {
  Coloring out;
  out.color.assign(g.num_vertices(), 0);
  for (int v : order) {
    const int c = first_free_color(g, v, out.color);
    out.color[static_cast<std::size_t>(v)] = c;
    out.num_colors = std::max(out.num_colors, c);
  }
  return out;
}

}  // namespace

Coloring color_triangle_free(const Graph& g, int degree_bound) {
  if (degree_bound < 0) throw BadParameter("degree bound must be non-negative");
  const auto n = g.num_vertices();
  std::vector<int> degree(n);
  std::set<int> ready;  // alive vertices with degree <= bound
  for (std::size_t v = 0; v < n; ++v) {
    degree[v] = static_cast<int>(g.degree(static_cast<int>(v)));
    if (degree[v] <= degree_bound) ready.insert(static_cast<int>(v));
  }
  std::vector<bool> removed(n, false);
  std::vector<int> stack;
  stack.reserve(n);
  while (!ready.empty()) {
    const int v = *ready.begin();
    ready.erase(ready.begin());
    removed[static_cast<std::size_t>(v)] = true;
    stack.push_back(v);
    for (int w : g.neighbors(v)) {
      const auto wi = static_cast<std::size_t>(w);
      if (!removed[wi] && --degree[wi] == degree_bound) ready.insert(w);
    }
  }
  if (stack.size() != n) {
    std::vector<int> witness;
    for (std::size_t v = 0; v < n; ++v)
      if (!removed[v]) witness.push_back(static_cast<int>(v));
    throw MinDegreeExceeded(degree_bound, std::move(witness));
  }
  std::reverse(stack.begin(), stack.end());
  return color_in_order(g, stack);
}

double vcover_guarantee(int color_bound) {
  return std::max(1.5, 2.0 * (1.0 - 1.0 / static_cast<double>(color_bound)));
}

VertexSet vcover(const Graph& g, int color_bound) {
  if (color_bound < 1) throw BadParameter("color bound must be at least 1");
  const auto n = g.num_vertices();

  // Strip vertex-disjoint triangles. Removing vertices never creates a
  // triangle, so one lexicographic pass over the edges finds the same
  // triangles as restarting the scan after every removal.
  std::vector<bool> alive(n, true);
  std::vector<int> cover;
  for (const auto& [u, v] : g.edges()) {
    if (!alive[static_cast<std::size_t>(u)] || !alive[static_cast<std::size_t>(v)]) continue;
    const auto nu = g.neighbors(u);
    const auto nv = g.neighbors(v);
    auto a = nu.begin();
    auto b = nv.begin();
    while (a != nu.end() && b != nv.end()) {
      if (*a < *b) {
        ++a;
      } else if (*b < *a) {
        ++b;
      } else if (!alive[static_cast<std::size_t>(*a)]) {
        ++a;
        ++b;
      } else {
        for (int t : {u, v, *a}) {
          alive[static_cast<std::size_t>(t)] = false;
          cover.push_back(t);
        }
        break;
      }
    }
  }

  std::vector<int> rest;
  for (std::size_t v = 0; v < n; ++v)
    if (alive[v]) rest.push_back(static_cast<int>(v));
  const InducedSubgraph remainder = induced_subgraph(g, VertexSet(n, rest));
  const NtDecomposition nt = nt_decompose(remainder.graph);
  for (int v : nt.p) cover.push_back(remainder.id_map[static_cast<std::size_t>(v)]);

  const InducedSubgraph core = induced_subgraph(remainder.graph, nt.q);
  const Coloring coloring = color_triangle_free(core.graph, color_bound - 1);
  const auto classes = coloring.classes();
  std::size_t largest = 0;
  for (std::size_t c = 1; c < classes.size(); ++c)
    if (classes[c].size() > classes[largest].size()) largest = c;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (c == largest) continue;
    for (int v : classes[c])
      cover.push_back(remainder.id_map[static_cast<std::size_t>(core.id_map[static_cast<std::size_t>(v)])]);
  }
  return VertexSet(n, std::move(cover));
}

Coloring color_offline(const Graph& g) {
  auto order = degeneracy_ordering(g).order;
  std::reverse(order.begin(), order.end());
  return color_in_order(g, order);
}

Coloring color_online_firstfit(const Graph& g, std::span<const int> arrival) {
  if (!is_permutation_of_vertices(arrival, g.num_vertices()))
    throw BadParameter("arrival sequence is not a permutation of the vertices");
  // A vertex only sees neighbors presented before it; color[w] == 0 for the
  // rest, so first_free_color ignores them.
  return color_in_order(g, arrival);
}

int coloring_lower_bound(const Graph& g, const GeometricInstance* inst) {
  if (g.num_vertices() == 0) {
    if (inst != nullptr && !inst->disks.empty()) throw ModelMismatch();
    return 0;
  }
  const int delta = degeneracy_ordering(g).delta;
  int bound = (delta + 2) / 3 + 1;
  if (inst != nullptr) bound = std::max(bound, static_cast<int>(sector_clique(*inst, g).size()));
  return bound;
}

}  // namespace udg
