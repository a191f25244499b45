#include "udg/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "udg/error.hpp"

namespace udg {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g;
  g.adjacency_.assign(n, {});
  for (const auto& [u, v] : edges) {
    if (u < 0 || static_cast<std::size_t>(u) >= n) throw IdOutOfRange(u, n);
    if (v < 0 || static_cast<std::size_t>(v) >= n) throw IdOutOfRange(v, n);
    if (u == v) throw SelfLoop(u);
    g.adjacency_[static_cast<std::size_t>(u)].push_back(v);
    g.adjacency_[static_cast<std::size_t>(v)].push_back(u);
  }
  std::size_t degree_sum = 0;
  for (auto& adj : g.adjacency_) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    degree_sum += adj.size();
  }
  g.num_edges_ = degree_sum / 2;
  return g;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& adj : adjacency_) best = std::max(best, adj.size());
  return best;
}

bool Graph::has_edge(int u, int v) const {
  const auto& adj = adjacency_[static_cast<std::size_t>(u)];
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (std::size_t u = 0; u < adjacency_.size(); ++u)
    for (int v : adjacency_[u])
      if (static_cast<int>(u) < v) out.emplace_back(static_cast<int>(u), v);
  return out;
}

Graph complement(const Graph& g) {
  const auto n = g.num_vertices();
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (!g.has_edge(static_cast<int>(u), static_cast<int>(v)))
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  return Graph::from_edges(n, edges);
}

VertexSet::VertexSet(std::size_t host_n, std::vector<int> members)
    : host_n_(host_n), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (int v : members_)
    if (v < 0 || static_cast<std::size_t>(v) >= host_n_) throw IdOutOfRange(v, host_n_);
}

VertexSet VertexSet::all(std::size_t host_n) {
  std::vector<int> ids(host_n);
  for (std::size_t i = 0; i < host_n; ++i) ids[i] = static_cast<int>(i);
  return VertexSet(host_n, std::move(ids));
}

bool VertexSet::contains(int v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

std::vector<bool> VertexSet::mask() const {
  std::vector<bool> m(host_n_, false);
  for (int v : members_) m[static_cast<std::size_t>(v)] = true;
  return m;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& subset) {
  if (subset.host_n() != g.num_vertices())
    throw BadParameter("vertex set refers to a graph with a different vertex count");
  std::vector<int> new_id(g.num_vertices(), -1);
  InducedSubgraph out;
  out.id_map = subset.members();
  for (std::size_t i = 0; i < out.id_map.size(); ++i)
    new_id[static_cast<std::size_t>(out.id_map[i])] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (int u : out.id_map)
    for (int v : g.neighbors(u))
      if (u < v && new_id[static_cast<std::size_t>(v)] >= 0)
        edges.emplace_back(new_id[static_cast<std::size_t>(u)], new_id[static_cast<std::size_t>(v)]);
  out.graph = Graph::from_edges(out.id_map.size(), edges);
  return out;
}

DegeneracyResult degeneracy_ordering(const Graph& g) {
  const auto n = g.num_vertices();
  std::vector<int> degree(n);
  std::set<std::pair<int, int>> queue;  // (current degree, id)
  for (std::size_t v = 0; v < n; ++v) {
    degree[v] = static_cast<int>(g.degree(static_cast<int>(v)));
    queue.emplace(degree[v], static_cast<int>(v));
  }
  std::vector<bool> removed(n, false);
  DegeneracyResult result;
  result.order.reserve(n);
  while (!queue.empty()) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    removed[static_cast<std::size_t>(v)] = true;
    result.order.push_back(v);
    result.delta = std::max(result.delta, d);
    for (int w : g.neighbors(v)) {
      const auto wi = static_cast<std::size_t>(w);
      if (removed[wi]) continue;
      queue.erase({degree[wi], w});
      queue.emplace(--degree[wi], w);
    }
  }
  return result;
}

std::optional<std::array<int, 3>> find_triangle(const Graph& g) {
  for (std::size_t u = 0; u < g.num_vertices(); ++u) {
    const auto nu = g.neighbors(static_cast<int>(u));
    for (int v : nu) {
      if (v <= static_cast<int>(u)) continue;
      const auto nv = g.neighbors(v);
      // smallest common neighbor via sorted merge
      auto a = nu.begin();
      auto b = nv.begin();
      while (a != nu.end() && b != nv.end()) {
        if (*a < *b) {
          ++a;
        } else if (*b < *a) {
          ++b;
        } else {
          std::array<int, 3> t{static_cast<int>(u), v, *a};
          std::sort(t.begin(), t.end());
          return t;
        }
      }
    }
  }
  return std::nullopt;
}

bool is_permutation_of_vertices(std::span<const int> order, std::size_t n) {
  if (order.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (int v : order) {
    if (v < 0 || static_cast<std::size_t>(v) >= n || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

VertexSet greedy_maximal_independent_set(const Graph& g, std::span<const int> order) {
  const auto n = g.num_vertices();
  if (!is_permutation_of_vertices(order, n))
    throw BadParameter("order is not a permutation of the vertices");
  std::vector<bool> blocked(n, false);
  std::vector<int> picked;
  for (int v : order) {
    if (blocked[static_cast<std::size_t>(v)]) continue;
    picked.push_back(v);
    blocked[static_cast<std::size_t>(v)] = true;
    for (int w : g.neighbors(v)) blocked[static_cast<std::size_t>(w)] = true;
  }
  return VertexSet(n, std::move(picked));
}

VertexSet greedy_maximal_independent_set(const Graph& g) {
  return greedy_maximal_independent_set(g, VertexSet::all(g.num_vertices()).members());
}

BfsLevels bfs_levels(const Graph& g, int root) {
  const auto n = g.num_vertices();
  if (root < 0 || static_cast<std::size_t>(root) >= n) throw IdOutOfRange(root, n);
  BfsLevels out;
  out.level.assign(n, -1);
  out.parent.assign(n, -1);
  std::deque<int> queue{root};
  out.level[static_cast<std::size_t>(root)] = 0;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    const int lu = out.level[static_cast<std::size_t>(u)];
    if (static_cast<std::size_t>(lu) >= out.levels.size()) out.levels.resize(static_cast<std::size_t>(lu) + 1);
    out.levels[static_cast<std::size_t>(lu)].push_back(u);
    for (int w : g.neighbors(u)) {
      const auto wi = static_cast<std::size_t>(w);
      if (out.level[wi] >= 0) continue;
      out.level[wi] = lu + 1;
      out.parent[wi] = u;
      queue.push_back(w);
      ++reached;
    }
  }
  if (reached != n) throw NotConnected();
  for (auto& level : out.levels) std::sort(level.begin(), level.end());
  return out;
}

std::vector<std::vector<int>> components(const Graph& g) {
  const auto n = g.num_vertices();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<int>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{static_cast<int>(s)};
    seen[s] = true;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (int w : g.neighbors(comp[i]))
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

}  // namespace udg
