#include "udg/independence.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_map>

#include "udg/error.hpp"

namespace udg {

namespace {

using CellKey = std::pair<long long, long long>;

struct CellHash {
  std::size_t operator()(const CellKey& c) const noexcept {
    const auto h = static_cast<std::uint64_t>(c.first) * 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(c.second);
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

bool search_independent(const Graph& g, std::vector<int>& candidates, int size) {
  if (size <= 0) return true;
  if (static_cast<int>(candidates.size()) < size) return false;

  // Degrees inside the candidate set; candidates stays sorted.
  auto inside_degree = [&](int v) {
    int d = 0;
    for (int w : g.neighbors(v))
      if (std::binary_search(candidates.begin(), candidates.end(), w)) ++d;
    return d;
  };
  int pivot = candidates.front();
  int pivot_degree = inside_degree(pivot);
  for (int v : candidates) {
    if (pivot_degree == 0) break;
    const int d = inside_degree(v);
    if (d < pivot_degree) {
      pivot = v;
      pivot_degree = d;
    }
  }
  if (pivot_degree == 0) {
    // An isolated candidate belongs to some maximum independent set.
    std::vector<int> rest;
    for (int v : candidates)
      if (v != pivot) rest.push_back(v);
    return search_independent(g, rest, size - 1);
  }

  // Some size-k independent set meets N[pivot]; try each member of it.
  std::vector<int> branch{pivot};
  for (int w : g.neighbors(pivot))
    if (std::binary_search(candidates.begin(), candidates.end(), w)) branch.push_back(w);
  for (int chosen : branch) {
    std::vector<int> rest;
    const auto nc = g.neighbors(chosen);
    for (int v : candidates)
      if (v != chosen && !std::binary_search(nc.begin(), nc.end(), v)) rest.push_back(v);
    if (search_independent(g, rest, size - 1)) return true;
  }
  return false;
}

}  // namespace

bool has_independent_subset(const Graph& g, std::span<const int> candidates, int size) {
  std::vector<int> sorted(candidates.begin(), candidates.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return search_independent(g, sorted, size);
}

VertexSet independent_set_graph(const Graph& g, int bound) {
  if (bound < 1) throw BadParameter("independence bound must be at least 1");
  const auto n = g.num_vertices();
  std::vector<bool> alive(n, true);
  // Deleting vertices only shrinks neighborhoods, so eligibility is sticky.
  std::vector<bool> eligible(n, false);
  std::size_t remaining = n;
  std::vector<int> picked;

  auto alive_neighbors = [&](int v) {
    std::vector<int> out;
    for (int w : g.neighbors(v))
      if (alive[static_cast<std::size_t>(w)]) out.push_back(w);
    return out;
  };

  while (remaining > 0) {
    int chosen = -1;
    for (std::size_t v = 0; v < n && chosen < 0; ++v) {
      if (!alive[v]) continue;
      if (!eligible[v]) {
        const auto nbrs = alive_neighbors(static_cast<int>(v));
        eligible[v] = static_cast<int>(nbrs.size()) <= bound || !has_independent_subset(g, nbrs, bound + 1);
      }
      if (eligible[v]) chosen = static_cast<int>(v);
    }
    if (chosen < 0) {
      std::vector<int> witness;
      for (std::size_t v = 0; v < n; ++v)
        if (alive[v]) witness.push_back(static_cast<int>(v));
      throw NoEligibleVertex(bound, std::move(witness));
    }
    picked.push_back(chosen);
    alive[static_cast<std::size_t>(chosen)] = false;
    --remaining;
    for (int w : g.neighbors(chosen)) {
      if (alive[static_cast<std::size_t>(w)]) {
        alive[static_cast<std::size_t>(w)] = false;
        --remaining;
      }
    }
  }
  return VertexSet(n, std::move(picked));
}

VertexSet independent_set_geometric(const GeometricInstance& inst) {
  const auto n = inst.size();
  double r_max = 0.0;
  for (const Disk& d : inst.disks) {
    if (!(d.r > 0.0)) throw NonPositiveRadius(static_cast<int>(&d - inst.disks.data()));
    r_max = std::max(r_max, d.r);
  }
  // Grid with cell side 2 r_max: every neighbor of a disk lies in the 3x3 block around its cell.
  const double cell = 2.0 * r_max * (1.0 + 1e-12);
  auto cell_of = [&](const Disk& d) {
    return std::pair{static_cast<long long>(std::floor(d.x / cell)), static_cast<long long>(std::floor(d.y / cell))};
  };
  std::unordered_map<CellKey, std::vector<int>, CellHash> grid;
  grid.reserve(n);
  for (std::size_t v = 0; v < n; ++v) grid[cell_of(inst.disks[v])].push_back(static_cast<int>(v));

  const auto order = sweep_order(inst);
  std::vector<bool> alive(n, true);
  std::vector<int> picked;
  for (int v : order) {
    if (!alive[static_cast<std::size_t>(v)]) continue;
    picked.push_back(v);
    const Disk& a = inst.disks[static_cast<std::size_t>(v)];
    const auto [cx, cy] = cell_of(a);
    for (long long gx = cx - 1; gx <= cx + 1; ++gx) {
      for (long long gy = cy - 1; gy <= cy + 1; ++gy) {
        const auto it = grid.find({gx, gy});
        if (it == grid.end()) continue;
        for (int w : it->second) {
          const Disk& b = inst.disks[static_cast<std::size_t>(w)];
          const double dx = a.x - b.x;
          const double dy = a.y - b.y;
          const double reach = a.r + b.r;
          if (dx * dx + dy * dy <= reach * reach) alive[static_cast<std::size_t>(w)] = false;
        }
      }
    }
  }
  return VertexSet(n, std::move(picked));
}

VertexSet dominating_set(const Graph& g) { return greedy_maximal_independent_set(g); }

VertexSet total_dominating_set(const Graph& g) {
  const auto n = g.num_vertices();
  for (std::size_t v = 0; v < n; ++v)
    if (g.degree(static_cast<int>(v)) == 0) throw IsolatedVertex(static_cast<int>(v));
  const VertexSet x = greedy_maximal_independent_set(g);
  std::vector<int> out = x.members();
  for (int v : x) out.push_back(g.neighbors(v).front());
  return VertexSet(n, std::move(out));
}

CdomResult connected_dominating_set(const Graph& g, std::optional<int> root) {
  const auto n = g.num_vertices();
  if (n == 0) throw BadParameter("connected domination needs a non-empty graph");
  const int start = root.value_or(0);
  const BfsLevels bfs = bfs_levels(g, start);

  CdomTrace trace;
  trace.root = start;
  trace.levels.resize(bfs.levels.size());
  trace.levels[0].level = bfs.levels[0];
  trace.levels[0].independent = {start};

  std::vector<bool> in_previous(n, false);  // membership in IS_{i-1}
  in_previous[static_cast<std::size_t>(start)] = true;
  std::vector<int> out{start};

  for (std::size_t i = 1; i < bfs.levels.size(); ++i) {
    CdomLevel& lvl = trace.levels[i];
    lvl.level = bfs.levels[i];
    std::vector<int> undominated;
    for (int v : lvl.level) {
      const auto nbrs = g.neighbors(v);
      const bool hit = std::any_of(nbrs.begin(), nbrs.end(),
                                   [&](int w) { return in_previous[static_cast<std::size_t>(w)]; });
      (hit ? lvl.dominated : undominated).push_back(v);
    }
    // Greedy maximal independent set of G(S_i - DS_i) in id order.
    std::vector<bool> blocked(n, false);
    for (int v : undominated) {
      if (blocked[static_cast<std::size_t>(v)]) continue;
      lvl.independent.push_back(v);
      for (int w : g.neighbors(v)) blocked[static_cast<std::size_t>(w)] = true;
    }
    for (int v : lvl.independent) lvl.parents.push_back(bfs.parent[static_cast<std::size_t>(v)]);
    std::sort(lvl.parents.begin(), lvl.parents.end());
    lvl.parents.erase(std::unique(lvl.parents.begin(), lvl.parents.end()), lvl.parents.end());

    for (int v : trace.levels[i - 1].independent) in_previous[static_cast<std::size_t>(v)] = false;
    for (int v : lvl.independent) in_previous[static_cast<std::size_t>(v)] = true;
    out.insert(out.end(), lvl.independent.begin(), lvl.independent.end());
    out.insert(out.end(), lvl.parents.begin(), lvl.parents.end());
  }
  return {VertexSet(n, std::move(out)), std::move(trace)};
}

}  // namespace udg
