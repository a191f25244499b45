#include "udg/exact.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "udg/error.hpp"

namespace udg {

namespace {

using Mask = std::uint64_t;
constexpr std::size_t kMaskBits = 64;

Mask bit(int v) { return Mask{1} << v; }
int lowest(Mask m) { return std::countr_zero(m); }
int count(Mask m) { return std::popcount(m); }

class Deadline {
 public:
  explicit Deadline(std::chrono::milliseconds budget)
      : enabled_(budget.count() > 0), end_(std::chrono::steady_clock::now() + budget) {}

  void poll() {
    if (!enabled_ || ++ticks_ % 4096 != 0) return;
    if (std::chrono::steady_clock::now() > end_) throw Timeout();
  }

 private:
  bool enabled_;
  std::chrono::steady_clock::time_point end_;
  std::uint64_t ticks_ = 0;
};

struct BitGraph {
  std::size_t n = 0;
  std::vector<Mask> adj;  // open neighborhoods

  explicit BitGraph(const Graph& g) : n(g.num_vertices()), adj(g.num_vertices(), 0) {
    for (std::size_t v = 0; v < n; ++v)
      for (int w : g.neighbors(static_cast<int>(v))) adj[v] |= bit(w);
  }
  Mask full() const { return n == kMaskBits ? ~Mask{0} : bit(static_cast<int>(n)) - 1; }
};

void check_size(const Graph& g, std::size_t limit) {
  const auto n = g.num_vertices();
  if (n > limit || n > kMaskBits) throw TooLarge(n, std::min(limit, kMaskBits));
}

VertexSet to_set(Mask m, std::size_t n) {
  std::vector<int> ids;
  for (; m != 0; m &= m - 1) ids.push_back(lowest(m));
  return VertexSet(n, std::move(ids));
}

// Branch on a maximum-degree candidate: leave it out, or take it and drop
// its neighbors.
struct MisSearch {
  const BitGraph& g;
  Deadline& deadline;
  Mask best = 0;
  int best_size = -1;

  void run(Mask cand, Mask chosen) {
    deadline.poll();
    const int have = count(chosen);
    if (have + count(cand) <= best_size) return;
    int pivot = -1;
    int pivot_degree = -1;
    for (Mask m = cand; m != 0; m &= m - 1) {
      const int v = lowest(m);
      const int d = count(g.adj[static_cast<std::size_t>(v)] & cand);
      if (d > pivot_degree) {
        pivot = v;
        pivot_degree = d;
      }
    }
    if (pivot_degree <= 0) {  // cand is independent (or empty)
      best = chosen | cand;
      best_size = count(best);
      return;
    }
    run(cand & ~bit(pivot) & ~g.adj[static_cast<std::size_t>(pivot)], chosen | bit(pivot));
    run(cand & ~bit(pivot), chosen);
  }
};

struct CliqueSearch {
  const BitGraph& g;
  Deadline& deadline;
  Mask best = 0;
  int best_size = -1;

  void run(Mask cand, Mask chosen) {
    deadline.poll();
    if (cand == 0) {
      if (count(chosen) > best_size) {
        best = chosen;
        best_size = count(chosen);
      }
      return;
    }
    while (cand != 0) {
      if (count(chosen) + count(cand) <= best_size) return;
      const int v = lowest(cand);
      run(cand & g.adj[static_cast<std::size_t>(v)], chosen | bit(v));
      cand &= ~bit(v);
    }
    if (count(chosen) > best_size) {
      best = chosen;
      best_size = count(chosen);
    }
  }
};

ExactSet clique_unchecked(const Graph& g, Deadline& deadline) {
  const BitGraph bg(g);
  CliqueSearch search{bg, deadline};
  search.run(bg.full(), 0);
  return {std::max(search.best_size, 0), to_set(search.best, g.num_vertices())};
}

// k-colorability by DSATUR-ordered backtracking. The seed clique is fixed to
// colors 1..|clique|; beyond that a vertex may open at most one new color.
struct ColorSearch {
  const BitGraph& g;
  Deadline& deadline;
  int k;
  std::vector<int> color;
  std::vector<Mask> members;  // members[c] = vertices of color c (1-based)

  ColorSearch(const BitGraph& bg, Deadline& d, int colors)
      : g(bg), deadline(d), k(colors), color(bg.n, 0), members(static_cast<std::size_t>(colors) + 1, 0) {}

  void assign(int v, int c) {
    color[static_cast<std::size_t>(v)] = c;
    members[static_cast<std::size_t>(c)] |= bit(v);
  }
  void unassign(int v) {
    members[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])] &= ~bit(v);
    color[static_cast<std::size_t>(v)] = 0;
  }

  bool run(Mask uncolored, int used) {
    deadline.poll();
    if (uncolored == 0) return true;
    int pick = -1;
    int pick_sat = -1;
    int pick_deg = -1;
    for (Mask m = uncolored; m != 0; m &= m - 1) {
      const int v = lowest(m);
      const Mask nbrs = g.adj[static_cast<std::size_t>(v)];
      int sat = 0;
      for (int c = 1; c <= used; ++c)
        if (members[static_cast<std::size_t>(c)] & nbrs) ++sat;
      const int deg = count(nbrs & uncolored);
      if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
        pick = v;
        pick_sat = sat;
        pick_deg = deg;
      }
    }
    const Mask nbrs = g.adj[static_cast<std::size_t>(pick)];
    const int limit = std::min(k, used + 1);
    for (int c = 1; c <= limit; ++c) {
      if (members[static_cast<std::size_t>(c)] & nbrs) continue;
      assign(pick, c);
      if (run(uncolored & ~bit(pick), std::max(used, c))) return true;
      unassign(pick);
    }
    return false;
  }
};

bool dominates(const BitGraph& g, Mask s, Mask target) {
  Mask covered = s;
  for (Mask m = s; m != 0; m &= m - 1) covered |= g.adj[static_cast<std::size_t>(lowest(m))];
  return (covered & target) == target;
}

bool totally_dominates(const BitGraph& g, Mask s, Mask target) {
  Mask covered = 0;
  for (Mask m = s; m != 0; m &= m - 1) covered |= g.adj[static_cast<std::size_t>(lowest(m))];
  return (covered & target) == target;
}

bool independent(const BitGraph& g, Mask s) {
  for (Mask m = s; m != 0; m &= m - 1)
    if (g.adj[static_cast<std::size_t>(lowest(m))] & s) return false;
  return true;
}

bool connected_within(const BitGraph& g, Mask s) {
  if (s == 0) return true;
  Mask reached = bit(lowest(s));
  Mask frontier = reached;
  while (frontier != 0) {
    Mask next = 0;
    for (Mask m = frontier; m != 0; m &= m - 1) next |= g.adj[static_cast<std::size_t>(lowest(m))];
    next &= s & ~reached;
    reached |= next;
    frontier = next;
  }
  return reached == s;
}

}  // namespace

ExactSet exact_mis(const Graph& g, const OracleLimits& limits) {
  check_size(g, limits.mis);
  Deadline deadline(limits.time_budget);
  const BitGraph bg(g);
  MisSearch search{bg, deadline};
  search.run(bg.full(), 0);
  return {std::max(search.best_size, 0), to_set(search.best, g.num_vertices())};
}

ExactSet exact_vc(const Graph& g, const OracleLimits& limits) {
  const ExactSet mis = exact_mis(g, limits);
  const auto n = g.num_vertices();
  std::vector<int> rest;
  for (std::size_t v = 0; v < n; ++v)
    if (!mis.witness.contains(static_cast<int>(v))) rest.push_back(static_cast<int>(v));
  return {static_cast<int>(n) - mis.size, VertexSet(n, std::move(rest))};
}

ExactSet exact_clique(const Graph& g, const OracleLimits& limits) {
  check_size(g, limits.clique);
  Deadline deadline(limits.time_budget);
  return clique_unchecked(g, deadline);
}

ExactColoring exact_chromatic(const Graph& g, const OracleLimits& limits) {
  check_size(g, limits.chromatic);
  const auto n = g.num_vertices();
  ExactColoring out;
  if (n == 0) return out;
  Deadline deadline(limits.time_budget);
  const ExactSet clique = clique_unchecked(g, deadline);
  const BitGraph bg(g);
  for (int k = clique.size; k <= static_cast<int>(n); ++k) {
    ColorSearch search(bg, deadline, k);
    Mask uncolored = bg.full();
    int c = 0;
    for (int v : clique.witness) {
      search.assign(v, ++c);
      uncolored &= ~bit(v);
    }
    if (search.run(uncolored, c)) {
      out.chromatic_number = k;
      out.witness.color = search.color;
      out.witness.num_colors = *std::max_element(search.color.begin(), search.color.end());
      return out;
    }
  }
  throw Error("chromatic search exhausted without a coloring");  // n colors always suffice
}

ExactSet exact_domination(const Graph& g, DominationVariant variant, const OracleLimits& limits) {
  const bool connected = variant == DominationVariant::connected;
  check_size(g, connected ? limits.connected_domination : limits.domination);
  const auto n = g.num_vertices();
  if (connected && !is_connected(g)) throw NotConnected();
  if (variant == DominationVariant::total)
    for (std::size_t v = 0; v < n; ++v)
      if (g.degree(static_cast<int>(v)) == 0) throw IsolatedVertex(static_cast<int>(v));
  if (n == 0) return {0, VertexSet(0, {})};

  Deadline deadline(limits.time_budget);
  const BitGraph bg(g);
  const Mask all = bg.full();
  const auto max_degree = static_cast<int>(g.max_degree());

  // A set of s vertices reaches at most s (Delta + 1) vertices, or s Delta for
  // open neighborhoods.
  const int reach = variant == DominationVariant::total ? max_degree : max_degree + 1;
  const int start = std::max(1, (static_cast<int>(n) + reach - 1) / std::max(reach, 1));

  auto accept = [&](Mask s) {
    switch (variant) {
      case DominationVariant::plain:
        return dominates(bg, s, all);
      case DominationVariant::independent:
        return independent(bg, s) && dominates(bg, s, all);
      case DominationVariant::total:
        return totally_dominates(bg, s, all);
      case DominationVariant::connected:
        return dominates(bg, s, all) && connected_within(bg, s);
    }
    return false;
  };

  for (int s = start; s <= static_cast<int>(n); ++s) {
    // Gosper's hack: all s-subsets of n bits in increasing numeric order.
    Mask subset = (s == 64) ? ~Mask{0} : bit(s) - 1;
    while (true) {
      deadline.poll();
      if (accept(subset)) return {s, to_set(subset, n)};
      const Mask low = subset & (~subset + 1);
      const Mask ripple = subset + low;
      if (ripple == 0) break;
      subset = (((ripple ^ subset) >> 2) / low) | ripple;
      if (subset & ~all) break;
    }
  }
  throw Error("domination search exhausted");  // V itself qualifies
}

}  // namespace udg
