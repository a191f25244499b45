#include "udg/matching.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "udg/error.hpp"

namespace udg {

BipartiteGraph::BipartiteGraph(std::size_t left_n, std::size_t right_n, std::span<const Edge> edges)
    : left_adj_(left_n), right_n_(right_n) {
  for (const auto& [l, r] : edges) {
    if (l < 0 || static_cast<std::size_t>(l) >= left_n) throw IdOutOfRange(l, left_n);
    if (r < 0 || static_cast<std::size_t>(r) >= right_n) throw IdOutOfRange(r, right_n);
    left_adj_[static_cast<std::size_t>(l)].push_back(r);
  }
  for (auto& adj : left_adj_) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    num_edges_ += adj.size();
  }
}

std::vector<Edge> BipartiteGraph::edges() const {
  std::vector<Edge> out;
  for (std::size_t l = 0; l < left_adj_.size(); ++l)
    for (int r : left_adj_[l]) out.emplace_back(static_cast<int>(l), r);
  return out;
}

namespace {

constexpr int kFree = -1;
constexpr int kInf = std::numeric_limits<int>::max();

struct HopcroftKarp {
  const BipartiteGraph& b;
  std::vector<int> match_left;
  std::vector<int> match_right;
  std::vector<int> dist;

  explicit HopcroftKarp(const BipartiteGraph& g)
      : b(g), match_left(g.left_size(), kFree), match_right(g.right_size(), kFree), dist(g.left_size()) {}

  bool layer() {
    std::deque<int> queue;
    for (std::size_t l = 0; l < match_left.size(); ++l) {
      if (match_left[l] == kFree) {
        dist[l] = 0;
        queue.push_back(static_cast<int>(l));
      } else {
        dist[l] = kInf;
      }
    }
    bool found = false;
    while (!queue.empty()) {
      const int l = queue.front();
      queue.pop_front();
      for (int r : b.left_neighbors(l)) {
        const int next = match_right[static_cast<std::size_t>(r)];
        if (next == kFree) {
          found = true;
        } else if (dist[static_cast<std::size_t>(next)] == kInf) {
          dist[static_cast<std::size_t>(next)] = dist[static_cast<std::size_t>(l)] + 1;
          queue.push_back(next);
        }
      }
    }
    return found;
  }

  bool augment(int l) {
    for (int r : b.left_neighbors(l)) {
      const int next = match_right[static_cast<std::size_t>(r)];
      if (next == kFree ||
          (dist[static_cast<std::size_t>(next)] == dist[static_cast<std::size_t>(l)] + 1 && augment(next))) {
        match_left[static_cast<std::size_t>(l)] = r;
        match_right[static_cast<std::size_t>(r)] = l;
        return true;
      }
    }
    dist[static_cast<std::size_t>(l)] = kInf;
    return false;
  }

  void run() {
    while (layer())
      for (std::size_t l = 0; l < match_left.size(); ++l)
        if (match_left[l] == kFree) augment(static_cast<int>(l));
  }
};

}  // namespace

Matching max_matching(const BipartiteGraph& b) {
  HopcroftKarp hk(b);
  hk.run();
  Matching m;
  for (std::size_t l = 0; l < hk.match_left.size(); ++l)
    if (hk.match_left[l] != kFree) m.emplace_back(static_cast<int>(l), hk.match_left[l]);
  return m;
}

BipartiteCover konig_cover(const BipartiteGraph& b, const Matching& m) {
  std::vector<int> match_left(b.left_size(), kFree);
  std::vector<int> match_right(b.right_size(), kFree);
  for (const auto& [l, r] : m) {
    if (l < 0 || static_cast<std::size_t>(l) >= b.left_size() || r < 0 ||
        static_cast<std::size_t>(r) >= b.right_size())
      throw NotMaximumMatching("matched pair out of range");
    const auto adj = b.left_neighbors(l);
    if (!std::binary_search(adj.begin(), adj.end(), r))
      throw NotMaximumMatching("matched pair is not an edge");
    if (match_left[static_cast<std::size_t>(l)] != kFree || match_right[static_cast<std::size_t>(r)] != kFree)
      throw NotMaximumMatching("vertex matched twice");
    match_left[static_cast<std::size_t>(l)] = r;
    match_right[static_cast<std::size_t>(r)] = l;
  }

  std::vector<bool> left_reached(b.left_size(), false);
  std::vector<bool> right_reached(b.right_size(), false);
  std::deque<int> queue;
  for (std::size_t l = 0; l < b.left_size(); ++l) {
    if (match_left[l] == kFree) {
      left_reached[l] = true;
      queue.push_back(static_cast<int>(l));
    }
  }
  while (!queue.empty()) {
    const int l = queue.front();
    queue.pop_front();
    for (int r : b.left_neighbors(l)) {
      if (r == match_left[static_cast<std::size_t>(l)] || right_reached[static_cast<std::size_t>(r)]) continue;
      right_reached[static_cast<std::size_t>(r)] = true;
      const int next = match_right[static_cast<std::size_t>(r)];
      if (next != kFree && !left_reached[static_cast<std::size_t>(next)]) {
        left_reached[static_cast<std::size_t>(next)] = true;
        queue.push_back(next);
      }
    }
  }

  BipartiteCover cover;
  for (std::size_t l = 0; l < b.left_size(); ++l)
    if (!left_reached[l]) cover.left.push_back(static_cast<int>(l));
  for (std::size_t r = 0; r < b.right_size(); ++r)
    if (right_reached[r]) cover.right.push_back(static_cast<int>(r));

  if (cover.size() != m.size()) throw NotMaximumMatching("cover size differs from matching size");
  return cover;
}

NtDecomposition nt_decompose(const Graph& g) {
  const auto n = g.num_vertices();
  std::vector<Edge> doubled;
  doubled.reserve(2 * g.num_edges());
  for (const auto& [u, v] : g.edges()) {
    doubled.emplace_back(u, v);
    doubled.emplace_back(v, u);
  }
  const BipartiteGraph b(n, n, doubled);
  const BipartiteCover cover = konig_cover(b, max_matching(b));

  std::vector<int> weight(n, 0);  // twice the LP value
  for (int l : cover.left) ++weight[static_cast<std::size_t>(l)];
  for (int r : cover.right) ++weight[static_cast<std::size_t>(r)];

  std::vector<int> p, q, z;
  for (std::size_t v = 0; v < n; ++v) {
    const int id = static_cast<int>(v);
    if (weight[v] == 2) {
      p.push_back(id);
    } else if (weight[v] == 1) {
      q.push_back(id);
    } else {
      z.push_back(id);
    }
  }
  return {VertexSet(n, std::move(p)), VertexSet(n, std::move(q)), VertexSet(n, std::move(z))};
}

}  // namespace udg
