#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "udg/graph.hpp"

namespace udg {

/// Bipartite graph with left vertices 0..left_n-1 and right vertices 0..right_n-1.
class BipartiteGraph {
 public:
  BipartiteGraph(std::size_t left_n, std::size_t right_n, std::span<const Edge> edges);

  std::size_t left_size() const { return left_adj_.size(); }
  std::size_t right_size() const { return right_n_; }
  std::span<const int> left_neighbors(int l) const { return left_adj_[static_cast<std::size_t>(l)]; }
  std::size_t num_edges() const { return num_edges_; }
  std::vector<Edge> edges() const;

 private:
  std::vector<std::vector<int>> left_adj_;
  std::size_t right_n_ = 0;
  std::size_t num_edges_ = 0;
};

/// Matched (left, right) pairs ordered by left id.
using Matching = std::vector<Edge>;

/// Maximum-cardinality matching by Hopcroft-Karp.
Matching max_matching(const BipartiteGraph& b);

struct BipartiteCover {
  std::vector<int> left;
  std::vector<int> right;
  std::size_t size() const { return left.size() + right.size(); }
};

/// Konig cover from a maximum matching: with Z the vertices reachable from
/// unmatched left vertices along alternating paths, the cover is
/// (L - Z) + (R & Z). Throws NotMaximumMatching if `m` is not a maximum
/// matching of `b`.
BipartiteCover konig_cover(const BipartiteGraph& b, const Matching& m);

/// Half-integral vertex cover LP solution split into x = 1 (P), x = 1/2 (Q)
/// and x = 0 (Z).
struct NtDecomposition {
  VertexSet p;
  VertexSet q;
  VertexSet z;
  /// |P| + |Q|/2, the LP optimum.
  double lp_value() const { return static_cast<double>(p.size()) + static_cast<double>(q.size()) / 2.0; }
};

/// Minimum cover of the bipartite double cover of g, folded back onto g.
NtDecomposition nt_decompose(const Graph& g);

}  // namespace udg
