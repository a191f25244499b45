#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "udg/graph.hpp"

namespace udg {

struct Disk {
  double x = 0.0;
  double y = 0.0;
  double r = 1.0;
  bool operator==(const Disk&) const = default;
};

/// Disks in the plane; vertex i of the derived graph is disks[i].
/// Two disks are adjacent iff their closed regions meet (tangent counts).
struct GeometricInstance {
  std::vector<Disk> disks;

  std::size_t size() const { return disks.size(); }
  /// All radii equal.
  bool unit() const;
  bool operator==(const GeometricInstance&) const = default;
};

/// Edge iff dx^2 + dy^2 <= (r_u + r_v)^2. Throws NonPositiveRadius.
Graph instance_to_graph(const GeometricInstance& inst);

/// n centers uniform in [0, box]^2, all of radius `radius`.
GeometricInstance random_instance(std::size_t n, double box, double radius, std::uint64_t seed);

/// n centers uniform in [0, box]^2 with radii uniform in [r_min, r_max].
GeometricInstance random_circle_instance(std::size_t n, double box, double r_min, double r_max,
                                         std::uint64_t seed);

/// Rejection sampling: calls make(seed_k) for k = 0, 1, ... until the
/// instance graph is connected. Attempt 0 uses `seed` itself.
/// Throws BadParameter once `max_attempts` is exhausted.
GeometricInstance sample_connected(const std::function<GeometricInstance(std::uint64_t)>& make,
                                   std::uint64_t seed, int max_attempts = 10000);

/// Fisher-Yates shuffle of 0..n-1 driven by SplitMix64.
std::vector<int> random_permutation(std::size_t n, std::uint64_t seed);

/// Vertices by increasing x, ties by y, then id.
std::vector<int> sweep_order(const GeometricInstance& inst);

/// Clique through a maximum-degree vertex v: v plus its neighbors in the
/// most populated of six half-open 60 degree sectors around v's center.
/// Size is at least ceil(max_degree / 6) + 1 on unit instances.
/// Throws ModelMismatch if g is not the graph of inst.
VertexSet sector_clique(const GeometricInstance& inst, const Graph& g);

struct PolygonBound {
  int sides = 0;
  double area = 0.0;  // p sin(2 pi / p) / 2
  int t = 0;          // ceil(18 pi / (p sin(2 pi / p)))
};

/// Maximum number of pairwise disjoint unit regular p-gons that can all meet
/// a fixed one (area packing in the radius-3 circle). Throws BadParameter for p < 3.
PolygonBound polygon_independence_bound(int sides);

}  // namespace udg
