#include "udg/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "udg/error.hpp"
#include "udg/rng.hpp"

namespace udg {

bool GeometricInstance::unit() const {
  return std::all_of(disks.begin(), disks.end(),
                     [&](const Disk& d) { return d.r == disks.front().r; });
}

namespace {

bool disks_meet(const Disk& a, const Disk& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  const double reach = a.r + b.r;
  return dx * dx + dy * dy <= reach * reach;
}

void require_positive_radii(const GeometricInstance& inst) {
  for (std::size_t i = 0; i < inst.disks.size(); ++i)
    if (!(inst.disks[i].r > 0.0)) throw NonPositiveRadius(static_cast<int>(i));
}

}  // namespace

std::vector<int> sweep_order(const GeometricInstance& inst) {
  std::vector<int> order(inst.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const Disk& da = inst.disks[static_cast<std::size_t>(a)];
    const Disk& db = inst.disks[static_cast<std::size_t>(b)];
    if (da.x != db.x) return da.x < db.x;
    if (da.y != db.y) return da.y < db.y;
    return a < b;
  });
  return order;
}

Graph instance_to_graph(const GeometricInstance& inst) {
  require_positive_radii(inst);
  double r_max = 0.0;
  for (const Disk& d : inst.disks) r_max = std::max(r_max, d.r);

  // x-sweep: only pairs within the widest possible reach are tested exactly.
  const auto order = sweep_order(inst);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Disk& a = inst.disks[static_cast<std::size_t>(order[i])];
    const double window = (a.r + r_max) * (1.0 + 1e-12);
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      const Disk& b = inst.disks[static_cast<std::size_t>(order[j])];
      if (b.x - a.x > window) break;
      if (disks_meet(a, b)) edges.emplace_back(order[i], order[j]);
    }
  }
  return Graph::from_edges(inst.size(), edges);
}

GeometricInstance random_instance(std::size_t n, double box, double radius, std::uint64_t seed) {
  return random_circle_instance(n, box, radius, radius, seed);
}

GeometricInstance random_circle_instance(std::size_t n, double box, double r_min, double r_max,
                                         std::uint64_t seed) {
  if (n < 1) throw BadParameter("n must be at least 1");
  if (!(box > 0.0)) throw BadParameter("box side must be positive");
  if (!(r_min > 0.0) || !(r_max >= r_min)) throw BadParameter("radii must satisfy 0 < r_min <= r_max");
  SplitMix64 rng(seed);
  GeometricInstance inst;
  inst.disks.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Disk d;
    d.x = rng.uniform01() * box;
    d.y = rng.uniform01() * box;
    d.r = r_min == r_max ? r_min : r_min + rng.uniform01() * (r_max - r_min);
    inst.disks.push_back(d);
  }
  return inst;
}

GeometricInstance sample_connected(const std::function<GeometricInstance(std::uint64_t)>& make,
                                   std::uint64_t seed, int max_attempts) {
  for (int k = 0; k < max_attempts; ++k) {
    const std::uint64_t s = k == 0 ? seed : derive_seed(seed, static_cast<std::uint64_t>(k));
    GeometricInstance inst = make(s);
    if (is_connected(instance_to_graph(inst))) return inst;
  }
  throw BadParameter("no connected instance after " + std::to_string(max_attempts) + " attempts");
}

std::vector<int> random_permutation(std::size_t n, std::uint64_t seed) {
  std::vector<int> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<int>(i);
  SplitMix64 rng(seed);
  for (std::size_t i = n; i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.below(i));
    std::swap(perm[i - 1], perm[j]);
  }
  return perm;
}

VertexSet sector_clique(const GeometricInstance& inst, const Graph& g) {
  if (instance_to_graph(inst) != g) throw ModelMismatch();
  const auto n = g.num_vertices();
  if (n == 0) return VertexSet(0, {});

  int center = 0;
  for (std::size_t v = 1; v < n; ++v)
    if (g.degree(static_cast<int>(v)) > g.degree(center)) center = static_cast<int>(v);

  constexpr double kSector = std::numbers::pi / 3.0;
  const Disk& c = inst.disks[static_cast<std::size_t>(center)];
  std::array<std::vector<int>, 6> sectors;
  for (int w : g.neighbors(center)) {
    const Disk& d = inst.disks[static_cast<std::size_t>(w)];
    double angle = std::atan2(d.y - c.y, d.x - c.x);
    if (angle < 0.0) angle += 2.0 * std::numbers::pi;
    auto k = static_cast<std::size_t>(std::floor(angle / kSector));
    if (k > 5) k = 5;  // angle rounded up to exactly 2 pi
    sectors[k].push_back(w);
  }
  std::size_t best = 0;
  for (std::size_t k = 1; k < sectors.size(); ++k)
    if (sectors[k].size() > sectors[best].size()) best = k;

  std::vector<int> members = sectors[best];
  members.push_back(center);
  return VertexSet(n, std::move(members));
}

PolygonBound polygon_independence_bound(int sides) {
  if (sides < 3) throw BadParameter("a polygon needs at least 3 sides");
  const long double p = sides;
  const long double pi = std::numbers::pi_v<long double>;
  const long double s = std::sin(2.0L * pi / p);
  PolygonBound b;
  b.sides = sides;
  b.area = static_cast<double>(p * s / 2.0L);
  long double value = 18.0L * pi / (p * s);
  // Values within 1e-9 of an integer are treated as that integer so rounding
  // noise cannot push the ceiling up by one.
  const long double nearest = std::round(value);
  if (std::fabs(value - nearest) < 1e-9L) value = nearest;
  b.t = static_cast<int>(std::ceil(value));
  return b;
}

}  // namespace udg
