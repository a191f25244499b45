#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "udg/geometry.hpp"
#include "udg/solve.hpp"

namespace udg {

struct BenchConfig {
  std::size_t instances = 20;
  std::size_t n_min = 6;
  std::size_t n_max = 14;
  std::vector<Problem> problems = all_problems();
  std::uint64_t seed = 1;
  Variant variant = Variant::unit;
  double radius = 1.0;  // unit variant
  double r_min = 0.5;   // circle variant
  double r_max = 2.0;
  std::optional<double> box;  // default: side giving mean degree ~4
  unsigned jobs = 1;
  bool timing = false;  // off keeps the CSV byte-reproducible
  OracleLimits limits;
};

/// One CSV row. `opt`, `ratio` and `bound` are empty when the oracle refused
/// the instance or the class has no proven guarantee.
struct BenchRecord {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  double box = 0.0;
  std::string radius;
  Problem problem = Problem::vc;
  int heuristic = 0;
  std::optional<int> optimum;
  std::optional<double> ratio;
  std::optional<double> bound;
  double ms = 0.0;

  /// ratio <= bound, or nothing to check.
  bool within_bound() const;
};

/// Square side for which n uniform disks have expected degree `degree`,
/// ignoring boundary effects.
double box_for_mean_degree(std::size_t n, double r_min, double r_max, double degree);

/// The instance the bench draws for index `index`: its per-instance seed, the
/// vertex count and the disks. Connected instances are rejection sampled.
struct BenchInstance {
  std::uint64_t seed = 0;
  double box = 0.0;
  GeometricInstance geometry;
};
BenchInstance bench_instance(const BenchConfig& cfg, std::size_t index, bool connected);

/// Records ordered by instance index, then by the order of cfg.problems.
std::vector<BenchRecord> run_bench(const BenchConfig& cfg);

inline constexpr const char* kBenchCsvHeader = "seed,n,box,radius,problem,heur,opt,ratio,bound,ms";
void write_csv(std::ostream& out, const std::vector<BenchRecord>& records);

}  // namespace udg
