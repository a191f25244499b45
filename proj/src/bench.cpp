#include "udg/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <numbers>
#include <ostream>
#include <thread>

#include "udg/error.hpp"
#include "udg/rng.hpp"

namespace udg {

namespace {

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

bool needs_connected(const std::vector<Problem>& problems) {
  for (Problem p : problems)
    if (p == Problem::cds || p == Problem::tds) return true;
  return false;
}

std::vector<BenchRecord> bench_one(const BenchConfig& cfg, std::size_t index) {
  const BenchInstance bi = bench_instance(cfg, index, needs_connected(cfg.problems));
  const InstanceFile file = InstanceFile::from_geometry(bi.geometry);
  const std::string radius = cfg.variant == Variant::unit
                                 ? fmt("%.6g", cfg.radius)
                                 : fmt("%.6g", cfg.r_min) + ":" + fmt("%.6g", cfg.r_max);

  std::vector<BenchRecord> out;
  for (Problem p : cfg.problems) {
    BenchRecord rec;
    rec.seed = bi.seed;
    rec.n = bi.geometry.size();
    rec.box = bi.box;
    rec.radius = radius;
    rec.problem = p;
    rec.bound = guarantee(p, cfg.variant);

    SolveOptions opts;
    opts.problem = p;
    opts.variant = cfg.variant;
    opts.order = "random:" + std::to_string(derive_seed(bi.seed, 2));
    const auto start = std::chrono::steady_clock::now();
    rec.heuristic = solve(file, opts).value;
    const auto stop = std::chrono::steady_clock::now();
    if (cfg.timing) rec.ms = std::chrono::duration<double, std::milli>(stop - start).count();

    try {
      rec.optimum = solve_exact(file, p, cfg.limits).value;
    } catch (const TooLarge&) {
    } catch (const Timeout&) {
    }
    if (rec.optimum) {
      const double h = rec.heuristic;
      const double o = *rec.optimum;
      if (maximizing(p)) {
        rec.ratio = h > 0 ? o / h : (o > 0 ? INFINITY : 1.0);
      } else {
        rec.ratio = o > 0 ? h / o : (h > 0 ? INFINITY : 1.0);
      }
    }
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace

bool BenchRecord::within_bound() const {
  if (!ratio || !bound) return true;
  return *ratio <= *bound + 1e-12;
}

double box_for_mean_degree(std::size_t n, double r_min, double r_max, double degree) {
  if (n < 2) return 1.0;
  // E[(r_u + r_v)^2] for independent radii uniform on [r_min, r_max].
  const double mean = (r_min + r_max) / 2.0;
  const double second = (r_min * r_min + r_min * r_max + r_max * r_max) / 3.0;
  const double reach_sq = 2.0 * second + 2.0 * mean * mean;
  return std::sqrt(static_cast<double>(n - 1) * std::numbers::pi * reach_sq / degree);
}

BenchInstance bench_instance(const BenchConfig& cfg, std::size_t index, bool connected) {
  if (cfg.n_min < 1 || cfg.n_max < cfg.n_min) throw BadParameter("bad n range");
  BenchInstance bi;
  bi.seed = derive_seed(cfg.seed, index);
  SplitMix64 size_rng(derive_seed(bi.seed, 0));
  const std::size_t n = cfg.n_min + static_cast<std::size_t>(size_rng.below(cfg.n_max - cfg.n_min + 1));
  const bool unit = cfg.variant == Variant::unit;
  const double lo = unit ? cfg.radius : cfg.r_min;
  const double hi = unit ? cfg.radius : cfg.r_max;
  bi.box = cfg.box.value_or(box_for_mean_degree(n, lo, hi, 4.0));
  auto make = [&](std::uint64_t s) { return random_circle_instance(n, bi.box, lo, hi, s); };
  bi.geometry = connected ? sample_connected(make, bi.seed) : make(bi.seed);
  return bi;
}

std::vector<BenchRecord> run_bench(const BenchConfig& cfg) {
  std::vector<std::vector<BenchRecord>> per_instance(cfg.instances);
  std::vector<std::exception_ptr> errors(cfg.instances);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cfg.instances; i = next++) {
      try {
        per_instance[i] = bench_one(cfg, i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(cfg.jobs, static_cast<unsigned>(cfg.instances)));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::vector<BenchRecord> out;
  for (std::size_t i = 0; i < cfg.instances; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    for (auto& rec : per_instance[i]) out.push_back(std::move(rec));
  }
  return out;
}

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << kBenchCsvHeader << '\n';
  for (const BenchRecord& r : records) {
    out << r.seed << ',' << r.n << ',' << fmt("%.6g", r.box) << ',' << r.radius << ',' << to_string(r.problem)
        << ',' << r.heuristic << ',';
    if (r.optimum) out << *r.optimum;
    out << ',';
    if (r.ratio) out << fmt("%.6f", *r.ratio);
    out << ',';
    if (r.bound) out << fmt("%.6f", *r.bound);
    out << ',' << fmt("%.3f", r.ms) << '\n';
  }
}

}  // namespace udg
