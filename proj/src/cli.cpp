#include "udg/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "udg/bench.hpp"
#include "udg/error.hpp"
#include "udg/geometry.hpp"
#include "udg/io.hpp"
#include "udg/solve.hpp"

namespace udg {

namespace {

InstanceFile load(const std::string& path) {
  if (path == "-") return read_instance(std::cin);
  return read_instance(std::filesystem::path(path));
}

std::vector<Problem> parse_problem_list(const std::string& text) {
  std::vector<Problem> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(parse_problem(item));
  if (out.empty()) throw BadParameter("empty problem list");
  return out;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      const auto v = std::stoul(text);
      return {v, v};
    }
    return {std::stoul(text.substr(0, colon)), std::stoul(text.substr(colon + 1))};
  } catch (const std::logic_error&) {
    throw BadParameter("bad range '" + text + "', expected a:b");
  }
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Approximation heuristics and exact oracles for unit disk graphs", "udgapx"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a random geometric instance");
  std::size_t gen_n = 20;
  std::optional<double> gen_box;
  double gen_radius = 1.0;
  std::optional<double> gen_rmin, gen_rmax;
  std::uint64_t gen_seed = 1;
  bool gen_connected = false;
  std::string gen_output = "-";
  gen->add_option("-n", gen_n, "Number of disks")->check(CLI::PositiveNumber);
  gen->add_option("--box", gen_box, "Side of the square holding the centers (default: mean degree ~4)");
  gen->add_option("--radius", gen_radius, "Radius of every disk");
  gen->add_option("--r-min", gen_rmin, "Smallest radius (arbitrary-radius instances)");
  gen->add_option("--r-max", gen_rmax, "Largest radius (arbitrary-radius instances)");
  gen->add_option("--seed", gen_seed, "PRNG seed");
  gen->add_flag("--connected", gen_connected, "Resample until the graph is connected (at most 10000 tries)");
  gen->add_option("-o,--output", gen_output, "Output file, '-' for stdout");

  // solve / exact share instance + problem
  SolveOptions solve_opts;
  std::string solve_path, solve_problem = "vc", solve_variant = "unit";
  std::optional<int> solve_root;
  auto* solve_cmd = app.add_subcommand("solve", "Run a heuristic, print the solution as JSON");
  solve_cmd->add_option("instance", solve_path, "Instance file, '-' for stdin")->required();
  solve_cmd->add_option("--problem", solve_problem, "vc, color, online-color, mis, ds, ids, tds or cds");
  solve_cmd->add_option("--variant", solve_variant, "unit or circle");
  solve_cmd->add_option("--root", solve_root, "Root vertex for cds");
  solve_cmd->add_option("--order", solve_opts.order,
                        "Arrival order for online-color: id, reverse, sweep, random:<seed> or a list");
  solve_cmd->add_flag("--sweep", solve_opts.sweep, "mis: use the geometric x-sweep");
  solve_cmd->add_flag("--trace", solve_opts.trace, "cds: include the per-level trace");

  std::string exact_path, exact_problem = "vc";
  long long exact_budget_ms = 0;
  auto* exact_cmd = app.add_subcommand("exact", "Solve exactly (small instances), print JSON");
  exact_cmd->add_option("instance", exact_path, "Instance file, '-' for stdin")->required();
  exact_cmd->add_option("--problem", exact_problem, "vc, color, online-color, mis, ds, ids, tds or cds");
  exact_cmd->add_option("--time-budget", exact_budget_ms, "Milliseconds before giving up (0 = none)");

  std::string verify_instance, verify_solution;
  auto* verify_cmd = app.add_subcommand("verify", "Check a JSON solution against an instance");
  verify_cmd->add_option("instance", verify_instance, "Instance file")->required();
  verify_cmd->add_option("solution", verify_solution, "Solution JSON file")->required();

  BenchConfig bench_cfg;
  std::string bench_range = "6:14", bench_problems = "vc,color,online-color,mis,ds,ids,tds,cds";
  std::string bench_variant = "unit";
  std::optional<double> bench_box;
  auto* bench_cmd = app.add_subcommand("bench", "Heuristic vs exact optimum on random instances, CSV");
  bench_cmd->add_option("--instances", bench_cfg.instances, "Number of instances");
  bench_cmd->add_option("--n-range", bench_range, "Vertex count range a:b");
  bench_cmd->add_option("--problems", bench_problems, "Comma-separated problems");
  bench_cmd->add_option("--seed", bench_cfg.seed, "Base seed");
  bench_cmd->add_option("--variant", bench_variant, "unit or circle");
  bench_cmd->add_option("--radius", bench_cfg.radius, "Disk radius (unit)");
  bench_cmd->add_option("--r-min", bench_cfg.r_min, "Smallest radius (circle)");
  bench_cmd->add_option("--r-max", bench_cfg.r_max, "Largest radius (circle)");
  bench_cmd->add_option("--box", bench_box, "Square side (default: mean degree ~4)");
  bench_cmd->add_option("--jobs", bench_cfg.jobs, "Worker threads");
  bench_cmd->add_flag("--timing", bench_cfg.timing, "Fill the ms column (output no longer reproducible)");

  int polygon = 0;
  auto* bound_cmd = app.add_subcommand("bound", "Neighborhood independence bound for unit regular polygons");
  bound_cmd->add_option("--polygon", polygon, "Number of sides")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      GeometricInstance inst;
      const bool circle = gen_rmin || gen_rmax;
      const double lo = circle ? gen_rmin.value_or(gen_rmax.value_or(1.0)) : gen_radius;
      const double hi = circle ? gen_rmax.value_or(lo) : gen_radius;
      const double box = gen_box.value_or(box_for_mean_degree(gen_n, lo, hi, 4.0));
      auto make = [&](std::uint64_t s) { return random_circle_instance(gen_n, box, lo, hi, s); };
      inst = gen_connected ? sample_connected(make, gen_seed) : make(gen_seed);
      const auto file = InstanceFile::from_geometry(std::move(inst));
      if (gen_output == "-") {
        write_instance(out, file);
      } else {
        write_instance(std::filesystem::path(gen_output), file);
      }
    } else if (solve_cmd->parsed()) {
      solve_opts.problem = parse_problem(solve_problem);
      solve_opts.variant = parse_variant(solve_variant);
      solve_opts.root = solve_root;
      out << to_json(solve(load(solve_path), solve_opts)).dump(2) << '\n';
    } else if (exact_cmd->parsed()) {
      OracleLimits limits;
      limits.time_budget = std::chrono::milliseconds(exact_budget_ms);
      out << to_json(solve_exact(load(exact_path), parse_problem(exact_problem), limits)).dump(2) << '\n';
    } else if (verify_cmd->parsed()) {
      const InstanceFile inst = load(verify_instance);
      std::ifstream in(verify_solution);
      if (!in) throw Error("cannot open " + verify_solution);
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(in);
      } catch (const nlohmann::json::exception& e) {
        throw BadParameter(std::string("solution is not JSON: ") + e.what());
      }
      const std::size_t n = inst.graph().num_vertices();
      const VerifyReport report = verify(inst, solution_from_json(j, n));
      if (!report.ok) {
        out << "invalid: " << report.reason << '\n';
        return kExitUsage;
      }
      out << "ok\n";
    } else if (bench_cmd->parsed()) {
      std::tie(bench_cfg.n_min, bench_cfg.n_max) = parse_range(bench_range);
      bench_cfg.problems = parse_problem_list(bench_problems);
      bench_cfg.variant = parse_variant(bench_variant);
      bench_cfg.box = bench_box;
      write_csv(out, run_bench(bench_cfg));
    } else if (bound_cmd->parsed()) {
      out << polygon_independence_bound(polygon).t << '\n';
    }
  } catch (const ClassCertificateError& e) {
    err << "udgapx: " << e.what() << '\n';
    return kExitClassCertificate;
  } catch (const Error& e) {
    err << "udgapx: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace udg
