#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "udg/cover_color.hpp"
#include "udg/exact.hpp"
#include "udg/independence.hpp"
#include "udg/io.hpp"
#include "json.hpp"

namespace udg {

enum class Problem { vc, color, online_color, mis, ds, ids, tds, cds };

/// Graph class a heuristic is tuned for: equal radii or arbitrary radii.
enum class Variant { unit, circle };

std::string_view to_string(Problem p);
Problem parse_problem(std::string_view name);  // throws BadParameter
std::string_view to_string(Variant v);
Variant parse_variant(std::string_view name);
const std::vector<Problem>& all_problems();

/// True for problems where larger is better.
bool maximizing(Problem p);

/// Worst-case heuristic/optimum ratio (optimum/heuristic for mis) proven for
/// the variant's graph class, if any.
std::optional<double> guarantee(Problem p, Variant v);

struct SolveOptions {
  Problem problem = Problem::vc;
  Variant variant = Variant::unit;
  std::optional<int> root;  // cds
  /// online-color arrival: "id", "reverse", "sweep", "random:<seed>" or a
  /// comma-separated vertex list.
  std::string order = "id";
  bool sweep = false;  // mis via the geometric x-sweep
  bool trace = false;  // cds: attach the per-level trace to meta
};

/// Result record shared by `solve`, `exact` and `verify`.
struct Solution {
  Problem problem = Problem::vc;
  int value = 0;
  std::optional<VertexSet> vertices;
  std::optional<Coloring> coloring;
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
};

/// Resolves an order spec against an instance (see SolveOptions::order).
std::vector<int> resolve_order(const InstanceFile& inst, std::string_view spec);

Solution solve(const InstanceFile& inst, const SolveOptions& opts);
Solution solve_exact(const InstanceFile& inst, Problem problem, const OracleLimits& limits = {});

struct VerifyReport {
  bool ok = true;
  std::string reason;
};

/// Checks the solution is feasible for its problem and its value matches.
VerifyReport verify(const InstanceFile& inst, const Solution& sol);

/// {problem, value, vertices|colors, meta}
nlohmann::ordered_json to_json(const Solution& sol);
Solution solution_from_json(const nlohmann::json& j, std::size_t n);  // throws BadParameter

nlohmann::ordered_json to_json(const CdomTrace& trace);

}  // namespace udg
