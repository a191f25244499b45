#include "udg/solve.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <utility>

#include "udg/checks.hpp"
#include "udg/error.hpp"

namespace udg {

namespace {

constexpr std::array<std::pair<Problem, std::string_view>, 8> kProblemNames{{
    {Problem::vc, "vc"},
    {Problem::color, "color"},
    {Problem::online_color, "online-color"},
    {Problem::mis, "mis"},
    {Problem::ds, "ds"},
    {Problem::ids, "ids"},
    {Problem::tds, "tds"},
    {Problem::cds, "cds"},
}};

std::uint64_t parse_u64(std::string_view text) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw BadParameter("bad number '" + std::string(text) + "'");
  return v;
}

}  // namespace

std::string_view to_string(Problem p) {
  for (const auto& [k, name] : kProblemNames)
    if (k == p) return name;
  return "?";
}

Problem parse_problem(std::string_view name) {
  for (const auto& [k, n] : kProblemNames)
    if (n == name) return k;
  throw BadParameter("unknown problem '" + std::string(name) + "'");
}

std::string_view to_string(Variant v) { return v == Variant::unit ? "unit" : "circle"; }

Variant parse_variant(std::string_view name) {
  if (name == "unit") return Variant::unit;
  if (name == "circle") return Variant::circle;
  throw BadParameter("unknown variant '" + std::string(name) + "'");
}

const std::vector<Problem>& all_problems() {
  static const std::vector<Problem> problems = [] {
    std::vector<Problem> out;
    for (const auto& entry : kProblemNames) out.push_back(entry.first);
    return out;
  }();
  return problems;
}

bool maximizing(Problem p) { return p == Problem::mis; }

std::optional<double> guarantee(Problem p, Variant v) {
  if (v == Variant::circle) {
    switch (p) {
      case Problem::vc:
        return vcover_guarantee(6);
      case Problem::color:
        return 6.0;
      case Problem::mis:
        return 5.0;
      default:
        return std::nullopt;
    }
  }
  switch (p) {
    case Problem::vc:
      return vcover_guarantee(4);
    case Problem::color:
      return 3.0;
    case Problem::online_color:
      return 6.0;
    case Problem::mis:
      return 3.0;
    case Problem::ds:
    case Problem::ids:
      return 5.0;
    case Problem::tds:
    case Problem::cds:
      return 10.0;
  }
  return std::nullopt;
}

std::vector<int> resolve_order(const InstanceFile& inst, std::string_view spec) {
  const std::size_t n = inst.geometric() ? inst.geometry.size() : inst.abstract_graph.num_vertices();
  if (spec == "id" || spec.empty()) return VertexSet::all(n).members();
  if (spec == "reverse") {
    auto order = VertexSet::all(n).members();
    std::reverse(order.begin(), order.end());
    return order;
  }
  if (spec == "sweep") {
    if (!inst.geometric()) throw BadParameter("sweep order needs a geometric instance");
    return sweep_order(inst.geometry);
  }
  if (spec.starts_with("random:")) return random_permutation(n, parse_u64(spec.substr(7)));

  std::vector<int> order;
  while (!spec.empty()) {
    const auto comma = spec.find(',');
    const auto item = spec.substr(0, comma);
    order.push_back(static_cast<int>(parse_u64(item)));
    spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
  }
  if (!is_permutation_of_vertices(order, n)) throw BadParameter("order is not a permutation of the vertices");
  return order;
}

Solution solve(const InstanceFile& inst, const SolveOptions& opts) {
  const Graph g = inst.graph();
  Solution sol;
  sol.problem = opts.problem;
  sol.meta["variant"] = to_string(opts.variant);
  sol.meta["n"] = g.num_vertices();
  sol.meta["m"] = g.num_edges();

  switch (opts.problem) {
    case Problem::vc: {
      const int k = opts.variant == Variant::unit ? 4 : 6;
      sol.vertices = vcover(g, k);
      sol.meta["color_bound"] = k;
      break;
    }
    case Problem::color: {
      sol.coloring = color_offline(g);
      sol.meta["degeneracy"] = degeneracy_ordering(g).delta;
      if (opts.variant == Variant::unit && (!inst.geometric() || inst.geometry.unit()))
        sol.meta["lower_bound"] = coloring_lower_bound(g, inst.geometric() ? &inst.geometry : nullptr);
      break;
    }
    case Problem::online_color: {
      const auto order = resolve_order(inst, opts.order);
      sol.coloring = color_online_firstfit(g, order);
      sol.meta["order"] = opts.order;
      sol.meta["max_degree"] = g.max_degree();
      break;
    }
    case Problem::mis: {
      if (opts.sweep) {
        if (!inst.geometric()) throw BadParameter("--sweep needs a geometric instance");
        sol.vertices = independent_set_geometric(inst.geometry);
        sol.meta["method"] = "sweep";
      } else {
        const int bound = opts.variant == Variant::unit ? 3 : 5;
        sol.vertices = independent_set_graph(g, bound);
        sol.meta["method"] = "neighborhood";
        sol.meta["bound"] = bound;
      }
      break;
    }
    case Problem::ds:
    case Problem::ids:
      sol.vertices = dominating_set(g);
      break;
    case Problem::tds:
      sol.vertices = total_dominating_set(g);
      break;
    case Problem::cds: {
      auto result = connected_dominating_set(g, opts.root);
      sol.vertices = std::move(result.vertices);
      sol.meta["root"] = result.trace.root;
      sol.meta["depth"] = result.trace.depth();
      if (opts.trace) sol.meta["trace"] = to_json(result.trace);
      break;
    }
  }
  sol.value = sol.coloring ? sol.coloring->num_colors : static_cast<int>(sol.vertices->size());
  return sol;
}

Solution solve_exact(const InstanceFile& inst, Problem problem, const OracleLimits& limits) {
  const Graph g = inst.graph();
  Solution sol;
  sol.problem = problem;
  sol.meta["exact"] = true;
  sol.meta["n"] = g.num_vertices();
  sol.meta["m"] = g.num_edges();
  auto take = [&](ExactSet r) { sol.vertices = std::move(r.witness); };
  switch (problem) {
    case Problem::vc:
      take(exact_vc(g, limits));
      break;
    case Problem::color:
    case Problem::online_color:
      sol.coloring = exact_chromatic(g, limits).witness;
      break;
    case Problem::mis:
      take(exact_mis(g, limits));
      break;
    case Problem::ds:
      take(exact_domination(g, DominationVariant::plain, limits));
      break;
    case Problem::ids:
      take(exact_domination(g, DominationVariant::independent, limits));
      break;
    case Problem::tds:
      take(exact_domination(g, DominationVariant::total, limits));
      break;
    case Problem::cds:
      take(exact_domination(g, DominationVariant::connected, limits));
      break;
  }
  sol.value = sol.coloring ? sol.coloring->num_colors : static_cast<int>(sol.vertices->size());
  return sol;
}

VerifyReport verify(const InstanceFile& inst, const Solution& sol) {
  const Graph g = inst.graph();
  auto fail = [](std::string why) { return VerifyReport{false, std::move(why)}; };

  const bool wants_colors = sol.problem == Problem::color || sol.problem == Problem::online_color;
  if (wants_colors) {
    if (!sol.coloring) return fail("missing colors");
    const auto& c = sol.coloring->color;
    if (!is_proper_coloring(g, c)) return fail("coloring is not proper");
    const int used = c.empty() ? 0 : *std::max_element(c.begin(), c.end());
    if (used != sol.value) return fail("value does not match the number of colors");
    return {};
  }

  if (!sol.vertices) return fail("missing vertices");
  const VertexSet& s = *sol.vertices;
  if (s.host_n() != g.num_vertices()) return fail("vertex set refers to a different instance");
  if (static_cast<int>(s.size()) != sol.value) return fail("value does not match the set size");
  switch (sol.problem) {
    case Problem::vc:
      if (!is_vertex_cover(g, s)) return fail("some edge is uncovered");
      break;
    case Problem::mis:
      if (!is_independent(g, s)) return fail("set is not independent");
      break;
    case Problem::ds:
      if (!is_dominating(g, s)) return fail("set is not dominating");
      break;
    case Problem::ids:
      if (!is_independent(g, s)) return fail("set is not independent");
      if (!is_dominating(g, s)) return fail("set is not dominating");
      break;
    case Problem::tds:
      if (!is_total_dominating(g, s)) return fail("some vertex has no neighbor in the set");
      break;
    case Problem::cds:
      if (!is_dominating(g, s)) return fail("set is not dominating");
      if (!induces_connected(g, s) || (g.num_vertices() > 0 && s.empty()))
        return fail("set does not induce a connected subgraph");
      break;
    default:
      break;
  }
  return {};
}

nlohmann::ordered_json to_json(const Solution& sol) {
  nlohmann::ordered_json j;
  j["problem"] = to_string(sol.problem);
  j["value"] = sol.value;
  if (sol.coloring) {
    j["colors"] = sol.coloring->color;
  } else if (sol.vertices) {
    j["vertices"] = sol.vertices->members();
  }
  j["meta"] = sol.meta;
  return j;
}

Solution solution_from_json(const nlohmann::json& j, std::size_t n) {
  try {
    Solution sol;
    sol.problem = parse_problem(j.at("problem").get<std::string>());
    sol.value = j.at("value").get<int>();
    if (j.contains("colors")) {
      Coloring c;
      c.color = j.at("colors").get<std::vector<int>>();
      c.num_colors = c.color.empty() ? 0 : *std::max_element(c.color.begin(), c.color.end());
      sol.coloring = std::move(c);
    }
    if (j.contains("vertices")) sol.vertices = VertexSet(n, j.at("vertices").get<std::vector<int>>());
    if (j.contains("meta")) sol.meta = j.at("meta");
    return sol;
  } catch (const nlohmann::json::exception& e) {
    throw BadParameter(std::string("malformed solution: ") + e.what());
  } catch (const IdOutOfRange& e) {
    throw BadParameter(std::string("malformed solution: ") + e.what());
  }
}

nlohmann::ordered_json to_json(const CdomTrace& trace) {
  nlohmann::ordered_json j;
  j["root"] = trace.root;
  j["depth"] = trace.depth();
  auto levels = nlohmann::ordered_json::array();
  for (const CdomLevel& lvl : trace.levels) {
    nlohmann::ordered_json l;
    l["S"] = lvl.level;
    l["DS"] = lvl.dominated;
    l["IS"] = lvl.independent;
    l["NS"] = lvl.parents;
    levels.push_back(std::move(l));
  }
  j["levels"] = std::move(levels);
  return j;
}

}  // namespace udg
