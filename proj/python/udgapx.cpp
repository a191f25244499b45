#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <tuple>

#include "udg/cover_color.hpp"
#include "udg/error.hpp"
#include "udg/exact.hpp"
#include "udg/geometry.hpp"
#include "udg/independence.hpp"
#include "udg/io.hpp"
#include "udg/matching.hpp"
#include "udg/solve.hpp"

namespace py = pybind11;
using namespace udg;

namespace {

using DiskTuple = std::tuple<double, double, double>;

GeometricInstance to_instance(const std::vector<DiskTuple>& disks) {
  GeometricInstance inst;
  for (const auto& [x, y, r] : disks) inst.disks.push_back({x, y, r});
  return inst;
}

std::vector<DiskTuple> from_instance(const GeometricInstance& inst) {
  std::vector<DiskTuple> out;
  for (const Disk& d : inst.disks) out.emplace_back(d.x, d.y, d.r);
  return out;
}

OracleLimits limits_for(long long budget_ms) {
  OracleLimits limits;
  limits.time_budget = std::chrono::milliseconds(budget_ms);
  return limits;
}

DominationVariant parse_domination(const std::string& name) {
  if (name == "plain") return DominationVariant::plain;
  if (name == "independent") return DominationVariant::independent;
  if (name == "total") return DominationVariant::total;
  if (name == "connected") return DominationVariant::connected;
  throw BadParameter("unknown domination variant: " + name);
}

InstanceFile parse_instance(const std::string& text) {
  std::istringstream in(text);
  return read_instance(in);
}

}  // namespace

PYBIND11_MODULE(udgapx, m) {
  m.doc() = "Approximation heuristics and exact oracles for unit disk graphs";

  static py::exception<Error> error(m, "UdgError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::num_vertices)
      .def_property_readonly("m", &Graph::num_edges)
      .def("edges", &Graph::edges)
      .def("neighbors",
           [](const Graph& g, int v) {
             if (v < 0 || static_cast<std::size_t>(v) >= g.num_vertices()) throw IdOutOfRange(v, g.num_vertices());
             auto s = g.neighbors(v);
             return std::vector<int>(s.begin(), s.end());
           })
      .def("degree", &Graph::degree)
      .def_property_readonly("max_degree", &Graph::max_degree)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.num_vertices()) + ", m=" + std::to_string(g.num_edges()) + ")";
      });

  m.def("random_instance", [](std::size_t n, double box, double radius, std::uint64_t seed) {
    return from_instance(random_instance(n, box, radius, seed));
  }, py::arg("n"), py::arg("box"), py::arg("radius") = 1.0, py::arg("seed") = 1);
  m.def("random_circle_instance", [](std::size_t n, double box, double r_min, double r_max, std::uint64_t seed) {
    return from_instance(random_circle_instance(n, box, r_min, r_max, seed));
  }, py::arg("n"), py::arg("box"), py::arg("r_min"), py::arg("r_max"), py::arg("seed") = 1);
  m.def("to_graph", [](const std::vector<DiskTuple>& disks) { return instance_to_graph(to_instance(disks)); },
        py::arg("disks"));
  m.def("sweep_order", [](const std::vector<DiskTuple>& disks) { return sweep_order(to_instance(disks)); });
  m.def("sector_clique", [](const std::vector<DiskTuple>& disks) {
    const auto inst = to_instance(disks);
    return sector_clique(inst, instance_to_graph(inst)).members();
  });
  m.def("polygon_bound", [](int sides) { return polygon_independence_bound(sides).t; }, py::arg("sides"));

  m.def("vcover", [](const Graph& g, int k) { return vcover(g, k).members(); }, py::arg("g"), py::arg("k") = 4);
  m.def("nt_decompose", [](const Graph& g) {
    const auto nt = nt_decompose(g);
    py::dict d;
    d["p"] = nt.p.members();
    d["q"] = nt.q.members();
    d["z"] = nt.z.members();
    return d;
  });
  m.def("color_offline", [](const Graph& g) { return color_offline(g).color; });
  m.def("color_online", [](const Graph& g, const std::vector<int>& arrival) {
    return color_online_firstfit(g, arrival).color;
  }, py::arg("g"), py::arg("arrival"));
  m.def("independent_set", [](const Graph& g, int bound) { return independent_set_graph(g, bound).members(); },
        py::arg("g"), py::arg("bound") = 3);
  m.def("independent_set_geometric", [](const std::vector<DiskTuple>& disks) {
    return independent_set_geometric(to_instance(disks)).members();
  });
  m.def("dominating_set", [](const Graph& g) { return dominating_set(g).members(); });
  m.def("total_dominating_set", [](const Graph& g) { return total_dominating_set(g).members(); });
  m.def("connected_dominating_set", [](const Graph& g, std::optional<int> root) {
    return connected_dominating_set(g, root).vertices.members();
  }, py::arg("g"), py::arg("root") = py::none());

  m.def("exact_mis", [](const Graph& g, long long ms) { return exact_mis(g, limits_for(ms)).size; },
        py::arg("g"), py::arg("time_budget_ms") = 0);
  m.def("exact_vc", [](const Graph& g, long long ms) { return exact_vc(g, limits_for(ms)).size; },
        py::arg("g"), py::arg("time_budget_ms") = 0);
  m.def("exact_clique", [](const Graph& g, long long ms) { return exact_clique(g, limits_for(ms)).size; },
        py::arg("g"), py::arg("time_budget_ms") = 0);
  m.def("exact_chromatic",
        [](const Graph& g, long long ms) { return exact_chromatic(g, limits_for(ms)).chromatic_number; },
        py::arg("g"), py::arg("time_budget_ms") = 0);
  m.def("exact_domination", [](const Graph& g, const std::string& variant, long long ms) {
    return exact_domination(g, parse_domination(variant), limits_for(ms)).size;
  }, py::arg("g"), py::arg("variant") = "plain", py::arg("time_budget_ms") = 0);

  m.def("solve", [](const std::string& instance_text, const std::string& problem, const std::string& variant,
                    std::optional<int> root, const std::string& order, bool sweep) {
    SolveOptions opts;
    opts.problem = parse_problem(problem);
    opts.variant = parse_variant(variant);
    opts.root = root;
    opts.order = order;
    opts.sweep = sweep;
    return to_json(solve(parse_instance(instance_text), opts)).dump();
  }, py::arg("instance"), py::arg("problem"), py::arg("variant") = "unit", py::arg("root") = py::none(),
     py::arg("order") = "id", py::arg("sweep") = false,
     "Runs a heuristic on an instance in text format and returns the solution JSON.");
  m.def("write_instance", [](const std::vector<DiskTuple>& disks) {
    std::ostringstream out;
    write_instance(out, InstanceFile::from_geometry(to_instance(disks)));
    return out.str();
  });
}
