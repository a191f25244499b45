#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"
#include "udg/bench.hpp"
#include "udg/cli.hpp"
#include "udg/error.hpp"
#include "udg/io.hpp"
#include "udg/solve.hpp"

using namespace udg;
using namespace udg::testing;

namespace {

InstanceFile parse(const std::string& text) {
  std::istringstream in(text);
  return read_instance(in);
}

std::string dump(const InstanceFile& f) {
  std::ostringstream out;
  write_instance(out, f);
  return out.str();
}

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "udgapx");
  std::ostringstream out, err;
  const int code = cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("udgapx_test_" + name);
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("instance files round-trip bit-exactly") {
  const auto inst = random_instance(20, 10, 1, 42);
  const auto back = parse(dump(InstanceFile::from_geometry(inst)));
  REQUIRE(back.geometric());
  CHECK(back.geometry == inst);

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto c = random_circle_instance(15, 7.3, 0.5, 2.0, seed);
    CHECK(parse(dump(InstanceFile::from_geometry(c))).geometry == c);
  }

  const auto path = std::filesystem::temp_directory_path() / "udgapx_roundtrip.txt";
  write_instance(path, InstanceFile::from_geometry(inst));
  CHECK(read_instance(path).geometry == inst);
}

TEST_CASE("abstract instance files") {
  const auto f = parse("udg 1 abstract\nn 5\nedge 0 1\nedge 1 2\nedge 2 3\nedge 3 4\nedge 4 0\n");
  CHECK_FALSE(f.geometric());
  CHECK(f.graph().num_edges() == 5);
  CHECK(f.graph() == cycle(5));
  CHECK(parse(dump(f)).graph() == cycle(5));
  CHECK(parse("# comment\n\nudg 1 abstract\nn 0\n").graph().num_vertices() == 0);
}

TEST_CASE("malformed instance files report the line") {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse(text);
    } catch (const ParseError& e) {
      return e.line;
    }
    return 0;
  };
  CHECK(line_of("udg 1 abstract\nn 3\nedge 0 x\n") == 3);
  CHECK(line_of("udg 1 abstract\nn 3\nedge 0 3\n") == 3);
  CHECK(line_of("udg 1 abstract\nedge 0 1\n") == 2);
  CHECK(line_of("udg 1 geometric\ndisk 0 0 0 1\ndisk 1 0 0\n") == 3);
  CHECK(line_of("udg 1 geometric\ndisk 0 0 0 -1\n") == 2);
  CHECK(line_of("udg 1 geometric\ndisk 0 0 0 1\ndisk 0 1 1 1\n") == 3);
  CHECK(line_of("hello\n") == 1);
  CHECK(line_of("udg 1 planar\n") == 1);
  CHECK_THROWS_AS(parse("udg 1 geometric\ndisk 1 0 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("udg 2 geometric\n"), VersionMismatch);
}

TEST_CASE("every solve output passes verify") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto inst = sample_connected([](std::uint64_t s) { return random_instance(12, 5.0, 1.0, s); }, seed);
    const auto file = InstanceFile::from_geometry(inst);
    for (Problem p : all_problems()) {
      SolveOptions opts;
      opts.problem = p;
      opts.order = "random:" + std::to_string(seed);
      const Solution sol = solve(file, opts);
      const auto report = verify(file, sol);
      CHECK_MESSAGE(report.ok, to_string(p), ": ", report.reason);
      const Solution ex = solve_exact(file, p);
      CHECK(verify(file, ex).ok);
      // JSON round trip keeps the verdict
      const auto j = nlohmann::json::parse(to_json(sol).dump());
      CHECK(verify(file, solution_from_json(j, inst.size())).ok);
    }
  }
}

TEST_CASE("verify rejects broken solutions") {
  const auto file = InstanceFile::from_graph(cycle(5));
  Solution s;
  s.problem = Problem::vc;
  s.vertices = VertexSet(5, {0, 2});
  s.value = 2;
  CHECK_FALSE(verify(file, s).ok);
  s.vertices = VertexSet(5, {0, 2, 4});
  s.value = 2;
  CHECK_FALSE(verify(file, s).ok);
  s.value = 3;
  CHECK(verify(file, s).ok);

  s.problem = Problem::cds;
  s.vertices = VertexSet(5, {1, 2, 3});
  CHECK(verify(file, s).ok);
  s.vertices = VertexSet(5, {0, 1, 3});
  CHECK_FALSE(verify(file, s).ok);

  Solution c;
  c.problem = Problem::color;
  c.coloring = Coloring{{1, 2, 1, 2, 1}, 2};
  c.value = 2;
  CHECK_FALSE(verify(file, c).ok);
}

TEST_CASE("resolve_order") {
  const auto file = InstanceFile::from_geometry(GeometricInstance{{{3, 0, 1}, {1, 0, 1}, {2, 0, 1}}});
  CHECK(resolve_order(file, "id") == std::vector<int>{0, 1, 2});
  CHECK(resolve_order(file, "reverse") == std::vector<int>{2, 1, 0});
  CHECK(resolve_order(file, "sweep") == std::vector<int>{1, 2, 0});
  CHECK(resolve_order(file, "2,0,1") == std::vector<int>{2, 0, 1});
  CHECK(resolve_order(file, "random:5") == random_permutation(3, 5));
  CHECK_THROWS_AS(resolve_order(file, "0,0,1"), BadParameter);
  CHECK_THROWS_AS(resolve_order(InstanceFile::from_graph(path(3)), "sweep"), BadParameter);
}

TEST_CASE("bench records are deterministic and within the guarantees") {
  BenchConfig cfg;
  cfg.instances = 12;
  cfg.n_min = 6;
  cfg.n_max = 11;
  cfg.seed = 5;
  const auto a = run_bench(cfg);
  cfg.jobs = 3;
  const auto b = run_bench(cfg);
  std::ostringstream ca, cb;
  write_csv(ca, a);
  write_csv(cb, b);
  CHECK(ca.str() == cb.str());
  CHECK(a.size() == 12 * all_problems().size());
  for (const auto& r : a) {
    CHECK(r.optimum.has_value());
    CHECK(r.ratio.value_or(0) >= 1.0);
    CHECK(r.within_bound());
  }
  CHECK(ca.str().rfind(std::string(kBenchCsvHeader) + "\n", 0) == 0);
}

TEST_CASE("cli: bound, gen, solve, exact, verify") {
  CHECK(run({"bound", "--polygon", "4"}).out == "15\n");
  CHECK(run({"bound", "--polygon", "2"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);

  const auto g1 = run({"gen", "-n", "20", "--box", "0.5", "--radius", "1", "--seed", "3"});
  REQUIRE(g1.code == 0);
  const auto inst_path = temp_file("k20.txt", g1.out);
  CHECK(parse(g1.out).graph() == complete(20));

  const auto mis = run({"solve", inst_path.string(), "--problem", "mis"});
  REQUIRE(mis.code == 0);
  const auto j = nlohmann::json::parse(mis.out);
  CHECK(j["problem"] == "mis");
  CHECK(j["value"] == 1);
  CHECK(j["vertices"].size() == 1);

  const auto sol_path = temp_file("k20_mis.json", mis.out);
  CHECK(run({"verify", inst_path.string(), sol_path.string()}).out == "ok\n");
  const auto bad_path = temp_file("k20_bad.json", R"({"problem":"mis","value":2,"vertices":[0,1]})");
  CHECK(run({"verify", inst_path.string(), bad_path.string()}).code == kExitUsage);

  CHECK(run({"exact", inst_path.string(), "--problem", "color"}).code == kExitUsage);
  const auto k12 = temp_file("k12.txt", run({"gen", "-n", "12", "--box", "0.5", "--seed", "3"}).out);
  const auto ex = run({"exact", k12.string(), "--problem", "color"});
  REQUIRE(ex.code == 0);
  CHECK(nlohmann::json::parse(ex.out)["value"] == 12);

  const auto cds = run({"solve", inst_path.string(), "--problem", "cds", "--root", "4", "--trace"});
  REQUIRE(cds.code == 0);
  CHECK(nlohmann::json::parse(cds.out)["meta"]["trace"]["root"] == 4);

  CHECK(run({"solve", "/nonexistent/file", "--problem", "vc"}).code == kExitUsage);
  CHECK(run({"solve", inst_path.string(), "--problem", "nope"}).code == kExitUsage);
}

TEST_CASE("cli: class certificate errors exit with 2") {
  std::vector<Edge> e;
  for (int a = 0; a < 4; ++a)
    for (int b = 4; b < 8; ++b) e.emplace_back(a, b);
  const auto path = temp_file("k44.txt", dump(InstanceFile::from_graph(build_graph(8, e))));
  const auto r = run({"solve", path.string(), "--problem", "mis"});
  CHECK(r.code == kExitClassCertificate);
  CHECK(r.err.find("independence") != std::string::npos);
}

TEST_CASE("cli: connected generation and bench reproducibility") {
  const auto g = run({"gen", "-n", "15", "--seed", "9", "--connected"});
  REQUIRE(g.code == 0);
  CHECK(is_connected(parse(g.out).graph()));
  CHECK(run({"gen", "-n", "15", "--seed", "9", "--connected"}).out == g.out);

  const std::vector<std::string> bench{"bench", "--instances", "4", "--n-range", "6:9", "--seed", "11"};
  const auto b1 = run(bench);
  REQUIRE(b1.code == 0);
  CHECK(run(bench).out == b1.out);

  const auto circle = run({"bench", "--instances", "3", "--variant", "circle", "--problems", "vc,color,mis"});
  REQUIRE(circle.code == 0);
  CHECK(circle.out.find(",vc,") != std::string::npos);
}
