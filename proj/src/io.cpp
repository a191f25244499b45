#include "udg/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "udg/error.hpp"

namespace udg {

InstanceFile InstanceFile::from_geometry(GeometricInstance inst) {
  InstanceFile f;
  f.mode = Mode::geometric;
  f.geometry = std::move(inst);
  return f;
}

InstanceFile InstanceFile::from_graph(Graph g) {
  InstanceFile f;
  f.mode = Mode::abstract;
  f.abstract_graph = std::move(g);
  return f;
}

Graph InstanceFile::graph() const {
  return geometric() ? instance_to_graph(geometry) : abstract_graph;
}

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

namespace {

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> words;
  for (std::string w; ss >> w;) words.push_back(w);
  return words;
}

long long parse_int(const std::string& text, std::size_t line, const char* what) {
  long long value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) throw ParseError(line, std::string("bad ") + what + " '" + text + "'");
  return value;
}

double parse_real(const std::string& text, std::size_t line, const char* what) {
  double value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) throw ParseError(line, std::string("bad ") + what + " '" + text + "'");
  return value;
}

int parse_id(const std::string& text, std::size_t line) {
  const long long v = parse_int(text, line, "vertex id");
  if (v < 0 || v > 1'000'000'000) throw ParseError(line, "vertex id out of range");
  return static_cast<int>(v);
}

}  // namespace

InstanceFile read_instance(std::istream& in) {
  InstanceFile f;
  bool have_header = false;
  std::map<int, Disk> disks;
  std::optional<std::size_t> count;
  std::vector<Edge> edges;
  std::size_t line_no = 0;

  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto words = split_words(line);
    if (words.empty() || words[0][0] == '#') continue;

    if (!have_header) {
      if (words.size() != 3 || words[0] != "udg") throw ParseError(line_no, "expected 'udg <version> <mode>'");
      const auto version = parse_int(words[1], line_no, "version");
      if (version != kInstanceFormatVersion) throw VersionMismatch(static_cast<int>(version));
      if (words[2] == "geometric") {
        f.mode = InstanceFile::Mode::geometric;
      } else if (words[2] == "abstract") {
        f.mode = InstanceFile::Mode::abstract;
      } else {
        throw ParseError(line_no, "unknown mode '" + words[2] + "'");
      }
      have_header = true;
      continue;
    }

    if (f.geometric()) {
      if (words[0] != "disk" || words.size() != 5) throw ParseError(line_no, "expected 'disk <id> <x> <y> <r>'");
      const int id = parse_id(words[1], line_no);
      Disk d{parse_real(words[2], line_no, "x"), parse_real(words[3], line_no, "y"),
             parse_real(words[4], line_no, "radius")};
      if (!(d.r > 0.0)) throw ParseError(line_no, "radius must be positive");
      if (!disks.emplace(id, d).second) throw ParseError(line_no, "duplicate disk id");
    } else if (words[0] == "n") {
      if (words.size() != 2) throw ParseError(line_no, "expected 'n <count>'");
      if (count) throw ParseError(line_no, "vertex count given twice");
      count = static_cast<std::size_t>(parse_id(words[1], line_no));
    } else if (words[0] == "edge") {
      if (words.size() != 3) throw ParseError(line_no, "expected 'edge <u> <v>'");
      if (!count) throw ParseError(line_no, "edge before vertex count");
      const int u = parse_id(words[1], line_no);
      const int v = parse_id(words[2], line_no);
      if (static_cast<std::size_t>(u) >= *count || static_cast<std::size_t>(v) >= *count)
        throw ParseError(line_no, "edge endpoint out of range");
      if (u == v) throw ParseError(line_no, "self-loop");
      edges.emplace_back(u, v);
    } else {
      throw ParseError(line_no, "unknown record '" + words[0] + "'");
    }
  }

  if (!have_header) throw ParseError(line_no, "missing header");
  if (f.geometric()) {
    int expected = 0;
    for (const auto& [id, d] : disks) {
      if (id != expected++) throw ParseError(line_no, "disk ids are not dense 0..n-1");
      f.geometry.disks.push_back(d);
    }
  } else {
    if (!count) throw ParseError(line_no, "missing vertex count");
    f.abstract_graph = Graph::from_edges(*count, edges);
  }
  return f;
}

InstanceFile read_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return read_instance(in);
}

void write_instance(std::ostream& out, const InstanceFile& f) {
  if (f.geometric()) {
    out << "udg " << f.version << " geometric\n";
    for (std::size_t i = 0; i < f.geometry.disks.size(); ++i) {
      const Disk& d = f.geometry.disks[i];
      out << "disk " << i << ' ' << format_double(d.x) << ' ' << format_double(d.y) << ' '
          << format_double(d.r) << '\n';
    }
  } else {
    out << "udg " << f.version << " abstract\n";
    out << "n " << f.abstract_graph.num_vertices() << '\n';
    for (const auto& [u, v] : f.abstract_graph.edges()) out << "edge " << u << ' ' << v << '\n';
  }
}

void write_instance(const std::filesystem::path& path, const InstanceFile& f) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  write_instance(out, f);
}

}  // namespace udg
