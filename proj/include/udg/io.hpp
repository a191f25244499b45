#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "udg/geometry.hpp"
#include "udg/graph.hpp"

namespace udg {

inline constexpr int kInstanceFormatVersion = 1;

/// Contents of an instance file. Geometric files never store edges; the
/// graph is derived with instance_to_graph.
struct InstanceFile {
  enum class Mode { geometric, abstract };

  int version = kInstanceFormatVersion;
  Mode mode = Mode::abstract;
  GeometricInstance geometry;  // geometric mode
  Graph abstract_graph;        // abstract mode

  static InstanceFile from_geometry(GeometricInstance inst);
  static InstanceFile from_graph(Graph g);

  Graph graph() const;
  bool geometric() const { return mode == Mode::geometric; }
};

/// Text format, one record per line; blank lines and '#' comments are skipped.
///
///   udg 1 geometric          udg 1 abstract
///   disk <id> <x> <y> <r>    n <count>
///                            edge <u> <v>
///
/// Coordinates are written with 17 significant digits so binary64 values
/// round-trip exactly. Throws ParseError or VersionMismatch.
InstanceFile read_instance(std::istream& in);
InstanceFile read_instance(const std::filesystem::path& path);
void write_instance(std::ostream& out, const InstanceFile& file);
void write_instance(const std::filesystem::path& path, const InstanceFile& file);

/// `%.17g` text; parses back to exactly `value`.
std::string format_double(double value);

}  // namespace udg
