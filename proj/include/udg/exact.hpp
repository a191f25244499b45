#pragma once

#include <chrono>
#include <cstddef>

#include "udg/cover_color.hpp"
#include "udg/graph.hpp"

// Exponential-time exact solvers on 64-bit adjacency masks. They back every
// ratio check in the test suites, so each returns a witness and refuses
// (TooLarge) rather than approximates beyond its limit.
namespace udg {

struct OracleLimits {
  std::size_t mis = 24;  // also vertex cover
  std::size_t clique = 24;
  std::size_t chromatic = 16;
  std::size_t domination = 18;  // plain, independent, total
  std::size_t connected_domination = 16;
  /// Zero means unlimited; otherwise a call past the budget throws Timeout.
  std::chrono::milliseconds time_budget{0};
};

struct ExactSet {
  int size = 0;
  VertexSet witness;
};

struct ExactColoring {
  int chromatic_number = 0;
  Coloring witness;
};

enum class DominationVariant { plain, independent, total, connected };

ExactSet exact_mis(const Graph& g, const OracleLimits& limits = {});
ExactSet exact_vc(const Graph& g, const OracleLimits& limits = {});
ExactSet exact_clique(const Graph& g, const OracleLimits& limits = {});
ExactColoring exact_chromatic(const Graph& g, const OracleLimits& limits = {});

/// Minimum dominating set of the given variant. The connected variant throws
/// NotConnected on disconnected input; the total variant throws
/// IsolatedVertex if some vertex has no neighbor.
ExactSet exact_domination(const Graph& g, DominationVariant variant, const OracleLimits& limits = {});

}  // namespace udg
