#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oddcolor/edge_coloring.hpp"

namespace oddcolor {

enum class PatternName { C4, K3, K4, K5 };

PatternName pattern_from_string(const std::string& name);
std::string pattern_to_string(PatternName pattern);

// Small pattern graph for the generic enumerator (<= 8 vertices).
struct SmallGraph {
  std::uint32_t k = 0;
  std::vector<std::pair<std::uint8_t, std::uint8_t>> edges;
};

SmallGraph pattern_graph(PatternName pattern);

// Every copy of the pattern in the host, as edge sets, de-duplicated as
// subgraphs.
struct CopyList {
  HostGraph host;
  std::string pattern;
  std::vector<std::vector<Edge>> copies;
};

CopyList enumerate_copies(const HostGraph& host, PatternName pattern);
CopyList enumerate_copies_generic(const HostGraph& host,
                                  const SmallGraph& pattern,
                                  const std::string& name);

struct GValue {
  ColorId g = 0;
  EdgeColoring witness;
  std::vector<ColorId> exhausted;  // color counts proven infeasible
};

// Outcome of the bounded search; "g > k_max" is a result, not an error.
struct MinColorsResult {
  std::optional<GValue> value;
  ColorId k_max = 0;

  bool found() const { return value.has_value(); }
};

struct OracleOptions {
  // Backtracking is refused above this edge count unless raised explicitly.
  std::uint64_t max_edges = 20;
};

// Smallest k <= k_max admitting a coloring in which every copy has an odd
// class, with a witness. Edges are assigned in descending order of the
// number of copies through them; a branch dies as soon as some fully colored
// copy has an all-even signature; a new color id may enter only as
// (current max)+1.
MinColorsResult min_colors_odd(const HostGraph& host, PatternName pattern,
                               ColorId k_max, const OracleOptions& options = {});

// Recount, independent of the search internals: true iff every copy has an
// odd class.
bool verify_witness(const HostGraph& host, PatternName pattern,
                    const EdgeColoring& coloring);

}  // namespace oddcolor
