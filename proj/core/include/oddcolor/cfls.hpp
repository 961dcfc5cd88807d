#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "oddcolor/edge_coloring.hpp"

namespace oddcolor {

// Vertex of K_{2^{m^2}}: a binary string of length m^2, big-endian, read as m
// blocks of m bits. Integer order on indices equals lexicographic order on
// the strings.
struct BitVertex {
  std::uint32_t m = 0;
  std::uint64_t index = 0;

  // k is 1-based; returns the m-bit value of the k-th block.
  std::uint32_t block(std::uint32_t k) const {
    return static_cast<std::uint32_t>(index >> ((m - k) * m)) &
           ((1u << m) - 1);
  }
  std::string bits() const;
};

BitVertex vertex_from_index(std::uint64_t idx, std::uint32_t m);

// 0 if the blocks are equal, else the 1-based position (from the most
// significant bit) of the first differing bit.
std::uint32_t block_diff_index(std::uint32_t b1, std::uint32_t b2,
                               std::uint32_t m);
// String form; throws on length mismatch.
std::uint32_t block_diff_index(std::string_view b1, std::string_view b2);

// Edge color tuple ((i, {x^(i), y^(i)}), i_1..i_m, d_1..d_m):
//   i          first block index where x and y differ (1-based)
//   block_pair the two differing m-bit blocks at position i, stored sorted
//   diffs      per block, first differing bit position (0 when blocks agree)
//   signs      per block, +1 when x^(k) <= y^(k) for x < y, else -1
struct CflsColor {
  std::uint32_t i = 0;
  std::array<std::uint32_t, 2> block_pair{};
  std::vector<std::uint32_t> diffs;
  std::vector<std::int8_t> signs;

  // Injective integer encoding; usable as a dedup key.
  std::uint64_t key(std::uint32_t m) const;
  // Rendering used for side-table comments, e.g.
  // ((1,{00,01}),(2,1),(+1,+1)).
  std::string to_string(std::uint32_t m) const;

  friend bool operator==(const CflsColor&, const CflsColor&) = default;
};

CflsColor cfls_color(const BitVertex& x, const BitVertex& y);

struct CflsColoring {
  std::uint32_t m = 0;
  EdgeColoring coloring;
  // Indexed by dense ColorId.
  std::vector<CflsColor> side_table;
};

// Total coloring of K_{2^{m^2}} with dense color ids assigned in first-use
// order along the canonical edge order; output does not depend on the thread
// count. In-memory construction supports m <= 3 (n <= 512).
CflsColoring build_cfls_coloring(std::uint32_t m, unsigned threads = 0);

// Writes the m = 4 coloring (2^16 vertices, 2^31 edges) straight to a stream
// in the coloring file format, holding only the color table in memory.
// Refused without allow_large; m >= 5 is always refused. Returns t.
ColorId stream_cfls_coloring(std::uint32_t m, std::ostream& out,
                             bool allow_large = false);

// Distinct colors in use; checks the tuple-space ceiling
// m * 2^(2m) * (m+1)^m * 2^m.
ColorId distinct_color_count(const CflsColoring& built);

// Upper bound t can never exceed for a given m.
std::uint64_t cfls_color_ceiling(std::uint32_t m);

// Side-table comment lines for the coloring file.
std::vector<std::string> cfls_side_table_comments(const CflsColoring& built);

}  // namespace oddcolor
