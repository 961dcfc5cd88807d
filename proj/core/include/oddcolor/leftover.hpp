#pragma once

#include <memory>
#include <span>
#include <vector>

#include "oddcolor/edge_coloring.hpp"

namespace oddcolor {

// Witness of a leftover decomposition: a cut color plus the two recursively
// decomposed sides, or a single vertex at the leaves.
struct LeftoverTree {
  std::vector<std::uint32_t> vertices;
  ColorId cut_color = kUncolored;
  std::unique_ptr<LeftoverTree> side_a;
  std::unique_ptr<LeftoverTree> side_b;
};

struct LeftoverResult {
  bool is_leftover = false;
  std::unique_ptr<LeftoverTree> tree;
};

// Tests whether the subset has a leftover structure: |S| = 1, or S splits
// into A and B with every A-B edge in one color that appears nowhere inside
// either side, disjoint inside color sets, and both sides recursively
// leftover. All edges inside S must be assigned. The cut color incident to
// the smallest vertex determines the candidate bipartitions, so the search
// tries at most |S|-1 colors per level.
LeftoverResult is_leftover(const EdgeColoring& coloring,
                           std::span<const std::uint32_t> subset);

}  // namespace oddcolor
