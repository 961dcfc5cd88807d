#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "oddcolor/edge_coloring.hpp"
#include "oddcolor/exact_oracle.hpp"
#include "oddcolor/gf2.hpp"

namespace oddcolor {

// Parity-check matrix of the code derived from a total coloring: one row per
// color, one column per host edge in canonical order, row s marking the
// edges of color s. Every column has weight one.
struct ParityMatrix {
  HostGraph host;
  BitMatrix bits;
};

ParityMatrix parity_matrix(const EdgeColoring& coloring);

// Sizes are powers of two far beyond 64 bits, so they are carried as
// exponents: code_size = 2^code_size_log2, density bound = 2^density_log2.
struct CodeReport {
  std::size_t rank = 0;
  std::int64_t code_size_log2 = 0;
  std::int64_t density_log2 = 0;  // -rank, never below -t
  ColorId colors = 0;
  std::uint64_t copies_checked = 0;
  bool certified = false;
  std::optional<std::vector<Edge>> failing_copy;
};

// Multiplies the parity matrix against the indicator vector of every copy of
// the pattern; certified when all syndromes are nonzero. The kernel of the
// matrix is then an H-code of density >= 2^-t: two kernel members differ by
// a kernel vector, and no copy of H lies in the kernel.
CodeReport certify_h_code(const EdgeColoring& coloring, PatternName pattern,
                          unsigned threads = 0);

// Exact D_H(n) for n <= 4 as a maximum independent set in the Cayley graph
// on GF(2)^C(n,2) whose connection set holds the labeled copies of H. For
// n = 5 the search is time-boxed: on timeout the incumbent is the lower
// bound and a greedy clique cover gives the upper bound.
struct HCodeBounds {
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
  bool exact = false;
};

HCodeBounds max_h_code_exact(
    unsigned n, PatternName pattern,
    std::chrono::milliseconds time_limit = std::chrono::milliseconds(30000));

}  // namespace oddcolor
