#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oddcolor/edge_coloring.hpp"
#include "oddcolor/patterns.hpp"

namespace oddcolor {

// Exhaustive scans visit every tuple once. Sampled scans draw `samples`
// subsets uniformly with replacement; sample i uses the SplitMix64 stream
// described in rng.hpp, so identical seeds reproduce identical samples for
// any thread count.
struct ScanMode {
  enum class Kind { Exhaustive, Sampled };
  Kind kind = Kind::Exhaustive;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;

  static ScanMode exhaustive() { return {}; }
  static ScanMode sampled(std::uint64_t seed, std::uint64_t samples) {
    return {Kind::Sampled, seed, samples};
  }
};

struct Violation {
  std::vector<std::uint32_t> vertices;
  // "signature": color -> parity, or "colors"/"assignment" for pattern hits.
  std::string info;
};

struct ViolationReport {
  std::string check;
  ScanMode mode;
  std::uint64_t checked = 0;
  std::vector<Violation> violations;
  double elapsed_seconds = 0;

  bool ok() const { return violations.empty(); }
};

// p-subsets whose induced clique has no odd color class. p in {4,5} unless
// allow_any_p is set (K_8 exploration); host must be complete, coloring
// total.
ViolationReport scan_cliques_odd(const EdgeColoring& coloring, unsigned p,
                                 const ScanMode& mode, unsigned threads = 0,
                                 bool allow_any_p = false);

// p-subsets seeing fewer than q distinct colors.
ViolationReport scan_min_colors(const EdgeColoring& coloring, unsigned p,
                                unsigned q, const ScanMode& mode,
                                unsigned threads = 0);

// C_4 copies of a bipartite host with no odd color class (pairs of X
// vertices crossed with pairs of Y vertices).
ViolationReport scan_c4_odd(const EdgeColoring& coloring,
                            const ScanMode& mode, unsigned threads = 0);

// Injective placements of the pattern, counted once per orbit of the
// pattern's automorphism group. Sampled mode draws supports; every ordering
// of a sampled support is still examined.
ViolationReport match_pattern(const EdgeColoring& coloring,
                              const PatternSpec& spec, const ScanMode& mode,
                              unsigned threads = 0);

// 2-2-2-2-2 colored 5-subsets containing a rainbow 5-cycle and at least one
// matching class: the full context around fig3c, which must never occur.
ViolationReport scan_rainbow_c5_in_22222(const EdgeColoring& coloring,
                                         const ScanMode& mode,
                                         unsigned threads = 0);

// Supports of p-cliques seeing exactly q distinct colors.
std::vector<std::vector<std::uint32_t>> cliques_with_exact_colors(
    const EdgeColoring& coloring, unsigned p, unsigned q,
    unsigned threads = 0);

}  // namespace oddcolor
