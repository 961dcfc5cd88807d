#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace oddcolor {

// Equality-partition constraint on the edges of K_k. Each group is a set of
// edge positions (vertex index pairs over 0..k-1) that must share one color;
// with distinct_groups set, different groups must get different colors.
// Edge positions not listed in any group are unconstrained.
struct PatternSpec {
  std::uint32_t k = 0;
  std::vector<std::vector<std::pair<std::uint8_t, std::uint8_t>>> groups;
  bool distinct_groups = true;
  std::string name;

  void validate() const;  // groups disjoint, positions valid for K_k
};

// The forbidden configurations scanned for on CFLS colorings:
//   fig2a  matching {ad,bc} + path {ac,ab} on K_4
//   fig2b  three path classes on K_4
//   fig2c  three perfect matchings on K_4
//   k4-matching-two-paths  the remaining full partition of K_4 into three
//          doubled classes (one matching, two paths)
//   fig3a..fig3e  the five-vertex configurations
// fig3c encodes the drawn equalities only: one doubled class {be,cd} plus the
// four other 5-cycle edges as singleton classes, all classes distinctly
// colored. The full two-per-class context check lives in the verifier.
std::vector<PatternSpec> builtin_patterns();

// Vertex permutations of [k] that map the group partition onto itself
// (grouped positions to grouped positions, groups to whole groups).
std::vector<std::vector<std::uint8_t>> pattern_automorphisms(
    const PatternSpec& spec);

}  // namespace oddcolor
