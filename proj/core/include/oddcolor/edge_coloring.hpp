#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "oddcolor/host_graph.hpp"

namespace oddcolor {

using ColorId = std::int32_t;
inline constexpr ColorId kUncolored = -1;

// Total or partial assignment of color ids to host edges. Color ids in use
// must form a contiguous range 0..t-1; validate_dense() checks it. Immutable
// once built, so readers may share an instance across threads.
class EdgeColoring {
 public:
  explicit EdgeColoring(HostGraph host);

  const HostGraph& host() const { return host_; }

  void set(const Edge& e, ColorId c);
  std::optional<ColorId> get(const Edge& e) const;
  ColorId at(const Edge& e) const;  // throws on unassigned edges
  ColorId raw_at(std::uint64_t edge_index) const { return colors_[edge_index]; }

  bool is_total() const { return assigned_ == colors_.size(); }
  std::uint64_t assigned_count() const { return assigned_; }

  // Distinct color ids in use.
  ColorId color_count() const;
  // Throws unless the in-use ids are exactly {0..t-1}.
  void validate_dense() const;

  std::span<const ColorId> raw() const { return colors_; }

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  HostGraph host_;
  std::vector<ColorId> colors_;
  std::uint64_t assigned_ = 0;
};

// Multiplicity mod 2 of every color occurring in the subset.
// Throws "partial coloring" if some subset edge is unassigned.
std::map<ColorId, int> parity_signature(const EdgeColoring& coloring,
                                        std::span<const Edge> subset);

// True iff some color meets the subset an odd number of times.
bool has_odd_class(const EdgeColoring& coloring, std::span<const Edge> subset);

}  // namespace oddcolor
