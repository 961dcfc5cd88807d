#include "oddcolor/edge_coloring.hpp"

#include <algorithm>
#include <stdexcept>

namespace oddcolor {

EdgeColoring::EdgeColoring(HostGraph host)
    : host_(host), colors_(host.edge_count(), kUncolored) {}

void EdgeColoring::set(const Edge& e, ColorId c) {
  if (c < 0) throw std::invalid_argument("color ids are non-negative");
  ColorId& slot = colors_[host_.edge_index(e)];
  if (slot == kUncolored) ++assigned_;
  slot = c;
}

std::optional<ColorId> EdgeColoring::get(const Edge& e) const {
  const ColorId c = colors_[host_.edge_index(e)];
  if (c == kUncolored) return std::nullopt;
  return c;
}

ColorId EdgeColoring::at(const Edge& e) const {
  const ColorId c = colors_[host_.edge_index(e)];
  if (c == kUncolored) throw std::runtime_error("partial coloring");
  return c;
}

ColorId EdgeColoring::color_count() const {
  std::vector<ColorId> used(colors_.begin(), colors_.end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  ColorId t = 0;
  for (ColorId c : used)
    if (c != kUncolored) ++t;
  return t;
}

void EdgeColoring::validate_dense() const {
  const ColorId t = color_count();
  std::vector<bool> seen(static_cast<std::size_t>(t), false);
  for (ColorId c : colors_) {
    if (c == kUncolored) continue;
    if (c >= t) throw std::runtime_error("color ids not contiguous");
    seen[static_cast<std::size_t>(c)] = true;
  }
  for (bool b : seen)
    if (!b) throw std::runtime_error("color ids not contiguous");
}

std::map<ColorId, int> parity_signature(const EdgeColoring& coloring,
                                        std::span<const Edge> subset) {
  std::map<ColorId, int> sig;
  for (const Edge& e : subset) sig[coloring.at(e)] ^= 1;
  return sig;
}

bool has_odd_class(const EdgeColoring& coloring,
                   std::span<const Edge> subset) {
  const auto sig = parity_signature(coloring, subset);
  for (const auto& [c, parity] : sig)
    if (parity == 1) return true;
  return false;
}

}  // namespace oddcolor
