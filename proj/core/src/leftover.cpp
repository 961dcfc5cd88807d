#include "oddcolor/leftover.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace oddcolor {
namespace {

std::set<ColorId> inside_colors(const EdgeColoring& coloring,
                                const std::vector<std::uint32_t>& part) {
  std::set<ColorId> colors;
  for (std::size_t i = 0; i < part.size(); ++i)
    for (std::size_t j = i + 1; j < part.size(); ++j)
      colors.insert(coloring.at(coloring.host().edge(part[i], part[j])));
  return colors;
}

std::unique_ptr<LeftoverTree> decompose(const EdgeColoring& coloring,
                                        std::vector<std::uint32_t> subset) {
  auto node = std::make_unique<LeftoverTree>();
  node->vertices = subset;
  if (subset.size() == 1) return node;

  const std::uint32_t v0 = subset[0];
  // In any valid split with v0 in A, B is exactly the set of vertices joined
  // to v0 by the cut color, so each candidate color forces the bipartition.
  std::set<ColorId> candidates;
  for (std::size_t i = 1; i < subset.size(); ++i)
    candidates.insert(coloring.at(coloring.host().edge(v0, subset[i])));

  for (ColorId alpha : candidates) {
    std::vector<std::uint32_t> a{v0}, b;
    for (std::size_t i = 1; i < subset.size(); ++i) {
      const ColorId c = coloring.at(coloring.host().edge(v0, subset[i]));
      (c == alpha ? b : a).push_back(subset[i]);
    }
    if (a.empty() || b.empty()) continue;

    bool cut_ok = true;
    for (std::uint32_t u : a) {
      for (std::uint32_t w : b)
        if (coloring.at(coloring.host().edge(u, w)) != alpha) {
          cut_ok = false;
          break;
        }
      if (!cut_ok) break;
    }
    if (!cut_ok) continue;

    const std::set<ColorId> fa = inside_colors(coloring, a);
    const std::set<ColorId> fb = inside_colors(coloring, b);
    if (fa.count(alpha) || fb.count(alpha)) continue;
    bool disjoint = true;
    for (ColorId c : fa)
      if (fb.count(c)) {
        disjoint = false;
        break;
      }
    if (!disjoint) continue;

    auto ta = decompose(coloring, a);
    if (!ta) continue;
    auto tb = decompose(coloring, b);
    if (!tb) continue;

    node->cut_color = alpha;
    node->side_a = std::move(ta);
    node->side_b = std::move(tb);
    return node;
  }
  return nullptr;
}

}  // namespace

LeftoverResult is_leftover(const EdgeColoring& coloring,
                           std::span<const std::uint32_t> subset) {
  if (subset.empty()) throw std::invalid_argument("empty subset");
  std::vector<std::uint32_t> verts(subset.begin(), subset.end());
  std::sort(verts.begin(), verts.end());
  if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
    throw std::invalid_argument("repeated vertex in subset");

  LeftoverResult result;
  result.tree = decompose(coloring, std::move(verts));
  result.is_leftover = result.tree != nullptr;
  return result;
}

}  // namespace oddcolor
