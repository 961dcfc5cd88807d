#include "oddcolor/patterns.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace oddcolor {

void PatternSpec::validate() const {
  if (k < 2 || k > 8) throw std::invalid_argument("pattern k out of range");
  std::set<std::pair<std::uint8_t, std::uint8_t>> seen;
  for (const auto& group : groups) {
    if (group.empty()) throw std::invalid_argument("empty pattern group");
    for (auto [a, b] : group) {
      if (a >= b || b >= k)
        throw std::invalid_argument("invalid edge position in pattern");
      if (!seen.insert({a, b}).second)
        throw std::invalid_argument("pattern groups are not disjoint");
    }
  }
}

namespace {

using Pos = std::pair<std::uint8_t, std::uint8_t>;

PatternSpec make(std::string name, std::uint32_t k,
                 std::vector<std::vector<Pos>> groups) {
  PatternSpec spec;
  spec.k = k;
  spec.groups = std::move(groups);
  spec.distinct_groups = true;
  spec.name = std::move(name);
  spec.validate();
  return spec;
}

}  // namespace

std::vector<PatternSpec> builtin_patterns() {
  constexpr std::uint8_t a = 0, b = 1, c = 2, d = 3, e = 4;
  std::vector<PatternSpec> specs;
  specs.push_back(make("fig2a", 4, {{{a, d}, {b, c}}, {{a, c}, {a, b}}}));
  specs.push_back(make(
      "fig2b", 4, {{{a, b}, {b, d}}, {{a, d}, {a, c}}, {{c, d}, {b, c}}}));
  specs.push_back(make(
      "fig2c", 4, {{{b, c}, {a, d}}, {{a, b}, {c, d}}, {{a, c}, {b, d}}}));
  specs.push_back(make("k4-matching-two-paths", 4,
                       {{{a, d}, {b, c}}, {{a, b}, {a, c}}, {{b, d}, {c, d}}}));
  specs.push_back(make(
      "fig3a", 5, {{{b, e}, {c, d}}, {{a, b}, {d, e}}, {{b, c}, {a, e}}}));
  specs.push_back(make("fig3b", 5,
                       {{{a, c}, {b, c}},
                        {{a, b}, {b, d}},
                        {{a, d}, {d, e}},
                        {{a, e}, {c, e}}}));
  specs.push_back(make(
      "fig3c", 5,
      {{{b, e}, {c, d}}, {{a, b}}, {{b, c}}, {{d, e}}, {{a, e}}}));
  specs.push_back(make(
      "fig3d", 5, {{{b, c}, {d, e}}, {{a, d}, {c, d}}, {{a, b}, {a, c}}}));
  specs.push_back(make("fig3e", 5,
                       {{{a, b}, {b, e}},
                        {{b, c}, {a, c}},
                        {{c, d}, {b, d}},
                        {{d, e}, {c, e}},
                        {{a, e}, {a, d}}}));
  return specs;
}

std::vector<std::vector<std::uint8_t>> pattern_automorphisms(
    const PatternSpec& spec) {
  spec.validate();
  const std::uint32_t k = spec.k;

  // group index per edge position, -1 for unconstrained
  std::map<Pos, int> group_of;
  for (std::size_t g = 0; g < spec.groups.size(); ++g)
    for (auto pos : spec.groups[g]) group_of[pos] = static_cast<int>(g);

  auto mapped = [&](const std::vector<std::uint8_t>& perm, Pos pos) {
    std::uint8_t a = perm[pos.first], b = perm[pos.second];
    if (a > b) std::swap(a, b);
    return Pos{a, b};
  };

  std::vector<std::vector<std::uint8_t>> autos;
  std::vector<std::uint8_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    // A permutation is an automorphism when it maps each group onto a whole
    // group and unconstrained positions onto unconstrained ones.
    bool ok = true;
    for (std::uint8_t i = 0; ok && i < k; ++i)
      for (std::uint8_t j = i + 1; ok && j < k; ++j) {
        auto it = group_of.find({i, j});
        auto jt = group_of.find(mapped(perm, {i, j}));
        if ((it == group_of.end()) != (jt == group_of.end())) ok = false;
      }
    for (std::size_t g = 0; ok && g < spec.groups.size(); ++g) {
      const int target = group_of.at(mapped(perm, spec.groups[g][0]));
      for (auto pos : spec.groups[g])
        if (group_of.at(mapped(perm, pos)) != target) {
          ok = false;
          break;
        }
      if (ok && spec.groups[static_cast<std::size_t>(target)].size() !=
                    spec.groups[g].size())
        ok = false;
    }
    if (ok) autos.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return autos;
}

}  // namespace oddcolor
