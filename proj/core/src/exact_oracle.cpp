#include "oddcolor/exact_oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace oddcolor {

PatternName pattern_from_string(const std::string& name) {
  if (name == "C4") return PatternName::C4;
  if (name == "K3") return PatternName::K3;
  if (name == "K4") return PatternName::K4;
  if (name == "K5") return PatternName::K5;
  throw std::invalid_argument("unknown pattern '" + name + "'");
}

std::string pattern_to_string(PatternName pattern) {
  switch (pattern) {
    case PatternName::C4: return "C4";
    case PatternName::K3: return "K3";
    case PatternName::K4: return "K4";
    case PatternName::K5: return "K5";
  }
  throw std::logic_error("bad pattern");
}

SmallGraph pattern_graph(PatternName pattern) {
  switch (pattern) {
    case PatternName::C4:
      return {4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}};
    case PatternName::K3:
      return {3, {{0, 1}, {0, 2}, {1, 2}}};
    case PatternName::K4:
      return {4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
    case PatternName::K5: {
      SmallGraph g{5, {}};
      for (std::uint8_t i = 0; i < 5; ++i)
        for (std::uint8_t j = i + 1; j < 5; ++j) g.edges.push_back({i, j});
      return g;
    }
  }
  throw std::logic_error("bad pattern");
}

namespace {

// Closed-form enumerators for the common cases; anything else goes through
// the generic injective-homomorphism search.

void clique_copies(const HostGraph& host, unsigned p, CopyList& out) {
  const std::uint32_t n = host.n();
  std::vector<std::uint32_t> verts(p);
  std::vector<Edge> edges;
  auto emit = [&] {
    edges.clear();
    for (unsigned i = 0; i < p; ++i)
      for (unsigned j = i + 1; j < p; ++j)
        edges.push_back(host.edge(verts[i], verts[j]));
    out.copies.push_back(edges);
  };
  // iterative p-combinations of 0..n-1
  for (unsigned i = 0; i < p; ++i) verts[i] = i;
  while (true) {
    emit();
    int pos = static_cast<int>(p) - 1;
    while (pos >= 0 && verts[pos] == n - p + pos) --pos;
    if (pos < 0) break;
    ++verts[pos];
    for (unsigned i = pos + 1; i < p; ++i) verts[i] = verts[i - 1] + 1;
  }
}

void c4_bipartite_copies(const HostGraph& host, CopyList& out) {
  const std::uint32_t n = host.n();
  for (std::uint32_t x1 = 0; x1 + 1 < n; ++x1)
    for (std::uint32_t x2 = x1 + 1; x2 < n; ++x2)
      for (std::uint32_t y1 = 0; y1 + 1 < n; ++y1)
        for (std::uint32_t y2 = y1 + 1; y2 < n; ++y2)
          out.copies.push_back({host.edge(x1, host.y_vertex(y1)),
                                host.edge(x1, host.y_vertex(y2)),
                                host.edge(x2, host.y_vertex(y1)),
                                host.edge(x2, host.y_vertex(y2))});
}

bool host_adjacent(const HostGraph& host, std::uint32_t a, std::uint32_t b) {
  if (a == b) return false;
  if (host.kind() == GraphKind::Complete) return true;
  return host.on_x_side(a) != host.on_x_side(b);
}

}  // namespace

CopyList enumerate_copies_generic(const HostGraph& host,
                                  const SmallGraph& pattern,
                                  const std::string& name) {
  if (pattern.k > 8)
    throw std::invalid_argument("generic patterns support at most 8 vertices");
  if (pattern.k > host.vertex_count())
    throw std::invalid_argument("pattern larger than host");

  CopyList out{host, name, {}};
  std::set<std::vector<Edge>> seen;
  std::vector<std::uint32_t> image;
  image.reserve(pattern.k);

  // Injective homomorphism backtracking; subgraph-level dedup by the sorted
  // edge set quotients out the pattern's automorphisms.
  auto rec = [&](auto&& self, std::uint32_t depth) -> void {
    if (depth == pattern.k) {
      std::vector<Edge> edges;
      edges.reserve(pattern.edges.size());
      for (auto [a, b] : pattern.edges)
        edges.push_back(host.edge(image[a], image[b]));
      std::sort(edges.begin(), edges.end());
      if (seen.insert(edges).second) out.copies.push_back(std::move(edges));
      return;
    }
    for (std::uint32_t v = 0; v < host.vertex_count(); ++v) {
      if (std::find(image.begin(), image.end(), v) != image.end()) continue;
      bool ok = true;
      for (auto [a, b] : pattern.edges) {
        if (b != depth && a != depth) continue;
        const std::uint8_t other = (a == depth) ? b : a;
        if (other < depth && !host_adjacent(host, image[other], v)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      image.push_back(v);
      self(self, depth + 1);
      image.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

CopyList enumerate_copies(const HostGraph& host, PatternName pattern) {
  const SmallGraph g = pattern_graph(pattern);
  if (g.k > host.vertex_count())
    throw std::invalid_argument("pattern larger than host");

  CopyList out{host, pattern_to_string(pattern), {}};
  if (host.kind() == GraphKind::Complete) {
    switch (pattern) {
      case PatternName::K3: clique_copies(host, 3, out); return out;
      case PatternName::K4: clique_copies(host, 4, out); return out;
      case PatternName::K5: clique_copies(host, 5, out); return out;
      case PatternName::C4: break;
    }
    return enumerate_copies_generic(host, g, out.pattern);
  }
  if (pattern == PatternName::C4) {
    c4_bipartite_copies(host, out);
    return out;
  }
  // Cliques above K_2 have no bipartite copies; keep the generic path for
  // uniform behavior.
  return enumerate_copies_generic(host, g, out.pattern);
}

namespace {

struct SearchContext {
  const HostGraph& host;
  std::vector<std::vector<std::uint32_t>> copies_as_indices;
  // edge order: descending by number of copies through the edge
  std::vector<std::uint64_t> edge_order;
  std::vector<std::vector<std::uint32_t>> copies_at_edge;  // by edge index
  std::vector<std::uint32_t> assign_pos;  // position of edge in edge_order
};

// A copy is "closed" once its last edge in assignment order is colored; only
// then can its signature be final, so that is the moment to prune.
bool copy_all_even(const SearchContext& ctx,
                   const std::vector<ColorId>& colors, std::uint32_t copy) {
  ColorId scratch[32];
  unsigned count = 0;
  for (std::uint32_t ei : ctx.copies_as_indices[copy])
    scratch[count++] = colors[ei];
  bool even = true;
  bool done[32] = {};
  for (unsigned i = 0; i < count && even; ++i) {
    if (done[i]) continue;
    unsigned mult = 1;
    for (unsigned j = i + 1; j < count; ++j)
      if (scratch[j] == scratch[i]) {
        done[j] = true;
        ++mult;
      }
    if (mult & 1u) even = false;
  }
  return even;
}

bool search(const SearchContext& ctx, std::vector<ColorId>& colors,
            std::size_t depth, ColorId k, ColorId max_used) {
  if (depth == ctx.edge_order.size()) return true;
  const std::uint64_t edge = ctx.edge_order[depth];
  const ColorId limit = std::min<ColorId>(k - 1, max_used + 1);
  for (ColorId c = 0; c <= limit; ++c) {
    colors[edge] = c;
    bool dead = false;
    for (std::uint32_t copy : ctx.copies_at_edge[edge]) {
      // closed iff every edge of the copy sits at or before this depth
      bool closed = true;
      for (std::uint32_t ei : ctx.copies_as_indices[copy])
        if (ctx.assign_pos[ei] > depth) {
          closed = false;
          break;
        }
      if (closed && copy_all_even(ctx, colors, copy)) {
        dead = true;
        break;
      }
    }
    if (!dead &&
        search(ctx, colors, depth + 1, k, std::max(max_used, c)))
      return true;
  }
  colors[edge] = kUncolored;
  return false;
}

}  // namespace

MinColorsResult min_colors_odd(const HostGraph& host, PatternName pattern,
                               ColorId k_max, const OracleOptions& options) {
  if (k_max < 1) throw std::invalid_argument("k_max must be positive");
  if (host.edge_count() > options.max_edges)
    throw std::invalid_argument(
        "host too large for exhaustive search (raise max_edges to override)");

  const CopyList copies = enumerate_copies(host, pattern);
  const std::uint64_t m = host.edge_count();

  SearchContext ctx{host, {}, {}, {}, {}};
  ctx.copies_as_indices.reserve(copies.copies.size());
  ctx.copies_at_edge.assign(m, {});
  for (const auto& copy : copies.copies) {
    std::vector<std::uint32_t> indices;
    indices.reserve(copy.size());
    for (const Edge& e : copy)
      indices.push_back(static_cast<std::uint32_t>(host.edge_index(e)));
    const auto id = static_cast<std::uint32_t>(ctx.copies_as_indices.size());
    for (std::uint32_t ei : indices) ctx.copies_at_edge[ei].push_back(id);
    ctx.copies_as_indices.push_back(std::move(indices));
  }

  ctx.edge_order.resize(m);
  for (std::uint64_t i = 0; i < m; ++i) ctx.edge_order[i] = i;
  std::stable_sort(ctx.edge_order.begin(), ctx.edge_order.end(),
                   [&](std::uint64_t a, std::uint64_t b) {
                     return ctx.copies_at_edge[a].size() >
                            ctx.copies_at_edge[b].size();
                   });
  ctx.assign_pos.assign(m, 0);
  for (std::uint64_t pos = 0; pos < m; ++pos)
    ctx.assign_pos[ctx.edge_order[pos]] = static_cast<std::uint32_t>(pos);

  MinColorsResult result;
  result.k_max = k_max;
  std::vector<ColorId> exhausted;
  for (ColorId k = 1; k <= k_max; ++k) {
    std::vector<ColorId> colors(m, kUncolored);
    if (search(ctx, colors, 0, k, -1)) {
      EdgeColoring witness(host);
      for (std::uint64_t i = 0; i < m; ++i)
        witness.set(host.edge_at(i), colors[i]);
      if (!verify_witness(host, pattern, witness))
        throw std::logic_error("search produced an invalid witness");
      result.value = GValue{k, std::move(witness), exhausted};
      return result;
    }
    exhausted.push_back(k);
  }
  return result;
}

bool verify_witness(const HostGraph& host, PatternName pattern,
                    const EdgeColoring& coloring) {
  if (!coloring.is_total()) throw std::runtime_error("partial coloring");
  const CopyList copies = enumerate_copies(host, pattern);
  for (const auto& copy : copies.copies)
    if (!has_odd_class(coloring, copy)) return false;
  return true;
}

}  // namespace oddcolor
