#include "oddcolor/cfls.hpp"

#include <bit>
#include <ostream>
#include <stdexcept>
#include <unordered_map>

#include "oddcolor/coloring_io.hpp"
#include "oddcolor/parallel.hpp"

namespace oddcolor {

std::string BitVertex::bits() const {
  std::string s(m * m, '0');
  for (std::uint32_t pos = 0; pos < m * m; ++pos)
    if (index >> (m * m - 1 - pos) & 1) s[pos] = '1';
  return s;
}

BitVertex vertex_from_index(std::uint64_t idx, std::uint32_t m) {
  if (m == 0) throw std::invalid_argument("m must be positive");
  if (m * m >= 64 || idx >= (std::uint64_t{1} << (m * m)))
    throw std::out_of_range("vertex index out of range for m");
  return BitVertex{m, idx};
}

std::uint32_t block_diff_index(std::uint32_t b1, std::uint32_t b2,
                               std::uint32_t m) {
  const std::uint32_t diff = b1 ^ b2;
  if (diff == 0) return 0;
  // Highest set bit of the xor is the first difference from the left.
  return m - (31 - std::countl_zero(diff));
}

std::uint32_t block_diff_index(std::string_view b1, std::string_view b2) {
  if (b1.size() != b2.size())
    throw std::invalid_argument("block length mismatch");
  for (std::size_t pos = 0; pos < b1.size(); ++pos)
    if (b1[pos] != b2[pos]) return static_cast<std::uint32_t>(pos + 1);
  return 0;
}

std::uint64_t CflsColor::key(std::uint32_t m) const {
  // Mixed-radix packing: i, both blocks, then per-block (diff, sign).
  std::uint64_t k = i - 1;
  k = k * (1u << m) + block_pair[0];
  k = k * (1u << m) + block_pair[1];
  for (std::uint32_t t = 0; t < m; ++t) {
    k = k * (m + 1) + diffs[t];
    k = k * 2 + (signs[t] > 0 ? 1 : 0);
  }
  return k;
}

std::string CflsColor::to_string(std::uint32_t m) const {
  auto block_bits = [m](std::uint32_t b) {
    std::string s(m, '0');
    for (std::uint32_t pos = 0; pos < m; ++pos)
      if (b >> (m - 1 - pos) & 1) s[pos] = '1';
    return s;
  };
  std::string out = "((" + std::to_string(i) + ",{" +
                    block_bits(block_pair[0]) + "," +
                    block_bits(block_pair[1]) + "}),(";
  for (std::uint32_t t = 0; t < m; ++t) {
    if (t) out += ",";
    out += std::to_string(diffs[t]);
  }
  out += "),(";
  for (std::uint32_t t = 0; t < m; ++t) {
    if (t) out += ",";
    out += signs[t] > 0 ? "+1" : "-1";
  }
  out += "))";
  return out;
}

CflsColor cfls_color(const BitVertex& x, const BitVertex& y) {
  if (x.m != y.m) throw std::invalid_argument("mixed block sizes");
  if (x.index == y.index) throw std::invalid_argument("loop edge");
  const std::uint32_t m = x.m;
  const BitVertex& lo = x.index < y.index ? x : y;
  const BitVertex& hi = x.index < y.index ? y : x;

  CflsColor color;
  color.diffs.resize(m);
  color.signs.resize(m);
  for (std::uint32_t k = 1; k <= m; ++k) {
    const std::uint32_t bx = lo.block(k);
    const std::uint32_t by = hi.block(k);
    color.diffs[k - 1] = block_diff_index(bx, by, m);
    color.signs[k - 1] = bx <= by ? std::int8_t{1} : std::int8_t{-1};
    if (color.i == 0 && bx != by) {
      color.i = k;
      color.block_pair = bx < by ? std::array{bx, by} : std::array{by, bx};
    }
  }
  return color;
}

std::uint64_t cfls_color_ceiling(std::uint32_t m) {
  std::uint64_t c = std::uint64_t{m} << (2 * m);  // i and the block pair
  for (std::uint32_t t = 0; t < m; ++t) c *= (m + 1);
  return c << m;  // signs
}

CflsColoring build_cfls_coloring(std::uint32_t m, unsigned threads) {
  if (m == 0) throw std::invalid_argument("m must be positive");
  if (m > 3)
    throw std::invalid_argument(
        "m out of supported range for in-memory construction");

  const std::uint64_t n = std::uint64_t{1} << (m * m);
  const HostGraph host = HostGraph::complete(static_cast<std::uint32_t>(n));
  const std::uint64_t edges = host.edge_count();

  // Tuples are computed in parallel; dense ids are assigned by a sequential
  // first-use pass over the canonical edge order, so the result is the same
  // for every thread count.
  std::vector<std::uint64_t> keys(edges);
  parallel_chunks(edges, threads,
                  [&](unsigned, std::uint64_t begin, std::uint64_t end) {
                    Edge e = host.edge_at(begin);
                    for (std::uint64_t idx = begin; idx < end; ++idx) {
                      keys[idx] = cfls_color(vertex_from_index(e.u, m),
                                             vertex_from_index(e.v, m))
                                      .key(m);
                      if (++e.v == n) {
                        ++e.u;
                        e.v = e.u + 1;
                      }
                    }
                  });

  CflsColoring built{m, EdgeColoring(host), {}};
  std::unordered_map<std::uint64_t, ColorId> ids;
  ids.reserve(1024);
  Edge e{0, 1};
  for (std::uint64_t idx = 0; idx < edges; ++idx) {
    auto [it, inserted] =
        ids.try_emplace(keys[idx], static_cast<ColorId>(ids.size()));
    if (inserted)
      built.side_table.push_back(
          cfls_color(vertex_from_index(e.u, m), vertex_from_index(e.v, m)));
    built.coloring.set(e, it->second);
    if (++e.v == n) {
      ++e.u;
      e.v = e.u + 1;
    }
  }
  return built;
}

ColorId stream_cfls_coloring(std::uint32_t m, std::ostream& out,
                             bool allow_large) {
  if (m == 0) throw std::invalid_argument("m must be positive");
  if (m > 4 || (m > 3 && !allow_large))
    throw std::invalid_argument(
        "m out of supported range (pass allow_large for m=4)");
  if (m <= 3) {
    const CflsColoring built = build_cfls_coloring(m);
    write_coloring(built.coloring, out, cfls_side_table_comments(built));
    return built.coloring.color_count();
  }

  const std::uint64_t n = std::uint64_t{1} << (m * m);
  std::unordered_map<std::uint64_t, ColorId> ids;
  std::vector<CflsColor> table;

  // Pass 1: dense ids in first-use order, pass 2: records. Only the color
  // table lives in memory.
  for (std::uint64_t u = 0; u < n; ++u)
    for (std::uint64_t v = u + 1; v < n; ++v) {
      const CflsColor c =
          cfls_color(vertex_from_index(u, m), vertex_from_index(v, m));
      auto [it, inserted] =
          ids.try_emplace(c.key(m), static_cast<ColorId>(ids.size()));
      if (inserted) table.push_back(c);
    }

  out << "oddcolor v1\n";
  out << "graph complete n=" << n << "\n";
  out << "colors t=" << ids.size() << "\n";
  for (std::uint64_t u = 0; u < n; ++u)
    for (std::uint64_t v = u + 1; v < n; ++v) {
      const CflsColor c =
          cfls_color(vertex_from_index(u, m), vertex_from_index(v, m));
      out << "e " << u << ' ' << v << ' ' << ids.at(c.key(m)) << "\n";
    }
  for (std::size_t c = 0; c < table.size(); ++c)
    out << "# color " << c << " = " << table[c].to_string(m) << "\n";
  return static_cast<ColorId>(ids.size());
}

ColorId distinct_color_count(const CflsColoring& built) {
  if (!built.coloring.is_total()) throw std::runtime_error("partial coloring");
  const ColorId t = built.coloring.color_count();
  if (static_cast<std::uint64_t>(t) > cfls_color_ceiling(built.m))
    throw std::logic_error("color count exceeds tuple-space ceiling");
  return t;
}

std::vector<std::string> cfls_side_table_comments(const CflsColoring& built) {
  std::vector<std::string> lines;
  lines.reserve(built.side_table.size());
  for (std::size_t c = 0; c < built.side_table.size(); ++c)
    lines.push_back("color " + std::to_string(c) + " = " +
                    built.side_table[c].to_string(built.m));
  return lines;
}

}  // namespace oddcolor
