#include "oddcolor/code_builder.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

#include "oddcolor/parallel.hpp"

namespace oddcolor {

ParityMatrix parity_matrix(const EdgeColoring& coloring) {
  if (!coloring.is_total()) throw std::runtime_error("partial coloring");
  coloring.validate_dense();
  const HostGraph& host = coloring.host();
  const ColorId t = coloring.color_count();
  BitMatrix bits(static_cast<std::size_t>(t), host.edge_count());
  for (std::uint64_t e = 0; e < host.edge_count(); ++e)
    bits.set(static_cast<std::size_t>(coloring.raw_at(e)), e, true);
  return ParityMatrix{host, std::move(bits)};
}

CodeReport certify_h_code(const EdgeColoring& coloring, PatternName pattern,
                          unsigned threads) {
  const ParityMatrix pm = parity_matrix(coloring);
  const HostGraph& host = pm.host;
  const std::size_t t = pm.bits.rows();

  // Columns have weight one, so recover the row owning each column once and
  // multiply sparsely: the syndrome of an indicator vector is nonzero iff
  // some row meets it an odd number of times.
  std::vector<std::uint32_t> row_of(host.edge_count());
  for (std::size_t c = 0; c < host.edge_count(); ++c) {
    std::uint32_t owner = 0;
    bool found = false;
    for (std::size_t r = 0; r < t; ++r)
      if (pm.bits.get(r, c)) {
        if (found) throw std::logic_error("parity column weight exceeds one");
        owner = static_cast<std::uint32_t>(r);
        found = true;
      }
    if (!found) throw std::logic_error("parity column weight is zero");
    row_of[c] = owner;
  }

  const CopyList copies = enumerate_copies(host, pattern);

  CodeReport report;
  report.colors = static_cast<ColorId>(t);
  report.copies_checked = copies.copies.size();

  const unsigned nthreads = resolve_threads(threads);
  std::vector<std::int64_t> first_failure(nthreads, -1);
  parallel_chunks(
      copies.copies.size(), nthreads,
      [&](unsigned chunk, std::uint64_t begin, std::uint64_t end) {
        std::array<std::uint32_t, 32> rows{};
        std::array<std::uint8_t, 32> parity{};
        for (std::uint64_t i = begin; i < end; ++i) {
          if (first_failure[chunk] >= 0) return;
          const auto& copy = copies.copies[i];
          unsigned used = 0;
          for (const Edge& e : copy) {
            const std::uint32_t r = row_of[host.edge_index(e)];
            bool seen = false;
            for (unsigned j = 0; j < used; ++j)
              if (rows[j] == r) {
                parity[j] ^= 1;
                seen = true;
                break;
              }
            if (!seen) {
              rows[used] = r;
              parity[used] = 1;
              ++used;
            }
          }
          bool nonzero = false;
          for (unsigned j = 0; j < used; ++j)
            if (parity[j]) {
              nonzero = true;
              break;
            }
          if (!nonzero) {
            first_failure[chunk] = static_cast<std::int64_t>(i);
            return;
          }
        }
      });

  std::int64_t failure = -1;
  for (std::int64_t f : first_failure)
    if (f >= 0 && (failure < 0 || f < failure)) failure = f;

  report.rank = rank_gf2(pm.bits);
  report.code_size_log2 =
      static_cast<std::int64_t>(host.edge_count()) -
      static_cast<std::int64_t>(report.rank);
  report.density_log2 = -static_cast<std::int64_t>(report.rank);
  if (failure >= 0) {
    report.certified = false;
    report.failing_copy = copies.copies[static_cast<std::size_t>(failure)];
  } else {
    report.certified = true;
  }
  return report;
}

namespace {

using Clock = std::chrono::steady_clock;

// Adjacency over at most 1024 vertices as fixed word arrays.
template <std::size_t Words>
struct MaskSet {
  std::array<std::uint64_t, Words> w{};

  void set(std::size_t i) { w[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const {
    return w[i / 64] >> (i % 64) & 1;
  }
  unsigned count() const {
    unsigned total = 0;
    for (std::uint64_t word : w) total += std::popcount(word);
    return total;
  }
  bool any() const {
    for (std::uint64_t word : w)
      if (word) return true;
    return false;
  }
  int lowest() const {
    for (std::size_t i = 0; i < Words; ++i)
      if (w[i]) return static_cast<int>(i * 64 + std::countr_zero(w[i]));
    return -1;
  }
  MaskSet& operator&=(const MaskSet& o) {
    for (std::size_t i = 0; i < Words; ++i) w[i] &= o.w[i];
    return *this;
  }
  MaskSet operator&(const MaskSet& o) const {
    MaskSet r = *this;
    r &= o;
    return r;
  }
  MaskSet operator~() const {
    MaskSet r;
    for (std::size_t i = 0; i < Words; ++i) r.w[i] = ~w[i];
    return r;
  }
  void clear(std::size_t i) { w[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
};

template <std::size_t Words>
struct MisSearch {
  const std::vector<MaskSet<Words>>& adj;
  Clock::time_point deadline;
  std::uint64_t nodes = 0;
  unsigned best = 0;
  bool timed_out = false;

  void run(MaskSet<Words> candidates, unsigned size) {
    if (timed_out) return;
    if ((++nodes & 0x3fff) == 0 && Clock::now() > deadline) {
      timed_out = true;
      return;
    }
    const unsigned remaining = candidates.count();
    if (size + remaining <= best) return;
    const int v = candidates.lowest();
    if (v < 0) {
      best = std::max(best, size);
      return;
    }
    // take v
    MaskSet<Words> with = candidates;
    with.clear(static_cast<std::size_t>(v));
    with &= ~adj[static_cast<std::size_t>(v)];
    run(with, size + 1);
    // skip v
    candidates.clear(static_cast<std::size_t>(v));
    run(candidates, size);
  }
};

template <std::size_t Words>
unsigned greedy_clique_cover(const std::vector<MaskSet<Words>>& adj,
                             std::size_t n) {
  std::vector<bool> covered(n, false);
  unsigned cliques = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (covered[s]) continue;
    ++cliques;
    covered[s] = true;
    MaskSet<Words> common = adj[s];
    for (std::size_t v = s + 1; v < n; ++v) {
      if (covered[v] || !common.test(v)) continue;
      covered[v] = true;
      common &= adj[v];
    }
  }
  return cliques;
}

template <std::size_t Words>
HCodeBounds run_mis(const std::vector<std::uint64_t>& connection,
                    std::size_t dim, std::chrono::milliseconds time_limit) {
  const std::size_t N = std::size_t{1} << dim;
  std::vector<MaskSet<Words>> adj(N);
  for (std::size_t v = 0; v < N; ++v)
    for (std::uint64_t c : connection) adj[v].set(v ^ c);

  // Translation invariance: F is a code iff F ^ u is, so some maximum code
  // contains the all-zero graph. Root the search there.
  MisSearch<Words> search{adj, Clock::now() + time_limit};
  search.best = 1;
  MaskSet<Words> candidates;
  for (std::size_t v = 1; v < N; ++v) candidates.set(v);
  candidates &= ~adj[0];
  search.run(candidates, 1);

  HCodeBounds bounds;
  bounds.lower = search.best;
  if (search.timed_out) {
    bounds.upper = greedy_clique_cover(adj, N);
    bounds.exact = bounds.lower == bounds.upper;
  } else {
    bounds.upper = search.best;
    bounds.exact = true;
  }
  return bounds;
}

}  // namespace

HCodeBounds max_h_code_exact(unsigned n, PatternName pattern,
                             std::chrono::milliseconds time_limit) {
  if (n < 3 || n > 5)
    throw std::invalid_argument("supported hosts are n = 3, 4, 5");
  const SmallGraph g = pattern_graph(pattern);
  if (g.k > n) throw std::invalid_argument("pattern larger than host");

  const HostGraph host = HostGraph::complete(n);
  const std::size_t dim = host.edge_count();

  // Labeled copies as edge-indicator words (dim <= 10).
  const CopyList copies = enumerate_copies(host, pattern);
  std::vector<std::uint64_t> connection;
  connection.reserve(copies.copies.size());
  for (const auto& copy : copies.copies) {
    std::uint64_t vec = 0;
    for (const Edge& e : copy) vec |= std::uint64_t{1} << host.edge_index(e);
    connection.push_back(vec);
  }

  if (dim <= 6) return run_mis<1>(connection, dim, time_limit);
  return run_mis<16>(connection, dim, time_limit);
}

}  // namespace oddcolor
