#include "oddcolor/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <stdexcept>

#include "oddcolor/parallel.hpp"
#include "oddcolor/rng.hpp"

namespace oddcolor {
namespace {

using Clock = std::chrono::steady_clock;

// Flat symmetric lookup; kernels never touch the map-based API.
struct DenseColors {
  std::uint32_t n = 0;
  std::vector<ColorId> flat;

  ColorId operator()(std::uint32_t a, std::uint32_t b) const {
    return flat[std::uint64_t{a} * n + b];
  }
};

DenseColors dense_complete(const EdgeColoring& coloring) {
  const HostGraph& host = coloring.host();
  if (host.kind() != GraphKind::Complete)
    throw std::invalid_argument("check requires a complete host");
  const std::uint32_t n = host.n();
  DenseColors d{n, std::vector<ColorId>(std::uint64_t{n} * n, kUncolored)};
  for (std::uint32_t u = 0; u + 1 < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v) {
      const ColorId c = coloring.raw_at(host.edge_index(Edge{u, v}));
      d.flat[std::uint64_t{u} * n + v] = c;
      d.flat[std::uint64_t{v} * n + u] = c;
    }
  return d;
}

// Bipartite lookup indexed by (x, y) side indices.
DenseColors dense_bipartite(const EdgeColoring& coloring) {
  const HostGraph& host = coloring.host();
  if (host.kind() != GraphKind::CompleteBipartite)
    throw std::invalid_argument("check requires a bipartite host");
  const std::uint32_t n = host.n();
  DenseColors d{n, std::vector<ColorId>(std::uint64_t{n} * n, kUncolored)};
  for (std::uint64_t i = 0; i < host.edge_count(); ++i)
    d.flat[i] = coloring.raw_at(i);
  return d;
}

void require_total(const EdgeColoring& coloring) {
  if (!coloring.is_total()) throw std::runtime_error("partial coloring");
}

template <unsigned MaxEdges>
bool all_counts_even(const std::array<ColorId, MaxEdges>& colors,
                     unsigned count) {
  std::array<bool, MaxEdges> done{};
  for (unsigned i = 0; i < count; ++i) {
    if (done[i]) continue;
    unsigned mult = 1;
    for (unsigned j = i + 1; j < count; ++j)
      if (colors[j] == colors[i]) {
        done[j] = true;
        ++mult;
      }
    if (mult & 1u) return false;
  }
  return true;
}

template <unsigned MaxEdges>
unsigned distinct_count(const std::array<ColorId, MaxEdges>& colors,
                        unsigned count) {
  unsigned distinct = 0;
  for (unsigned i = 0; i < count; ++i) {
    bool first = true;
    for (unsigned j = 0; j < i; ++j)
      if (colors[j] == colors[i]) {
        first = false;
        break;
      }
    if (first) ++distinct;
  }
  return distinct;
}

std::string signature_info(const std::vector<ColorId>& colors) {
  std::vector<std::pair<ColorId, int>> counts;
  for (ColorId c : colors) {
    auto it = std::find_if(counts.begin(), counts.end(),
                           [c](const auto& p) { return p.first == c; });
    if (it == counts.end())
      counts.push_back({c, 1});
    else
      ++it->second;
  }
  std::sort(counts.begin(), counts.end());
  std::string out = "signature";
  for (const auto& [c, mult] : counts)
    out += " " + std::to_string(c) + ":" + std::to_string(mult % 2);
  return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < r; ++i) result = result * (n - i) / (i + 1);
  return result;
}

// All r-subsets of {lo..n-1}, ascending, prefixed by the caller's vertices.
template <typename Fn>
void for_each_subset(std::uint32_t lo, std::uint32_t n, unsigned r,
                     std::uint32_t* scratch, unsigned depth, Fn&& fn) {
  if (r == 0) {
    fn();
    return;
  }
  for (std::uint32_t v = lo; v + r <= n; ++v) {
    scratch[depth] = v;
    for_each_subset(v + 1, n, r - 1, scratch, depth + 1, fn);
  }
}

void draw_distinct(SplitMix64& rng, std::uint32_t n, unsigned p,
                   std::uint32_t* out) {
  for (unsigned i = 0; i < p;) {
    const auto v = static_cast<std::uint32_t>(rng.below(n));
    bool dup = false;
    for (unsigned j = 0; j < i; ++j)
      if (out[j] == v) {
        dup = true;
        break;
      }
    if (!dup) out[i++] = v;
  }
  std::sort(out, out + p);
}

// Shared driver: exhaustive iteration over p-subsets of a complete host, or
// seeded sampling, split across threads with order-stable merging.
template <typename CheckFn>
ViolationReport run_subset_scan(const std::string& check, std::uint32_t n,
                                unsigned p, const ScanMode& mode,
                                unsigned threads, CheckFn&& checker) {
  ViolationReport report;
  report.check = check;
  report.mode = mode;
  const auto start = Clock::now();

  const unsigned nthreads = resolve_threads(threads);
  if (mode.kind == ScanMode::Kind::Exhaustive) {
    if (p > n) throw std::invalid_argument("pattern larger than host");
    const std::uint32_t firsts = n - p + 1;
    std::vector<std::vector<Violation>> partial(nthreads);
    parallel_chunks(firsts, nthreads,
                    [&](unsigned chunk, std::uint64_t begin, std::uint64_t end) {
                      std::array<std::uint32_t, 8> verts{};
                      for (std::uint64_t v1 = begin; v1 < end; ++v1) {
                        verts[0] = static_cast<std::uint32_t>(v1);
                        for_each_subset(
                            verts[0] + 1, n, p - 1, verts.data(), 1, [&] {
                              checker(verts.data(), partial[chunk]);
                            });
                      }
                    });
    for (auto& chunk : partial)
      for (auto& v : chunk) report.violations.push_back(std::move(v));
    report.checked = binomial(n, p);
  } else {
    std::vector<std::vector<Violation>> partial(nthreads);
    parallel_chunks(mode.samples, nthreads,
                    [&](unsigned chunk, std::uint64_t begin, std::uint64_t end) {
                      std::array<std::uint32_t, 8> verts{};
                      for (std::uint64_t s = begin; s < end; ++s) {
                        SplitMix64 rng = sample_stream(mode.seed, s);
                        draw_distinct(rng, n, p, verts.data());
                        checker(verts.data(), partial[chunk]);
                      }
                    });
    for (auto& chunk : partial)
      for (auto& v : chunk) report.violations.push_back(std::move(v));
    report.checked = mode.samples;
  }

  report.elapsed_seconds =
      std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

}  // namespace

ViolationReport scan_cliques_odd(const EdgeColoring& coloring, unsigned p,
                                 const ScanMode& mode, unsigned threads,
                                 bool allow_any_p) {
  require_total(coloring);
  if (!allow_any_p && p != 4 && p != 5)
    throw std::invalid_argument("p must be 4 or 5 (pass allow_any_p)");
  if (p < 2 || p > 8) throw std::invalid_argument("p out of range");
  const DenseColors d = dense_complete(coloring);
  const unsigned edges = p * (p - 1) / 2;

  return run_subset_scan(
      "k" + std::to_string(p) + "odd", d.n, p, mode, threads,
      [&](const std::uint32_t* verts, std::vector<Violation>& out) {
        std::array<ColorId, 28> cs{};
        unsigned idx = 0;
        for (unsigned i = 0; i < p; ++i)
          for (unsigned j = i + 1; j < p; ++j)
            cs[idx++] = d(verts[i], verts[j]);
        if (all_counts_even(cs, edges)) {
          Violation viol;
          viol.vertices.assign(verts, verts + p);
          viol.info = signature_info({cs.begin(), cs.begin() + edges});
          out.push_back(std::move(viol));
        }
      });
}

ViolationReport scan_min_colors(const EdgeColoring& coloring, unsigned p,
                                unsigned q, const ScanMode& mode,
                                unsigned threads) {
  require_total(coloring);
  if (p < 2 || p > 8) throw std::invalid_argument("p out of range");
  const DenseColors d = dense_complete(coloring);
  const unsigned edges = p * (p - 1) / 2;

  return run_subset_scan(
      "mincolors:" + std::to_string(p) + "," + std::to_string(q), d.n, p,
      mode, threads,
      [&](const std::uint32_t* verts, std::vector<Violation>& out) {
        std::array<ColorId, 28> cs{};
        unsigned idx = 0;
        for (unsigned i = 0; i < p; ++i)
          for (unsigned j = i + 1; j < p; ++j)
            cs[idx++] = d(verts[i], verts[j]);
        const unsigned distinct = distinct_count(cs, edges);
        if (distinct < q) {
          Violation viol;
          viol.vertices.assign(verts, verts + p);
          viol.info = "distinct " + std::to_string(distinct);
          out.push_back(std::move(viol));
        }
      });
}

ViolationReport scan_c4_odd(const EdgeColoring& coloring,
                            const ScanMode& mode, unsigned threads) {
  require_total(coloring);
  const DenseColors d = dense_bipartite(coloring);
  const std::uint32_t n = d.n;

  ViolationReport report;
  report.check = "c4odd";
  report.mode = mode;
  const auto start = Clock::now();

  auto check_quad = [&](std::uint32_t x1, std::uint32_t x2, std::uint32_t y1,
                        std::uint32_t y2, std::vector<Violation>& out) {
    const ColorId a = d(x1, y1), b = d(x1, y2), c = d(x2, y1), e = d(x2, y2);
    const bool even = (a == b && c == e) || (a == c && b == e) ||
                      (a == e && b == c);
    if (even) {
      Violation viol;
      viol.vertices = {x1, x2, n + y1, n + y2};
      viol.info = signature_info({a, b, c, e});
      out.push_back(std::move(viol));
    }
  };

  const unsigned nthreads = resolve_threads(threads);
  std::vector<std::vector<Violation>> partial(nthreads);
  if (mode.kind == ScanMode::Kind::Exhaustive) {
    if (n < 2) throw std::invalid_argument("host too small for C4");
    parallel_chunks(n - 1, nthreads,
                    [&](unsigned chunk, std::uint64_t begin, std::uint64_t end) {
                      for (std::uint64_t x1 = begin; x1 < end; ++x1)
                        for (std::uint32_t x2 = static_cast<std::uint32_t>(x1) + 1;
                             x2 < n; ++x2)
                          for (std::uint32_t y1 = 0; y1 + 1 < n; ++y1)
                            for (std::uint32_t y2 = y1 + 1; y2 < n; ++y2)
                              check_quad(static_cast<std::uint32_t>(x1), x2,
                                         y1, y2, partial[chunk]);
                    });
    report.checked = binomial(n, 2) * binomial(n, 2);
  } else {
    parallel_chunks(mode.samples, nthreads,
                    [&](unsigned chunk, std::uint64_t begin, std::uint64_t end) {
                      std::uint32_t xs[2], ys[2];
                      for (std::uint64_t s = begin; s < end; ++s) {
                        SplitMix64 rng = sample_stream(mode.seed, s);
                        draw_distinct(rng, n, 2, xs);
                        draw_distinct(rng, n, 2, ys);
                        check_quad(xs[0], xs[1], ys[0], ys[1], partial[chunk]);
                      }
                    });
    report.checked = mode.samples;
  }
  for (auto& chunk : partial)
    for (auto& v : chunk) report.violations.push_back(std::move(v));

  report.elapsed_seconds =
      std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

ViolationReport match_pattern(const EdgeColoring& coloring,
                              const PatternSpec& spec, const ScanMode& mode,
                              unsigned threads) {
  require_total(coloring);
  spec.validate();
  const DenseColors d = dense_complete(coloring);
  if (spec.k > d.n) throw std::invalid_argument("pattern larger than host");

  const auto autos = pattern_automorphisms(spec);
  const unsigned k = spec.k;

  // For a matching assignment, report it only when it is the lexicographic
  // minimum of its automorphism orbit.
  auto check_support = [&, autos](const std::uint32_t* verts,
                                  std::vector<Violation>& out) {
    std::array<std::uint8_t, 8> pos{};
    for (unsigned i = 0; i < k; ++i) pos[i] = static_cast<std::uint8_t>(i);
    std::array<std::uint32_t, 8> image{};
    do {
      for (unsigned i = 0; i < k; ++i) image[i] = verts[pos[i]];
      bool match = true;
      std::array<ColorId, 10> group_colors{};
      for (std::size_t g = 0; match && g < spec.groups.size(); ++g) {
        ColorId shared = kUncolored;
        for (auto [a, b] : spec.groups[g]) {
          const ColorId c = d(image[a], image[b]);
          if (shared == kUncolored)
            shared = c;
          else if (c != shared) {
            match = false;
            break;
          }
        }
        group_colors[g] = shared;
      }
      if (match && spec.distinct_groups) {
        for (std::size_t g1 = 0; match && g1 < spec.groups.size(); ++g1)
          for (std::size_t g2 = g1 + 1; g2 < spec.groups.size(); ++g2)
            if (group_colors[g1] == group_colors[g2]) {
              match = false;
              break;
            }
      }
      if (match) {
        bool canonical = true;
        std::array<std::uint32_t, 8> other{};
        for (const auto& perm : autos) {
          for (unsigned i = 0; i < k; ++i) other[i] = image[perm[i]];
          if (std::lexicographical_compare(other.begin(), other.begin() + k,
                                           image.begin(), image.begin() + k)) {
            canonical = false;
            break;
          }
        }
        if (canonical) {
          Violation viol;
          viol.vertices.assign(image.begin(), image.begin() + k);
          std::string info = "pattern " + spec.name + " colors";
          for (std::size_t g = 0; g < spec.groups.size(); ++g)
            info += " " + std::to_string(group_colors[g]);
          viol.info = std::move(info);
          out.push_back(std::move(viol));
        }
      }
    } while (std::next_permutation(pos.begin(), pos.begin() + k));
  };

  return run_subset_scan("pattern:" + spec.name, d.n, k, mode, threads,
                         check_support);
}

ViolationReport scan_rainbow_c5_in_22222(const EdgeColoring& coloring,
                                         const ScanMode& mode,
                                         unsigned threads) {
  require_total(coloring);
  const DenseColors d = dense_complete(coloring);

  // The 12 pentagon orders of a 5-set, as cyclic vertex sequences starting
  // at position 0.
  static constexpr std::array<std::array<std::uint8_t, 5>, 12> kCycles = {{
      {0, 1, 2, 3, 4}, {0, 1, 2, 4, 3}, {0, 1, 3, 2, 4}, {0, 1, 3, 4, 2},
      {0, 1, 4, 2, 3}, {0, 1, 4, 3, 2}, {0, 2, 1, 3, 4}, {0, 2, 1, 4, 3},
      {0, 2, 3, 1, 4}, {0, 2, 4, 1, 3}, {0, 3, 1, 2, 4}, {0, 3, 2, 1, 4},
  }};

  return run_subset_scan(
      "rainbow-c5-22222", d.n, 5, mode, threads,
      [&](const std::uint32_t* verts, std::vector<Violation>& out) {
        std::array<ColorId, 10> cs{};
        unsigned idx = 0;
        for (unsigned i = 0; i < 5; ++i)
          for (unsigned j = i + 1; j < 5; ++j)
            cs[idx++] = d(verts[i], verts[j]);

        // exactly five classes of two edges each
        if (distinct_count(cs, 10) != 5 || !all_counts_even(cs, 10)) return;

        // at least one class is a matching (its two edges share no vertex)
        static constexpr std::array<std::pair<std::uint8_t, std::uint8_t>, 10>
            kPos = {{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2},
                     {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};
        bool has_matching = false;
        for (unsigned i = 0; i < 10 && !has_matching; ++i)
          for (unsigned j = i + 1; j < 10; ++j)
            if (cs[i] == cs[j] && kPos[i].first != kPos[j].first &&
                kPos[i].first != kPos[j].second &&
                kPos[i].second != kPos[j].first &&
                kPos[i].second != kPos[j].second) {
              has_matching = true;
              break;
            }
        if (!has_matching) return;

        for (const auto& cyc : kCycles) {
          std::array<ColorId, 5> ring{};
          for (unsigned i = 0; i < 5; ++i)
            ring[i] = d(verts[cyc[i]], verts[cyc[(i + 1) % 5]]);
          if (distinct_count<5>({ring[0], ring[1], ring[2], ring[3], ring[4]},
                                5) == 5) {
            Violation viol;
            viol.vertices.assign(verts, verts + 5);
            viol.info = "rainbow 5-cycle inside 2-2-2-2-2 coloring";
            out.push_back(std::move(viol));
            return;
          }
        }
      });
}

std::vector<std::vector<std::uint32_t>> cliques_with_exact_colors(
    const EdgeColoring& coloring, unsigned p, unsigned q, unsigned threads) {
  require_total(coloring);
  const DenseColors d = dense_complete(coloring);
  const unsigned edges = p * (p - 1) / 2;

  ViolationReport report = run_subset_scan(
      "exactcolors", d.n, p, ScanMode::exhaustive(), threads,
      [&](const std::uint32_t* verts, std::vector<Violation>& out) {
        std::array<ColorId, 28> cs{};
        unsigned idx = 0;
        for (unsigned i = 0; i < p; ++i)
          for (unsigned j = i + 1; j < p; ++j)
            cs[idx++] = d(verts[i], verts[j]);
        if (distinct_count(cs, edges) == q) {
          Violation viol;
          viol.vertices.assign(verts, verts + p);
          out.push_back(std::move(viol));
        }
      });

  std::vector<std::vector<std::uint32_t>> supports;
  supports.reserve(report.violations.size());
  for (auto& v : report.violations) supports.push_back(std::move(v.vertices));
  return supports;
}

}  // namespace oddcolor
