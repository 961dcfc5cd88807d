#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace oddcolor {

enum class GraphKind { Complete, CompleteBipartite };

// Canonical edge: u < v as global vertex ids. For bipartite hosts the X side
// is 0..n-1 and the Y side is n..2n-1, so "X endpoint first" coincides with
// "smaller endpoint first".
struct Edge {
  std::uint32_t u = 0;
  std::uint32_t v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// K_n or K_{n,n}. n is the vertex count for complete hosts and the per-side
// count for bipartite ones.
class HostGraph {
 public:
  static HostGraph complete(std::uint32_t n);
  static HostGraph bipartite(std::uint32_t n);

  GraphKind kind() const { return kind_; }
  std::uint32_t n() const { return n_; }
  std::uint32_t vertex_count() const {
    return kind_ == GraphKind::Complete ? n_ : 2 * n_;
  }
  std::uint64_t edge_count() const;

  bool is_vertex(std::uint32_t v) const { return v < vertex_count(); }

  // Bipartite helpers; global id <-> per-side index.
  std::uint32_t x_vertex(std::uint32_t i) const { return i; }
  std::uint32_t y_vertex(std::uint32_t j) const { return n_ + j; }
  bool on_x_side(std::uint32_t v) const { return v < n_; }

  // Canonicalizes and validates an endpoint pair. Throws std::invalid_argument
  // on loops, out-of-range vertices, or same-side pairs in bipartite hosts.
  Edge edge(std::uint32_t a, std::uint32_t b) const;

  // Position of a canonical edge in the sorted edge order.
  std::uint64_t edge_index(const Edge& e) const;
  Edge edge_at(std::uint64_t index) const;

  std::string describe() const;

  friend bool operator==(const HostGraph&, const HostGraph&) = default;

 private:
  HostGraph(GraphKind kind, std::uint32_t n) : kind_(kind), n_(n) {}

  GraphKind kind_;
  std::uint32_t n_;
};

}  // namespace oddcolor
