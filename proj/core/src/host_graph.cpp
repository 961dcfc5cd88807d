#include "oddcolor/host_graph.hpp"

namespace oddcolor {

HostGraph HostGraph::complete(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("host graph needs n >= 1");
  return HostGraph(GraphKind::Complete, n);
}

HostGraph HostGraph::bipartite(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("host graph needs n >= 1");
  return HostGraph(GraphKind::CompleteBipartite, n);
}

std::uint64_t HostGraph::edge_count() const {
  const std::uint64_t n = n_;
  return kind_ == GraphKind::Complete ? n * (n - 1) / 2 : n * n;
}

Edge HostGraph::edge(std::uint32_t a, std::uint32_t b) const {
  if (a == b) throw std::invalid_argument("loop edge");
  if (!is_vertex(a) || !is_vertex(b))
    throw std::invalid_argument("vertex out of range");
  if (a > b) std::swap(a, b);
  if (kind_ == GraphKind::CompleteBipartite && on_x_side(a) == on_x_side(b))
    throw std::invalid_argument("non-bipartite edge");
  return Edge{a, b};
}

std::uint64_t HostGraph::edge_index(const Edge& e) const {
  if (kind_ == GraphKind::Complete) {
    const std::uint64_t u = e.u, v = e.v, n = n_;
    return u * (2 * n - u - 1) / 2 + (v - u - 1);
  }
  return std::uint64_t{e.u} * n_ + (e.v - n_);
}

Edge HostGraph::edge_at(std::uint64_t index) const {
  if (index >= edge_count()) throw std::out_of_range("edge index out of range");
  if (kind_ == GraphKind::Complete) {
    // Walk rows; n is small enough that the linear scan never matters.
    std::uint32_t u = 0;
    std::uint64_t row = n_ - 1;
    while (index >= row) {
      index -= row;
      ++u;
      --row;
    }
    return Edge{u, static_cast<std::uint32_t>(u + 1 + index)};
  }
  return Edge{static_cast<std::uint32_t>(index / n_),
              static_cast<std::uint32_t>(n_ + index % n_)};
}

std::string HostGraph::describe() const {
  return (kind_ == GraphKind::Complete ? "complete n=" : "bipartite n=") +
         std::to_string(n_);
}

}  // namespace oddcolor
