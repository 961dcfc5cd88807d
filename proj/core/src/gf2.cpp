#include "oddcolor/gf2.hpp"

namespace oddcolor {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_((cols + 63) / 64),
      data_(rows * ((cols + 63) / 64), 0) {}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
  std::uint64_t& w = data_[r * wpr_ + c / 64];
  const std::uint64_t bit = std::uint64_t{1} << (c % 64);
  if (value)
    w |= bit;
  else
    w &= ~bit;
}

bool BitMatrix::get(std::size_t r, std::size_t c) const {
  return data_[r * wpr_ + c / 64] >> (c % 64) & 1;
}

void BitMatrix::xor_rows(std::size_t dst, std::size_t src) {
  for (std::size_t w = 0; w < wpr_; ++w)
    data_[dst * wpr_ + w] ^= data_[src * wpr_ + w];
}

bool get_bit(std::span<const std::uint64_t> vec, std::size_t i) {
  return vec[i / 64] >> (i % 64) & 1;
}

void set_bit(std::span<std::uint64_t> vec, std::size_t i, bool value) {
  const std::uint64_t bit = std::uint64_t{1} << (i % 64);
  if (value)
    vec[i / 64] |= bit;
  else
    vec[i / 64] &= ~bit;
}

std::size_t rank_gf2(BitMatrix m) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && !m.get(pivot, col)) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank)
      for (std::size_t w = 0; w < m.words_per_row(); ++w)
        std::swap(m.row(rank)[w], m.row(pivot)[w]);
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (r != rank && m.get(r, col)) m.xor_rows(r, rank);
    ++rank;
  }
  return rank;
}

std::vector<std::vector<std::uint64_t>> kernel_basis_gf2(BitMatrix m) {
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && !m.get(pivot, col)) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank)
      for (std::size_t w = 0; w < m.words_per_row(); ++w)
        std::swap(m.row(rank)[w], m.row(pivot)[w]);
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (r != rank && m.get(r, col)) m.xor_rows(r, rank);
    pivot_col.push_back(col);
    ++rank;
  }

  std::vector<bool> is_pivot(cols, false);
  for (std::size_t col : pivot_col) is_pivot[col] = true;

  // One basis vector per free column: the free coordinate plus the pivot
  // rows' entries in that column.
  std::vector<std::vector<std::uint64_t>> basis;
  const std::size_t words = (cols + 63) / 64;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint64_t> vec(words, 0);
    set_bit(vec, free, true);
    for (std::size_t r = 0; r < rank; ++r)
      if (m.get(r, free)) set_bit(vec, pivot_col[r], true);
    basis.push_back(std::move(vec));
  }
  return basis;
}

}  // namespace oddcolor
