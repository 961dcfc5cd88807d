#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace oddcolor {

// Dense GF(2) matrix, rows packed into 64-bit words.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return wpr_; }

  void set(std::size_t r, std::size_t c, bool value);
  bool get(std::size_t r, std::size_t c) const;
  void xor_rows(std::size_t dst, std::size_t src);

  std::span<const std::uint64_t> row(std::size_t r) const {
    return {data_.data() + r * wpr_, wpr_};
  }
  std::span<std::uint64_t> row(std::size_t r) {
    return {data_.data() + r * wpr_, wpr_};
  }

 private:
  std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
  std::vector<std::uint64_t> data_;
};

// Row-reduction rank.
std::size_t rank_gf2(BitMatrix matrix);

// Basis of {x : Mx = 0}, each vector packed like a matrix row of length
// cols(). Basis size is cols() - rank.
std::vector<std::vector<std::uint64_t>> kernel_basis_gf2(BitMatrix matrix);

bool get_bit(std::span<const std::uint64_t> vec, std::size_t i);
void set_bit(std::span<std::uint64_t> vec, std::size_t i, bool value);

}  // namespace oddcolor
