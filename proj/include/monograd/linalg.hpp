#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace monograd {

/// Dense row-major integer matrix. Shape is meaningful even when empty
/// (a 0 x k or k x 0 matrix records the dimensions of a trivial map).
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  IntMatrix operator*(const IntMatrix& rhs) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Sparse column: (row index, value) pairs sorted by row, no zero values.
using SparseColumn = std::vector<std::pair<std::uint32_t, std::int64_t>>;

/// Rank over Q by fraction-free elimination. Runs in checked 64-bit
/// arithmetic and transparently restarts with GMP integers on overflow.
std::size_t rank(std::vector<SparseColumn> columns);
std::size_t rank(const IntMatrix& matrix);

}  // namespace monograd
