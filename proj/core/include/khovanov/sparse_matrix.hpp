#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace kh {

/// Integer matrix in compressed-column form. No explicit zeros are stored.
class SparseMatrix {
 public:
  struct Entry {
    int row;
    std::int64_t value;
  };
  struct Triplet {
    int row;
    int col;
    std::int64_t value;
  };

  SparseMatrix() = default;
  SparseMatrix(int rows, int cols);

  /// Duplicate (row, col) pairs are summed; resulting zeros are dropped.
  static SparseMatrix from_triplets(int rows, int cols, std::vector<Triplet> triplets);
  static SparseMatrix from_dense(const std::vector<std::vector<std::int64_t>>& dense);
  static SparseMatrix identity(int n);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  std::size_t nonzeros() const noexcept { return entries_.size(); }
  bool is_zero() const noexcept { return entries_.empty(); }

  std::span<const Entry> column(int c) const {
    return {entries_.data() + col_start_[c], entries_.data() + col_start_[c + 1]};
  }
  std::int64_t at(int r, int c) const;

  SparseMatrix transposed() const;
  /// this * rhs; throws std::invalid_argument on shape mismatch.
  SparseMatrix multiply(const SparseMatrix& rhs) const;
  /// Entries reduced into [0, p); zero residues are dropped.
  SparseMatrix reduced_mod(std::uint32_t p) const;
  std::vector<std::vector<std::int64_t>> to_dense() const;

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::size_t> col_start_{0};
  std::vector<Entry> entries_;
};

}  // namespace kh
