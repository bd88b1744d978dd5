#include "khovanov/sparse_matrix.hpp"

#include <algorithm>
#include <stdexcept>

#include "khovanov/errors.hpp"

namespace kh {

SparseMatrix::SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), col_start_(cols + 1, 0) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("SparseMatrix: negative dimension");
}

SparseMatrix SparseMatrix::from_triplets(int rows, int cols, std::vector<Triplet> triplets) {
  SparseMatrix m(rows, cols);
  std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
    return a.col != b.col ? a.col < b.col : a.row < b.row;
  });
  m.entries_.reserve(triplets.size());
  std::size_t i = 0;
  for (int c = 0; c < cols; ++c) {
    m.col_start_[c] = m.entries_.size();
    while (i < triplets.size() && triplets[i].col == c) {
      const int r = triplets[i].row;
      if (r < 0 || r >= rows) throw std::invalid_argument("SparseMatrix: row index out of range");
      std::int64_t v = 0;
      while (i < triplets.size() && triplets[i].col == c && triplets[i].row == r) {
        if (__builtin_add_overflow(v, triplets[i].value, &v)) {
          throw ConsistencyError("SparseMatrix: entry overflow");
        }
        ++i;
      }
      if (v != 0) m.entries_.push_back({r, v});
    }
  }
  if (i != triplets.size()) throw std::invalid_argument("SparseMatrix: column index out of range");
  m.col_start_[cols] = m.entries_.size();
  return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<std::int64_t>>& dense) {
  const int rows = static_cast<int>(dense.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(dense[0].size());
  std::vector<Triplet> t;
  for (int r = 0; r < rows; ++r) {
    if (static_cast<int>(dense[r].size()) != cols) throw std::invalid_argument("SparseMatrix: ragged rows");
    for (int c = 0; c < cols; ++c) {
      if (dense[r][c] != 0) t.push_back({r, c, dense[r][c]});
    }
  }
  return from_triplets(rows, cols, std::move(t));
}

SparseMatrix SparseMatrix::identity(int n) {
  std::vector<Triplet> t;
  for (int i = 0; i < n; ++i) t.push_back({i, i, 1});
  return from_triplets(n, n, std::move(t));
}

std::int64_t SparseMatrix::at(int r, int c) const {
  for (const Entry& e : column(c)) {
    if (e.row == r) return e.value;
  }
  return 0;
}

SparseMatrix SparseMatrix::transposed() const {
  std::vector<Triplet> t;
  t.reserve(entries_.size());
  for (int c = 0; c < cols_; ++c) {
    for (const Entry& e : column(c)) t.push_back({c, e.row, e.value});
  }
  return from_triplets(cols_, rows_, std::move(t));
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("SparseMatrix::multiply: shape mismatch");
  SparseMatrix out(rows_, rhs.cols_);
  std::vector<std::int64_t> acc(rows_, 0);
  std::vector<int> touched;
  std::vector<char> mark(rows_, 0);
  for (int c = 0; c < rhs.cols_; ++c) {
    out.col_start_[c] = out.entries_.size();
    touched.clear();
    for (const Entry& k : rhs.column(c)) {
      for (const Entry& e : column(k.row)) {
        std::int64_t prod;
        if (__builtin_mul_overflow(e.value, k.value, &prod) ||
            __builtin_add_overflow(acc[e.row], prod, &acc[e.row])) {
          throw ConsistencyError("SparseMatrix::multiply: overflow");
        }
        if (!mark[e.row]) {
          mark[e.row] = 1;
          touched.push_back(e.row);
        }
      }
    }
    std::sort(touched.begin(), touched.end());
    for (int r : touched) {
      if (acc[r] != 0) out.entries_.push_back({r, acc[r]});
      acc[r] = 0;
      mark[r] = 0;
    }
  }
  out.col_start_[rhs.cols_] = out.entries_.size();
  return out;
}

SparseMatrix SparseMatrix::reduced_mod(std::uint32_t p) const {
  SparseMatrix out(rows_, cols_);
  const auto mod = static_cast<std::int64_t>(p);
  for (int c = 0; c < cols_; ++c) {
    out.col_start_[c] = out.entries_.size();
    for (const Entry& e : column(c)) {
      std::int64_t v = e.value % mod;
      if (v < 0) v += mod;
      if (v != 0) out.entries_.push_back({e.row, v});
    }
  }
  out.col_start_[cols_] = out.entries_.size();
  return out;
}

std::vector<std::vector<std::int64_t>> SparseMatrix::to_dense() const {
  std::vector<std::vector<std::int64_t>> d(rows_, std::vector<std::int64_t>(cols_, 0));
  for (int c = 0; c < cols_; ++c) {
    for (const Entry& e : column(c)) d[e.row][c] = e.value;
  }
  return d;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.col_start_ != b.col_start_) return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    if (a.entries_[i].row != b.entries_[i].row || a.entries_[i].value != b.entries_[i].value) return false;
  }
  return true;
}

}  // namespace kh
