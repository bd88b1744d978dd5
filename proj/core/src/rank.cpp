#include "khovanov/linalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "khovanov/errors.hpp"

namespace kh {

namespace {

template <class Field>
class SparseEliminator {
 public:
  using V = typename Field::value_type;
  using Row = std::vector<std::pair<int, V>>;

  SparseEliminator(const SparseMatrix& m, const Field& f) : f_(f), rows_(m.rows()), col_rows_(m.cols()),
                                                            col_count_(m.cols(), 0), active_(m.rows(), 1),
                                                            stamp_(m.rows(), -1) {
    for (int c = 0; c < m.cols(); ++c) {
      for (const auto& e : m.column(c)) {
        V v = f_.from_int(e.value);
        if (f_.is_zero(v)) continue;
        rows_[e.row].emplace_back(c, std::move(v));
      }
    }
    for (int r = 0; r < m.rows(); ++r) {
      for (const auto& [c, v] : rows_[r]) {
        col_rows_[c].push_back(r);
        ++col_count_[c];
      }
    }
    for (int c = 0; c < m.cols(); ++c) {
      if (col_count_[c] > 0) queue_.insert({col_count_[c], c});
    }
  }

  int run() {
    int rank = 0;
    std::vector<int> hits;
    while (!queue_.empty()) {
      const int c = queue_.begin()->second;
      queue_.erase(queue_.begin());
      hits.clear();
      int pivot = -1;
      for (int r : col_rows_[c]) {
        if (!active_[r] || stamp_[r] == c || !contains(r, c)) continue;
        stamp_[r] = c;
        hits.push_back(r);
        if (pivot == -1 || rows_[r].size() < rows_[pivot].size() ||
            (rows_[r].size() == rows_[pivot].size() && r < pivot)) {
          pivot = r;
        }
      }
      col_rows_[c].clear();
      col_count_[c] = 0;
      if (pivot == -1) continue;
      ++rank;
      const V pivot_inv = f_.inv(value(pivot, c));
      for (int r : hits) {
        if (r == pivot) continue;
        const V factor = f_.mul(value(r, c), pivot_inv);
        eliminate(r, pivot, factor, c);
      }
      active_[pivot] = 0;
      for (const auto& [cc, v] : rows_[pivot]) {
        if (cc != c) change_count(cc, -1);
      }
      Row().swap(rows_[pivot]);
    }
    return rank;
  }

 private:
  bool contains(int r, int c) const {
    const Row& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, int col) { return e.first < col; });
    return it != row.end() && it->first == c;
  }
  const V& value(int r, int c) const {
    const Row& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, int col) { return e.first < col; });
    return it->second;
  }
  void change_count(int c, int delta) {
    if (col_count_[c] > 0) queue_.erase({col_count_[c], c});
    col_count_[c] += delta;
    if (col_count_[c] > 0) queue_.insert({col_count_[c], c});
  }

  // rows_[r] -= factor * rows_[p]; the pivot column `pc` vanishes from r.
  void eliminate(int r, int p, const V& factor, int pc) {
    const Row& src = rows_[p];
    Row& dst = rows_[r];
    Row out;
    out.reserve(dst.size() + src.size());
    std::size_t i = 0, k = 0;
    while (i < dst.size() || k < src.size()) {
      if (k == src.size() || (i < dst.size() && dst[i].first < src[k].first)) {
        out.push_back(std::move(dst[i++]));
      } else if (i == dst.size() || src[k].first < dst[i].first) {
        const int c = src[k].first;
        out.emplace_back(c, f_.neg(f_.mul(factor, src[k].second)));
        col_rows_[c].push_back(r);
        change_count(c, +1);
        ++k;
      } else {
        const int c = dst[i].first;
        V v = c == pc ? f_.from_int(0) : f_.sub(dst[i].second, f_.mul(factor, src[k].second));
        if (f_.is_zero(v)) {
          if (c != pc) change_count(c, -1);
        } else {
          out.emplace_back(c, std::move(v));
        }
        ++i;
        ++k;
      }
    }
    dst.swap(out);
  }

  Field f_;
  std::vector<Row> rows_;
  std::vector<std::vector<int>> col_rows_;
  std::vector<int> col_count_;
  std::vector<char> active_;
  std::vector<int> stamp_;
  std::set<std::pair<int, int>> queue_;
};

}  // namespace

int rank_over_field(const SparseMatrix& m, const CoefficientRing& field) {
  if (!field.is_field()) throw std::invalid_argument("rank_over_field: ring " + field.name() + " is not a field");
  if (m.is_zero()) return 0;
  switch (field.kind()) {
    case CoefficientRing::Kind::Rationals:
      return SparseEliminator<RationalField>(m, RationalField{}).run();
    case CoefficientRing::Kind::PrimeField:
      return SparseEliminator<PrimeField>(m, PrimeField(field.characteristic())).run();
    case CoefficientRing::Kind::Integers:
      break;
  }
  throw std::invalid_argument("rank_over_field: ring " + field.name() + " is not a field");
}

int rank_rational(std::vector<std::vector<Rational>> m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int p = -1;
    for (int r = rank; r < rows; ++r) {
      if (sgn(m[r][c]) != 0) {
        p = r;
        break;
      }
    }
    if (p == -1) continue;
    std::swap(m[p], m[rank]);
    for (int r = rank + 1; r < rows; ++r) {
      if (sgn(m[r][c]) == 0) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (int k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace kh
