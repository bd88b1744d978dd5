#include <algorithm>
#include <set>
#include <utility>

#include "khovanov/linalg.hpp"

namespace kh {

namespace {

using Row = std::vector<std::pair<int, Integer>>;

const Integer* find_in(const Row& row, int c) {
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, int col) { return e.first < col; });
  return it != row.end() && it->first == c ? &it->second : nullptr;
}

// dst -= f * src
void axpy(Row& dst, const Row& src, const Integer& f) {
  Row out;
  out.reserve(dst.size() + src.size());
  std::size_t i = 0, k = 0;
  while (i < dst.size() || k < src.size()) {
    if (k == src.size() || (i < dst.size() && dst[i].first < src[k].first)) {
      out.push_back(std::move(dst[i++]));
    } else if (i == dst.size() || src[k].first < dst[i].first) {
      out.emplace_back(src[k].first, -f * src[k].second);
      ++k;
    } else {
      Integer v = dst[i].second - f * src[k].second;
      if (sgn(v) != 0) out.emplace_back(dst[i].first, std::move(v));
      ++i;
      ++k;
    }
  }
  dst.swap(out);
}

// Diagonalizes in place; returns the nonzero diagonal.
std::vector<Integer> dense_diagonal(std::vector<std::vector<Integer>>& a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  std::vector<Integer> diag;
  for (int t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      int pr = -1, pc = -1;
      for (int r = t; r < rows; ++r) {
        for (int c = t; c < cols; ++c) {
          if (sgn(a[r][c]) == 0) continue;
          if (pr == -1 || abs(a[r][c]) < abs(a[pr][pc])) {
            pr = r;
            pc = c;
          }
        }
      }
      if (pr == -1) return diag;
      std::swap(a[t], a[pr]);
      for (int r = 0; r < rows; ++r) std::swap(a[r][t], a[r][pc]);
      bool clean = true;
      const Integer p = a[t][t];
      for (int r = t + 1; r < rows; ++r) {
        if (sgn(a[r][t]) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[r][t].get_mpz_t(), p.get_mpz_t());
        for (int c = t; c < cols; ++c) a[r][c] -= q * a[t][c];
        if (sgn(a[r][t]) != 0) clean = false;
      }
      for (int c = t + 1; c < cols; ++c) {
        if (sgn(a[t][c]) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[t][c].get_mpz_t(), p.get_mpz_t());
        for (int r = t; r < rows; ++r) a[r][c] -= q * a[r][t];
        if (sgn(a[t][c]) != 0) clean = false;
      }
      if (clean) break;
    }
    diag.push_back(abs(a[t][t]));
  }
  return diag;
}

}  // namespace

std::vector<Integer> smith_normal_form(const SparseMatrix& m) {
  std::vector<Row> rows(m.rows());
  for (int c = 0; c < m.cols(); ++c) {
    for (const auto& e : m.column(c)) rows[e.row].emplace_back(c, Integer(static_cast<long>(e.value)));
  }
  std::vector<std::vector<int>> col_rows(m.cols());
  for (int r = 0; r < m.rows(); ++r) {
    for (const auto& [c, v] : rows[r]) col_rows[c].push_back(r);
  }

  std::vector<Integer> diag;
  std::vector<char> row_alive(m.rows(), 1), col_alive(m.cols(), 1);
  std::vector<int> stamp(m.rows(), -1);
  int epoch = 0;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int c = 0; c < m.cols(); ++c) {
      if (!col_alive[c]) continue;
      ++epoch;
      std::vector<int> hits;
      int pivot = -1;
      for (int r : col_rows[c]) {
        if (!row_alive[r] || stamp[r] == epoch) continue;
        const Integer* v = find_in(rows[r], c);
        if (!v) continue;
        stamp[r] = epoch;
        hits.push_back(r);
        if (abs(*v) == 1 && (pivot == -1 || rows[r].size() < rows[pivot].size())) pivot = r;
      }
      col_rows[c] = hits;
      if (hits.empty()) {
        col_alive[c] = 0;
        continue;
      }
      if (pivot == -1) continue;
      const Integer sign = *find_in(rows[pivot], c);
      for (int r : hits) {
        if (r == pivot) continue;
        const Integer f = *find_in(rows[r], c) * sign;
        axpy(rows[r], rows[pivot], f);
        for (const auto& [cc, v] : rows[pivot]) {
          if (cc != c) col_rows[cc].push_back(r);
        }
      }
      diag.emplace_back(1);
      row_alive[pivot] = 0;
      col_alive[c] = 0;
      Row().swap(rows[pivot]);
      progress = true;
    }
  }

  std::vector<int> live_rows, live_cols;
  std::vector<int> col_index(m.cols(), -1);
  for (int r = 0; r < m.rows(); ++r) {
    if (row_alive[r] && !rows[r].empty()) live_rows.push_back(r);
  }
  for (int r : live_rows) {
    for (const auto& [c, v] : rows[r]) {
      if (col_index[c] == -1) {
        col_index[c] = static_cast<int>(live_cols.size());
        live_cols.push_back(c);
      }
    }
  }
  std::vector<std::vector<Integer>> dense(live_rows.size(), std::vector<Integer>(live_cols.size()));
  for (std::size_t k = 0; k < live_rows.size(); ++k) {
    for (const auto& [c, v] : rows[live_rows[k]]) dense[k][col_index[c]] = v;
  }
  for (auto& d : dense_diagonal(dense)) diag.push_back(std::move(d));

  // gcd/lcm pass turns any diagonal form into the divisibility chain
  for (std::size_t i = 0; i < diag.size(); ++i) {
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      Integer g = gcd(diag[i], diag[j]);
      if (g == diag[i]) continue;
      Integer l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  }
  std::sort(diag.begin(), diag.end());
  return diag;
}

std::vector<Integer> prime_power_decomposition(const Integer& n) {
  std::vector<Integer> out;
  Integer rest = abs(n);
  for (Integer p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    Integer q = 1;
    while (rest % p == 0) {
      rest /= p;
      q *= p;
    }
    out.push_back(q);
  }
  if (rest > 1) out.push_back(rest);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kh
