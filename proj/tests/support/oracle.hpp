#pragma once

// Dense brute-force reference implementations, written independently of the
// library's cube builder and sparse elimination.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "khovanov/diagram.hpp"

namespace oracle {

using Bideg = std::pair<int, int>;
using Table = std::map<Bideg, long>;

// Circles of a state as sorted edge sets.
inline std::vector<std::vector<int>> circles(const kh::Diagram& d, std::uint64_t state) {
  const int e = d.edge_count();
  if (e == 0) return {{}};
  std::vector<int> label(e);
  for (int k = 0; k < e; ++k) label[k] = k;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int k = 0; k < d.crossing_count(); ++k) {
      const auto& x = d.crossing(k);
      const bool one = (state >> k) & 1;
      const std::pair<int, int> joins[2] = {one ? std::pair{x[0], x[3]} : std::pair{x[0], x[1]},
                                            one ? std::pair{x[1], x[2]} : std::pair{x[2], x[3]}};
      for (auto [a, b] : joins) {
        const int m = std::min(label[a], label[b]);
        if (label[a] != m || label[b] != m) {
          label[a] = label[b] = m;
          changed = true;
        }
      }
    }
  }
  std::map<int, std::vector<int>> groups;
  for (int k = 0; k < e; ++k) groups[label[k]].push_back(k);
  std::vector<std::vector<int>> out;
  for (auto& [l, g] : groups) out.push_back(g);
  std::sort(out.begin(), out.end());
  return out;
}

struct Gen {
  std::uint64_t state;
  std::vector<std::vector<int>> circles;
  std::vector<int> x;  // 1 where the circle carries X
  int i, j;
};

template <class Num>
int dense_rank(std::vector<std::vector<Num>> m, const std::function<bool(const Num&)>& zero,
               const std::function<Num(const Num&, const Num&)>& div) {
  int rank = 0;
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int p = rank;
    while (p < rows && zero(m[p][c])) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || zero(m[r][c])) continue;
      const Num f = div(m[r][c], m[rank][c]);
      for (int k = 0; k < cols; ++k) m[r][k] = m[r][k] - f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Cohomology ranks over ℚ (p = 0) or ℤ/p, by dense elimination over the whole cube.
// With `reduced`, only generators whose circle through edge 0 carries X, and j lowered by one.
inline Table homology(const kh::Diagram& d, unsigned p = 0, bool reduced = false) {
  const int n = d.crossing_count();
  int npos = 0, nneg = 0;
  for (int k = 0; k < n; ++k) (d.sign(k) > 0 ? npos : nneg)++;
  std::vector<Gen> gens;
  std::map<std::pair<std::uint64_t, std::vector<int>>, int> where;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    const auto cs = circles(d, s);
    const int r = __builtin_popcountll(s);
    const int c = static_cast<int>(cs.size());
    for (std::uint32_t l = 0; l < (1u << c); ++l) {
      std::vector<int> x(c);
      int nx = 0;
      for (int k = 0; k < c; ++k) nx += x[k] = (l >> k) & 1;
      int marked = 0;
      for (int k = 0; k < c; ++k) {
        if (!cs[k].empty() && cs[k][0] == 0) marked = k;
      }
      if (reduced && !x[marked]) continue;
      const int q = (c - 2 * nx) + r + npos - 2 * nneg;
      where[{s, x}] = static_cast<int>(gens.size());
      gens.push_back({s, cs, x, r - nneg, -q - (reduced ? 1 : 0)});
    }
  }
  // d as a map (target, source) → coefficient
  std::map<std::pair<int, int>, long> dmat;
  for (int g = 0; g < static_cast<int>(gens.size()); ++g) {
    const Gen& src = gens[g];
    for (int k = 0; k < n; ++k) {
      if ((src.state >> k) & 1) continue;
      const std::uint64_t t = src.state | (std::uint64_t{1} << k);
      long sign = 1;
      for (int b = 0; b < k; ++b) {
        if ((src.state >> b) & 1) sign = -sign;
      }
      const auto tc = circles(d, t);
      std::vector<int> gone, born;
      for (int a = 0; a < static_cast<int>(src.circles.size()); ++a) {
        if (std::find(tc.begin(), tc.end(), src.circles[a]) == tc.end()) gone.push_back(a);
      }
      for (int b = 0; b < static_cast<int>(tc.size()); ++b) {
        if (std::find(src.circles.begin(), src.circles.end(), tc[b]) == src.circles.end()) born.push_back(b);
      }
      std::vector<int> base(tc.size(), 0);
      for (int a = 0; a < static_cast<int>(src.circles.size()); ++a) {
        const auto it = std::find(tc.begin(), tc.end(), src.circles[a]);
        if (it != tc.end()) base[it - tc.begin()] = src.x[a];
      }
      std::vector<std::vector<int>> images;
      if (gone.size() == 2 && born.size() == 1) {
        const int xa = src.x[gone[0]], xb = src.x[gone[1]];
        if (xa && xb) continue;
        base[born[0]] = xa | xb;
        images.push_back(base);
      } else if (gone.size() == 1 && born.size() == 2) {
        if (src.x[gone[0]]) {
          base[born[0]] = base[born[1]] = 1;
          images.push_back(base);
        } else {
          base[born[0]] = 1;
          base[born[1]] = 0;
          images.push_back(base);
          base[born[0]] = 0;
          base[born[1]] = 1;
          images.push_back(base);
        }
      } else {
        throw std::logic_error("oracle: edge is neither merge nor split");
      }
      for (const auto& img : images) {
        const auto it = where.find({t, img});
        if (it == where.end()) throw std::logic_error("oracle: image outside the complex");
        dmat[{it->second, g}] += sign;
      }
    }
  }
  // group by bidegree and take ranks of each block
  std::map<Bideg, std::vector<int>> block;
  for (int g = 0; g < static_cast<int>(gens.size()); ++g) block[{gens[g].i, gens[g].j}].push_back(g);
  std::map<Bideg, int> out_rank;
  for (const auto& [key, cols] : block) {
    const auto tgt = block.find({key.first + 1, key.second});
    if (tgt == block.end()) {
      out_rank[key] = 0;
      continue;
    }
    const auto& rows = tgt->second;
    if (p == 0) {
      std::vector<std::vector<mpq_class>> m(rows.size(), std::vector<mpq_class>(cols.size()));
      for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
          auto it = dmat.find({rows[r], cols[c]});
          if (it != dmat.end()) m[r][c] = it->second;
        }
      }
      out_rank[key] = dense_rank<mpq_class>(
          m, [](const mpq_class& v) { return sgn(v) == 0; },
          [](const mpq_class& a, const mpq_class& b) { return mpq_class(a / b); });
    } else {
      std::vector<std::vector<long>> m(rows.size(), std::vector<long>(cols.size()));
      for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
          auto it = dmat.find({rows[r], cols[c]});
          if (it != dmat.end()) m[r][c] = ((it->second % static_cast<long>(p)) + p) % p;
        }
      }
      // elimination mod p on the residues
      int rank = 0;
      const int R = static_cast<int>(rows.size()), C = static_cast<int>(cols.size());
      const long P = p;
      const auto inv = [P](long a) {
        long r = 1, b = a, e = P - 2;
        while (e) {
          if (e & 1) r = r * b % P;
          b = b * b % P;
          e >>= 1;
        }
        return r;
      };
      for (int c = 0; c < C && rank < R; ++c) {
        int piv = rank;
        while (piv < R && m[piv][c] == 0) ++piv;
        if (piv == R) continue;
        std::swap(m[piv], m[rank]);
        const long iv = inv(m[rank][c]);
        for (int r = 0; r < R; ++r) {
          if (r == rank || m[r][c] == 0) continue;
          const long f = m[r][c] * iv % P;
          for (int k = 0; k < C; ++k) m[r][k] = ((m[r][k] - f * m[rank][k]) % P + P) % P;
        }
        ++rank;
      }
      out_rank[key] = rank;
    }
  }
  Table t;
  for (const auto& [key, cols] : block) {
    const auto prev = out_rank.find({key.first - 1, key.second});
    const long h = static_cast<long>(cols.size()) - out_rank[key] - (prev == out_rank.end() ? 0 : prev->second);
    if (h) t[key] = h;
  }
  return t;
}

// Total chain dimension Σ_states 2^{circles}.
inline long cube_dimension(const kh::Diagram& d) {
  long total = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << d.crossing_count()); ++s) total += 1L << circles(d, s).size();
  return total;
}

}  // namespace oracle
