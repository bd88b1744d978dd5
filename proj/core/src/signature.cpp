#include <algorithm>
#include <map>

#include "khovanov/errors.hpp"
#include "khovanov/invariants.hpp"

namespace kh {

int symmetric_signature(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  int sig = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(m[k][k]) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(m[p][p]) == 0) ++p;
      if (p < n) {
        std::swap(m[k], m[p]);
        for (auto& row : m) std::swap(row[k], row[p]);
      } else {
        std::size_t q = k + 1;
        while (q < n && sgn(m[k][q]) == 0) ++q;
        if (q == n) continue;  // row k is zero in the remaining block
        // row/col k += row/col q makes the pivot 2·m[k][q] + m[q][q] = 2·m[k][q]
        for (std::size_t c = k; c < n; ++c) m[k][c] += m[q][c];
        for (std::size_t r = k; r < n; ++r) m[r][k] += m[r][q];
      }
    }
    const Rational pivot = m[k][k];
    sig += sgn(pivot);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (sgn(m[r][k]) == 0) continue;
      const Rational f = m[r][k] / pivot;
      for (std::size_t c = k; c < n; ++c) m[r][c] -= f * m[k][c];
    }
    for (std::size_t c = k + 1; c < n; ++c) m[k][c] = 0;
    for (std::size_t r = k + 1; r < n; ++r) m[r][k] = 0;
  }
  return sig;
}

std::vector<std::vector<std::int64_t>> braid_seifert_matrix(const BraidWord& braid) {
  struct Gen {
    int col, p, q;
  };
  std::vector<Gen> gens;
  std::map<int, std::vector<int>> by_col;
  for (int p = 0; p < static_cast<int>(braid.letters.size()); ++p) by_col[std::abs(braid.letters[p]) - 1].push_back(p);
  for (const auto& [c, ps] : by_col) {
    for (std::size_t t = 0; t + 1 < ps.size(); ++t) gens.push_back({c, ps[t], ps[t + 1]});
  }
  const auto eps = [&](int p) { return braid.letters[p] > 0 ? 1 : -1; };
  const std::size_t n = gens.size();
  std::vector<std::vector<std::int64_t>> v(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t a = 0; a < n; ++a) {
    const Gen& g = gens[a];
    v[a][a] = -(eps(g.p) + eps(g.q)) / 2;
    for (std::size_t b = 0; b < n; ++b) {
      const Gen& h = gens[b];
      if (h.col == g.col && h.p == g.q) {
        if (eps(g.q) > 0) {
          v[a][b] = 1;
        } else {
          v[b][a] = -1;
        }
      } else if (h.col == g.col + 1) {
        if (g.p < h.p && h.p < g.q && g.q < h.q) {
          v[a][b] = -1;
        } else if (h.p < g.p && g.p < h.q && h.q < g.q) {
          v[b][a] = 1;
        }
      }
    }
  }
  return v;
}

int signature_from_seifert(const std::vector<std::vector<std::int64_t>>& v) {
  const std::size_t n = v.size();
  std::vector<std::vector<Rational>> s(n, std::vector<Rational>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) s[a][b] = static_cast<long>(v[a][b] + v[b][a]);
  }
  return symmetric_signature(std::move(s));
}

int signature(const BraidWord& braid) {
  const Diagram d = Diagram::from_braid_closure(braid);
  if (!d.is_knot()) throw InputError("signature requires a knot");
  return signature_from_seifert(braid_seifert_matrix(braid));
}

int signature(const Diagram& d) {
  if (!d.is_knot()) throw InputError("signature requires a knot");
  const int n = d.crossing_count();
  if (n == 0) return 0;

  // corner (x, k) lies between slots k and k+1
  std::vector<int> face(4 * n, -1);
  const auto other_end = [&](int x, int slot) {
    const int e = d.crossing(x)[slot];
    const auto h = d.head(e);
    return h == std::pair<int, int>{x, slot} ? d.tail(e) : h;
  };
  int faces = 0;
  for (int start = 0; start < 4 * n; ++start) {
    if (face[start] >= 0) continue;
    int cur = start;
    while (face[cur] < 0) {
      face[cur] = faces;
      const auto [y, m] = other_end(cur / 4, (cur % 4 + 1) % 4);
      cur = 4 * y + m;
    }
    if (cur != start) throw ConsistencyError("face walk did not close");
    ++faces;
  }
  if (faces != n + 2) throw InputError("diagram is not a connected planar projection");

  std::vector<std::vector<int>> adj(faces);
  for (int x = 0; x < n; ++x) {
    for (int k = 0; k < 4; ++k) {
      const int f = face[4 * x + k];
      const int g = face[4 * x + (k + 1) % 4];
      adj[f].push_back(g);
      adj[g].push_back(f);
    }
  }
  std::vector<int> color(faces, -1);  // 1 = black
  color[0] = 0;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int f = stack.back();
    stack.pop_back();
    for (int g : adj[f]) {
      if (color[g] == -1) {
        color[g] = 1 - color[f];
        stack.push_back(g);
      } else if (color[g] == color[f]) {
        throw ConsistencyError("faces are not two-colorable");
      }
    }
  }

  std::map<int, int> white_index;
  for (int f = 0; f < faces; ++f) {
    if (color[f] == 0) white_index.emplace(f, static_cast<int>(white_index.size()));
  }
  const std::size_t w = white_index.size();
  std::vector<std::vector<Rational>> g(w, std::vector<Rational>(w));
  int mu = 0;
  for (int x = 0; x < n; ++x) {
    const bool odd_white = color[face[4 * x + 1]] == 0;
    const int eta = odd_white ? -1 : 1;
    const int a = white_index.at(face[4 * x + (odd_white ? 1 : 0)]);
    const int b = white_index.at(face[4 * x + (odd_white ? 3 : 2)]);
    if (a != b) {
      g[a][b] -= eta;
      g[b][a] -= eta;
      g[a][a] += eta;
      g[b][b] += eta;
    }
    // the oriented smoothing joins corners 1,3 at positive crossings, 0,2 at negative
    const bool joins_odd = d.sign(x) > 0;
    if (joins_odd != odd_white) mu += eta;
  }
  g.pop_back();
  for (auto& row : g) row.pop_back();
  return symmetric_signature(std::move(g)) - mu;
}

}  // namespace kh
