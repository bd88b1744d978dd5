#include "khovanov/invariants.hpp"

#include <algorithm>

#include "khovanov/errors.hpp"

namespace kh {

LaurentPoly euler_characteristic(const BigradedRanks& ranks) {
  LaurentPoly chi('q');
  for (const auto& [b, r] : ranks.ranks) chi.add_term(-b.j, (b.i % 2 == 0) ? r : -r);
  return chi;
}

LaurentPoly jones_from_homology(const BigradedRanks& ranks) {
  LaurentPoly divisor('q');
  divisor.add_term(1, 1);
  divisor.add_term(-1, 1);
  return euler_characteristic(ranks).divided_exactly_by(divisor);
}

LaurentPoly jones_from_reduced(const BigradedRanks& reduced) { return euler_characteristic(reduced); }

LaurentPoly bracket_jones(const Diagram& d) {
  const int n = d.crossing_count();
  if (n > 24) throw SizeLimitError("bracket state sum limited to 24 crossings");
  // loop value δ = −A² − A⁻²; powers indexed by circle count − 1
  LaurentPoly delta('A');
  delta.add_term(2, -1);
  delta.add_term(-2, -1);
  std::vector<LaurentPoly> delta_pow{LaurentPoly::constant('A', 1)};
  std::map<std::pair<int, int>, std::int64_t> tally;  // (#0 − #1, circles − 1) → count
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    const int ones = __builtin_popcountll(s);
    const int circles = resolve(d, ResolutionState{s}).count;
    ++tally[{n - 2 * ones, circles - 1}];
  }
  LaurentPoly bracket('A');
  for (const auto& [key, count] : tally) {
    while (static_cast<int>(delta_pow.size()) <= key.second) delta_pow.push_back(delta_pow.back() * delta);
    bracket += count * delta_pow[key.second].shifted(key.first);
  }
  const int w = d.writhe();
  LaurentPoly f = ((w % 2 == 0) ? 1 : -1) * bracket.shifted(-3 * w);
  LaurentPoly j('q');
  for (const auto& [e, c] : f.terms()) {
    if (e % 2 != 0) throw ConsistencyError("odd exponent in normalized bracket");
    const int h = e / 2;
    j.add_term(-h, (h % 2 == 0) ? c : -c);
  }
  return j;
}

namespace {

// Dense polynomial over ℤ in t, index = degree.
using Poly = std::vector<Integer>;

void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Poly pmul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t k = 0; k < b.size(); ++k) c[i + k] += a[i] * b[k];
  }
  trim(c);
  return c;
}

Poly psub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

Poly pdiv_exact(Poly a, const Poly& b) {
  if (a.empty()) return {};
  if (b.empty() || a.size() < b.size()) throw ConsistencyError("Bareiss division failed");
  Poly q(a.size() - b.size() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    const Integer& top = a[k + b.size() - 1];
    if (sgn(top) == 0) continue;
    if (top % b.back() != 0) throw ConsistencyError("Bareiss division not exact");
    q[k] = top / b.back();
    for (std::size_t i = 0; i < b.size(); ++i) a[k + i] -= q[k] * b[i];
  }
  trim(a);
  if (!a.empty()) throw ConsistencyError("Bareiss division left a remainder");
  trim(q);
  return q;
}

Poly bareiss_det(std::vector<std::vector<Poly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return {Integer(1)};
  Poly prev{Integer(1)};
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].empty()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].empty()) ++r;
      if (r == n) return {};
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = pdiv_exact(psub(pmul(m[i][j], m[k][k]), pmul(m[i][k], m[k][j])), prev);
      }
      m[i][k].clear();
    }
    prev = m[k][k];
  }
  Poly det = m[n - 1][n - 1];
  if (sign < 0) {
    for (auto& c : det) c = -c;
  }
  return det;
}

}  // namespace

LaurentPoly alexander(const Diagram& d) {
  if (!d.is_knot()) throw InputError("Alexander polynomial requires a knot");
  const int n = d.crossing_count();
  if (n == 0) return LaurentPoly::constant('t', 1);
  UnionFind arcs(d.edge_count());
  for (int k = 0; k < n; ++k) arcs.unite(d.crossing(k)[kSlotB], d.crossing(k)[kSlotD]);
  std::vector<int> arc_id(d.edge_count(), -1);
  int count = 0;
  for (int e = 0; e < d.edge_count(); ++e) {
    const int root = arcs.find(e);
    if (arc_id[root] == -1) arc_id[root] = count++;
    arc_id[e] = arc_id[root];
  }
  std::vector<std::vector<Poly>> m(n, std::vector<Poly>(count));
  const auto add = [&](int row, int col, long c0, long c1) {
    Poly& p = m[row][col];
    if (p.size() < 2) p.resize(2);
    p[0] += c0;
    p[1] += c1;
  };
  for (int k = 0; k < n; ++k) {
    const auto& x = d.crossing(k);
    const int over = arc_id[x[kSlotB]];
    const int in = arc_id[x[kUnderIn]];
    const int out = arc_id[x[kUnderOut]];
    add(k, over, 1, -1);
    if (d.sign(k) > 0) {
      add(k, in, 0, 1);
      add(k, out, -1, 0);
    } else {
      add(k, in, -1, 0);
      add(k, out, 0, 1);
    }
  }
  for (auto& row : m) {
    for (auto& p : row) trim(p);
  }
  std::vector<std::vector<Poly>> minor(n - 1, std::vector<Poly>(count - 1));
  for (int r = 0; r + 1 < n; ++r) {
    for (int c = 0; c + 1 < count; ++c) minor[r][c] = m[r][c];
  }
  if (count != n) throw ConsistencyError("knot diagram with arc count != crossing count");
  Poly det = bareiss_det(std::move(minor));
  if (det.empty()) throw InputError("Alexander matrix is singular; malformed diagram");

  std::size_t lo = 0;
  while (sgn(det[lo]) == 0) ++lo;
  const int span = static_cast<int>(det.size() - 1 - lo);
  if (span % 2 != 0) throw ConsistencyError("Alexander polynomial has odd span");
  Integer at_one = 0;
  for (const auto& c : det) at_one += c;
  if (abs(at_one) != 1) throw ConsistencyError("Alexander polynomial has |Δ(1)| != 1");
  const int s = sgn(at_one);
  LaurentPoly out('t');
  for (std::size_t k = lo; k < det.size(); ++k) {
    if (sgn(det[k]) == 0) continue;
    if (!det[k].fits_slong_p()) throw ConsistencyError("Alexander coefficient overflow");
    out.add_term(static_cast<int>(k - lo) - span / 2, s * det[k].get_si());
  }
  if (out != out.substitute_power(-1)) throw ConsistencyError("Alexander polynomial is not symmetric");
  return out;
}

std::int64_t determinant(const LaurentPoly& alexander_poly, const LaurentPoly& jones) {
  const std::int64_t delta = alexander_poly.evaluate(-1);
  const GaussianInt j = jones.evaluate_at_i();
  if (j.im != 0 || j.re != delta) {
    throw ConsistencyError("determinant mismatch: Δ(-1) = " + std::to_string(delta) + ", J(i) = " +
                           std::to_string(j.re) + (j.im ? " + " + std::to_string(j.im) + "i" : ""));
  }
  return delta;
}

std::int64_t determinant(const Diagram& d) { return determinant(alexander(d), bracket_jones(d)); }

namespace {

std::vector<std::int64_t> stepped(const LaurentPoly& p, int step) {
  if (p.is_zero()) throw InputError("coefficient pattern of the zero polynomial");
  if (step < 1) throw InputError("step must be positive");
  const int lo = p.min_exponent();
  std::vector<std::int64_t> c((p.max_exponent() - lo) / step + 1, 0);
  for (const auto& [e, v] : p.terms()) {
    if ((e - lo) % step != 0) throw InputError("exponent off the step lattice");
    c[(e - lo) / step] = v;
  }
  return c;
}

}  // namespace

bool is_alternating_poly(const LaurentPoly& p, int step) {
  const auto c = stepped(p, step);
  int expected = 0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    const int s = (c[k] > 0 ? 1 : -1) * (k % 2 == 0 ? 1 : -1);
    if (expected == 0) expected = s;
    if (s != expected) return false;
  }
  return true;
}

bool has_gap(const LaurentPoly& p, int step) {
  const auto c = stepped(p, step);
  return std::find(c.begin(), c.end(), 0) != c.end();
}

}  // namespace kh
