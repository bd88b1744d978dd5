#include <algorithm>
#include <map>
#include <sstream>

#include "khovanov/errors.hpp"
#include "khovanov/homology.hpp"

namespace kh {

namespace {

using Dense = std::vector<std::vector<Rational>>;

Dense multiply(const Dense& a, const Dense& b, int inner) {
  const std::size_t rows = a.size();
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  Dense c(rows, std::vector<Rational>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    for (int k = 0; k < inner; ++k) {
      if (sgn(a[r][k]) == 0) continue;
      for (std::size_t s = 0; s < cols; ++s) {
        if (sgn(b[k][s]) != 0) c[r][s] += a[r][k] * b[k][s];
      }
    }
  }
  return c;
}

}  // namespace

std::vector<IntervalSummand> interval_decomposition(const MinimalComplex& c) {
  if (c.ring.kind() != CoefficientRing::Kind::Rationals) throw InputError("interval decomposition needs Q coefficients");
  if (!c.is_minimal()) throw InputError("complex is not minimal");

  const int levels = static_cast<int>(c.jgrades.size());
  // per diagonal b = 2i + j: position of each generator inside its degree's block
  std::map<int, std::vector<std::vector<int>>> members;
  std::vector<std::vector<int>> local(levels);
  for (int k = 0; k < levels; ++k) {
    const int i = c.min_degree + k;
    for (int g = 0; g < static_cast<int>(c.jgrades[k].size()); ++g) {
      auto& blocks = members[2 * i + c.jgrades[k][g]];
      blocks.resize(levels);
      local[k].push_back(static_cast<int>(blocks[k].size()));
      blocks[k].push_back(g);
    }
  }

  std::vector<IntervalSummand> out;
  for (const auto& [b, blocks] : members) {
    std::vector<Dense> maps(levels);
    for (int k = 0; k + 1 < levels; ++k) {
      maps[k].assign(blocks[k + 1].size(), std::vector<Rational>(blocks[k].size()));
    }
    for (int k = 0; k + 1 < levels; ++k) {
      for (const auto& e : c.differential[k]) {
        const int i = c.min_degree + k;
        if (2 * i + c.jgrades[k][e.src] != b) continue;
        if (2 * (i + 1) + c.jgrades[k + 1][e.tgt] != b) throw ConsistencyError("X entry leaves its diagonal");
        maps[k][local[k + 1][e.tgt]][local[k][e.src]] += e.value.linear;
      }
    }
    // r[a][c]: rank of the composite from degree a to degree c
    std::vector<std::vector<int>> r(levels, std::vector<int>(levels, 0));
    for (int a = 0; a < levels; ++a) {
      r[a][a] = static_cast<int>(blocks[a].size());
      if (r[a][a] == 0) continue;
      Dense comp;
      for (int e = a + 1; e < levels; ++e) {
        comp = e == a + 1 ? maps[a] : multiply(maps[e - 1], comp, static_cast<int>(blocks[e - 1].size()));
        r[a][e] = rank_rational(comp);
        if (r[a][e] == 0) break;
      }
    }
    const auto rank = [&](int a, int e) { return (a < 0 || e >= levels) ? 0 : r[a][e]; };
    for (int a = 0; a < levels; ++a) {
      for (int e = a; e < levels; ++e) {
        const int mult = rank(a, e) - rank(a - 1, e) - rank(a, e + 1) + rank(a - 1, e + 1);
        if (mult < 0) throw ConsistencyError("negative interval multiplicity");
        const int i = c.min_degree + a;
        for (int m = 0; m < mult; ++m) out.push_back({e - a, i, b - 2 * i});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

BigradedRanks ranks_of_summands(const std::vector<IntervalSummand>& summands) {
  BigradedRanks r;
  for (const auto& s : summands) {
    r.add(s.degree, s.jshift + 2, 1);
    r.add(s.degree + s.length, s.jshift - 2 * s.length, 1);
  }
  return r;
}

std::string summand_counts(const std::vector<IntervalSummand>& summands) {
  std::map<int, int> counts;
  for (const auto& s : summands) ++counts[s.length];
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, k] : counts) {
    os << (first ? "" : ", ") << "C" << n << " x" << k;
    first = false;
  }
  return os.str();
}

}  // namespace kh
