#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "khovanov/fields.hpp"
#include "khovanov/ring.hpp"
#include "khovanov/sparse_matrix.hpp"

namespace kh {

/// Exact rank over ℚ or ℤ/p. Sparse elimination; the pivot column is the one
/// with fewest nonzeros and the pivot row the shortest in it (ties by index).
int rank_over_field(const SparseMatrix& m, const CoefficientRing& field);

/// Rank of a dense rational matrix.
int rank_rational(std::vector<std::vector<Rational>> m);

/// Nonzero invariant factors d₁ | d₂ | … of an integer matrix (all positive).
std::vector<Integer> smith_normal_form(const SparseMatrix& m);

/// Splits n > 1 into prime-power factors, ascending (12 → 3, 4).
std::vector<Integer> prime_power_decomposition(const Integer& n);

struct Bidegree {
  int i = 0;
  int j = 0;

  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

/// Cohomology ranks h^{i,j}, plus torsion when computed over ℤ.
struct BigradedRanks {
  CoefficientRing ring = CoefficientRing::rationals();
  std::map<Bidegree, long> ranks;                     // zeros are not stored
  std::map<Bidegree, std::vector<Integer>> torsion;   // prime-power orders

  long rank(int i, int j) const;
  long total_rank() const;
  void add(int i, int j, long r);
  bool empty() const noexcept { return ranks.empty(); }

  friend bool operator==(const BigradedRanks& a, const BigradedRanks& b) {
    return a.ranks == b.ranks && a.torsion == b.torsion;
  }
};

/// Element α + βX of A = R[X]/(X²).
template <class T>
struct AElement {
  T constant{};
  T linear{};
};

}  // namespace kh
