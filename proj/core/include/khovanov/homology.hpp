#pragma once

#include <string>
#include <vector>

#include "khovanov/khcomplex.hpp"
#include "khovanov/linalg.hpp"

namespace kh {

/// h^{i,j} = dim − rank(d out) − rank(d in), over the complex's ring. Over ℤ
/// the free rank comes from ℚ and torsion from the Smith form of d in.
BigradedRanks homology_ranks(const BigradedComplex& c);
/// Same complex, ranks taken over `ring` instead of c.ring.
BigradedRanks homology_ranks(const BigradedComplex& c, const CoefficientRing& ring);

struct MinimalEntry {
  int src = 0;
  int tgt = 0;
  AElement<Rational> value;
};

/// Complex of free A-modules after cancelling unit entries.
struct MinimalComplex {
  CoefficientRing ring = CoefficientRing::rationals();
  int min_degree = 0;
  std::vector<std::vector<int>> jgrades;               // j of each generator, by degree
  std::vector<std::vector<MinimalEntry>> differential;  // out of each degree

  std::vector<int> free_ranks() const;
  /// Every entry lies in X·R.
  bool is_minimal() const;
};

/// Gaussian elimination of unit entries. Over ℚ a unit is any entry with
/// nonzero constant term; over ℤ only constant term ±1 qualifies.
MinimalComplex minimize_module_complex(const ModuleComplex& c,
                                       const CoefficientRing& ring = CoefficientRing::rationals());

/// Ranks over ℚ of the underlying vector-space complex.
BigradedRanks homology_ranks(const MinimalComplex& c);

/// C(K₁) ⊗_A C(K₂), which models the connected sum.
MinimalComplex tensor_over_A(const MinimalComplex& a, const MinimalComplex& b);

/// Cₙ[i]{j}: n+1 copies of A in degrees i..i+n joined by X; j is the grading of
/// the leftmost generator. Cohomology sits at (i, j+2) and (i+n, j−2n).
struct IntervalSummand {
  int length = 0;
  int degree = 0;
  int jshift = 0;

  friend auto operator<=>(const IntervalSummand&, const IntervalSummand&) = default;
};

/// Throws InputError unless the complex is minimal over ℚ. Sorted output.
std::vector<IntervalSummand> interval_decomposition(const MinimalComplex& c);

BigradedRanks ranks_of_summands(const std::vector<IntervalSummand>& summands);

/// "C0 x1, C1 x2"
std::string summand_counts(const std::vector<IntervalSummand>& summands);

}  // namespace kh
