#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "khovanov/diagram.hpp"
#include "khovanov/linalg.hpp"
#include "khovanov/ring.hpp"
#include "khovanov/sparse_matrix.hpp"

namespace kh {

/// A basis element of a chain group: a resolution state and a labeling of its
/// circles (bit c set means circle c carries X, clear means 1).
struct Generator {
  std::uint64_t state = 0;
  std::uint32_t labels = 0;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Basis of one bigraded piece and the differential out of it, into (i+1, j).
struct ComplexSlice {
  int i = 0;
  int j = 0;
  std::vector<Generator> basis;
  SparseMatrix d;  // rows index the basis of slice (i+1, j)
};

/// Cube complex split into (i, j) slices. Integer entries; the ring only
/// decides how ranks are taken.
class BigradedComplex {
 public:
  CoefficientRing ring = CoefficientRing::rationals();
  std::map<Bidegree, ComplexSlice> slices;

  const ComplexSlice* slice(int i, int j) const;
  long dimension() const;
  long dimension(int i) const;
  /// Throws ConsistencyError if some d∘d is nonzero (checked over ℤ).
  void verify_d_squared() const;
};

struct BuildOptions {
  int crossing_limit = 16;
};

/// Full complex. Bidegrees use j = −(#1 − #X + r + n₊ − 2n₋), i = r − n₋.
BigradedComplex build_cube(const Diagram& d, const CoefficientRing& ring, const BuildOptions& opt = {});

/// Subcomplex where the circle through `base_edge` carries X. Its j-grading is
/// lowered by one so that the unknot sits at (0, 0).
BigradedComplex build_reduced(const Diagram& d, int base_edge, const CoefficientRing& ring,
                              const BuildOptions& opt = {});

/// One free A-module generator: the marked circle is labeled 1.
struct ModuleBasis {
  Generator gen;
  int j = 0;
};

struct ModuleEntry {
  int src = 0;
  int tgt = 0;
  AElement<std::int64_t> value;
};

/// Complex of free graded A-modules; X acts on the marked circle.
/// An entry α + βX maps a generator at j to one at j (α) or j − 2 (β).
class ModuleComplex {
 public:
  int base_edge = 0;
  int min_degree = 0;
  std::vector<std::vector<ModuleBasis>> basis;       // by degree − min_degree
  std::vector<std::vector<ModuleEntry>> differential; // out of each degree

  int max_degree() const { return min_degree + static_cast<int>(basis.size()) - 1; }
  std::vector<int> free_ranks() const;
  void verify_d_squared() const;
};

ModuleComplex build_module_complex(const Diagram& d, int base_edge = 0, const BuildOptions& opt = {});

/// Text listing of every slice, see docs/complex_dump.md.
std::string dump_complex(const BigradedComplex& c);

}  // namespace kh
