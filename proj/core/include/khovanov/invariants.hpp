#pragma once

#include <cstdint>
#include <vector>

#include "khovanov/diagram.hpp"
#include "khovanov/fields.hpp"
#include "khovanov/laurent.hpp"
#include "khovanov/linalg.hpp"

namespace kh {

/// J with (q + q⁻¹)·J = Σ (−1)^i q^{−j} h^{i,j}. Throws ConsistencyError if the
/// division is inexact.
LaurentPoly jones_from_homology(const BigradedRanks& ranks);

/// Same normalization as jones_from_homology, from the bracket state sum.
/// Defined for links.
LaurentPoly bracket_jones(const Diagram& d);

/// Σ (−1)^i q^{−j} h^{i,j}.
LaurentPoly euler_characteristic(const BigradedRanks& ranks);

/// Reduced ranks give J directly.
LaurentPoly jones_from_reduced(const BigradedRanks& reduced);

/// Δ(t) from a Wirtinger presentation, with Δ(t) = Δ(t⁻¹) and Δ(1) = 1.
LaurentPoly alexander(const Diagram& d);

/// Δ(−1), checked against J(√−1). Throws ConsistencyError on disagreement.
std::int64_t determinant(const Diagram& d);
std::int64_t determinant(const LaurentPoly& alexander_poly, const LaurentPoly& jones);

/// Signature of a symmetric rational matrix (congruence diagonalization).
int symmetric_signature(std::vector<std::vector<Rational>> m);

/// Seifert matrix of a braid closure built from disks and bands.
std::vector<std::vector<std::int64_t>> braid_seifert_matrix(const BraidWord& braid);
int signature_from_seifert(const std::vector<std::vector<std::int64_t>>& v);

/// Knot signature via the Goeritz matrix and the Gordon–Litherland correction.
/// The right-handed trefoil has signature −2.
int signature(const Diagram& d);
int signature(const BraidWord& braid);

/// Coefficients read at exponents min, min+step, ...; alternating means
/// sign(c_k)·(−1)^k is constant over nonzero c_k. Throws InputError on zero.
bool is_alternating_poly(const LaurentPoly& p, int step);
/// A zero coefficient strictly between two nonzero ones.
bool has_gap(const LaurentPoly& p, int step);

}  // namespace kh
