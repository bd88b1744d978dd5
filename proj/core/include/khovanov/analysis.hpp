#pragma once

#include <optional>
#include <string>
#include <vector>

#include "khovanov/diagram.hpp"
#include "khovanov/homology.hpp"
#include "khovanov/knotio.hpp"
#include "khovanov/laurent.hpp"

namespace kh {

enum class FlagState { Holds, Fails, NotApplicable };

/// Outcome of one check. On failure `witness` names the offending bidegree,
/// index or value; for not-applicable it says why.
struct Flag {
  FlagState state = FlagState::NotApplicable;
  std::string witness;

  static Flag holds(std::string note = {}) { return {FlagState::Holds, std::move(note)}; }
  static Flag fails(std::string why) { return {FlagState::Fails, std::move(why)}; }
  static Flag not_applicable(std::string why = {}) { return {FlagState::NotApplicable, std::move(why)}; }
  bool ok() const noexcept { return state == FlagState::Holds; }
  bool failed() const noexcept { return state == FlagState::Fails; }
};

std::string to_string(FlagState s);

struct DiagonalSupport {
  std::vector<int> diagonals;  // ascending b with nonzero rank on 2i + j = b
  std::vector<long> totals;    // total rank per diagonal
  int hw = 0;
};

/// Throws InputError on an empty table.
DiagonalSupport diagonal_support(const BigradedRanks& r);

enum class Thickness { Thin, Thick };
Thickness classify_thin_thick(const BigradedRanks& r);

/// Thin: support is exactly {σ−1, σ+1}. Width 3: drop the diagonal with the
/// smallest total (a tie is reported as a failure) and compare the rest.
Flag check_sigma_diagonals(const BigradedRanks& r, int sigma);

struct KnightPairing {
  Flag flag;
  std::vector<Bidegree> pairs;  // base points (i, j) paired with (i+1, j−4), with repetition
  std::optional<int> removed_j; // lower j of the removed (0, j), (0, j+2)
  int feasible_choices = 0;     // thick case: how many j worked
};

/// Thin knots remove one class at (0, σ±1); thick knots search every j.
KnightPairing knight_pairing_check(const BigradedRanks& r, int sigma);

/// One C₀ and otherwise only C₁. When that holds, also checks
/// rank H = rank H̃ + 1.
Flag h_restricted_check(const std::vector<IntervalSummand>& summands, long rank_h, long rank_reduced);

struct RankIdentities {
  long rank_h = 0;
  std::int64_t jones_abs_sum = 0;
  std::int64_t alexander_abs_sum = 0;
  Flag equality;    // thin: rank H − 1 = Σ|c| = Σ|a|
  Flag inequality;  // thick: Σ|a| ≤ rank H − 3 ≥ Σ|c|
  Flag parity;      // rank H even, both sums odd
  Flag signed_sums; // Σ(−1)^k a_k = Σ(−1)^k c_k
};

RankIdentities rank_identities_check(const BigradedRanks& r, const LaurentPoly& jones, const LaurentPoly& alexander_poly);

/// Alexander polynomial not alternating, or with a gap.
bool ap_special(const LaurentPoly& alexander_poly);

struct AdequacyReport {
  int n = 0;
  int s_plus = 0;
  int s_minus = 0;
  bool adequate = false;
  Flag extremal;   // rank 1 at the two extreme groups of an adequate diagram
  Flag circle_sum; // n+2 = |s₊|+|s₋| if alternating, n+2 > ... if adequate non-alternating
  Flag thick;      // adequate non-alternating ⇒ H-thick
};

AdequacyReport adequacy_check(const Diagram& d, const BigradedRanks& r, bool alternating);

struct PositivityReport {
  bool positive = false;
  int n = 0;
  int s = 0;
  int genus = 0;
  Flag negative_degrees;  // H^{i,j} = 0 for i < 0
  Flag h0_support;        // H^{0,j} ≠ 0 exactly for j = s−n−1±1
  Flag upper_vanishing;   // H^{i,j} = 0 for i > 0, j ≥ s−n
  std::optional<bool> h1_vanishes;  // observation only
};

PositivityReport positive_knot_check(const Diagram& d, const BigradedRanks& r);

/// ℤ₂ table predicted from the ℚ table: each pair based at (i, j) adds one at
/// (i, j−2) and one at (i+1, j−2).
Flag z2_pattern_check(const BigradedRanks& q, const BigradedRanks& z2, const KnightPairing& pairing);

/// n > 0 if the ℚ ranks equal those of the closure of σ₁ⁿ, n < 0 for its
/// mirror, 0 otherwise. Odd |n| in 3..max_n.
int torus_2n_match(const BigradedRanks& q, int max_n);

struct ClassifyOptions {
  int crossing_limit = 16;
  bool with_z2 = true;
  bool with_module = true;
  bool with_integral = false;
};

struct ClassificationReport {
  std::string name;
  std::string source;  // "pd" or "braid"
  int crossings = 0;
  int writhe = 0;

  BigradedRanks ranks_q;
  std::optional<BigradedRanks> ranks_z2;
  std::optional<BigradedRanks> ranks_z;
  BigradedRanks ranks_reduced;
  long rank_h = 0;
  long rank_reduced = 0;

  DiagonalSupport support;
  Thickness thickness = Thickness::Thin;
  std::vector<int> reduced_diagonals;

  int signature = 0;
  std::optional<int> signature_braid;
  std::optional<int> signature_table;
  LaurentPoly jones{'q'};
  LaurentPoly alexander{'t'};
  std::int64_t determinant = 0;

  Flag euler;               // homology J = bracket J
  Flag sigma_diagonals;     // support vs. σ±1
  KnightPairing knight;
  bool jones_alternating = false;
  bool jones_gap = false;
  int torus_2n = 0;
  Flag jones_pattern;       // thin only
  bool alexander_alternating = false;
  bool alexander_gap = false;
  Flag alexander_pattern;   // thin only
  Flag alexander_table;     // agreement with the table's polynomial
  Flag signature_agreement; // PD, braid and table signatures agree

  std::vector<IntervalSummand> summands;
  Flag h_restricted;
  Flag reassembly;          // summand ranks = ℚ ranks

  bool ap_special = false;
  std::optional<bool> alternating;
  std::string alternating_source;  // "table" or "diagram"
  Flag ap_special_not_alternating;

  AdequacyReport adequacy;
  PositivityReport positivity;
  RankIdentities identities;
  Flag determinant_routes;  // Δ(−1) = J(√−1)
  Flag reduced_vs_det;      // rank H̃ ≥ |det|, equal iff thin
  Flag reduced_one_diagonal;// one reduced diagonal iff thin
  Flag z2_pattern;
};

ClassificationReport classify(const std::string& name, const Diagram& d, const ClassifyOptions& opt = {},
                              const KnotRecord* record = nullptr);
ClassificationReport classify(const KnotRecord& record, const ClassifyOptions& opt = {});

/// Diagram of a record: the PD code when present, else the braid closure.
Diagram diagram_of(const KnotRecord& record);

}  // namespace kh
