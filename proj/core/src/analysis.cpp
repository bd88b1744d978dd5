#include "khovanov/analysis.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "khovanov/errors.hpp"
#include "khovanov/invariants.hpp"

namespace kh {

namespace {

std::string at(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
  return os.str();
}

// Greedy (1,−4) matching by ascending i; returns the offending bidegree on failure.
std::optional<Bidegree> match_pairs(std::map<Bidegree, long> residual, std::vector<Bidegree>& pairs) {
  std::vector<Bidegree> order;
  for (const auto& [b, r] : residual) order.push_back(b);
  std::sort(order.begin(), order.end(), [](const Bidegree& a, const Bidegree& b) {
    return a.i != b.i ? a.i < b.i : a.j > b.j;
  });
  for (const Bidegree& b : order) {
    const long r = residual[b];
    if (r == 0) continue;
    if (r < 0) return b;
    auto it = residual.find({b.i + 1, b.j - 4});
    if (it == residual.end() || it->second < r) return Bidegree{b.i + 1, b.j - 4};
    it->second -= r;
    for (long k = 0; k < r; ++k) pairs.push_back(b);
  }
  return std::nullopt;
}

}  // namespace

std::string to_string(FlagState s) {
  switch (s) {
    case FlagState::Holds:
      return "holds";
    case FlagState::Fails:
      return "fails";
    case FlagState::NotApplicable:
      break;
  }
  return "n/a";
}

DiagonalSupport diagonal_support(const BigradedRanks& r) {
  if (r.empty()) throw InputError("empty rank table");
  std::map<int, long> totals;
  for (const auto& [b, v] : r.ranks) totals[2 * b.i + b.j] += v;
  DiagonalSupport s;
  for (const auto& [b, t] : totals) {
    s.diagonals.push_back(b);
    s.totals.push_back(t);
  }
  s.hw = (s.diagonals.back() - s.diagonals.front()) / 2 + 1;
  return s;
}

Thickness classify_thin_thick(const BigradedRanks& r) {
  return diagonal_support(r).hw == 2 ? Thickness::Thin : Thickness::Thick;
}

Flag check_sigma_diagonals(const BigradedRanks& r, int sigma) {
  const DiagonalSupport s = diagonal_support(r);
  const std::vector<int> want{sigma - 1, sigma + 1};
  if (s.hw == 2) {
    if (s.diagonals == want) return Flag::holds();
    return Flag::fails("diagonals {" + join(s.diagonals) + "} vs sigma " + std::to_string(sigma));
  }
  if (s.hw != 3) return Flag::not_applicable("width " + std::to_string(s.hw));
  std::vector<int> present;
  for (int b = s.diagonals.front(); b <= s.diagonals.back(); b += 2) present.push_back(b);
  std::map<int, long> total;
  for (std::size_t k = 0; k < s.diagonals.size(); ++k) total[s.diagonals[k]] = s.totals[k];
  int smallest = present.front();
  bool tie = false;
  for (int b : present) {
    if (b == smallest) continue;
    if (total[b] < total[smallest]) {
      smallest = b;
      tie = false;
    } else if (total[b] == total[smallest]) {
      tie = true;
    }
  }
  if (tie) return Flag::fails("ambiguous: two diagonals share the smallest total");
  std::vector<int> rest;
  for (int b : present) {
    if (b != smallest) rest.push_back(b);
  }
  if (rest == want) return Flag::holds("discarded diagonal " + std::to_string(smallest));
  return Flag::fails("remaining diagonals {" + join(rest) + "} vs sigma " + std::to_string(sigma));
}

KnightPairing knight_pairing_check(const BigradedRanks& r, int sigma) {
  KnightPairing out;
  if (r.empty()) {
    out.flag = Flag::fails("empty table");
    return out;
  }
  const auto attempt = [&](int jlow, std::vector<Bidegree>& pairs) -> std::optional<std::string> {
    std::map<Bidegree, long> residual = r.ranks;
    for (int j : {jlow, jlow + 2}) {
      if (--residual[{0, j}] < 0) return "no class at " + at(0, j);
    }
    if (auto bad = match_pairs(residual, pairs)) return "unpaired class near " + at(bad->i, bad->j);
    return std::nullopt;
  };
  if (classify_thin_thick(r) == Thickness::Thin) {
    std::vector<Bidegree> pairs;
    if (auto err = attempt(sigma - 1, pairs)) {
      out.flag = Flag::fails(*err);
    } else {
      out.flag = Flag::holds();
      out.pairs = std::move(pairs);
      out.removed_j = sigma - 1;
      out.feasible_choices = 1;
    }
    return out;
  }
  std::set<int> candidates;
  for (const auto& [b, v] : r.ranks) {
    if (b.i == 0 && r.rank(0, b.j + 2) > 0) candidates.insert(b.j);
  }
  for (int j : candidates) {
    std::vector<Bidegree> pairs;
    if (attempt(j, pairs)) continue;
    if (out.feasible_choices++ == 0) {
      out.pairs = std::move(pairs);
      out.removed_j = j;
    }
  }
  if (out.feasible_choices == 0) {
    out.flag = Flag::fails("no j with (0,j),(0,j+2) leaving a perfect pairing");
  } else {
    out.flag = Flag::holds(out.feasible_choices > 1 ? std::to_string(out.feasible_choices) + " choices of j" : "");
  }
  return out;
}

Flag h_restricted_check(const std::vector<IntervalSummand>& summands, long rank_h, long rank_reduced) {
  int c0 = 0;
  for (const auto& s : summands) {
    if (s.length == 0) {
      ++c0;
    } else if (s.length != 1) {
      return Flag::fails("summand C" + std::to_string(s.length) + " at degree " + std::to_string(s.degree));
    }
  }
  if (c0 != 1) return Flag::fails(std::to_string(c0) + " copies of C0");
  if (rank_h != rank_reduced + 1) {
    return Flag::fails("rank H = " + std::to_string(rank_h) + " but reduced rank = " + std::to_string(rank_reduced));
  }
  return Flag::holds();
}

RankIdentities rank_identities_check(const BigradedRanks& r, const LaurentPoly& jones, const LaurentPoly& alexander_poly) {
  RankIdentities out;
  out.rank_h = r.total_rank();
  out.jones_abs_sum = jones.sum_abs_coefficients();
  out.alexander_abs_sum = alexander_poly.sum_abs_coefficients();
  const long rk = out.rank_h;
  const auto c = out.jones_abs_sum;
  const auto a = out.alexander_abs_sum;
  const std::string nums =
      "rank " + std::to_string(rk) + ", sum|c| " + std::to_string(c) + ", sum|a| " + std::to_string(a);
  if (classify_thin_thick(r) == Thickness::Thin) {
    out.equality = (rk - 1 == c && c == a) ? Flag::holds() : Flag::fails(nums);
    out.inequality = Flag::not_applicable("thin");
  } else {
    out.equality = Flag::not_applicable("thick");
    out.inequality = (a <= rk - 3 && rk - 3 >= c) ? Flag::holds() : Flag::fails(nums);
  }
  out.parity = (rk % 2 == 0 && c % 2 == 1 && a % 2 == 1) ? Flag::holds() : Flag::fails(nums);
  // J has exponents 2k: c_k sits at q^{2k}
  std::int64_t sa = 0, sc = 0;
  for (const auto& [e, v] : alexander_poly.terms()) sa += (e % 2 == 0) ? v : -v;
  for (const auto& [e, v] : jones.terms()) {
    if (e % 2 != 0) {
      out.signed_sums = Flag::fails("odd exponent in J");
      return out;
    }
    sc += ((e / 2) % 2 == 0) ? v : -v;
  }
  out.signed_sums = sa == sc ? Flag::holds() : Flag::fails(std::to_string(sa) + " vs " + std::to_string(sc));
  return out;
}

bool ap_special(const LaurentPoly& alexander_poly) {
  return !is_alternating_poly(alexander_poly, 1) || has_gap(alexander_poly, 1);
}

AdequacyReport adequacy_check(const Diagram& d, const BigradedRanks& r, bool alternating) {
  AdequacyReport out;
  out.n = d.crossing_count();
  out.s_plus = s_plus(d).count;
  out.s_minus = s_minus(d).count;
  out.adequate = is_adequate(d);
  const int sum = out.s_plus + out.s_minus;
  const std::string counts = "n+2 = " + std::to_string(out.n + 2) + ", |s+|+|s-| = " + std::to_string(sum);
  if (alternating) {
    out.circle_sum = Flag::not_applicable("non-alternating diagram");
    if (is_alternating_diagram(d)) out.circle_sum = out.n + 2 == sum ? Flag::holds() : Flag::fails(counts);
  } else if (out.adequate) {
    out.circle_sum = out.n + 2 > sum ? Flag::holds() : Flag::fails(counts);
  } else {
    out.circle_sum = out.n + 2 >= sum ? Flag::not_applicable("inadequate") : Flag::fails(counts);
  }
  if (!out.adequate) {
    out.extremal = Flag::not_applicable("inadequate diagram");
    out.thick = Flag::not_applicable("inadequate diagram");
    return out;
  }
  const int np = d.positive_count();
  const int nn = d.negative_count();
  const int i0 = -nn, j0 = out.s_plus - np + 2 * nn;
  const int i1 = out.n - nn, j1 = -out.s_minus - out.n - np + 2 * nn;
  if (r.rank(i0, j0) != 1) {
    out.extremal = Flag::fails("rank " + std::to_string(r.rank(i0, j0)) + " at " + at(i0, j0));
  } else if (r.rank(i1, j1) != 1) {
    out.extremal = Flag::fails("rank " + std::to_string(r.rank(i1, j1)) + " at " + at(i1, j1));
  } else {
    out.extremal = Flag::holds();
  }
  if (alternating) {
    out.thick = Flag::not_applicable("alternating");
  } else {
    out.thick = classify_thin_thick(r) == Thickness::Thick ? Flag::holds() : Flag::fails("H-thin");
  }
  return out;
}

PositivityReport positive_knot_check(const Diagram& d, const BigradedRanks& r) {
  PositivityReport out;
  out.positive = is_positive_diagram(d);
  out.n = d.crossing_count();
  out.s = seifert_circle_count(d);
  if (!out.positive) {
    out.negative_degrees = out.h0_support = out.upper_vanishing = Flag::not_applicable("not a positive diagram");
    return out;
  }
  out.genus = positive_diagram_genus(d);
  const int top = out.s - out.n;
  out.negative_degrees = Flag::holds();
  out.upper_vanishing = Flag::holds();
  std::set<int> h0;
  bool h1 = true;
  for (const auto& [b, v] : r.ranks) {
    if (b.i < 0 && out.negative_degrees.ok()) out.negative_degrees = Flag::fails("class at " + at(b.i, b.j));
    if (b.i > 0 && b.j >= top && out.upper_vanishing.ok()) out.upper_vanishing = Flag::fails("class at " + at(b.i, b.j));
    if (b.i == 0) h0.insert(b.j);
    if (b.i == 1) h1 = false;
  }
  const std::set<int> want{top - 2, top};
  if (h0 == want) {
    out.h0_support = Flag::holds();
  } else {
    std::vector<int> got(h0.begin(), h0.end());
    out.h0_support = Flag::fails("H^0 at j = {" + join(got) + "}");
  }
  out.h1_vanishes = h1;
  return out;
}

Flag z2_pattern_check(const BigradedRanks& q, const BigradedRanks& z2, const KnightPairing& pairing) {
  if (!pairing.flag.ok()) return Flag::not_applicable("no knight pairing");
  BigradedRanks predicted = q;
  for (const auto& b : pairing.pairs) {
    predicted.add(b.i, b.j - 2, 1);
    predicted.add(b.i + 1, b.j - 2, 1);
  }
  if (predicted.ranks == z2.ranks) return Flag::holds();
  std::set<Bidegree> keys;
  for (const auto& [b, v] : predicted.ranks) keys.insert(b);
  for (const auto& [b, v] : z2.ranks) keys.insert(b);
  for (const auto& b : keys) {
    if (predicted.rank(b.i, b.j) != z2.rank(b.i, b.j)) {
      return Flag::fails("predicted " + std::to_string(predicted.rank(b.i, b.j)) + " vs " +
                         std::to_string(z2.rank(b.i, b.j)) + " at " + at(b.i, b.j));
    }
  }
  return Flag::fails("tables differ");
}

int torus_2n_match(const BigradedRanks& q, int max_n) {
  static std::mutex mu;
  static std::map<int, BigradedRanks> cache;
  for (int n = 3; n <= max_n; n += 2) {
    BigradedRanks t;
    {
      std::lock_guard<std::mutex> lock(mu);
      auto it = cache.find(n);
      if (it == cache.end()) {
        const Diagram d = Diagram::from_braid_closure(BraidWord{2, std::vector<int>(n, 1)});
        it = cache.emplace(n, homology_ranks(build_cube(d, CoefficientRing::rationals(), {n}))).first;
      }
      t = it->second;
    }
    if (t.ranks == q.ranks) return n;
    BigradedRanks m;
    for (const auto& [b, v] : t.ranks) m.add(-b.i, -b.j, v);
    if (m.ranks == q.ranks) return -n;
  }
  return 0;
}

Diagram diagram_of(const KnotRecord& record) {
  if (record.pd) return Diagram::from_pd(*record.pd);
  if (record.braid) return Diagram::from_braid_closure(*record.braid);
  throw InputError("record " + record.name + " has neither pd nor braid");
}

ClassificationReport classify(const KnotRecord& record, const ClassifyOptions& opt) {
  return classify(record.name, diagram_of(record), opt, &record);
}

ClassificationReport classify(const std::string& name, const Diagram& d, const ClassifyOptions& opt,
                              const KnotRecord* record) {
  if (!d.is_knot()) throw InputError(name + ": classification needs a knot, got " +
                                     std::to_string(d.component_count()) + " components");
  ClassificationReport rep;
  rep.name = name;
  rep.source = record && record->pd ? "pd" : (record && record->braid ? "braid" : "diagram");
  rep.crossings = d.crossing_count();
  rep.writhe = d.writhe();
  const BuildOptions build{opt.crossing_limit};

  const BigradedComplex cube = build_cube(d, CoefficientRing::rationals(), build);
  cube.verify_d_squared();
  rep.ranks_q = homology_ranks(cube);
  if (opt.with_z2) rep.ranks_z2 = homology_ranks(cube, CoefficientRing::prime_field(2));
  if (opt.with_integral) rep.ranks_z = homology_ranks(cube, CoefficientRing::integers());
  const BigradedComplex reduced = build_reduced(d, 0, CoefficientRing::rationals(), build);
  rep.ranks_reduced = homology_ranks(reduced);
  rep.rank_h = rep.ranks_q.total_rank();
  rep.rank_reduced = rep.ranks_reduced.total_rank();

  rep.support = diagonal_support(rep.ranks_q);
  rep.thickness = rep.support.hw == 2 ? Thickness::Thin : Thickness::Thick;
  rep.reduced_diagonals = diagonal_support(rep.ranks_reduced).diagonals;
  const bool thin = rep.thickness == Thickness::Thin;

  rep.jones = jones_from_homology(rep.ranks_q);
  const LaurentPoly bracket = bracket_jones(d);
  rep.euler = rep.jones == bracket ? Flag::holds()
                                   : Flag::fails("bracket gives " + bracket.to_string());
  if (jones_from_reduced(rep.ranks_reduced) != rep.jones && rep.euler.ok()) {
    rep.euler = Flag::fails("reduced Euler characteristic differs");
  }

  rep.alexander = alexander(d);
  try {
    rep.determinant = determinant(rep.alexander, rep.jones);
    rep.determinant_routes = Flag::holds();
  } catch (const ConsistencyError& e) {
    rep.determinant = rep.alexander.evaluate(-1);
    rep.determinant_routes = Flag::fails(e.what());
  }
  if (record && record->alexander) {
    rep.alexander_table = *record->alexander == rep.alexander
                              ? Flag::holds()
                              : Flag::fails("table has " + record->alexander->to_string());
  } else {
    rep.alexander_table = Flag::not_applicable("no table value");
  }

  rep.signature = signature(d);
  std::string sig_issue;
  if (record && record->braid) {
    const Diagram bd = Diagram::from_braid_closure(*record->braid);
    if (bd.is_knot()) {
      rep.signature_braid = signature(*record->braid);
      if (*rep.signature_braid != rep.signature) sig_issue = "braid gives " + std::to_string(*rep.signature_braid);
    }
  }
  if (record && record->signature) {
    rep.signature_table = record->signature;
    if (*record->signature != rep.signature && sig_issue.empty()) {
      sig_issue = "table gives " + std::to_string(*record->signature);
    }
  }
  rep.signature_agreement = sig_issue.empty() ? Flag::holds() : Flag::fails(sig_issue);

  rep.sigma_diagonals = check_sigma_diagonals(rep.ranks_q, rep.signature);
  rep.knight = knight_pairing_check(rep.ranks_q, rep.signature);
  rep.z2_pattern = rep.ranks_z2 ? z2_pattern_check(rep.ranks_q, *rep.ranks_z2, rep.knight)
                                : Flag::not_applicable("Z2 ranks not computed");

  rep.jones_alternating = is_alternating_poly(rep.jones, 2);
  rep.jones_gap = has_gap(rep.jones, 2);
  if (rep.jones_gap) rep.torus_2n = torus_2n_match(rep.ranks_q, std::max(3, rep.crossings));
  if (!thin) {
    rep.jones_pattern = Flag::not_applicable("thick");
  } else if (!rep.jones_alternating) {
    rep.jones_pattern = Flag::fails("J not alternating");
  } else if (rep.jones_gap && rep.torus_2n == 0) {
    rep.jones_pattern = Flag::fails("J has a gap");
  } else {
    rep.jones_pattern = Flag::holds(rep.jones_gap ? "(2," + std::to_string(std::abs(rep.torus_2n)) + ")-torus gap" : "");
  }
  rep.alexander_alternating = is_alternating_poly(rep.alexander, 1);
  rep.alexander_gap = has_gap(rep.alexander, 1);
  if (!thin) {
    rep.alexander_pattern = Flag::not_applicable("thick");
  } else if (!rep.alexander_alternating) {
    rep.alexander_pattern = Flag::fails("Delta not alternating");
  } else if (rep.alexander_gap) {
    rep.alexander_pattern = Flag::fails("Delta has a gap");
  } else {
    rep.alexander_pattern = Flag::holds();
  }

  if (opt.with_module) {
    const MinimalComplex minimal = minimize_module_complex(build_module_complex(d, 0, build));
    rep.summands = interval_decomposition(minimal);
    rep.h_restricted = h_restricted_check(rep.summands, rep.rank_h, rep.rank_reduced);
    const BigradedRanks re = ranks_of_summands(rep.summands);
    rep.reassembly = re.ranks == rep.ranks_q.ranks ? Flag::holds() : Flag::fails("summand ranks differ");
  } else {
    rep.h_restricted = rep.reassembly = Flag::not_applicable("module complex skipped");
  }

  rep.ap_special = ap_special(rep.alexander);
  if (record && record->alternating) {
    rep.alternating = record->alternating;
    rep.alternating_source = "table";
  } else {
    rep.alternating = is_alternating_diagram(d);
    rep.alternating_source = "diagram";
  }
  rep.ap_special_not_alternating = !rep.ap_special ? Flag::not_applicable("not Ap-special")
                                   : *rep.alternating ? Flag::fails("Ap-special but alternating")
                                                      : Flag::holds();

  rep.adequacy = adequacy_check(d, rep.ranks_q, *rep.alternating);
  Diagram pos = d;
  if (!is_positive_diagram(d) && record && record->braid) {
    const Diagram bd = Diagram::from_braid_closure(*record->braid);
    if (bd.is_knot() && is_positive_diagram(bd)) pos = bd;
  }
  rep.positivity = positive_knot_check(pos, rep.ranks_q);
  rep.identities = rank_identities_check(rep.ranks_q, rep.jones, rep.alexander);

  const std::int64_t det = std::abs(rep.determinant);
  if (thin) {
    rep.reduced_vs_det = rep.rank_reduced == det ? Flag::holds()
                         : Flag::fails("reduced rank " + std::to_string(rep.rank_reduced) + ", |det| " + std::to_string(det));
  } else {
    rep.reduced_vs_det = rep.rank_reduced > det ? Flag::holds()
                         : Flag::fails("reduced rank " + std::to_string(rep.rank_reduced) + ", |det| " + std::to_string(det));
  }
  rep.reduced_one_diagonal = (rep.reduced_diagonals.size() == 1) == thin
                                 ? Flag::holds()
                                 : Flag::fails(std::to_string(rep.reduced_diagonals.size()) + " reduced diagonals");
  return rep;
}

}  // namespace kh
