#include "khovanov/report.hpp"

#include <iomanip>
#include <map>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

namespace kh {

namespace {

using nlohmann::ordered_json;

ordered_json ranks_value(const BigradedRanks& r) {
  ordered_json a = ordered_json::array();
  for (const auto& [b, v] : r.ranks) {
    ordered_json e{{"i", b.i}, {"j", b.j}, {"rank", v}};
    a.push_back(e);
  }
  for (const auto& [b, t] : r.torsion) {
    ordered_json orders = ordered_json::array();
    for (const auto& x : t) orders.push_back(x.get_str());
    bool placed = false;
    for (auto& e : a) {
      if (e["i"] == b.i && e["j"] == b.j) {
        e["torsion"] = orders;
        placed = true;
      }
    }
    if (!placed) a.push_back(ordered_json{{"i", b.i}, {"j", b.j}, {"rank", 0}, {"torsion", orders}});
  }
  return a;
}

ordered_json summands_value(const std::vector<IntervalSummand>& s) {
  ordered_json a = ordered_json::array();
  for (const auto& x : s) a.push_back(ordered_json{{"n", x.length}, {"i", x.degree}, {"j", x.jshift}});
  return a;
}

ordered_json flag_value(const Flag& f) { return ordered_json{{"state", to_string(f.state)}, {"witness", f.witness}}; }

template <class T>
ordered_json optional_value(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

std::string dump(const ordered_json& j, int indent) { return j.dump(indent) + (indent >= 0 ? "\n" : ""); }

}  // namespace

std::vector<std::pair<std::string, const Flag*>> named_flags(const ClassificationReport& r) {
  return {
      {"euler", &r.euler},
      {"sigma_diagonals", &r.sigma_diagonals},
      {"knight_pairing", &r.knight.flag},
      {"jones_pattern", &r.jones_pattern},
      {"alexander_pattern", &r.alexander_pattern},
      {"alexander_table", &r.alexander_table},
      {"signature_agreement", &r.signature_agreement},
      {"h_restricted", &r.h_restricted},
      {"reassembly", &r.reassembly},
      {"ap_special_not_alternating", &r.ap_special_not_alternating},
      {"adequacy_extremal", &r.adequacy.extremal},
      {"adequacy_circle_sum", &r.adequacy.circle_sum},
      {"adequacy_thick", &r.adequacy.thick},
      {"positive_negative_degrees", &r.positivity.negative_degrees},
      {"positive_h0_support", &r.positivity.h0_support},
      {"positive_upper_vanishing", &r.positivity.upper_vanishing},
      {"rank_equality", &r.identities.equality},
      {"rank_inequality", &r.identities.inequality},
      {"rank_parity", &r.identities.parity},
      {"signed_sums", &r.identities.signed_sums},
      {"determinant_routes", &r.determinant_routes},
      {"reduced_vs_det", &r.reduced_vs_det},
      {"reduced_one_diagonal", &r.reduced_one_diagonal},
      {"z2_pattern", &r.z2_pattern},
  };
}

std::string ranks_table_text(const BigradedRanks& r) {
  if (r.empty() && r.torsion.empty()) return "(zero)\n";
  std::set<int> is, js;
  for (const auto& [b, v] : r.ranks) {
    is.insert(b.i);
    js.insert(b.j);
  }
  for (const auto& [b, t] : r.torsion) {
    is.insert(b.i);
    js.insert(b.j);
  }
  bool same_parity = true;
  for (int j : js) same_parity = same_parity && ((j - *js.begin()) % 2 == 0);
  const int step = same_parity ? 2 : 1;
  std::ostringstream os;
  os << std::setw(6) << "i\\j";
  for (int j = *js.begin(); j <= *js.rbegin(); j += step) os << std::setw(5) << j;
  os << "\n";
  for (int i = *is.begin(); i <= *is.rbegin(); ++i) {
    os << std::setw(6) << i;
    for (int j = *js.begin(); j <= *js.rbegin(); j += step) {
      const long v = r.rank(i, j);
      os << std::setw(5) << (v ? std::to_string(v) : ".");
    }
    os << "\n";
  }
  for (const auto& [b, t] : r.torsion) {
    os << "torsion (" << b.i << "," << b.j << "):";
    for (const auto& x : t) os << " Z" << x.get_str();
    os << "\n";
  }
  return os.str();
}

std::string ranks_json(const BigradedRanks& r, int indent) { return dump(ranks_value(r), indent); }

std::string summands_json(const std::vector<IntervalSummand>& s, int indent) {
  return dump(summands_value(s), indent);
}

std::string report_json(const ClassificationReport& r, int indent) {
  ordered_json j;
  j["name"] = r.name;
  j["source"] = r.source;
  j["crossings"] = r.crossings;
  j["writhe"] = r.writhe;
  ordered_json ranks;
  ranks["Q"] = ranks_value(r.ranks_q);
  if (r.ranks_z2) ranks["Z2"] = ranks_value(*r.ranks_z2);
  if (r.ranks_z) ranks["Z"] = ranks_value(*r.ranks_z);
  ranks["reduced"] = ranks_value(r.ranks_reduced);
  j["ranks"] = ranks;
  j["rank_h"] = r.rank_h;
  j["rank_reduced"] = r.rank_reduced;
  j["diagonals"] = r.support.diagonals;
  j["diagonal_totals"] = r.support.totals;
  j["hw"] = r.support.hw;
  j["thickness"] = r.thickness == Thickness::Thin ? "thin" : "thick";
  j["reduced_diagonals"] = r.reduced_diagonals;
  j["signature"] = r.signature;
  j["signature_braid"] = optional_value(r.signature_braid);
  j["signature_table"] = optional_value(r.signature_table);
  j["jones"] = r.jones.to_string();
  j["alexander"] = r.alexander.to_string();
  j["determinant"] = r.determinant;
  j["jones_alternating"] = r.jones_alternating;
  j["jones_gap"] = r.jones_gap;
  j["torus_2n"] = r.torus_2n;
  j["alexander_alternating"] = r.alexander_alternating;
  j["alexander_gap"] = r.alexander_gap;
  j["ap_special"] = r.ap_special;
  j["alternating"] = optional_value(r.alternating);
  j["alternating_source"] = r.alternating_source;
  ordered_json knight;
  ordered_json pairs = ordered_json::array();
  for (const auto& b : r.knight.pairs) pairs.push_back({b.i, b.j});
  knight["pairs"] = pairs;
  knight["removed_j"] = optional_value(r.knight.removed_j);
  knight["feasible_choices"] = r.knight.feasible_choices;
  j["knight"] = knight;
  j["summands"] = summands_value(r.summands);
  j["summand_counts"] = summand_counts(r.summands);
  j["adequacy"] = ordered_json{{"n", r.adequacy.n},
                               {"s_plus", r.adequacy.s_plus},
                               {"s_minus", r.adequacy.s_minus},
                               {"adequate", r.adequacy.adequate}};
  j["positivity"] = ordered_json{{"positive", r.positivity.positive},
                                 {"n", r.positivity.n},
                                 {"s", r.positivity.s},
                                 {"genus", r.positivity.genus},
                                 {"h1_vanishes", optional_value(r.positivity.h1_vanishes)}};
  j["identities"] = ordered_json{{"rank_h", r.identities.rank_h},
                                 {"jones_abs_sum", r.identities.jones_abs_sum},
                                 {"alexander_abs_sum", r.identities.alexander_abs_sum}};
  ordered_json flags;
  for (const auto& [key, f] : named_flags(r)) flags[key] = flag_value(*f);
  j["flags"] = flags;
  return dump(j, indent);
}

std::string report_text(const ClassificationReport& r) {
  std::ostringstream os;
  os << "knot " << r.name << "  (" << r.crossings << " crossings, writhe " << r.writhe << ")\n";
  os << "rank H = " << r.rank_h << ", reduced rank = " << r.rank_reduced << ", hw = " << r.support.hw << ", "
     << (r.thickness == Thickness::Thin ? "H-thin" : "H-thick") << "\n";
  os << "signature " << r.signature << ", det " << r.determinant << "\n";
  os << "J = " << r.jones.to_pretty_string() << "\n";
  os << "Delta = " << r.alexander.to_pretty_string() << "\n";
  if (!r.summands.empty()) os << "summands: " << summand_counts(r.summands) << "\n";
  os << "\nrational ranks\n" << ranks_table_text(r.ranks_q);
  if (r.ranks_z2) os << "\nZ2 ranks\n" << ranks_table_text(*r.ranks_z2);
  if (r.ranks_z) os << "\nintegral ranks\n" << ranks_table_text(*r.ranks_z);
  os << "\nreduced ranks\n" << ranks_table_text(r.ranks_reduced);
  os << "\n";
  for (const auto& [key, f] : named_flags(r)) {
    os << std::left << std::setw(28) << key << std::setw(6) << to_string(f->state);
    if (!f->witness.empty()) os << "  " << f->witness;
    os << "\n";
  }
  return os.str();
}

}  // namespace kh
