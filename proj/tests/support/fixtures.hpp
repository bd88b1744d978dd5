#pragma once

#include <cctype>
#include <fstream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "khovanov/analysis.hpp"
#include "khovanov/diagram.hpp"
#include "khovanov/errors.hpp"
#include "khovanov/knotio.hpp"
#include "khovanov/linalg.hpp"

namespace fixtures {

inline std::string data_path(const std::string& file) { return std::string(KHOVANOV_DATA_DIR) + "/" + file; }

inline const std::vector<kh::KnotRecord>& census() {
  static const std::vector<kh::KnotRecord> table = kh::load_knot_table(data_path("census10.jsonl"));
  return table;
}

inline const kh::KnotRecord& census_knot(const std::string& name) {
  for (const auto& r : census()) {
    if (r.name == name) return r;
  }
  throw std::out_of_range("no census knot " + name);
}

inline kh::Diagram braid(const std::string& word) { return kh::Diagram::from_braid_closure(kh::parse_braid(word)); }
inline kh::Diagram pd(const std::string& code) { return kh::Diagram::from_pd(kh::parse_pd(code)); }
inline kh::Diagram diagram_of_record(const kh::KnotRecord& r) { return kh::diagram_of(r); }
inline kh::Diagram knot(const std::string& name) { return kh::diagram_of(census_knot(name)); }

// σ₁ⁿ on two strands
inline kh::Diagram torus2(int n) {
  std::string w;
  for (int k = 0; k < (n < 0 ? -n : n); ++k) w += n < 0 ? "-1 " : "1 ";
  return braid(w);
}

inline const std::vector<std::string>& thick_census() {
  static const std::vector<std::string> names = {"8_19",   "9_42",   "10_124", "10_128", "10_132", "10_136",
                                                  "10_139", "10_145", "10_152", "10_153", "10_154", "10_161"};
  return names;
}

inline std::map<std::pair<int, int>, long> plain(const kh::BigradedRanks& r) {
  std::map<std::pair<int, int>, long> out;
  for (const auto& [b, v] : r.ranks) out[{b.i, b.j}] = v;
  return out;
}

// Khovanov polynomial in the KnotInfo notation: terms c*t^(i)*q^(j)[*T^(2)].
// Returns ℚ ranks and ℤ₂-torsion multiplicities in (i, −j).
struct KhTable {
  std::map<std::pair<int, int>, long> free;
  std::map<std::pair<int, int>, long> torsion2;
};

inline KhTable parse_knotinfo_khovanov(const std::string& text) {
  KhTable out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('+', pos);
    if (end == std::string::npos) end = text.size();
    const std::string term = text.substr(pos, end - pos);
    pos = end + 1;
    long coeff = 1;
    int i = 0, j = 0;
    bool torsion = false;
    std::size_t k = 0;
    while (k < term.size()) {
      std::size_t stop = term.find('*', k);
      if (stop == std::string::npos) stop = term.size();
      const std::string f = term.substr(k, stop - k);
      k = stop + 1;
      if (f.empty()) throw std::invalid_argument("empty factor in " + term);
      if (std::isdigit(static_cast<unsigned char>(f[0]))) {
        coeff = std::stol(f);
        continue;
      }
      int e = 1;
      const auto caret = f.find('^');
      if (caret != std::string::npos) {
        std::string v = f.substr(caret + 1);
        if (!v.empty() && v.front() == '(') v = v.substr(1, v.size() - 2);
        e = std::stoi(v);
      }
      switch (f[0]) {
        case 't': i = e; break;
        case 'q': j = -e; break;
        case 'T':
          if (e != 2) throw std::invalid_argument("unexpected torsion order in " + term);
          torsion = true;
          break;
        default: throw std::invalid_argument("bad factor " + f);
      }
    }
    (torsion ? out.torsion2 : out.free)[{i, j}] += coeff;
  }
  return out;
}

// ℤ₂ ranks implied by a ℚ table plus ℤ₂ torsion: each ℤ₂ at (i, j) counts at i and i−1.
inline std::map<std::pair<int, int>, long> z2_from_table(const KhTable& t) {
  auto out = t.free;
  for (const auto& [b, m] : t.torsion2) {
    out[b] += m;
    out[{b.first - 1, b.second}] += m;
  }
  return out;
}

inline std::map<std::pair<int, int>, long> mirrored(const std::map<std::pair<int, int>, long>& m) {
  std::map<std::pair<int, int>, long> out;
  for (const auto& [b, v] : m) out[{-b.first, -b.second}] = v;
  return out;
}

inline std::map<std::string, std::string> knotinfo_khovanov() {
  std::map<std::string, std::string> out;
  std::ifstream in(data_path("census10_khovanov.tsv"));
  std::string line;
  while (std::getline(in, line)) {
    const auto tab = line.find('\t');
    if (tab != std::string::npos) out[line.substr(0, tab)] = line.substr(tab + 1);
  }
  return out;
}

}  // namespace fixtures
