#include "khovanov/homology.hpp"

#include <algorithm>

#include "khovanov/errors.hpp"

namespace kh {

long BigradedRanks::rank(int i, int j) const {
  auto it = ranks.find({i, j});
  return it == ranks.end() ? 0 : it->second;
}

long BigradedRanks::total_rank() const {
  long t = 0;
  for (const auto& [b, r] : ranks) t += r;
  return t;
}

void BigradedRanks::add(int i, int j, long r) {
  if (r == 0) return;
  auto it = ranks.find({i, j});
  const long v = (it == ranks.end() ? 0 : it->second) + r;
  if (v < 0) throw ConsistencyError("negative rank at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
  if (v == 0) {
    ranks.erase(it);
  } else {
    ranks[{i, j}] = v;
  }
}

BigradedRanks homology_ranks(const BigradedComplex& c) { return homology_ranks(c, c.ring); }

BigradedRanks homology_ranks(const BigradedComplex& c, const CoefficientRing& ring) {
  const CoefficientRing field = ring.is_field() ? ring : CoefficientRing::rationals();
  std::map<Bidegree, int> out_rank;
  for (const auto& [k, s] : c.slices) out_rank[k] = rank_over_field(s.d, field);

  BigradedRanks r;
  r.ring = ring;
  for (const auto& [k, s] : c.slices) {
    const auto prev = out_rank.find({k.i - 1, k.j});
    const int in = prev == out_rank.end() ? 0 : prev->second;
    r.add(k.i, k.j, static_cast<long>(s.basis.size()) - out_rank[k] - in);
    if (ring.kind() == CoefficientRing::Kind::Integers && in > 0) {
      std::vector<Integer> tors;
      for (const auto& f : smith_normal_form(c.slice(k.i - 1, k.j)->d)) {
        if (f == 1) continue;
        for (auto& p : prime_power_decomposition(f)) tors.push_back(std::move(p));
      }
      std::sort(tors.begin(), tors.end());
      if (!tors.empty()) r.torsion[k] = std::move(tors);
    }
  }
  return r;
}

}  // namespace kh
