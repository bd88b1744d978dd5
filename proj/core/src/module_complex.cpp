#include <algorithm>
#include <limits>
#include <unordered_map>

#include "khovanov/errors.hpp"
#include "khovanov/homology.hpp"

namespace kh {

namespace {

using Elem = AElement<Rational>;

bool elem_zero(const Elem& e) { return sgn(e.constant) == 0 && sgn(e.linear) == 0; }

Elem mul(const Elem& a, const Elem& b) {
  return {a.constant * b.constant, a.constant * b.linear + a.linear * b.constant};
}

class Eliminator {
 public:
  Eliminator(const ModuleComplex& c, bool integral) : integral_(integral) {
    const std::size_t levels = c.basis.size();
    alive_.resize(levels);
    out_.resize(levels);
    in_.resize(levels);
    for (std::size_t k = 0; k < levels; ++k) {
      alive_[k].assign(c.basis[k].size(), 1);
      out_[k].resize(c.basis[k].size());
      in_[k].resize(c.basis[k].size());
    }
    for (std::size_t k = 0; k < c.differential.size(); ++k) {
      for (const auto& e : c.differential[k]) {
        Elem v{Rational(static_cast<long>(e.value.constant)), Rational(static_cast<long>(e.value.linear))};
        Elem& slot = out_[k][e.src][e.tgt];
        slot.constant += v.constant;
        slot.linear += v.linear;
      }
    }
    for (std::size_t k = 0; k < levels; ++k) {
      for (std::size_t x = 0; x < out_[k].size(); ++x) {
        for (auto it = out_[k][x].begin(); it != out_[k][x].end();) {
          if (elem_zero(it->second)) {
            it = out_[k][x].erase(it);
          } else {
            in_[k + 1][it->first][static_cast<int>(x)] = it->second;
            ++it;
          }
        }
      }
    }
  }

  void run() {
    bool progress = true;
    while (progress) {
      progress = false;
      for (std::size_t k = 0; k + 1 < out_.size(); ++k) {
        for (std::size_t x = 0; x < out_[k].size(); ++x) {
          if (!alive_[k][x]) continue;
          int best = -1;
          long best_cost = std::numeric_limits<long>::max();
          const long row_len = static_cast<long>(out_[k][x].size()) - 1;
          for (const auto& [y, v] : out_[k][x]) {
            if (!is_unit(v)) continue;
            const long cost = row_len * (static_cast<long>(in_[k + 1][y].size()) - 1);
            if (cost < best_cost || (cost == best_cost && y < best)) {
              best = y;
              best_cost = cost;
            }
          }
          if (best < 0) continue;
          cancel(k, static_cast<int>(x), best);
          progress = true;
        }
      }
    }
  }

  MinimalComplex result(const ModuleComplex& c, const CoefficientRing& ring) const {
    MinimalComplex m;
    m.ring = ring;
    m.min_degree = c.min_degree;
    const std::size_t levels = c.basis.size();
    std::vector<std::vector<int>> renumber(levels);
    m.jgrades.resize(levels);
    m.differential.resize(levels);
    for (std::size_t k = 0; k < levels; ++k) {
      renumber[k].assign(c.basis[k].size(), -1);
      for (std::size_t x = 0; x < c.basis[k].size(); ++x) {
        if (!alive_[k][x]) continue;
        renumber[k][x] = static_cast<int>(m.jgrades[k].size());
        m.jgrades[k].push_back(c.basis[k][x].j);
      }
    }
    for (std::size_t k = 0; k + 1 < levels; ++k) {
      for (std::size_t x = 0; x < out_[k].size(); ++x) {
        if (!alive_[k][x]) continue;
        std::vector<std::pair<int, Elem>> row(out_[k][x].begin(), out_[k][x].end());
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& [y, v] : row) m.differential[k].push_back({renumber[k][x], renumber[k + 1][y], v});
      }
    }
    return m;
  }

 private:
  using Row = std::unordered_map<int, Elem>;

  bool is_unit(const Elem& v) const {
    if (integral_) return abs(v.constant) == 1;
    return sgn(v.constant) != 0;
  }

  static Elem inverse(const Elem& u) {
    const Rational a = 1 / u.constant;
    return {a, -u.linear * a * a};
  }

  void cancel(std::size_t k, int x, int y) {
    const Elem inv = inverse(out_[k][x].at(y));
    std::vector<std::pair<int, Elem>> sources, targets;
    for (const auto& [s, v] : in_[k + 1][y]) {
      if (s != x) sources.emplace_back(s, mul(v, inv));
    }
    for (const auto& [t, v] : out_[k][x]) {
      if (t != y) targets.emplace_back(t, v);
    }
    for (const auto& [s, a] : sources) {
      Row& row = out_[k][s];
      for (const auto& [t, b] : targets) {
        const Elem p = mul(a, b);
        Elem& slot = row[t];
        slot.constant -= p.constant;
        slot.linear -= p.linear;
        if (elem_zero(slot)) {
          row.erase(t);
          in_[k + 1][t].erase(s);
        } else {
          in_[k + 1][t][s] = slot;
        }
      }
    }
    drop(k, x);
    drop(k + 1, y);
  }

  void drop(std::size_t k, int x) {
    alive_[k][x] = 0;
    for (const auto& [t, v] : out_[k][x]) in_[k + 1][t].erase(x);
    for (const auto& [s, v] : in_[k][x]) out_[k - 1][s].erase(x);
    Row().swap(out_[k][x]);
    Row().swap(in_[k][x]);
  }

  bool integral_;
  std::vector<std::vector<char>> alive_;
  std::vector<std::vector<Row>> out_;  // out_[k][x][y]: degree k → k+1
  std::vector<std::vector<Row>> in_;   // in_[k][y][x]: degree k−1 → k
};

}  // namespace

std::vector<int> MinimalComplex::free_ranks() const {
  std::vector<int> r;
  for (const auto& g : jgrades) r.push_back(static_cast<int>(g.size()));
  return r;
}

bool MinimalComplex::is_minimal() const {
  for (const auto& level : differential) {
    for (const auto& e : level) {
      if (sgn(e.value.constant) != 0) return false;
    }
  }
  return true;
}

MinimalComplex minimize_module_complex(const ModuleComplex& c, const CoefficientRing& ring) {
  if (ring.kind() == CoefficientRing::Kind::PrimeField) {
    throw InputError("module minimization runs over Q or Z, not " + ring.name());
  }
  Eliminator e(c, ring.kind() == CoefficientRing::Kind::Integers);
  e.run();
  return e.result(c, ring);
}

BigradedRanks homology_ranks(const MinimalComplex& c) {
  // vector-space basis: generator g gives g at j and Xg at j + 2
  std::map<Bidegree, int> dims;
  std::vector<std::vector<std::pair<int, int>>> pos(c.jgrades.size());  // (index of g, index of Xg)
  for (std::size_t k = 0; k < c.jgrades.size(); ++k) {
    const int i = c.min_degree + static_cast<int>(k);
    for (int j : c.jgrades[k]) pos[k].emplace_back(dims[{i, j}]++, dims[{i, j + 2}]++);
  }
  std::map<Bidegree, std::vector<std::vector<Rational>>> mats;
  auto matrix = [&](int i, int j) -> std::vector<std::vector<Rational>>& {
    auto it = mats.find({i, j});
    if (it != mats.end()) return it->second;
    const int rows = dims.count({i + 1, j}) ? dims[{i + 1, j}] : 0;
    return mats[{i, j}] = std::vector<std::vector<Rational>>(rows, std::vector<Rational>(dims[{i, j}]));
  };
  for (std::size_t k = 0; k < c.differential.size(); ++k) {
    const int i = c.min_degree + static_cast<int>(k);
    for (const auto& e : c.differential[k]) {
      const int j = c.jgrades[k][e.src];
      const int jt = c.jgrades[k + 1][e.tgt];
      const auto [g, xg] = pos[k][e.src];
      const auto [h, xh] = pos[k + 1][e.tgt];
      if (sgn(e.value.constant) != 0) {
        if (jt != j) throw ConsistencyError("module entry breaks grading");
        matrix(i, j)[h][g] += e.value.constant;
        matrix(i, j + 2)[xh][xg] += e.value.constant;
      }
      if (sgn(e.value.linear) != 0) {
        if (jt + 2 != j) throw ConsistencyError("module entry breaks grading");
        matrix(i, j)[xh][g] += e.value.linear;
      }
    }
  }
  std::map<Bidegree, int> out_rank;
  for (auto& [k, m] : mats) out_rank[k] = rank_rational(m);
  BigradedRanks r;
  for (const auto& [k, dim] : dims) {
    const auto o = out_rank.find(k);
    const auto in = out_rank.find({k.i - 1, k.j});
    r.add(k.i, k.j, dim - (o == out_rank.end() ? 0 : o->second) - (in == out_rank.end() ? 0 : in->second));
  }
  return r;
}

MinimalComplex tensor_over_A(const MinimalComplex& a, const MinimalComplex& b) {
  MinimalComplex t;
  t.ring = a.ring;
  t.min_degree = a.min_degree + b.min_degree;
  const std::size_t levels = a.jgrades.size() + b.jgrades.size() - 1;
  t.jgrades.resize(levels);
  t.differential.resize(levels);
  // index of (degree ka, x, degree kb, y) in level ka + kb
  std::vector<std::vector<std::vector<int>>> index(a.jgrades.size(), std::vector<std::vector<int>>(b.jgrades.size()));
  for (std::size_t ka = 0; ka < a.jgrades.size(); ++ka) {
    for (std::size_t kb = 0; kb < b.jgrades.size(); ++kb) {
      auto& idx = index[ka][kb];
      auto& level = t.jgrades[ka + kb];
      for (int ja : a.jgrades[ka]) {
        for (int jb : b.jgrades[kb]) {
          idx.push_back(static_cast<int>(level.size()));
          level.push_back(ja + jb + 1);
        }
      }
    }
  }
  const auto nb = [&](std::size_t kb) { return static_cast<int>(b.jgrades[kb].size()); };
  for (std::size_t ka = 0; ka < a.jgrades.size(); ++ka) {
    for (std::size_t kb = 0; kb < b.jgrades.size(); ++kb) {
      auto& out = t.differential[ka + kb];
      if (ka < a.differential.size()) {
        for (const auto& e : a.differential[ka]) {
          if (ka + 1 >= a.jgrades.size()) break;
          for (int y = 0; y < nb(kb); ++y) {
            out.push_back({index[ka][kb][e.src * nb(kb) + y], index[ka + 1][kb][e.tgt * nb(kb) + y], e.value});
          }
        }
      }
      const int sign = ((a.min_degree + static_cast<int>(ka)) % 2 == 0) ? 1 : -1;
      if (kb < b.differential.size()) {
        for (const auto& e : b.differential[kb]) {
          if (kb + 1 >= b.jgrades.size()) break;
          for (int x = 0; x < static_cast<int>(a.jgrades[ka].size()); ++x) {
            AElement<Rational> v{sign * e.value.constant, sign * e.value.linear};
            out.push_back({index[ka][kb][x * nb(kb) + e.src], index[ka][kb + 1][x * nb(kb + 1) + e.tgt], v});
          }
        }
      }
    }
  }
  return t;
}

}  // namespace kh
