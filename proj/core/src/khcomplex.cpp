#include "khovanov/khcomplex.hpp"

#include <bit>
#include <sstream>

#include "khovanov/errors.hpp"

namespace kh {

namespace {

struct StateInfo {
  CircleSet circles;
  std::vector<int> rep;  // smallest edge of each circle
  int marked = 0;
  int height = 0;
};

struct Cube {
  int n = 0;
  int npos = 0;
  int nneg = 0;
  std::vector<StateInfo> states;
};

Cube enumerate(const Diagram& d, int base_edge, const BuildOptions& opt) {
  const int n = d.crossing_count();
  if (n > opt.crossing_limit) {
    throw SizeLimitError("diagram has " + std::to_string(n) + " crossings, limit is " +
                         std::to_string(opt.crossing_limit));
  }
  if (n > 30) throw SizeLimitError("more than 30 crossings");
  Cube cube;
  cube.n = n;
  cube.npos = d.positive_count();
  cube.nneg = d.negative_count();
  cube.states.resize(std::size_t{1} << n);
  for (std::uint64_t s = 0; s < cube.states.size(); ++s) {
    StateInfo& info = cube.states[s];
    info.circles = resolve(d, ResolutionState{s});
    if (info.circles.count > 31) throw SizeLimitError("state with more than 31 circles");
    info.rep.assign(info.circles.count, -1);
    for (int e = 0; e < static_cast<int>(info.circles.circle_of_edge.size()); ++e) {
      int& r = info.rep[info.circles.circle_of_edge[e]];
      if (r == -1) r = e;
    }
    info.marked = d.edge_count() == 0 ? 0 : info.circles.circle_of_edge.at(base_edge);
    info.height = std::popcount(s);
  }
  return cube;
}

// quantum grading q; the stored j is its negative.
int quantum(const Cube& cube, const StateInfo& st, std::uint32_t labels) {
  return st.circles.count - 2 * std::popcount(labels) + st.height + cube.npos - 2 * cube.nneg;
}

// Image of one generator along the cube edge s → s | (1 << k): target labels
// with coefficient ±1 (sign excluded).
struct EdgeMap {
  bool merge = false;
  int src_a = 0, src_b = 0;  // merge: the two circles; split: src_a only
  int tgt_a = 0, tgt_b = 0;  // split: the two circles; merge: tgt_a only
  std::vector<int> others;   // source circle → target circle for uninvolved circles, −1 otherwise

  template <class Out>
  void apply(std::uint32_t labels, Out&& out) const {
    std::uint32_t base = 0;
    for (int c = 0; c < static_cast<int>(others.size()); ++c) {
      if (others[c] >= 0 && ((labels >> c) & 1u)) base |= 1u << others[c];
    }
    if (merge) {
      const bool xa = (labels >> src_a) & 1u;
      const bool xb = (labels >> src_b) & 1u;
      if (xa && xb) return;
      out(base | ((xa || xb) ? 1u << tgt_a : 0u));
    } else if ((labels >> src_a) & 1u) {
      out(base | (1u << tgt_a) | (1u << tgt_b));
    } else {
      out(base | (1u << tgt_b));
      out(base | (1u << tgt_a));
    }
  }
};

EdgeMap edge_map(const Diagram& d, const StateInfo& s, const StateInfo& t, int k) {
  const auto& x = d.crossing(k);
  EdgeMap m;
  const auto& cs = s.circles.circle_of_edge;
  const auto& ct = t.circles.circle_of_edge;
  m.src_a = cs[x[0]];
  m.src_b = cs[x[2]];
  m.merge = m.src_a != m.src_b;
  if (m.merge) {
    m.tgt_a = ct[x[0]];
  } else {
    m.tgt_a = ct[x[0]];
    m.tgt_b = ct[x[1]];
    if (m.tgt_a == m.tgt_b) throw ConsistencyError("split did not separate circles");
  }
  m.others.assign(s.circles.count, -1);
  for (int c = 0; c < s.circles.count; ++c) {
    if (c == m.src_a || c == m.src_b) continue;
    m.others[c] = ct[s.rep[c]];
  }
  return m;
}

int edge_sign(std::uint64_t s, int k) {
  const std::uint64_t below = s & ((std::uint64_t{1} << k) - 1);
  return (std::popcount(below) & 1) ? -1 : 1;
}

enum class Flavor { Full, Reduced };

BigradedComplex build(const Diagram& d, int base_edge, const CoefficientRing& ring, const BuildOptions& opt,
                      Flavor flavor) {
  if (flavor == Flavor::Reduced) {
    if (!d.is_knot()) throw InputError("reduced complex requires a knot");
    if (d.edge_count() > 0 && (base_edge < 0 || base_edge >= d.edge_count())) {
      throw InputError("base edge out of range");
    }
  }
  const Cube cube = enumerate(d, flavor == Flavor::Reduced ? base_edge : 0, opt);
  const int shift = flavor == Flavor::Reduced ? -1 : 0;
  BigradedComplex out;
  out.ring = ring;

  // slice-local index of every admitted generator
  std::vector<std::vector<int>> index(cube.states.size());
  for (std::uint64_t s = 0; s < cube.states.size(); ++s) {
    const StateInfo& st = cube.states[s];
    const std::uint32_t count = 1u << st.circles.count;
    index[s].assign(count, -1);
    const int i = st.height - cube.nneg;
    for (std::uint32_t l = 0; l < count; ++l) {
      if (flavor == Flavor::Reduced && !((l >> st.marked) & 1u)) continue;
      const int j = -quantum(cube, st, l) + shift;
      ComplexSlice& sl = out.slices[{i, j}];
      sl.i = i;
      sl.j = j;
      index[s][l] = static_cast<int>(sl.basis.size());
      sl.basis.push_back({s, l});
    }
  }

  std::map<Bidegree, std::vector<SparseMatrix::Triplet>> triplets;
  for (std::uint64_t s = 0; s < cube.states.size(); ++s) {
    const StateInfo& st = cube.states[s];
    const int i = st.height - cube.nneg;
    for (int k = 0; k < cube.n; ++k) {
      if ((s >> k) & 1u) continue;
      const std::uint64_t t = s | (std::uint64_t{1} << k);
      const EdgeMap m = edge_map(d, st, cube.states[t], k);
      const int sign = edge_sign(s, k);
      for (std::uint32_t l = 0; l < index[s].size(); ++l) {
        const int src = index[s][l];
        if (src < 0) continue;
        const int j = -quantum(cube, st, l) + shift;
        auto& bucket = triplets[{i, j}];
        m.apply(l, [&](std::uint32_t tl) {
          const int tgt = index[t][tl];
          if (tgt < 0) throw ConsistencyError("differential leaves the subcomplex");
          bucket.push_back({tgt, src, sign});
        });
      }
    }
  }

  for (auto& [key, sl] : out.slices) {
    const ComplexSlice* next = out.slice(key.i + 1, key.j);
    const int rows = next ? static_cast<int>(next->basis.size()) : 0;
    auto it = triplets.find(key);
    std::vector<SparseMatrix::Triplet> tr;
    if (it != triplets.end()) tr = std::move(it->second);
    if (rows == 0 && !tr.empty()) throw ConsistencyError("differential changes j");
    sl.d = SparseMatrix::from_triplets(rows, static_cast<int>(sl.basis.size()), std::move(tr));
  }
  return out;
}

}  // namespace

const ComplexSlice* BigradedComplex::slice(int i, int j) const {
  auto it = slices.find({i, j});
  return it == slices.end() ? nullptr : &it->second;
}

long BigradedComplex::dimension() const {
  long n = 0;
  for (const auto& [k, s] : slices) n += static_cast<long>(s.basis.size());
  return n;
}

long BigradedComplex::dimension(int i) const {
  long n = 0;
  for (const auto& [k, s] : slices) {
    if (k.i == i) n += static_cast<long>(s.basis.size());
  }
  return n;
}

void BigradedComplex::verify_d_squared() const {
  for (const auto& [k, s] : slices) {
    const ComplexSlice* next = slice(k.i + 1, k.j);
    if (!next || s.d.is_zero() || next->d.is_zero()) continue;
    if (!next->d.multiply(s.d).is_zero()) {
      throw ConsistencyError("d^2 != 0 at (" + std::to_string(k.i) + ", " + std::to_string(k.j) + ")");
    }
  }
}

BigradedComplex build_cube(const Diagram& d, const CoefficientRing& ring, const BuildOptions& opt) {
  return build(d, 0, ring, opt, Flavor::Full);
}

BigradedComplex build_reduced(const Diagram& d, int base_edge, const CoefficientRing& ring,
                              const BuildOptions& opt) {
  return build(d, base_edge, ring, opt, Flavor::Reduced);
}

std::vector<int> ModuleComplex::free_ranks() const {
  std::vector<int> r;
  for (const auto& b : basis) r.push_back(static_cast<int>(b.size()));
  return r;
}

void ModuleComplex::verify_d_squared() const {
  for (std::size_t k = 0; k + 1 < differential.size(); ++k) {
    // (d∘d)(src) over A, accumulated per final target
    std::map<std::pair<int, int>, AElement<std::int64_t>> acc;
    std::multimap<int, const ModuleEntry*> second;
    for (const auto& e : differential[k + 1]) second.emplace(e.src, &e);
    for (const auto& e : differential[k]) {
      auto [lo, hi] = second.equal_range(e.tgt);
      for (auto it = lo; it != hi; ++it) {
        const auto& f = it->second->value;
        auto& a = acc[{e.src, it->second->tgt}];
        a.constant += e.value.constant * f.constant;
        a.linear += e.value.constant * f.linear + e.value.linear * f.constant;
      }
    }
    for (const auto& [key, a] : acc) {
      if (a.constant != 0 || a.linear != 0) {
        throw ConsistencyError("module complex: d^2 != 0 at degree " + std::to_string(min_degree + k));
      }
    }
  }
}

ModuleComplex build_module_complex(const Diagram& d, int base_edge, const BuildOptions& opt) {
  if (!d.is_knot()) throw InputError("module complex requires a knot");
  if (d.edge_count() > 0 && (base_edge < 0 || base_edge >= d.edge_count())) {
    throw InputError("base edge out of range");
  }
  const Cube cube = enumerate(d, base_edge, opt);
  ModuleComplex out;
  out.base_edge = base_edge;
  out.min_degree = -cube.nneg;
  out.basis.resize(cube.n + 1);
  out.differential.resize(cube.n + 1);

  std::vector<std::vector<int>> index(cube.states.size());
  for (std::uint64_t s = 0; s < cube.states.size(); ++s) {
    const StateInfo& st = cube.states[s];
    const std::uint32_t count = 1u << st.circles.count;
    index[s].assign(count, -1);
    auto& level = out.basis[st.height];
    for (std::uint32_t l = 0; l < count; ++l) {
      if ((l >> st.marked) & 1u) continue;
      index[s][l] = static_cast<int>(level.size());
      level.push_back({{s, l}, -quantum(cube, st, l)});
    }
  }

  for (std::uint64_t s = 0; s < cube.states.size(); ++s) {
    const StateInfo& st = cube.states[s];
    for (int k = 0; k < cube.n; ++k) {
      if ((s >> k) & 1u) continue;
      const std::uint64_t t = s | (std::uint64_t{1} << k);
      const StateInfo& tt = cube.states[t];
      const EdgeMap m = edge_map(d, st, tt, k);
      const int sign = edge_sign(s, k);
      auto& bucket = out.differential[st.height];
      for (std::uint32_t l = 0; l < index[s].size(); ++l) {
        const int src = index[s][l];
        if (src < 0) continue;
        m.apply(l, [&](std::uint32_t tl) {
          ModuleEntry e{src, 0, {}};
          if ((tl >> tt.marked) & 1u) {
            e.tgt = index[t][tl & ~(1u << tt.marked)];
            e.value.linear = sign;
          } else {
            e.tgt = index[t][tl];
            e.value.constant = sign;
          }
          bucket.push_back(e);
        });
      }
    }
  }
  return out;
}

std::string dump_complex(const BigradedComplex& c) {
  std::ostringstream os;
  os << "complex ring " << c.ring.name() << " slices " << c.slices.size() << "\n";
  for (const auto& [k, s] : c.slices) {
    os << "slice " << k.i << " " << k.j << " dim " << s.basis.size() << "\n";
    for (std::size_t g = 0; g < s.basis.size(); ++g) {
      os << "  gen " << g << " state " << s.basis[g].state << " labels " << s.basis[g].labels << "\n";
    }
    for (int col = 0; col < s.d.cols(); ++col) {
      for (const auto& e : s.d.column(col)) {
        os << "  d " << col << " " << e.row << " " << e.value << "\n";
      }
    }
  }
  return os.str();
}

}  // namespace kh
