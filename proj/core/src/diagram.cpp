#include "khovanov/diagram.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "khovanov/errors.hpp"

namespace kh {

namespace {

constexpr int partner_slot(int slot) { return slot ^ 2; }

}  // namespace

Diagram Diagram::build(std::vector<std::array<int, 4>> crossings, int edge_count,
                       const std::vector<std::pair<int, int>>* forced_heads) {
  Diagram d;
  const int n = static_cast<int>(crossings.size());
  if (n == 0) return d;

  // occurrences[e] = the two (crossing, slot) positions of edge e.
  std::vector<std::array<std::pair<int, int>, 2>> occ(edge_count);
  std::vector<int> seen(edge_count, 0);
  for (int k = 0; k < n; ++k) {
    for (int s = 0; s < 4; ++s) {
      const int e = crossings[k][s];
      if (e < 0 || e >= edge_count || seen[e] >= 2) {
        throw InputError("diagram: edge " + std::to_string(e + 1) + " does not appear exactly twice");
      }
      occ[e][seen[e]++] = {k, s};
    }
  }
  for (int e = 0; e < edge_count; ++e) {
    if (seen[e] != 2) throw InputError("diagram: edge " + std::to_string(e + 1) + " does not appear exactly twice");
  }

  // head_occ[e] ∈ {-1, 0, 1}: which occurrence is the end of the edge.
  std::vector<int> head_occ(edge_count, -1);
  std::deque<int> work;
  auto occurrence_index = [&](int e, int k, int s) {
    return occ[e][0] == std::pair<int, int>{k, s} ? 0 : 1;
  };
  auto mark_head_at = [&](int k, int s) {
    const int e = crossings[k][s];
    const int o = occurrence_index(e, k, s);
    if (head_occ[e] == -1) {
      head_occ[e] = o;
      work.push_back(e);
    } else if (head_occ[e] != o) {
      throw InputError("diagram: inconsistent orientation at edge " + std::to_string(e + 1));
    }
  };
  auto mark_tail_at = [&](int k, int s) {
    const int e = crossings[k][s];
    const int o = 1 - occurrence_index(e, k, s);
    const auto [hk, hs] = occ[e][o];
    mark_head_at(hk, hs);
  };
  auto propagate = [&] {
    while (!work.empty()) {
      const int e = work.front();
      work.pop_front();
      const auto [hk, hs] = occ[e][head_occ[e]];
      const auto [tk, ts] = occ[e][1 - head_occ[e]];
      // The strand continues out of the head and into the tail.
      mark_tail_at(hk, partner_slot(hs));
      mark_head_at(tk, partner_slot(ts));
    }
  };

  if (forced_heads) {
    for (const auto& [k, s] : *forced_heads) mark_head_at(k, s);
  } else {
    for (int k = 0; k < n; ++k) {
      mark_head_at(k, kUnderIn);
      mark_tail_at(k, kUnderOut);
    }
  }
  propagate();
  for (int e = 0; e < edge_count; ++e) {
    if (head_occ[e] != -1) continue;
    // Component with no under-passage: orient by label succession.
    int choice = 0;
    for (int o = 0; o < 2; ++o) {
      const auto [k, s] = occ[e][o];
      if (crossings[k][partner_slot(s)] == e + 1) choice = o;
    }
    head_occ[e] = choice;
    work.push_back(e);
    propagate();
  }

  d.crossings_ = std::move(crossings);
  d.signs_.resize(n);
  d.head_.resize(edge_count);
  d.tail_.resize(edge_count);
  d.next_edge_.resize(edge_count);
  for (int e = 0; e < edge_count; ++e) {
    d.head_[e] = occ[e][head_occ[e]];
    d.tail_[e] = occ[e][1 - head_occ[e]];
  }
  for (int k = 0; k < n; ++k) {
    if (d.head_[d.crossings_[k][kUnderIn]] != std::pair<int, int>{k, kUnderIn}) {
      throw InputError("diagram: crossing " + std::to_string(k + 1) + " slot a is not incoming");
    }
    const int ed = d.crossings_[k][kSlotD];
    d.signs_[k] = d.head_[ed] == std::pair<int, int>{k, kSlotD} ? +1 : -1;
  }
  for (int e = 0; e < edge_count; ++e) {
    const auto [k, s] = d.head_[e];
    d.next_edge_[e] = d.crossings_[k][partner_slot(s)];
  }
  d.edge_component_.assign(edge_count, -1);
  d.components_ = 0;
  for (int e = 0; e < edge_count; ++e) {
    if (d.edge_component_[e] != -1) continue;
    int x = e;
    while (d.edge_component_[x] == -1) {
      d.edge_component_[x] = d.components_;
      x = d.next_edge_[x];
    }
    ++d.components_;
  }
  return d;
}

Diagram Diagram::from_pd(const PdCode& pd) {
  std::vector<std::array<int, 4>> crossings;
  crossings.reserve(pd.crossings.size());
  for (const auto& c : pd.crossings) crossings.push_back({c[0] - 1, c[1] - 1, c[2] - 1, c[3] - 1});
  return build(std::move(crossings), 2 * pd.crossing_count(), nullptr);
}

Diagram Diagram::from_braid_closure(const BraidWord& braid) {
  const int k = braid.strands;
  if (k < 1) throw InputError("braid: strand count must be positive");
  if (braid.letters.empty()) {
    if (k == 1) return unknot();
    throw InputError("braid: closure of the empty braid on " + std::to_string(k) + " strands is a split link");
  }
  std::vector<bool> touched(k, false);
  for (int l : braid.letters) {
    const int i = l < 0 ? -l : l;
    if (i < 1 || i > k - 1) throw InputError("braid: letter " + std::to_string(l) + " out of range");
    touched[i - 1] = touched[i] = true;
  }
  for (int p = 0; p < k; ++p) {
    if (!touched[p]) {
      throw InputError("braid: strand " + std::to_string(p + 1) + " meets no crossing (split unknotted component)");
    }
  }

  std::vector<int> cur(k);
  for (int p = 0; p < k; ++p) cur[p] = p;
  int next_id = k;
  std::vector<std::array<int, 4>> crossings;
  std::vector<std::pair<int, int>> incoming;
  for (int l : braid.letters) {
    const int p = (l < 0 ? -l : l) - 1;
    const int a_in = cur[p];       // strand moving left → right
    const int b_in = cur[p + 1];   // strand moving right → left
    const int a_out = next_id++;
    const int b_out = next_id++;
    const int kk = static_cast<int>(crossings.size());
    if (l > 0) {
      crossings.push_back({a_in, b_out, a_out, b_in});
      incoming.push_back({kk, 0});
      incoming.push_back({kk, 3});
    } else {
      crossings.push_back({b_in, a_in, b_out, a_out});
      incoming.push_back({kk, 0});
      incoming.push_back({kk, 1});
    }
    cur[p] = b_out;
    cur[p + 1] = a_out;
  }
  // Close up: bottom edge at position p is the top edge p.
  std::vector<int> remap(next_id);
  for (int e = 0; e < next_id; ++e) remap[e] = e;
  for (int p = 0; p < k; ++p) remap[cur[p]] = p;
  std::vector<int> compact(next_id, -1);
  int used = 0;
  for (auto& c : crossings) {
    for (int& e : c) {
      e = remap[e];
      if (compact[e] == -1) compact[e] = used++;
      e = compact[e];
    }
  }
  return build(std::move(crossings), used, &incoming).relabeled();
}

int Diagram::writhe() const {
  int w = 0;
  for (int s : signs_) w += s;
  return w;
}

int Diagram::positive_count() const {
  return static_cast<int>(std::count(signs_.begin(), signs_.end(), 1));
}

int Diagram::negative_count() const {
  return static_cast<int>(std::count(signs_.begin(), signs_.end(), -1));
}

PdCode Diagram::to_pd() const {
  PdCode pd;
  for (const auto& c : crossings_) pd.crossings.push_back({c[0] + 1, c[1] + 1, c[2] + 1, c[3] + 1});
  return pd;
}

Diagram Diagram::relabeled() const {
  const int m = edge_count();
  if (m == 0) return *this;
  std::vector<int> label(m, -1);
  int next = 0;
  for (int e = 0; e < m; ++e) {
    if (label[e] != -1) continue;
    int x = e;
    while (label[x] == -1) {
      label[x] = next++;
      x = next_edge_[x];
    }
  }
  std::vector<std::array<int, 4>> crossings = crossings_;
  for (auto& c : crossings) {
    for (int& e : c) e = label[e];
  }
  std::vector<std::pair<int, int>> incoming;
  for (int e = 0; e < m; ++e) incoming.push_back(head_[e]);
  return build(std::move(crossings), m, &incoming);
}

CircleSet resolve(const Diagram& d, ResolutionState state) {
  CircleSet cs;
  const int n = d.crossing_count();
  if (n == 0) {
    cs.count = 1;
    return cs;
  }
  if (n < 64 && (state.bits >> n) != 0) throw InputError("resolve: state out of range");
  const int m = d.edge_count();
  UnionFind uf(m);
  for (int k = 0; k < n; ++k) {
    const auto& c = d.crossing(k);
    if (state.one_at(k)) {
      uf.unite(c[0], c[3]);
      uf.unite(c[1], c[2]);
    } else {
      uf.unite(c[0], c[1]);
      uf.unite(c[2], c[3]);
    }
  }
  cs.circle_of_edge.assign(m, -1);
  std::vector<int> id_of_root(m, -1);
  for (int e = 0; e < m; ++e) {
    const int r = uf.find(e);
    if (id_of_root[r] == -1) id_of_root[r] = cs.count++;
    cs.circle_of_edge[e] = id_of_root[r];
  }
  return cs;
}

CircleSet s_plus(const Diagram& d) { return resolve(d, ResolutionState{0}); }

CircleSet s_minus(const Diagram& d) {
  const int n = d.crossing_count();
  return resolve(d, ResolutionState{n == 0 ? 0 : (n >= 64 ? ~0ull : (1ull << n) - 1)});
}

bool is_adequate(const Diagram& d) {
  const CircleSet plus = s_plus(d);
  const CircleSet minus = s_minus(d);
  for (int k = 0; k < d.crossing_count(); ++k) {
    const auto& c = d.crossing(k);
    if (plus.circle_of_edge[c[0]] == plus.circle_of_edge[c[2]]) return false;
    if (minus.circle_of_edge[c[0]] == minus.circle_of_edge[c[1]]) return false;
  }
  return true;
}

int seifert_circle_count(const Diagram& d) {
  ResolutionState st;
  for (int k = 0; k < d.crossing_count(); ++k) {
    if (d.sign(k) < 0) st.bits |= 1ull << k;
  }
  return resolve(d, st).count;
}

bool is_positive_diagram(const Diagram& d) {
  return std::all_of(d.signs().begin(), d.signs().end(), [](int s) { return s > 0; });
}

int positive_diagram_genus(const Diagram& d) {
  if (!is_positive_diagram(d)) throw InputError("genus formula applies to positive diagrams only");
  return (d.crossing_count() - seifert_circle_count(d) + 1) / 2;
}

bool is_alternating_diagram(const Diagram& d) {
  for (int e = 0; e < d.edge_count(); ++e) {
    const bool leaves_under = d.tail(e).second == kUnderOut;
    const bool enters_under = d.head(e).second == kUnderIn;
    if (leaves_under == enters_under) return false;
  }
  return true;
}

Diagram mirror(const Diagram& d) {
  if (d.crossing_count() == 0) return d;
  std::vector<std::array<int, 4>> crossings;
  std::vector<std::pair<int, int>> incoming;
  for (int k = 0; k < d.crossing_count(); ++k) {
    const auto& c = d.crossing(k);
    if (d.sign(k) > 0) {
      crossings.push_back({c[3], c[0], c[1], c[2]});
    } else {
      crossings.push_back({c[1], c[2], c[3], c[0]});
    }
  }
  for (int e = 0; e < d.edge_count(); ++e) {
    auto [k, s] = d.head(e);
    // Slot s of the old tuple moves to (s + 1) mod 4 when rotated by one, or
    // (s + 3) mod 4 when rotated by three.
    incoming.push_back({k, d.sign(k) > 0 ? (s + 1) % 4 : (s + 3) % 4});
  }
  return Diagram::build(std::move(crossings), d.edge_count(), &incoming);
}

Diagram connected_sum(const Diagram& a, const Diagram& b, int edge_a, int edge_b) {
  if (!a.is_knot() || !b.is_knot()) throw InputError("connected_sum: both inputs must be knots");
  if (a.crossing_count() == 0) return b;
  if (b.crossing_count() == 0) return a;
  if (edge_a < 0 || edge_a >= a.edge_count() || edge_b < 0 || edge_b >= b.edge_count()) {
    throw InputError("connected_sum: splice edge out of range");
  }
  const int offset_edges = a.edge_count();
  const int offset_crossings = a.crossing_count();
  std::vector<std::array<int, 4>> crossings;
  for (int k = 0; k < a.crossing_count(); ++k) crossings.push_back(a.crossing(k));
  for (int k = 0; k < b.crossing_count(); ++k) {
    auto c = b.crossing(k);
    for (int& e : c) e += offset_edges;
    crossings.push_back(c);
  }
  std::vector<std::pair<int, int>> incoming;
  for (int e = 0; e < a.edge_count(); ++e) incoming.push_back(a.head(e));
  for (int e = 0; e < b.edge_count(); ++e) {
    auto [k, s] = b.head(e);
    incoming.push_back({k + offset_crossings, s});
  }
  // Swap the heads of the two splice edges.
  const auto [ka, sa] = a.head(edge_a);
  const auto [kb, sb] = b.head(edge_b);
  const int eb = edge_b + offset_edges;
  crossings[ka][sa] = eb;
  crossings[kb + offset_crossings][sb] = edge_a;
  std::swap(incoming[edge_a], incoming[eb]);
  return Diagram::build(std::move(crossings), offset_edges + b.edge_count(), &incoming).relabeled();
}

}  // namespace kh
