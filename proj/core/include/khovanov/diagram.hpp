#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "khovanov/knotio.hpp"

namespace kh {

/// Disjoint-set forest with path compression and union by size.
class UnionFind {
 public:
  explicit UnionFind(int n = 0) { reset(n); }

  void reset(int n) {
    parent_.resize(n);
    size_.assign(n, 1);
    for (int i = 0; i < n; ++i) parent_[i] = i;
    sets_ = n;
  }
  int find(int x) {
    int root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {
      const int next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    --sets_;
    return true;
  }
  int set_count() const noexcept { return sets_; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  int sets_ = 0;
};

/// Slot positions inside a crossing tuple (counterclockwise from the
/// incoming under-strand).
enum Slot : int { kUnderIn = 0, kSlotB = 1, kUnderOut = 2, kSlotD = 3 };

/// Bit k set means the 1-resolution at crossing k.
struct ResolutionState {
  std::uint64_t bits = 0;

  bool one_at(int k) const noexcept { return (bits >> k) & 1u; }
  int height() const noexcept { return __builtin_popcountll(bits); }
};

/// Circles of a resolved diagram. Each edge is one arc of exactly one circle;
/// circles are numbered by their smallest member edge.
struct CircleSet {
  int count = 0;
  std::vector<int> circle_of_edge;
};

/// Oriented link diagram: crossings over 0-based edge ids with signs derived
/// from the orientation.
class Diagram {
 public:
  Diagram() = default;

  /// Orientation is read from the under-strands (a → c) and propagated along
  /// components; components that never pass under fall back to label order.
  static Diagram from_pd(const PdCode& pd);
  /// Closure of a braid, strands oriented downward; σ_i gives a positive crossing.
  static Diagram from_braid_closure(const BraidWord& braid);
  /// The 0-crossing unknot.
  static Diagram unknot() { return Diagram{}; }

  int crossing_count() const noexcept { return static_cast<int>(crossings_.size()); }
  int edge_count() const noexcept { return static_cast<int>(edge_component_.size()); }
  int component_count() const noexcept { return components_; }
  bool is_knot() const noexcept { return components_ == 1; }

  const std::array<int, 4>& crossing(int k) const { return crossings_[k]; }
  int sign(int k) const { return signs_[k]; }
  const std::vector<int>& signs() const noexcept { return signs_; }
  int writhe() const;
  int positive_count() const;
  int negative_count() const;

  /// Edge leaving the crossing where `edge` ends (orientation successor).
  int next_edge(int edge) const { return next_edge_[edge]; }
  /// (crossing, slot) where the edge ends / starts.
  std::pair<int, int> head(int edge) const { return head_[edge]; }
  std::pair<int, int> tail(int edge) const { return tail_[edge]; }
  int component_of_edge(int edge) const { return edge_component_[edge]; }

  /// PD code with the diagram's own labels (edge id + 1).
  PdCode to_pd() const;
  /// Copy with edges renumbered consecutively along each oriented component.
  Diagram relabeled() const;

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.crossings_ == b.crossings_ && a.signs_ == b.signs_;
  }

 private:
  friend Diagram mirror(const Diagram& d);
  friend Diagram connected_sum(const Diagram& a, const Diagram& b, int edge_a, int edge_b);

  static Diagram build(std::vector<std::array<int, 4>> crossings, int edge_count,
                       const std::vector<std::pair<int, int>>* forced_heads);

  std::vector<std::array<int, 4>> crossings_;
  std::vector<int> signs_;
  std::vector<int> edge_component_;
  std::vector<int> next_edge_;
  std::vector<std::pair<int, int>> head_;
  std::vector<std::pair<int, int>> tail_;
  int components_ = 1;
};

/// Circles after smoothing every crossing per `state`. At crossing (a,b,c,d)
/// the 0-resolution joins arcs (a,b),(c,d); the 1-resolution (a,d),(b,c).
CircleSet resolve(const Diagram& d, ResolutionState state);
CircleSet s_plus(const Diagram& d);
CircleSet s_minus(const Diagram& d);

bool is_adequate(const Diagram& d);
/// Circles of the orientation-respecting smoothing.
int seifert_circle_count(const Diagram& d);
bool is_positive_diagram(const Diagram& d);
/// (n − s + 1)/2; throws InputError unless the diagram is positive.
int positive_diagram_genus(const Diagram& d);
/// Syntactic test: along every edge, the passage it leaves and the passage it
/// enters differ (over vs. under).
bool is_alternating_diagram(const Diagram& d);

Diagram mirror(const Diagram& d);
/// Splices two knot diagrams along the given (0-based) edges.
Diagram connected_sum(const Diagram& a, const Diagram& b, int edge_a = 0, int edge_b = 0);

}  // namespace kh
