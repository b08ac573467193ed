#pragma once

#include <cstdint>
#include <vector>

#include "gp/core.hpp"
#include "gp/rational.hpp"

namespace gp::lift {

// Interval of the real line containing a coordinate. f(t) = 1/(1-t) permutes
// the three intervals circularly: Neg -> Mid -> Pos -> Neg, and is
// increasing on each of them.
enum class Region : std::int8_t { kNeg = 0, kMid = 1, kPos = 2 };

inline Region f_region(Region r) {
  return static_cast<Region>((static_cast<int>(r) + 1) % 3);
}

// f(t) = 1/(1-t); exact on rationals, f^3 = id. Throws std::domain_error at
// the pole t = 1 and at the excluded point t = 0.
Rational f_eval(const Rational& t);
Rational f_iterate(const Rational& t, int k);   // f^k, k >= 0

// A coordinate variable: line 0/1/2 = x/y/z, index 0..n-1.
// Encoded as the vertex id line*n + index.
struct VarId {
  int line = 0;
  int index = 0;
  int encode(int n) const { return line * n + index; }
  static VarId decode(int v, int n) { return VarId{v / n, v % n}; }
  bool operator==(const VarId&) const = default;
};

// Number of f applications sending a value in region r into (1, oo):
// Pos -> 0, Mid -> 1, Neg -> 2. The rep of vertex v is f^shift(v).
inline int rep_shift(Region r) { return 2 - static_cast<int>(r); }

// Rank and region tables of a tagged pattern, indexed by vertex id.
struct LiftContext {
  int n = 0;
  std::vector<int> rank;       // rank[l*n + e] = position of e on line l
  std::vector<Region> region;  // region of the coordinate of e on line l
};

LiftContext make_context(const core::TaggedPattern& p);
Region region_of(VarId v, const core::TaggedPattern& p);

// Directed graph over the 3n representatives, kept transitively closed.
// An edge v -> w means rep(v) < rep(w).
class RepGraph {
 public:
  explicit RepGraph(int n);

  int perm_size() const { return n_; }
  int vertex_count() const { return verts_; }

  bool edge(int v, int w) const {
    return bits_[static_cast<std::size_t>(v) * words_ + (w >> 6)] >> (w & 63) & 1u;
  }
  // Raw bit set; closure is not maintained. Used when batching edges before
  // a close_acyclic() call.
  void set_edge(int v, int w) {
    bits_[static_cast<std::size_t>(v) * words_ + (w >> 6)] |= 1ull << (w & 63);
  }

  // Warshall closure. Returns false (graph left closed but cyclic) when a
  // cycle exists.
  bool close_acyclic();

  enum class AddEdge { kAdded, kPresent, kCycle };
  // Adds v -> w and restores the closure in O(n^2). Reports (and does not
  // apply) a cycle-introducing edge.
  AddEdge add_edge_closure(int v, int w);

  // Smallest-vertex-first Kahn order; every edge goes forward. Throws
  // std::logic_error on a cycle.
  std::vector<int> topological_sort() const;

  bool acyclic() const;
  bool is_transitively_closed() const;
  void copy_bits_from(const RepGraph& other);

 private:
  const std::uint64_t* row(int v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }
  std::uint64_t* row(int v) { return bits_.data() + static_cast<std::size_t>(v) * words_; }

  int n_, verts_, words_;
  std::vector<std::uint64_t> bits_;
};

// Edges = same line, same region, earlier in the word. Transitively closed
// and acyclic by construction; cross-region pairs carry no edges (the
// regions already decide them).
RepGraph base_graph(const LiftContext& ctx);
RepGraph base_graph(const core::TaggedPattern& p);

enum class Cmp : std::int8_t { kLess, kGreater, kUnknown };

// Sign of u - f(w). Regions decide when region(u) != region(f(w)); otherwise
// rep(f(w)) = rep(w) and the graph edge between u and w answers, else
// Unknown.
Cmp compare_with_f(const RepGraph& g, const LiftContext& ctx, VarId u, VarId w);

// A full-dimensional cell of the lifted arrangement: a total order on the
// 9n lifted variables (id 3*vertex + shift) together with the positions of
// the constants 0 and 1.
struct CellOrder {
  int n = 0;                 // permutation size; 9n lifted variables
  std::vector<int> order;    // lifted ids in increasing value order
  int pos_zero = 0;          // number of lifted variables below 0
  int pos_one = 0;           // number of lifted variables below 1
};

// Proposition-style realizability conditions: (i) every block meets the
// three intervals in cyclic f order, (ii) an order inversion under f forces
// a separation by 1.
bool validate_lifted_order(const CellOrder& cell);

// The canonical witness: representatives get the integers 2..3n+1 in order,
// other variables are propagated through f. The order of the lifted witness
// equals the input cell exactly. Throws std::invalid_argument when the cell
// is not valid.
std::vector<Rational> witness_from_order(const CellOrder& cell);

// Cell induced by per-vertex regions plus a total order on representatives.
CellOrder cell_from_rep_order(const std::vector<Region>& regions,
                              const std::vector<int>& rep_order);

// Cell induced by a concrete point with no coordinate in {0, 1}.
CellOrder cell_from_point(const std::vector<Rational>& coords);

}  // namespace gp::lift
