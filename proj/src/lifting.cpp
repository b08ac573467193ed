#include "gp/lifting.hpp"

#include <algorithm>
#include <stdexcept>

namespace gp::lift {

Rational f_eval(const Rational& t) {
  if (t == 0 || t == 1) throw std::domain_error("f is restricted to R \\ {0, 1}");
  Rational out = Rational(1) / (Rational(1) - t);
  out.canonicalize();
  return out;
}

Rational f_iterate(const Rational& t, int k) {
  Rational out = t;
  for (int i = 0; i < k % 3; ++i) out = f_eval(out);
  return out;
}

LiftContext make_context(const core::TaggedPattern& p) {
  LiftContext ctx;
  ctx.n = p.size();
  ctx.rank.resize(3 * ctx.n);
  ctx.region.resize(3 * ctx.n);
  for (int l = 0; l < 3; ++l) {
    const auto& tp = p.lines[l];
    for (int pos = 0; pos < ctx.n; ++pos) ctx.rank[l * ctx.n + tp.perm.word[pos]] = pos;
    for (int e = 0; e < ctx.n; ++e) {
      int rank = ctx.rank[l * ctx.n + e];
      ctx.region[l * ctx.n + e] = rank < tp.tag_zero  ? Region::kNeg
                                  : rank < tp.tag_one ? Region::kMid
                                                      : Region::kPos;
    }
  }
  return ctx;
}

Region region_of(VarId v, const core::TaggedPattern& p) {
  const auto& tp = p.lines[v.line];
  int rank = tp.perm.ranks()[v.index];
  if (rank < tp.tag_zero) return Region::kNeg;
  if (rank < tp.tag_one) return Region::kMid;
  return Region::kPos;
}

// ---- RepGraph ----

RepGraph::RepGraph(int n)
    : n_(n), verts_(3 * n), words_((verts_ + 63) / 64),
      bits_(static_cast<std::size_t>(verts_) * words_, 0) {}

void RepGraph::copy_bits_from(const RepGraph& other) {
  bits_ = other.bits_;
}

bool RepGraph::close_acyclic() {
  for (int k = 0; k < verts_; ++k) {
    const std::uint64_t* rk = row(k);
    for (int i = 0; i < verts_; ++i) {
      if (!edge(i, k)) continue;
      std::uint64_t* ri = row(i);
      for (int w = 0; w < words_; ++w) ri[w] |= rk[w];
    }
  }
  for (int v = 0; v < verts_; ++v)
    if (edge(v, v)) return false;
  return true;
}

RepGraph::AddEdge RepGraph::add_edge_closure(int v, int w) {
  if (v == w || edge(w, v)) return AddEdge::kCycle;
  if (edge(v, w)) return AddEdge::kPresent;
  // sources reaching v, destinations reachable from w (inclusive)
  const std::uint64_t* rw = row(w);
  for (int a = 0; a < verts_; ++a) {
    if (a != v && !edge(a, v)) continue;
    std::uint64_t* ra = row(a);
    for (int k = 0; k < words_; ++k) ra[k] |= rw[k];
    set_edge(a, w);
  }
  return AddEdge::kAdded;
}

std::vector<int> RepGraph::topological_sort() const {
  std::vector<int> indeg(verts_, 0);
  for (int v = 0; v < verts_; ++v)
    for (int w = 0; w < verts_; ++w)
      if (edge(v, w)) ++indeg[w];
  std::vector<int> out;
  out.reserve(verts_);
  std::vector<bool> used(verts_, false);
  for (int step = 0; step < verts_; ++step) {
    int pick = -1;
    for (int v = 0; v < verts_; ++v)
      if (!used[v] && indeg[v] == 0) {
        pick = v;
        break;
      }
    if (pick < 0) throw std::logic_error("topological_sort: graph has a cycle");
    used[pick] = true;
    out.push_back(pick);
    for (int w = 0; w < verts_; ++w)
      if (edge(pick, w)) --indeg[w];
  }
  return out;
}

bool RepGraph::acyclic() const {
  for (int v = 0; v < verts_; ++v) {
    if (edge(v, v)) return false;
    for (int w = v + 1; w < verts_; ++w)
      if (edge(v, w) && edge(w, v)) return false;
  }
  return true;
}

bool RepGraph::is_transitively_closed() const {
  for (int v = 0; v < verts_; ++v)
    for (int w = 0; w < verts_; ++w)
      if (edge(v, w))
        for (int u = 0; u < verts_; ++u)
          if (edge(w, u) && !edge(v, u)) return false;
  return true;
}

RepGraph base_graph(const LiftContext& ctx) {
  int n = ctx.n;
  RepGraph g(n);
  for (int l = 0; l < 3; ++l) {
    for (int e1 = 0; e1 < n; ++e1) {
      for (int e2 = 0; e2 < n; ++e2) {
        int v = l * n + e1, w = l * n + e2;
        if (ctx.rank[v] < ctx.rank[w] && ctx.region[v] == ctx.region[w]) g.set_edge(v, w);
      }
    }
  }
  return g;
}

RepGraph base_graph(const core::TaggedPattern& p) { return base_graph(make_context(p)); }

Cmp compare_with_f(const RepGraph& g, const LiftContext& ctx, VarId u, VarId w) {
  int uv = u.encode(ctx.n), wv = w.encode(ctx.n);
  int ru = static_cast<int>(ctx.region[uv]);
  int rfw = (static_cast<int>(ctx.region[wv]) + 1) % 3;
  if (ru < rfw) return Cmp::kLess;
  if (ru > rfw) return Cmp::kGreater;
  if (g.edge(uv, wv)) return Cmp::kLess;
  if (g.edge(wv, uv)) return Cmp::kGreater;
  return Cmp::kUnknown;
}

// ---- lifted cells ----

namespace {

inline int lifted_next(int id) {   // symbolic f: shift within the block
  return id - id % 3 + (id + 1) % 3;
}

}  // namespace

bool validate_lifted_order(const CellOrder& cell) {
  int total = 9 * cell.n;
  if (static_cast<int>(cell.order.size()) != total) return false;
  if (cell.pos_zero < 0 || cell.pos_zero > cell.pos_one || cell.pos_one > total) return false;
  std::vector<int> pos(total, -1);
  for (int k = 0; k < total; ++k) {
    int id = cell.order[k];
    if (id < 0 || id >= total || pos[id] >= 0) return false;
    pos[id] = k;
  }
  auto interval = [&](int id) {
    int k = pos[id];
    return k < cell.pos_zero ? 0 : k < cell.pos_one ? 1 : 2;
  };
  // (i): within each block the intervals follow the cyclic action of f
  for (int b = 0; b < 3 * cell.n; ++b) {
    int i0 = interval(3 * b), i1 = interval(3 * b + 1), i2 = interval(3 * b + 2);
    if (i1 != (i0 + 1) % 3 || i2 != (i1 + 1) % 3) return false;
  }
  // (ii): t_i < t_j with f(t_j) < f(t_i) forces t_i < 1 < t_j
  for (int i = 0; i < total; ++i) {
    for (int j = 0; j < total; ++j) {
      if (pos[i] >= pos[j]) continue;
      if (pos[lifted_next(j)] < pos[lifted_next(i)]) {
        if (!(pos[i] < cell.pos_one && pos[j] >= cell.pos_one)) return false;
      }
    }
  }
  return true;
}

std::vector<Rational> witness_from_order(const CellOrder& cell) {
  if (!validate_lifted_order(cell))
    throw std::invalid_argument("witness_from_order: invalid lifted order");
  std::vector<Rational> coords(3 * cell.n);
  int next_r = 2;
  for (int k = cell.pos_one; k < 9 * cell.n; ++k) {
    int id = cell.order[k];
    int block = id / 3, shift = id % 3;
    // block variable equals f^{3-shift}(r); shift = 0 is the identity
    Rational r(next_r++);
    coords[block] = shift == 0 ? r : f_iterate(r, 3 - shift);
  }
  return coords;
}

CellOrder cell_from_rep_order(const std::vector<Region>& regions,
                              const std::vector<int>& rep_order) {
  int verts = static_cast<int>(regions.size());
  if (verts % 3 != 0 || rep_order.size() != regions.size())
    throw std::invalid_argument("cell_from_rep_order: 3n regions and reps required");
  CellOrder cell;
  cell.n = verts / 3;
  cell.order.reserve(3 * verts);
  for (int target = 0; target < 3; ++target) {
    for (int v : rep_order) {
      // shift s puts vertex v's value in interval `target`
      int s = (target - static_cast<int>(regions[v]) + 3) % 3;
      cell.order.push_back(3 * v + s);
    }
  }
  cell.pos_zero = verts;
  cell.pos_one = 2 * verts;
  return cell;
}

CellOrder cell_from_point(const std::vector<Rational>& coords) {
  int verts = static_cast<int>(coords.size());
  CellOrder cell;
  cell.n = verts / 3;
  if (verts % 3 != 0) throw std::invalid_argument("cell_from_point: 3n coordinates required");
  std::vector<Rational> value(3 * verts);
  for (int v = 0; v < verts; ++v) {
    if (coords[v] == 0 || coords[v] == 1)
      throw std::domain_error("cell_from_point: coordinate in {0, 1}");
    value[3 * v] = coords[v];
    value[3 * v + 1] = f_eval(coords[v]);
    value[3 * v + 2] = f_eval(value[3 * v + 1]);
  }
  cell.order.resize(3 * verts);
  for (int i = 0; i < 3 * verts; ++i) cell.order[i] = i;
  std::sort(cell.order.begin(), cell.order.end(),
            [&](int a, int b) { return value[a] < value[b]; });
  cell.pos_zero = cell.pos_one = 0;
  for (int id : cell.order) {
    if (value[id] < 0) ++cell.pos_zero;
    if (value[id] < 1) ++cell.pos_one;
  }
  return cell;
}

}  // namespace gp::lift
