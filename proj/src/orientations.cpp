#include "gp/orientations.hpp"

#include <algorithm>
#include <stdexcept>

namespace gp::orient {

namespace {

inline int region_int(const lift::LiftContext& ctx, int v) {
  return static_cast<int>(ctx.region[v]);
}

}  // namespace

SignEntry initial_orientation(int i, int l, int j, const lift::LiftContext& ctx,
                              std::vector<int>* unknowns) {
  int n = ctx.n;
  int s = l, t = (l + 1) % 3, u = (l + 2) % 3;
  std::int8_t sign = ctx.rank[s * n + i] > ctx.rank[s * n + j] ? 1 : -1;
  if (region_int(ctx, t * n + i) < 2) sign = -sign;   // (t_i - 1) < 0
  int v = u * n + i, w = t * n + i;
  int r1 = region_int(ctx, v), r2 = (region_int(ctx, w) + 1) % 3;
  if (r1 == r2) {
    if (unknowns && std::find(unknowns->begin(), unknowns->end(), v) == unknowns->end())
      unknowns->push_back(v);
    return SignEntry{sign, v};
  }
  return SignEntry{static_cast<std::int8_t>(r1 > r2 ? sign : -sign), -1};
}

SignVector initial_sign_vector(int i, int j, const lift::LiftContext& ctx,
                               std::vector<int>* unknowns) {
  SignVector sv;
  for (int l = 0; l < 3; ++l) sv[l] = initial_orientation(i, l, j, ctx, unknowns);
  for (int l = 0; l < 3; ++l) sv[3 + l] = initial_orientation(j, l, i, ctx, unknowns);
  return sv;
}

std::array<std::int8_t, 6> resolve_sign_vector(const SignVector& sv, const lift::RepGraph& g,
                                               int n) {
  std::array<std::int8_t, 6> out;
  for (int k = 0; k < 6; ++k) {
    if (sv[k].determined()) {
      out[k] = sv[k].sign;
      continue;
    }
    int v = sv[k].pending, w = associated_vertex(v, n);
    if (g.edge(v, w))
      out[k] = -sv[k].sign;   // v < f(w)
    else if (g.edge(w, v))
      out[k] = sv[k].sign;
    else
      throw std::logic_error("sign vector entry undetermined after branching");
  }
  return out;
}

RenamedPair rename_guigue(const std::array<std::int8_t, 6>& sv, int i, int j, int n) {
  bool const_i = sv[0] == sv[1] && sv[1] == sv[2];
  bool const_j = sv[3] == sv[4] && sv[4] == sv[5];
  if (const_i || const_j)
    throw std::logic_error("rename_guigue requires non-constant half-vectors");

  int Xi = i, Yi = n + i, Zi = 2 * n + i;
  int Xj = j, Yj = n + j, Zj = 2 * n + j;
  std::int8_t sign_i = sv[0], sign_j = sv[3];
  if (sv[0] == sv[1]) {          // oddball Z_j
    int t = Zj; Zj = Yj; Yj = Xj; Xj = t;
    sign_i = sv[2];
  } else if (sv[0] == sv[2]) {   // oddball Y_j
    int t = Xj; Xj = Yj; Yj = Zj; Zj = t;
    sign_i = sv[1];
  }
  if (sv[3] == sv[4]) {          // oddball Z_i
    int t = Zi; Zi = Yi; Yi = Xi; Xi = t;
    sign_j = sv[5];
  } else if (sv[3] == sv[5]) {   // oddball Y_i
    int t = Xi; Xi = Yi; Yi = Zi; Zi = t;
    sign_j = sv[4];
  }
  if (sign_i == -1) std::swap(Yi, Zi);
  if (sign_j == -1) std::swap(Yj, Zj);
  return RenamedPair{{Xi, Yi, Zi, Xj, Yj, Zj}};
}

FinalOrientation final_orientation(std::array<int, 4> quad, const lift::RepGraph& g,
                                   const lift::LiftContext& ctx) {
  int n = ctx.n;
  // insertion sort over vertex ids, tracking (-1)^swaps
  std::int8_t sign = 1;
  for (int a = 1; a < 4; ++a)
    for (int b = a; b > 0 && quad[b - 1] > quad[b]; --b) {
      std::swap(quad[b - 1], quad[b]);
      sign = -sign;
    }
  std::array<int, 4> line{}, index{};
  for (int k = 0; k < 4; ++k) {
    line[k] = quad[k] / n;
    index[k] = quad[k] % n;
  }
  auto rank = [&](int k) { return ctx.rank[line[k] * n + index[k]]; };

  if (line[0] == line[1] && line[2] == line[3]) {
    // (s_a - s_b)(t_c - t_d)
    if (rank(0) < rank(1)) sign = -sign;
    if (rank(2) < rank(3)) sign = -sign;
    return FinalOrientation{sign};
  }

  int va, vw;   // pending pair: sign * sgn(va - f(vw))
  if (line[0] == line[1]) {
    // (x_a - x_b)(y_c - 1)(z_d - f(y_c))
    if (rank(0) < rank(1)) sign = -sign;
    if (region_int(ctx, quad[2]) < 2) sign = -sign;
    va = quad[3];
    vw = quad[2];
  } else if (line[1] == line[2]) {
    // -(y_b - y_c)(z_d - 1)(x_a - f(z_d))
    sign = -sign;
    if (rank(1) < rank(2)) sign = -sign;
    if (region_int(ctx, quad[3]) < 2) sign = -sign;
    va = quad[0];
    vw = quad[3];
  } else {
    // (z_c - z_d)(x_a - 1)(y_b - f(x_a))
    if (rank(2) < rank(3)) sign = -sign;
    if (region_int(ctx, quad[0]) < 2) sign = -sign;
    va = quad[1];
    vw = quad[0];
  }
  int r1 = region_int(ctx, va), r2 = (region_int(ctx, vw) + 1) % 3;
  if (r1 < r2 || g.edge(va, vw)) return FinalOrientation{static_cast<std::int8_t>(-sign)};
  if (r1 > r2 || g.edge(vw, va)) return FinalOrientation{sign};
  return FinalOrientation{sign, va, vw};
}

}  // namespace gp::orient
