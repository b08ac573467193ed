#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "gp/lifting.hpp"

namespace gp::orient {

// One entry of a sign vector. Determined entries carry the sign alone;
// pending entries equal sign * sgn(v - f(associated_vertex(v))).
struct SignEntry {
  std::int8_t sign = 1;
  int pending = -1;   // vertex id v, or -1 when determined
  bool determined() const { return pending < 0; }
};

// The six orientations of the pair (i, j): the vertices of triangle j
// against the plane of triangle i, then vice versa.
using SignVector = std::array<SignEntry, 6>;

// The only w such that v - f(w) can stay undecided: same index, line shifted
// backward (x_k -> z_k, y_k -> x_k, z_k -> y_k).
inline int associated_vertex(int v, int n) {
  return (v / n + 2) % 3 * n + v % n;
}

// Orientation of (X_i, Y_i, Z_i, L_j) with L the line l. With s = l,
// t = l+1, u = l+2 (mod 3) this is sgn(s_i - s_j) sgn(t_i - 1)
// sgn(u_i - f(t_i)). A pending third factor is recorded in `unknowns`.
SignEntry initial_orientation(int i, int l, int j, const lift::LiftContext& ctx,
                              std::vector<int>* unknowns);

SignVector initial_sign_vector(int i, int j, const lift::LiftContext& ctx,
                               std::vector<int>* unknowns);

// Resolves pending entries through the graph; every entry must be decided
// (the candidate edges guarantee this). Throws std::logic_error otherwise.
std::array<std::int8_t, 6> resolve_sign_vector(const SignVector& sv, const lift::RepGraph& g,
                                               int n);

// Vertex labels (A_i, B_i, C_i, A_j, B_j, C_j) after the renaming that turns
// the sign vector into (1,-1,-1,1,-1,-1).
struct RenamedPair {
  std::array<int, 6> vertex;
};

// Requires both halves of sv non-constant (the quick test failed). A_j is
// the oddball of sv[0..2], A_i the oddball of sv[3..5]; B/C swaps fix the
// two anchor orientations to +1.
RenamedPair rename_guigue(const std::array<std::int8_t, 6>& sv, int i, int j, int n);

struct FinalOrientation {
  std::int8_t sign = 1;
  int v = -1, w = -1;   // pending: value is sign * sgn(v - f(w))
  bool determined() const { return v < 0; }
};

// Orientation of four vertices, two per triangle. Sorts by vertex id
// (= line, index) tracking swap parity, then applies the decomposition for
// the resulting line multiset. Pending results may pair different indices.
FinalOrientation final_orientation(std::array<int, 4> quad, const lift::RepGraph& g,
                                   const lift::LiftContext& ctx);

}  // namespace gp::orient
