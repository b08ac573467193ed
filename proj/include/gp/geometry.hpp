#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gp/core.hpp"
#include "gp/lifting.hpp"
#include "gp/rational.hpp"

namespace gp::geom {

struct Point3 {
  Rational x, y, z;
};

using Triangle = std::array<Point3, 3>;

// A zero orientation among the predicates of a disjointness test. Valid
// cells never produce these; arbitrary user input gets an honest error.
class degeneracy_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sign of det(p q r s; 1 1 1 1) with the points as columns, computed
// exactly. 0 is a legal return; callers treat it as degeneracy.
int orient4(const Point3& p, const Point3& q, const Point3& r, const Point3& s);

// Canonical-line vertices: X_i = (x,1,0), Y_i = (0,y,1), Z_i = (1,0,z).
Point3 line_point(int line, const Rational& value);

// The n triangles spanned by a coordinate vector (3n values, vertex-id
// indexed: x_0..x_{n-1}, y_0.., z_0..).
struct TriangleConfig {
  int n = 0;
  std::vector<Rational> coords;

  Point3 vertex(int v) const { return line_point(v / n, coords[v]); }
  Triangle triangle(int i) const { return {vertex(i), vertex(n + i), vertex(2 * n + i)}; }
};

// Guigue-Devillers test, exact: quick one-sided test on the sign vector,
// then the renaming and the two final predicates. Throws degeneracy_error
// on any zero orientation.
bool triangles_disjoint(const Triangle& t1, const Triangle& t2);

// True iff the configuration realizes the pattern: pairwise disjoint
// triangles, per-line orders matching the words, regions matching the tags,
// and no coordinate in {0, 1}.
bool verify_certificate(const core::TaggedPattern& p, const TriangleConfig& c);

// Brute-force cell enumeration: all representative orders consistent with
// the tag-forced regions, each instantiated through the canonical witness
// and verified exactly. Independent of the symbolic decision path.
// Precondition n <= 3 (throws std::invalid_argument above that).
std::optional<TriangleConfig> oracle_decide_tagged(const core::TaggedPattern& p);

}  // namespace gp::geom
