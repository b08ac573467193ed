#include "gp/geometry.hpp"

#include <algorithm>

namespace gp::geom {

int orient4(const Point3& p, const Point3& q, const Point3& r, const Point3& s) {
  // subtract the s column: sign det3 of (p-s, q-s, r-s)
  Rational a = p.x - s.x, b = q.x - s.x, c = r.x - s.x;
  Rational d = p.y - s.y, e = q.y - s.y, f = r.y - s.y;
  Rational g = p.z - s.z, h = q.z - s.z, i = r.z - s.z;
  Rational det = a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
  return sgn(det);
}

Point3 line_point(int line, const Rational& value) {
  switch (line) {
    case 0: return Point3{value, 1, 0};
    case 1: return Point3{0, value, 1};
    default: return Point3{1, 0, value};
  }
}

bool triangles_disjoint(const Triangle& t1, const Triangle& t2) {
  std::array<int, 6> sv;
  for (int k = 0; k < 3; ++k) sv[k] = orient4(t1[0], t1[1], t1[2], t2[k]);
  for (int k = 0; k < 3; ++k) sv[3 + k] = orient4(t2[0], t2[1], t2[2], t1[k]);
  for (int s : sv)
    if (s == 0) throw degeneracy_error("zero orientation in disjointness test");

  if ((sv[0] == sv[1] && sv[1] == sv[2]) || (sv[3] == sv[4] && sv[4] == sv[5])) return true;

  // rename to (A,B,C) per triangle so the sign vector becomes (1,-1,-1,1,-1,-1)
  Triangle p1 = t1, p2 = t2;
  int sign_1 = sv[0], sign_2 = sv[3];
  if (sv[0] == sv[1]) {          // oddball t2[2]
    p2 = Triangle{t2[2], t2[0], t2[1]};
    sign_1 = sv[2];
  } else if (sv[0] == sv[2]) {   // oddball t2[1]
    p2 = Triangle{t2[1], t2[2], t2[0]};
    sign_1 = sv[1];
  }
  if (sv[3] == sv[4]) {
    p1 = Triangle{t1[2], t1[0], t1[1]};
    sign_2 = sv[5];
  } else if (sv[3] == sv[5]) {
    p1 = Triangle{t1[1], t1[2], t1[0]};
    sign_2 = sv[4];
  }
  if (sign_1 == -1) std::swap(p1[1], p1[2]);
  if (sign_2 == -1) std::swap(p2[1], p2[2]);

  int o1 = orient4(p1[0], p1[1], p2[0], p2[1]);
  int o2 = orient4(p1[0], p1[2], p2[2], p2[0]);
  if (o1 == 0 || o2 == 0) throw degeneracy_error("zero orientation in final test");
  return o1 == 1 || o2 == 1;
}

bool verify_certificate(const core::TaggedPattern& p, const TriangleConfig& c) {
  int n = p.size();
  if (c.n != n || static_cast<int>(c.coords.size()) != 3 * n) return false;
  lift::LiftContext ctx = lift::make_context(p);
  for (int v = 0; v < 3 * n; ++v) {
    const Rational& x = c.coords[v];
    if (x == 0 || x == 1) return false;
    lift::Region actual = x < 0 ? lift::Region::kNeg
                        : x < 1 ? lift::Region::kMid
                                : lift::Region::kPos;
    if (actual != ctx.region[v]) return false;
  }
  // per-line sorted order must reproduce the words
  for (int l = 0; l < 3; ++l) {
    const auto& word = p.lines[l].perm.word;
    for (int k = 0; k + 1 < n; ++k) {
      const Rational& a = c.coords[l * n + word[k]];
      const Rational& b = c.coords[l * n + word[k + 1]];
      if (!(a < b)) return false;
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!triangles_disjoint(c.triangle(i), c.triangle(j))) return false;
  return true;
}

namespace {

struct OracleSearch {
  const core::TaggedPattern* pattern;
  int n = 0;
  std::vector<lift::Region> regions;
  std::array<std::vector<int>, 9> chains;   // per line, per region, word order
  int chain_count = 0;
  std::vector<int> order;
  std::array<int, 9> taken{};

  std::optional<TriangleConfig> run() {
    order.reserve(3 * n);
    return descend();
  }

  std::optional<TriangleConfig> descend() {
    if (static_cast<int>(order.size()) == 3 * n) {
      lift::CellOrder cell = lift::cell_from_rep_order(regions, order);
      TriangleConfig cfg{n, lift::witness_from_order(cell)};
      if (verify_certificate(*pattern, cfg)) return cfg;
      return std::nullopt;
    }
    for (int c = 0; c < chain_count; ++c) {
      if (taken[c] >= static_cast<int>(chains[c].size())) continue;
      order.push_back(chains[c][taken[c]]);
      ++taken[c];
      auto got = descend();
      --taken[c];
      order.pop_back();
      if (got) return got;
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<TriangleConfig> oracle_decide_tagged(const core::TaggedPattern& p) {
  int n = p.size();
  if (n > 3) throw std::invalid_argument("oracle_decide_tagged handles n <= 3");
  OracleSearch search;
  search.pattern = &p;
  search.n = n;
  lift::LiftContext ctx = lift::make_context(p);
  search.regions = ctx.region;
  // representatives of a line sharing a region are ordered like the word
  for (int l = 0; l < 3; ++l) {
    for (int reg = 0; reg < 3; ++reg) {
      std::vector<int> chain;
      for (int e : p.lines[l].perm.word) {
        int v = l * n + e;
        if (static_cast<int>(ctx.region[v]) == reg) chain.push_back(v);
      }
      if (!chain.empty()) search.chains[search.chain_count++] = std::move(chain);
    }
  }
  return search.run();
}

}  // namespace gp::geom
