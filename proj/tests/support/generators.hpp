#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "gp/core.hpp"
#include "gp/geometry.hpp"
#include "gp/rational.hpp"

namespace gp::testing {

using Rng = std::mt19937_64;

inline int rand_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Rational rand_rational(Rng& rng, int num_lo = -24, int num_hi = 24, int den_hi = 8) {
  Rational r(rand_int(rng, num_lo, num_hi), rand_int(rng, 1, den_hi));
  r.canonicalize();
  return r;
}

// Avoids the poles of f and the tag values.
inline Rational rand_rational_star(Rng& rng) {
  for (;;) {
    Rational r = rand_rational(rng);
    if (r != 0 && r != 1) return r;
  }
}

inline std::vector<int> rand_word(Rng& rng, int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 0);
  std::shuffle(w.begin(), w.end(), rng);
  return w;
}

inline core::Permutation rand_perm(Rng& rng, int n) {
  return core::Permutation{rand_word(rng, n)};
}

inline std::pair<int, int> rand_tags(Rng& rng, int n) {
  int z = rand_int(rng, 0, n), o = rand_int(rng, 0, n);
  if (z > o) std::swap(z, o);
  return {z, o};
}

inline core::TaggedPattern rand_pattern(Rng& rng, int n) {
  core::TaggedPattern p;
  for (int l = 0; l < 3; ++l) {
    p.lines[l].perm = rand_perm(rng, n);
    auto [z, o] = rand_tags(rng, n);
    p.lines[l].tag_zero = z;
    p.lines[l].tag_one = o;
  }
  return p;
}

inline core::Triple rand_triple(Rng& rng, int n) {
  return core::Triple{{rand_perm(rng, n), rand_perm(rng, n), rand_perm(rng, n)}};
}

inline geom::Point3 rand_point(Rng& rng) {
  return geom::Point3{rand_rational(rng), rand_rational(rng), rand_rational(rng)};
}

inline geom::Triangle rand_triangle(Rng& rng) {
  return geom::Triangle{rand_point(rng), rand_point(rng), rand_point(rng)};
}

// Half the pairs are independent, half are nearby perturbations so that
// intersections are common.
inline std::pair<geom::Triangle, geom::Triangle> rand_triangle_pair(Rng& rng, bool correlated) {
  geom::Triangle t1 = rand_triangle(rng);
  if (!correlated) return {t1, rand_triangle(rng)};
  geom::Triangle t2 = t1;
  Rational shift = rand_rational(rng, -6, 6, 9);
  for (auto& p : t2) {
    p.x += shift + rand_rational(rng, -2, 2, 7);
    p.y += shift + rand_rational(rng, -2, 2, 7);
    p.z += shift + rand_rational(rng, -2, 2, 7);
  }
  return {t1, t2};
}

// A configuration of n triangles on the canonical lines with pairwise
// distinct coordinates outside {0, 1}.
inline geom::TriangleConfig rand_config(Rng& rng, int n) {
  geom::TriangleConfig cfg;
  cfg.n = n;
  cfg.coords.resize(3 * n);
  for (int l = 0; l < 3; ++l) {
    for (;;) {
      for (int i = 0; i < n; ++i) cfg.coords[l * n + i] = rand_rational_star(rng);
      bool distinct = true;
      for (int i = 0; i < n && distinct; ++i)
        for (int j = i + 1; j < n; ++j)
          if (cfg.coords[l * n + i] == cfg.coords[l * n + j]) {
            distinct = false;
            break;
          }
      if (distinct) break;
    }
  }
  return cfg;
}

// The tagged pattern a concrete configuration realizes (orders and regions
// read off the coordinates).
inline core::TaggedPattern pattern_of_config(const geom::TriangleConfig& cfg) {
  core::TaggedPattern p;
  int n = cfg.n;
  for (int l = 0; l < 3; ++l) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return cfg.coords[l * n + a] < cfg.coords[l * n + b];
    });
    p.lines[l].perm.word = order;
    int z = 0, o = 0;
    for (int i = 0; i < n; ++i) {
      if (cfg.coords[l * n + i] < 0) ++z;
      if (cfg.coords[l * n + i] < 1) ++o;
    }
    p.lines[l].tag_zero = z;
    p.lines[l].tag_one = o;
  }
  return p;
}

}  // namespace gp::testing
