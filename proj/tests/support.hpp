#pragma once

#include <cmath>
#include <random>

#include "gdet/bipoly.hpp"

namespace testing {

using gdet::BiPoly;
using gdet::Bidegree;
using gdet::cplx;
using gdet::Space;

inline cplx in_disk(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return radius * std::sqrt(u(rng)) * gdet::unimodular(gdet::kTwoPi * u(rng));
}

inline cplx on_circle(std::mt19937_64& rng) {
  return gdet::unimodular(gdet::kTwoPi * std::uniform_real_distribution<double>(0.0, 1.0)(rng));
}

inline BiPoly random_dense(std::mt19937_64& rng, Space space, Bidegree b) {
  BiPoly p(space, b);
  for (int i = 0; i <= b.d1; ++i) {
    for (int j = 0; j <= b.d2; ++j) p.set_coeff(i, j, in_disk(rng, 1.0));
  }
  return p;
}

inline BiPoly random_total(std::mt19937_64& rng, Space space, int deg) {
  BiPoly p(space, Bidegree{deg, deg});
  for (int i = 0; i <= deg; ++i) {
    for (int j = 0; i + j <= deg; ++j) p.set_coeff(i, j, in_disk(rng, 1.0));
  }
  return p.trimmed();
}

inline BiPoly royal() { return BiPoly(Space::SP, {{0.0, -4.0}, {0.0}, {1.0}}); }

inline BiPoly neil() {
  BiPoly p(Space::SP, Bidegree{5, 3});
  p.set_coeff(5, 0, 1.0);
  p.set_coeff(3, 1, -5.0);
  p.set_coeff(1, 2, 5.0);
  p.set_coeff(0, 2, -1.0);
  p.set_coeff(0, 3, -1.0);
  return p;
}

inline BiPoly zw_z() { return BiPoly::x(Space::ZW); }
inline BiPoly zw_w() { return BiPoly::y(Space::ZW); }
inline BiPoly sp_s() { return BiPoly::x(Space::SP); }
inline BiPoly sp_p() { return BiPoly::y(Space::SP); }
inline BiPoly one(Space space) { return BiPoly::constant(space, 1.0); }

}  // namespace testing
