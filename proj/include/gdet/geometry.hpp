#pragma once
// Geometry of the symmetrized bidisk G = pi(D x D), pi(z, w) = (z + w, z w).

#include <string_view>
#include <utility>
#include <vector>

#include "gdet/types.hpp"

namespace gdet {

struct PointG {
  cplx s;
  cplx p;
  friend bool operator==(const PointG&, const PointG&) = default;
};

PointG pi_map(cplx z, cplx w);

/// The two roots of t^2 - s t + p, larger modulus first.
std::pair<cplx, cplx> fiber(const PointG& pt);

enum class PointClass { InteriorG, BoundaryNotBG, BG, Outside };

std::string_view to_string(PointClass c);

inline constexpr double kDefaultBoundaryTol = 1e-9;

/// Classification by the fiber moduli r1, r2:
///   both < 1 - tol                           -> InteriorG
///   both in [1 - tol, 1 + tol]               -> BG
///   both <= 1 + tol, exactly one in the band -> BoundaryNotBG
///   otherwise                                -> Outside
PointClass classify_point(const PointG& pt, double tol = kDefaultBoundaryTol);

/// m(z) = zeta (z - a) / (1 - conj(a) z), |zeta| = 1, |a| < 1.
class MobiusParam {
 public:
  MobiusParam(cplx zeta, cplx a);
  cplx zeta() const { return zeta_; }
  cplx a() const { return a_; }

 private:
  cplx zeta_;
  cplx a_;
};

cplx mobius_eval(const MobiusParam& m, cplx z);

/// The analytic disk z -> (z + beta z, beta z^2), |beta| = 1.
class DiskSpec {
 public:
  explicit DiskSpec(cplx beta);
  cplx beta() const { return beta_; }

 private:
  cplx beta_;
};

PointG disk_point(const DiskSpec& d, cplx z);
/// z -> (z + m(z), z m(z)).
PointG disk_point_general(const MobiusParam& m, cplx z);

/// Parameters z with beta z = m(z), i.e. the roots of
///   conj(a) beta z^2 + (zeta - beta) z - a zeta = 0.
/// Throws PreconditionError when the equation vanishes identically.
std::vector<cplx> disk_intersection_params(cplx beta, const MobiusParam& m);

struct EpsilonGrid {
  /// Samples per dimension: this many zeta values on the arc and this many a values.
  int points = 32;
  double start = 0.5;
  double floor = 1e-6;
};

struct CertifiedIntersection {
  cplx zeta;
  cplx a;
  cplx beta;
  cplx root;
};

struct EpsilonCertificate {
  double epsilon = 0.0;
  /// One witness root per sampled (zeta, a, beta_j) triple at the accepted level.
  std::vector<CertifiedIntersection> witnesses;
};

/// Largest eps in {start, start/2, ...} such that for every sampled zeta in
/// D(center; eps) on T and a in D(0; eps) \ {0}, each disk D_j meets
/// D_{zeta,a} at a parameter 0 < |z| < 1. A sampled numerical certificate.
/// Throws CertificateError if no level above grid.floor passes.
EpsilonCertificate find_epsilon(const std::vector<cplx>& betas, cplx beta_center,
                                const EpsilonGrid& grid = {});

}  // namespace gdet
