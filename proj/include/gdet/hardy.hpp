#pragma once
// The Hardy-space inner product on G,
//   <f, g> = sup_r  (1/||J||^2) \int_{T^2} f o pi  conj(g o pi) |J|^2 dm,
// with J = z - w and ||J||^2 = 2, so that inner functions have norm one.

#include <functional>
#include <string>
#include <vector>

#include "gdet/bipoly.hpp"
#include "gdet/inner.hpp"
#include "gdet/variety.hpp"

namespace gdet {

struct HardyConfig {
  /// Increasing radii in (0, 1); default 1 - 2^-k for k = 4..10.
  std::vector<double> radius_schedule = default_schedule();
  /// Torus grid per dimension; a power of two >= 32.
  int grid_n = 128;

  static std::vector<double> default_schedule();
  void validate() const;
};

/// Exact path: (1/2) sum A_ij conj(B_ij) with A = (z - w) f o pi, B = (z - w) g o pi.
cplx hinner_poly(const BiPoly& f, const BiPoly& g);

using ZWFunction = std::function<cplx(cplx, cplx)>;

struct QuadratureResult {
  /// Limit r -> 1 extrapolated from the radius schedule.
  cplx value;
  /// |extrapolation over all radii - extrapolation without the largest radius|.
  double error_estimate;
  /// Plain quadrature values at each scheduled radius.
  std::vector<cplx> per_radius;
};

/// Trapezoidal torus quadrature of (1/2) f o pi conj(g o pi) |J|^2 at each
/// scheduled radius, followed by polynomial (Neville) extrapolation in 1 - r
/// to r = 1. Throws CertificateError on a non-finite sample.
QuadratureResult hinner_quadrature(const ZWFunction& f, const ZWFunction& g,
                                   const HardyConfig& cfg = {});

/// Lifts an (s, p) function to (z, w) through pi.
ZWFunction lift(const std::function<cplx(const PointG&)>& f);
ZWFunction lift(const BiPoly& f_sp);

struct Main4Result {
  double lhs = 0.0;  // 2 Re <f, xi h>
  double rhs = 0.0;  // ||xi h||^2
  bool strict = false;
  std::string method;  // "coeff" or "quad"
  double error_estimate = 0.0;
};

/// Evaluates 2 Re <f, xi h> < ||xi h||^2 - tol. Uses the coefficient path
/// when f is polynomial (eta constant), quadrature otherwise.
Main4Result main4_condition(const InnerFun& f, const VarietySpec& v, const BiPoly& h,
                            double tol = 1e-12, const HardyConfig& cfg = {});

}  // namespace gdet
