#include "gdet/hardy.hpp"

#include <cmath>

#include "gdet/errors.hpp"
#include "gdet/sampling.hpp"

namespace gdet {

std::vector<double> HardyConfig::default_schedule() {
  std::vector<double> r;
  for (int k = 4; k <= 10; ++k) r.push_back(1.0 - std::ldexp(1.0, -k));
  return r;
}

void HardyConfig::validate() const {
  if (radius_schedule.empty()) throw PreconditionError("radius schedule is empty");
  for (std::size_t k = 0; k < radius_schedule.size(); ++k) {
    const double r = radius_schedule[k];
    if (!(r > 0.0 && r < 1.0)) throw PreconditionError("radii must lie in (0, 1)");
    if (k > 0 && !(r > radius_schedule[k - 1])) throw PreconditionError("radii must increase");
  }
  if (grid_n < 32 || (grid_n & (grid_n - 1)) != 0) {
    throw PreconditionError("hardy grid_n must be a power of two >= 32");
  }
}

cplx hinner_poly(const BiPoly& f, const BiPoly& g) {
  BiPoly jac(Space::ZW);
  jac.set_coeff(1, 0, 1.0);
  jac.set_coeff(0, 1, -1.0);
  const BiPoly a = jac * compose_pi(f);
  const BiPoly b = jac * compose_pi(g);
  const Bidegree da = a.declared_bidegree();
  cplx sum = 0.0;
  for (int i = 0; i <= da.d1; ++i) {
    for (int j = 0; j <= da.d2; ++j) sum += a.coeff(i, j) * std::conj(b.coeff(i, j));
  }
  return 0.5 * sum;
}

ZWFunction lift(const std::function<cplx(const PointG&)>& f) {
  return [f](cplx z, cplx w) { return f(pi_map(z, w)); };
}

ZWFunction lift(const BiPoly& f_sp) {
  if (f_sp.space() != Space::SP) throw SpaceMismatch("lift expects an (s,p) polynomial");
  return [f_sp](cplx z, cplx w) { return f_sp(z + w, z * w); };
}

namespace {

cplx torus_average(const ZWFunction& f, const ZWFunction& g, double r, int n) {
  const PairSamples t = torus_pairs(n, r);
  const std::size_t m = t.size();
  simd::ComplexSoA fv(m), gv(m);
  std::vector<double> weight(m);
  for (std::size_t k = 0; k < m; ++k) {
    const cplx z = t.z_at(k);
    const cplx w = t.w_at(k);
    const cplx a = f(z, w);
    const cplx b = g(z, w);
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()) || !std::isfinite(b.real()) ||
        !std::isfinite(b.imag())) {
      throw CertificateError("integrand is not finite on the quadrature torus");
    }
    fv.re[k] = a.real();
    fv.im[k] = a.imag();
    gv.re[k] = b.real();
    gv.im[k] = b.imag();
    weight[k] = std::norm(z - w);
  }
  double re = 0.0, im = 0.0;
  simd::active().weighted_dot(fv, gv, weight, re, im);
  return 0.5 * cplx(re, im) / static_cast<double>(m);
}

// Neville extrapolation of values y_k at abscissae h_k to h = 0.
cplx extrapolate_to_zero(const std::vector<double>& h, std::vector<cplx> y) {
  const std::size_t n = h.size();
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = 0; i + level < n; ++i) {
      const double hi = h[i];
      const double hj = h[i + level];
      y[i] = (hj * y[i] - hi * y[i + 1]) / (hj - hi);
    }
  }
  return y[0];
}

}  // namespace

QuadratureResult hinner_quadrature(const ZWFunction& f, const ZWFunction& g,
                                   const HardyConfig& cfg) {
  cfg.validate();
  QuadratureResult res;
  std::vector<double> h;
  for (const double r : cfg.radius_schedule) {
    res.per_radius.push_back(torus_average(f, g, r, cfg.grid_n));
    h.push_back(1.0 - r);
  }
  res.value = extrapolate_to_zero(h, res.per_radius);
  if (h.size() > 1) {
    std::vector<double> h2(h.begin(), h.end() - 1);
    std::vector<cplx> y2(res.per_radius.begin(), res.per_radius.end() - 1);
    res.error_estimate = std::abs(res.value - extrapolate_to_zero(h2, y2));
  }
  return res;
}

Main4Result main4_condition(const InnerFun& f, const VarietySpec& v, const BiPoly& h,
                            double tol, const HardyConfig& cfg) {
  if (h.is_zero()) throw PreconditionError("h must be nonzero");
  if (h.space() != Space::SP) throw SpaceMismatch("h must be an (s,p) polynomial");
  const BiPoly xih = v.xi() * h;
  Main4Result r;
  r.rhs = hinner_poly(xih, xih).real();
  if (f.eta().trimmed().bidegree() == Bidegree{0, 0}) {
    // eta constant: f = phase * conj(c)/c * p^m is a polynomial.
    const cplx c = f.eta().coeff(0, 0);
    const BiPoly fp = BiPoly::monomial(Space::SP, 0, f.m(), f.phase() * std::conj(c) / c);
    r.lhs = 2.0 * hinner_poly(fp, xih).real();
    r.method = "coeff";
  } else {
    const auto q = hinner_quadrature([&f](cplx z, cplx w) { return f.eval_zw(z, w); },
                                     lift(xih), cfg);
    r.lhs = 2.0 * q.value.real();
    r.error_estimate = q.error_estimate;
    r.method = "quad";
  }
  r.strict = r.lhs < r.rhs - tol;
  return r;
}

}  // namespace gdet
