#include "gdet/inner.hpp"

#include <cmath>

#include "gdet/errors.hpp"
#include "gdet/sampling.hpp"

namespace gdet {
namespace {

cplx ipow(cplx x, int m) {
  cplx r = 1.0;
  for (int k = 0; k < m; ++k) r *= x;
  return r;
}

simd::MinMax modulus_range(const BiPoly& q, const PairSamples& zw) {
  simd::ComplexSoA vals;
  q.eval_batch(zw.z, zw.w, vals);
  return simd::active().modulus_minmax(vals);
}

}  // namespace

InnerFun::InnerFun(int m, BiPoly eta, cplx phase, int regularity_grid)
    : m_(m), eta_(std::move(eta)), phase_(phase) {
  if (m_ < 0) throw PreconditionError("inner function exponent m must be nonnegative");
  if (eta_.space() != Space::SP) throw SpaceMismatch("eta must be an (s,p) polynomial");
  if (eta_.is_zero()) throw PreconditionError("eta must be nonzero");
  if (std::abs(std::abs(phase_) - 1.0) > 1e-12) throw PreconditionError("phase must be unimodular");
  const RegularityReport reg = regularity_scan(RatFun(BiPoly::constant(Space::SP, 1.0), eta_),
                                               regularity_grid);
  if (!reg.regular) throw CertificateError("eta vanishes on the closure of G (not regular)");
  eta_pi_ = compose_pi(eta_);
  eta_pi_reflect_ = reflect(eta_pi_);
  l_ = eta_pi_.bidegree()->d1;
}

cplx InnerFun::eval_zw(cplx z, cplx w) const {
  return phase_ * ipow(z * w, m_) * eta_pi_reflect_(z, w) / eta_pi_(z, w);
}

cplx InnerFun::operator()(const PointG& pt) const {
  const auto [z, w] = fiber(pt);
  return eval_zw(z, w);
}

BiPoly InnerFun::numerator_zw() const {
  return BiPoly::monomial(Space::ZW, m_, m_, phase_) * eta_pi_reflect_;
}

RatFun InnerFun::as_sp_ratfun() const {
  return RatFun(decompose_symmetric(numerator_zw()), eta_);
}

InnerFun make_inner(int m, const BiPoly& eta, cplx phase) { return InnerFun(m, eta, phase); }

cplx eval_inner(const InnerFun& f, const PointG& pt) { return f(pt); }

InnerReport inner_scan(const InnerFun& f, int grid_n, double tol) {
  if (grid_n < 16) throw PreconditionError("inner scan needs grid_n >= 16");
  const PairSamples t = torus_pairs(grid_n);
  simd::ComplexSoA num, den;
  f.numerator_zw().eval_batch(t.z, t.w, num);
  f.denominator_zw().eval_batch(t.z, t.w, den);
  double worst = 0.0;
  for (std::size_t k = 0; k < t.size(); ++k) {
    const double mod = std::hypot(num.re[k], num.im[k]) / std::hypot(den.re[k], den.im[k]);
    worst = std::max(worst, std::abs(mod - 1.0));
  }
  return {worst < tol, worst};
}

bool verify_inner(const InnerFun& f, int grid_n, double tol) {
  return inner_scan(f, grid_n, tol).inner;
}

EpsilonChoice choose_epsilon(const InnerFun& f, const VarietySpec& v, int grid_n) {
  const int n = v.xi_pi().bidegree()->d1;
  if (f.m() + f.l() - n < 0) {
    throw PreconditionError("2-degree of xi o pi exceeds the 2-degree of f o pi (m + l - n < 0)");
  }
  const PairSamples zw = closed_bidisk_pairs(grid_n);
  const double delta = modulus_range(f.eta_pi(), zw).min_abs;
  const double xi_max = modulus_range(v.xi_pi(), zw).max_abs;
  return {delta / (2.0 * xi_max), delta, xi_max};
}

EpsFamily::EpsFamily(const InnerFun& f, const VarietySpec& v, double epsilon, int grid_n)
    : f_(f), v_(v), epsilon_(epsilon) {
  const int n = v_.xi_pi().bidegree()->d1;
  shift_ = f_.m() + f_.l() - n;
  if (shift_ < 0) {
    throw PreconditionError("2-degree of xi o pi exceeds the 2-degree of f o pi (m + l - n < 0)");
  }
  bound_ = choose_epsilon(f_, v_, grid_n).epsilon;
  if (!(epsilon_ >= 0.0) || epsilon_ > bound_) {
    throw PreconditionError("epsilon outside [0, bound] from the denominator margin");
  }
  const BiPoly xi_reflect = reflect(v_.xi_pi());
  num_ = BiPoly::monomial(Space::ZW, f_.m(), f_.m()) * f_.eta_pi_reflect() + epsilon_ * xi_reflect;
  den_ = f_.eta_pi() + epsilon_ * (BiPoly::monomial(Space::ZW, shift_, shift_) * v_.xi_pi());
  if (modulus_range(den_, closed_bidisk_pairs(grid_n)).min_abs <= 0.0) {
    throw CertificateError("g_eps denominator vanishes on the sampled closed bidisk");
  }
}

cplx EpsFamily::eval_zw(cplx z, cplx w) const { return f_.phase() * num_(z, w) / den_(z, w); }

cplx EpsFamily::operator()(const PointG& pt) const {
  const auto [z, w] = fiber(pt);
  return eval_zw(z, w);
}

EpsFamily make_eps_family(const InnerFun& f, const VarietySpec& v, double epsilon) {
  return EpsFamily(f, v, epsilon);
}

cplx eval_eps(const EpsFamily& g, const PointG& pt) { return g(pt); }

bool separation_check(const EpsFamily& g, const InnerFun& f, const PointG& pt, double sep_tol) {
  if (std::abs(g.variety()(pt)) <= kMembershipTol) {
    throw PreconditionError("separation point lies on the variety");
  }
  return std::abs(g(pt) - f(pt)) > sep_tol;
}

InnerFun random_inner(std::mt19937_64& rng, int max_degree, int regularity_grid) {
  if (max_degree < 0) throw PreconditionError("max_degree must be nonnegative");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const cplx phase = unimodular(kTwoPi * unit(rng));
  // Shapes: eta = 1 with m in [0, D], or linear eta with m in [0, D - 1].
  const int shapes = (max_degree + 1) + max_degree;
  const int shape = std::min(shapes - 1, static_cast<int>(unit(rng) * shapes));
  if (shape <= max_degree) return InnerFun(shape, BiPoly::constant(Space::SP, 1.0), phase);
  const int m = shape - (max_degree + 1);
  for (;;) {
    const cplx a = std::polar(0.45 * std::sqrt(unit(rng)), kTwoPi * unit(rng));
    const cplx b = std::polar(0.45 * std::sqrt(unit(rng)), kTwoPi * unit(rng));
    BiPoly eta = BiPoly::constant(Space::SP, 1.0);
    eta.set_coeff(1, 0, -a);
    eta.set_coeff(0, 1, -b);
    // A wide margin keeps the sampled certificate far from a true zero.
    if (!regularity_scan(RatFun(BiPoly::constant(Space::SP, 1.0), eta), regularity_grid, 0.05)
             .regular) {
      continue;
    }
    return InnerFun(m, eta, phase, regularity_grid);
  }
}

int numerator_total_degree(const InnerFun& f) {
  return decompose_symmetric(f.numerator_zw()).total_degree().value_or(0);
}

}  // namespace gdet
