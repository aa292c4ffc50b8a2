#pragma once
// Regular rational inner functions on G in the normal form
//   f o pi(z, w) = phase * (z w)^m * reflect(eta o pi)(z, w) / (eta o pi)(z, w)
// and the perturbation family g_eps that agrees with f on a distinguished
// variety while separating points off it.

#include <cstdint>
#include <random>

#include "gdet/bipoly.hpp"
#include "gdet/geometry.hpp"
#include "gdet/variety.hpp"

namespace gdet {

class InnerFun {
 public:
  /// Validates the regularity certificate of eta at the given grid.
  InnerFun(int m, BiPoly eta, cplx phase = 1.0, int regularity_grid = 64);

  int m() const { return m_; }
  const BiPoly& eta() const { return eta_; }
  cplx phase() const { return phase_; }
  const BiPoly& eta_pi() const { return eta_pi_; }
  const BiPoly& eta_pi_reflect() const { return eta_pi_reflect_; }
  /// First component of the bidegree of eta o pi.
  int l() const { return l_; }

  cplx eval_zw(cplx z, cplx w) const;
  cplx operator()(const PointG& pt) const;

  /// phase * (z w)^m * reflect(eta o pi) and eta o pi as (z, w) polynomials.
  BiPoly numerator_zw() const;
  const BiPoly& denominator_zw() const { return eta_pi_; }
  /// The function as a rational function of (s, p).
  RatFun as_sp_ratfun() const;

 private:
  int m_;
  BiPoly eta_;
  cplx phase_;
  BiPoly eta_pi_;
  BiPoly eta_pi_reflect_;
  int l_;
};

InnerFun make_inner(int m, const BiPoly& eta, cplx phase = 1.0);
cplx eval_inner(const InnerFun& f, const PointG& pt);

struct InnerReport {
  bool inner = false;
  double max_deviation = 0.0;  // max | |f o pi| - 1 | over the torus grid
};

/// Checks |f o pi| = 1 on a grid_n x grid_n torus grid, at r = 1 directly.
InnerReport inner_scan(const InnerFun& f, int grid_n = 64, double tol = 1e-8);
bool verify_inner(const InnerFun& f, int grid_n = 64, double tol = 1e-8);

struct EpsilonChoice {
  double epsilon;
  double delta;   // min |eta o pi| over the closed-bidisk grid
  double xi_max;  // max |xi o pi| over the same grid
};

/// eps = delta / (2 M); throws PreconditionError if m + l - n < 0.
EpsilonChoice choose_epsilon(const InnerFun& f, const VarietySpec& v, int grid_n = 64);

/// g_eps o pi = phase * [(zw)^m reflect(eta o pi) + eps reflect(xi o pi)]
///                      / [eta o pi + eps (zw)^{m+l-n} xi o pi].
class EpsFamily {
 public:
  EpsFamily(const InnerFun& f, const VarietySpec& v, double epsilon, int grid_n = 64);

  const InnerFun& f() const { return f_; }
  const VarietySpec& variety() const { return v_; }
  double epsilon() const { return epsilon_; }
  /// Numerator without the phase factor.
  const BiPoly& numerator() const { return num_; }
  const BiPoly& denominator() const { return den_; }
  /// m + l - n.
  int shift() const { return shift_; }
  /// Bidegree at which reflect(denominator) equals the numerator.
  Bidegree reflection_bidegree() const { return {f_.m() + f_.l(), f_.m() + f_.l()}; }
  double epsilon_bound() const { return bound_; }

  cplx eval_zw(cplx z, cplx w) const;
  cplx operator()(const PointG& pt) const;

 private:
  InnerFun f_;
  VarietySpec v_;
  double epsilon_;
  BiPoly num_;
  BiPoly den_;
  int shift_;
  double bound_;
};

EpsFamily make_eps_family(const InnerFun& f, const VarietySpec& v, double epsilon);
cplx eval_eps(const EpsFamily& g, const PointG& pt);

/// |g(pt) - f(pt)| > sep_tol. Throws PreconditionError when pt lies on the
/// variety (|xi(pt)| <= kMembershipTol).
bool separation_check(const EpsFamily& g, const InnerFun& f, const PointG& pt,
                      double sep_tol = 1e-12);

/// Random regular rational inner function with (s, p) numerator total degree
/// at most max_degree: phase * p^m * reflect(eta)/eta with eta = 1 or
/// eta = 1 - a s - b p, rejected until the regularity certificate passes.
InnerFun random_inner(std::mt19937_64& rng, int max_degree, int regularity_grid = 32);

/// Total degree of the (s, p) numerator of f.
int numerator_total_degree(const InnerFun& f);

}  // namespace gdet
