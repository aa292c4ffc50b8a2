#include "gdet/variety.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "gdet/errors.hpp"
#include "gdet/sampling.hpp"

namespace gdet {

VarietySpec::VarietySpec(BiPoly xi) : xi_(std::move(xi)) {
  if (xi_.space() != Space::SP) throw SpaceMismatch("variety polynomial must be in (s,p)");
  if (xi_.is_zero()) throw PreconditionError("variety polynomial is zero");
  xi_pi_ = compose_pi(xi_);
}

DistinguishedReport is_distinguished(const VarietySpec& v, int grid_n, double tol) {
  if (grid_n < 16) throw PreconditionError("distinguished scan needs grid_n >= 16");
  DistinguishedReport rep;
  const BiPoly& q = v.xi_pi();

  // (i) the variety meets G: look for a zero over a coarse interior grid.
  for (const cplx& z : closed_disk_grid(16)) {
    if (std::abs(z) >= 1.0 - tol) continue;
    std::vector<cplx> roots;
    try {
      roots = slice_roots(q, SliceVar::FirstFixed, z);
    } catch (const DegenerateSlice&) {
      rep.meets_domain = true;  // a whole line {z} x C lies in the variety
      break;
    }
    for (const cplx& w : roots) {
      if (std::abs(w) < 1.0 - tol) {
        rep.meets_domain = true;
        break;
      }
    }
    if (rep.meets_domain) break;
  }

  // (ii) zeros over unimodular slices stay on T^2.
  for (const SliceVar side : {SliceVar::FirstFixed, SliceVar::SecondFixed}) {
    for (int k = 0; k < grid_n && !rep.witness; ++k) {
      const cplx fixed = unimodular(kTwoPi * k / grid_n);
      for (const cplx& other : slice_roots(q, side, fixed)) {
        const double r = std::abs(other);
        if (r <= 1.0 + tol && r < 1.0 - tol) {
          rep.witness = side == SliceVar::FirstFixed ? pi_map(fixed, other) : pi_map(other, fixed);
          break;
        }
      }
    }
  }
  rep.passes = rep.meets_domain && !rep.witness;
  return rep;
}

cplx self_reflection_constant(const VarietySpec& v) {
  const BiPoly& q = v.xi_pi();
  const BiPoly r = reflect(q);
  const auto b = q.bidegree();
  // Anchor on the largest reflected coefficient.
  int bi = 0, bj = 0;
  double best = -1.0;
  for (int i = 0; i <= b->d1; ++i) {
    for (int j = 0; j <= b->d2; ++j) {
      const double m = std::abs(r.coeff(i, j));
      if (m > best) { best = m; bi = i; bj = j; }
    }
  }
  const cplx c = q.coeff(bi, bj) / r.coeff(bi, bj);
  const double scale = q.max_abs_coeff();
  if (max_coeff_diff(q, c * r) > 1e-10 * scale) {
    throw CertificateError("xi o pi is not proportional to its reflection");
  }
  if (std::abs(std::abs(c) - 1.0) > 1e-8) {
    throw CertificateError("self-reflection constant is not unimodular");
  }
  return c;
}

std::vector<FiberSample> variety_fiber_samples(const VarietySpec& v, int n, std::uint64_t seed,
                                               int attempt_budget) {
  if (n < 1) throw PreconditionError("variety_samples needs n >= 1");
  if (attempt_budget <= 0) attempt_budget = 1000 + 100 * n;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<FiberSample> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int attempt = 0; attempt < attempt_budget && static_cast<int>(out.size()) < n; ++attempt) {
    const cplx z = std::polar(0.98 * std::sqrt(unit(rng)), kTwoPi * unit(rng));
    const double pick = unit(rng);
    std::vector<cplx> roots;
    try {
      roots = slice_roots(v.xi_pi(), SliceVar::FirstFixed, z);
    } catch (const DegenerateSlice&) {
      continue;
    }
    std::vector<FiberSample> ok;
    for (const cplx& w : roots) {
      const PointG pt = pi_map(z, w);
      if (classify_point(pt, kMembershipTol) != PointClass::InteriorG) continue;
      if (std::abs(v(pt)) >= kMembershipTol) continue;
      ok.push_back({z, w, pt});
    }
    if (ok.empty()) continue;
    const auto idx = std::min(ok.size() - 1, static_cast<std::size_t>(pick * ok.size()));
    out.push_back(ok[idx]);
  }
  if (static_cast<int>(out.size()) < n) {
    throw CertificateError("could not sample enough points of the variety inside G");
  }
  return out;
}

std::vector<PointG> variety_samples(const VarietySpec& v, int n, std::uint64_t seed) {
  std::vector<PointG> pts;
  for (const auto& f : variety_fiber_samples(v, n, seed)) pts.push_back(f.pt);
  return pts;
}

std::vector<FiberSample> variety_closure_grid(const VarietySpec& v, int grid_n, double tol) {
  std::vector<FiberSample> out;
  for (const cplx& z : closed_disk_grid(grid_n)) {
    std::vector<cplx> roots;
    try {
      roots = slice_roots(v.xi_pi(), SliceVar::FirstFixed, z);
    } catch (const DegenerateSlice&) {
      continue;
    }
    for (const cplx& w : roots) {
      if (std::abs(w) <= 1.0 + tol) out.push_back({z, w, pi_map(z, w)});
    }
  }
  return out;
}

SingularityReport boundary_singularity_scan(const VarietySpec& v, int grid_n, double tol,
                                            double band) {
  if (grid_n < 16) throw PreconditionError("singularity scan needs grid_n >= 16");
  const BiPoly ds = v.xi().derivative(0);
  const BiPoly dp = v.xi().derivative(1);
  SingularityReport rep;
  rep.min_gradient = INFINITY;
  for (int k = 0; k < grid_n; ++k) {
    const cplx z = unimodular(kTwoPi * k / grid_n);
    for (const cplx& w : slice_roots(v.xi_pi(), SliceVar::FirstFixed, z)) {
      if (std::abs(std::abs(w) - 1.0) > band) continue;
      const PointG pt = pi_map(z, w);
      const double g = std::abs(ds(pt.s, pt.p)) + std::abs(dp(pt.s, pt.p));
      if (g < rep.min_gradient) {
        rep.min_gradient = g;
        if (g < tol) {
          rep.singular = true;
          rep.point = pt;
        }
      }
    }
  }
  return rep;
}

bool has_boundary_singularity(const VarietySpec& v, int grid_n, double tol) {
  return boundary_singularity_scan(v, grid_n, tol).singular;
}

RegularityReport regularity_scan(const RatFun& f, int grid_n, double tol) {
  if (f.space() != Space::SP) throw SpaceMismatch("regularity is checked for (s,p) functions");
  const PairSamples sp = to_symmetric_coords(closed_bidisk_pairs(grid_n));
  simd::ComplexSoA den;
  f.den().eval_batch(sp.z, sp.w, den);
  const simd::MinMax mm = simd::active().modulus_minmax(den);
  return {mm.min_abs > tol, mm.min_abs, PointG{sp.z_at(mm.argmin), sp.w_at(mm.argmin)}};
}

bool is_regular(const RatFun& f, int grid_n, double tol) {
  return regularity_scan(f, grid_n, tol).regular;
}

}  // namespace gdet
