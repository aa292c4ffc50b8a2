#include "gdet/extend.hpp"

#include <cmath>

#include "gdet/errors.hpp"
#include "gdet/sampling.hpp"

namespace gdet {

RatFun TrivialProvider::extend(const VarietySpec&, const BiPoly& f) const {
  return RatFun(compose_pi(f));
}

FixedProvider::FixedProvider(RatFun g, std::string label) : g_(std::move(g)), label_(std::move(label)) {
  if (g_.space() != Space::ZW) throw SpaceMismatch("extension G must be a (z,w) rational function");
}

RatFun FixedProvider::extend(const VarietySpec&, const BiPoly&) const { return g_; }

double provider_gap(const VarietySpec& v, const BiPoly& f, const RatFun& g, int samples,
                    std::uint64_t seed) {
  double gap = 0.0;
  for (const FiberSample& s : variety_fiber_samples(v, samples, seed)) {
    gap = std::max(gap, std::abs(g(s.z, s.w) - f(s.pt.s, s.pt.p)));
    gap = std::max(gap, std::abs(g(s.w, s.z) - f(s.pt.s, s.pt.p)));
  }
  return gap;
}

RatFun symmetrize_rational(const RatFun& g) {
  if (g.space() != Space::ZW) throw SpaceMismatch("symmetrize_rational expects (z,w) input");
  const BiPoly& n = g.num();
  const BiPoly& d = g.den();
  if (is_symmetric(n, 0.0) && is_symmetric(d, 0.0)) {
    return RatFun(decompose_symmetric(n), decompose_symmetric(d));
  }
  const BiPoly ns = n.swapped();
  const BiPoly ds = d.swapped();
  const BiPoly hn = n * ds + ns * d;
  const BiPoly hd = 2.0 * (d * ds);
  return RatFun(decompose_symmetric(hn), decompose_symmetric(hd));
}

ExtensionResult extend_polynomial(const VarietySpec& v, const BiPoly& f,
                                  const ExtensionProvider& provider, std::uint64_t seed,
                                  int samples) {
  if (f.space() != Space::SP) throw SpaceMismatch("f must be an (s,p) polynomial");
  const bool hypothesis_ok = !has_boundary_singularity(v);
  const RatFun g = provider.extend(v, f);
  const double pgap = provider_gap(v, f, g, samples, seed);
  if (!(pgap < 1e-8)) {
    throw CertificateError("provider extension does not match f o pi on the variety");
  }
  RatFun F = symmetrize_rational(g);
  double agap = 0.0;
  for (const PointG& pt : variety_samples(v, samples, seed + 1)) {
    agap = std::max(agap, std::abs(F(pt.s, pt.p) - f(pt.s, pt.p)));
  }
  if (!(agap < 1e-8)) throw CertificateError("extension disagrees with f on the variety");
  return {std::move(F), hypothesis_ok, pgap, agap};
}

AlphaEstimate estimate_alpha(const VarietySpec& v, const BiPoly& f, const RatFun& F, int grid_n) {
  if (F.space() != Space::SP) throw SpaceMismatch("F must be an (s,p) rational function");
  const PairSamples sp = to_symmetric_coords(closed_bidisk_pairs(grid_n));
  simd::ComplexSoA num, den;
  F.num().eval_batch(sp.z, sp.w, num);
  F.den().eval_batch(sp.z, sp.w, den);
  double sup_g = 0.0;
  for (std::size_t k = 0; k < sp.size(); ++k) {
    sup_g = std::max(sup_g, std::hypot(num.re[k], num.im[k]) / std::hypot(den.re[k], den.im[k]));
  }
  double sup_w = 0.0;
  for (const FiberSample& s : variety_closure_grid(v, grid_n)) {
    sup_w = std::max(sup_w, std::abs(f(s.pt.s, s.pt.p)));
  }
  if (!(sup_w > 0.0)) throw PreconditionError("f vanishes on the sampled variety");
  return {sup_g / sup_w, sup_g, sup_w};
}

}  // namespace gdet
