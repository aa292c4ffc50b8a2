#include "gdet/geometry.hpp"

#include <cmath>

#include "gdet/errors.hpp"

namespace gdet {
namespace {

constexpr double kUnitTol = 1e-12;

bool near_unimodular(cplx c) { return std::abs(std::abs(c) - 1.0) <= kUnitTol; }

}  // namespace

PointG pi_map(cplx z, cplx w) { return {z + w, z * w}; }

std::pair<cplx, cplx> fiber(const PointG& pt) {
  const cplx disc = std::sqrt(pt.s * pt.s - 4.0 * pt.p);
  const cplx qa = pt.s + disc;
  const cplx qb = pt.s - disc;
  const cplx q = std::abs(qa) >= std::abs(qb) ? qa : qb;
  if (q == 0.0) return {0.0, 0.0};
  const cplx r1 = 0.5 * q;
  return {r1, pt.p / r1};
}

std::string_view to_string(PointClass c) {
  switch (c) {
    case PointClass::InteriorG: return "interior";
    case PointClass::BoundaryNotBG: return "boundary";
    case PointClass::BG: return "bg";
    case PointClass::Outside: return "outside";
  }
  return "outside";
}

PointClass classify_point(const PointG& pt, double tol) {
  if (!(tol > 0.0)) throw PreconditionError("classification tolerance must be positive");
  const auto [z, w] = fiber(pt);
  const double r1 = std::abs(z);
  const double r2 = std::abs(w);
  if (r1 < 1.0 - tol && r2 < 1.0 - tol) return PointClass::InteriorG;
  if (r1 > 1.0 + tol || r2 > 1.0 + tol) return PointClass::Outside;
  const bool b1 = r1 >= 1.0 - tol;
  const bool b2 = r2 >= 1.0 - tol;
  if (b1 && b2) return PointClass::BG;
  return PointClass::BoundaryNotBG;
}

MobiusParam::MobiusParam(cplx zeta, cplx a) : zeta_(zeta), a_(a) {
  if (!near_unimodular(zeta)) throw PreconditionError("Mobius rotation zeta must be unimodular");
  if (!(std::abs(a) < 1.0)) throw PreconditionError("Mobius center a must lie in the open disk");
}

cplx mobius_eval(const MobiusParam& m, cplx z) {
  const cplx den = 1.0 - std::conj(m.a()) * z;
  if (den == 0.0) throw PreconditionError("Mobius map evaluated at its pole");
  return m.zeta() * (z - m.a()) / den;
}

DiskSpec::DiskSpec(cplx beta) : beta_(beta) {
  if (!near_unimodular(beta)) throw PreconditionError("disk direction beta must be unimodular");
}

PointG disk_point(const DiskSpec& d, cplx z) { return {z + d.beta() * z, d.beta() * z * z}; }

PointG disk_point_general(const MobiusParam& m, cplx z) {
  const cplx mz = mobius_eval(m, z);
  return {z + mz, z * mz};
}

std::vector<cplx> disk_intersection_params(cplx beta, const MobiusParam& m) {
  const cplx a = m.a();
  const cplx zeta = m.zeta();
  const cplx c2 = std::conj(a) * beta;
  const cplx c1 = zeta - beta;
  const cplx c0 = -a * zeta;
  if (c2 == 0.0 && c1 == 0.0) {
    throw PreconditionError("intersection equation vanishes identically (beta = zeta, a = 0)");
  }
  if (c2 == 0.0) return {-c0 / c1};
  const cplx disc = std::sqrt(c1 * c1 - 4.0 * c2 * c0);
  const cplx qa = -c1 + disc;
  const cplx qb = -c1 - disc;
  const cplx q = std::abs(qa) >= std::abs(qb) ? qa : qb;
  return {q / (2.0 * c2), (2.0 * c0) / q};
}

EpsilonCertificate find_epsilon(const std::vector<cplx>& betas, cplx beta_center,
                                const EpsilonGrid& grid) {
  if (betas.empty()) throw PreconditionError("find_epsilon needs at least one beta");
  if (!near_unimodular(beta_center)) throw PreconditionError("beta_center must be unimodular");
  if (grid.points < 1) throw PreconditionError("epsilon grid needs at least one point");
  for (std::size_t i = 0; i < betas.size(); ++i) {
    if (!near_unimodular(betas[i])) throw PreconditionError("betas must be unimodular");
    if (std::abs(betas[i] - beta_center) <= kUnitTol) {
      throw PreconditionError("beta_center coincides with one of the betas");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (std::abs(betas[i] - betas[j]) <= kUnitTol) throw PreconditionError("betas must be distinct");
    }
  }

  const int n = grid.points;
  for (double eps = grid.start; eps >= grid.floor; eps *= 0.5) {
    // zeta = center e^{i t} with |zeta - center| < eps  <=>  |t| < 2 asin(eps / 2).
    const double half_arc = 2.0 * std::asin(std::min(1.0, eps / 2.0));
    EpsilonCertificate cert{eps, {}};
    bool ok = true;
    for (int iz = 0; iz < n && ok; ++iz) {
      const double t = half_arc * (2.0 * (iz + 0.5) / n - 1.0);
      const cplx zeta = beta_center * unimodular(t);
      for (int ia = 0; ia < n && ok; ++ia) {
        // Deterministic spiral filling the punctured disk of radius eps.
        const double rho = eps * (ia + 0.5) / n;
        const double phi = 2.399963229728653 * ia;  // golden angle
        const cplx a = std::polar(rho, phi);
        const MobiusParam m(zeta / std::abs(zeta), a);
        for (const cplx& beta : betas) {
          bool found = false;
          for (const cplx& z : disk_intersection_params(beta, m)) {
            const double r = std::abs(z);
            if (r > 1e-12 && r < 1.0) {
              cert.witnesses.push_back({m.zeta(), a, beta, z});
              found = true;
              break;
            }
          }
          if (!found) {
            ok = false;
            break;
          }
        }
      }
    }
    if (ok) return cert;
  }
  throw CertificateError("no epsilon above the floor passes the sampled intersection test");
}

}  // namespace gdet
