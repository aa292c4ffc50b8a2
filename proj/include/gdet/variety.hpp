#pragma once
// Distinguished varieties W = Z(xi) with respect to G, and regularity of
// rational functions on the closure of G. All predicates here are sampled
// numerical certificates.

#include <cstdint>
#include <optional>
#include <vector>

#include "gdet/bipoly.hpp"
#include "gdet/geometry.hpp"

namespace gdet {

inline constexpr double kMembershipTol = 1e-9;
inline constexpr double kBoundaryModulusTol = 1e-6;
inline constexpr double kRegularityMargin = 1e-3;

/// xi in (s, p) together with the cached xi o pi in (z, w).
class VarietySpec {
 public:
  explicit VarietySpec(BiPoly xi);

  const BiPoly& xi() const { return xi_; }
  const BiPoly& xi_pi() const { return xi_pi_; }
  cplx operator()(const PointG& pt) const { return xi_(pt.s, pt.p); }

 private:
  BiPoly xi_;
  BiPoly xi_pi_;
};

struct DistinguishedReport {
  bool passes = false;
  /// Some sampled zero of xi o pi lies in D^2.
  bool meets_domain = false;
  /// A zero of xi on the topological boundary but off bG, when one was found.
  std::optional<PointG> witness;
};

/// Scans z over grid_n points of T (and, symmetrically, w) and solves for the
/// other coordinate; passes iff the variety meets G and every root with
/// modulus <= 1 + tol over a unimodular slice has modulus >= 1 - tol.
/// Throws DegenerateSlice if a scanned slice vanishes identically.
DistinguishedReport is_distinguished(const VarietySpec& v, int grid_n = 64,
                                     double tol = kBoundaryModulusTol);

/// c with xi o pi = c * reflect(xi o pi). Throws CertificateError when the two
/// are not proportional within 1e-10 or |c| differs from 1 by more than 1e-8.
cplx self_reflection_constant(const VarietySpec& v);

struct FiberSample {
  cplx z;
  cplx w;
  PointG pt;
};

/// n points of W inside G with their (z, w) fibers; deterministic in the seed.
/// Throws CertificateError when the attempt budget runs out.
std::vector<FiberSample> variety_fiber_samples(const VarietySpec& v, int n, std::uint64_t seed,
                                               int attempt_budget = 0);
std::vector<PointG> variety_samples(const VarietySpec& v, int n, std::uint64_t seed);

/// Points of Z(xi o pi) over the closed bidisk found by fixing z on the
/// closed-disk polar grid; used for sup scans over the closure of W.
std::vector<FiberSample> variety_closure_grid(const VarietySpec& v, int grid_n,
                                              double tol = kBoundaryModulusTol);

struct SingularityReport {
  bool singular = false;
  std::optional<PointG> point;
  double min_gradient = 0.0;
};

/// Looks for scanned points of Z(xi) on bG where |d xi/ds| + |d xi/dp| < tol.
SingularityReport boundary_singularity_scan(const VarietySpec& v, int grid_n = 64,
                                            double tol = 1e-6,
                                            double band = kBoundaryModulusTol);
bool has_boundary_singularity(const VarietySpec& v, int grid_n = 64, double tol = 1e-6);

struct RegularityReport {
  bool regular = false;
  double min_den = 0.0;
  PointG witness{};
};

/// Minimum of |den| over pi of the closed-bidisk polar grid; regular iff it
/// exceeds tol. f must live in (s, p).
RegularityReport regularity_scan(const RatFun& f, int grid_n = 64, double tol = kRegularityMargin);
bool is_regular(const RatFun& f, int grid_n = 64, double tol = kRegularityMargin);

}  // namespace gdet
