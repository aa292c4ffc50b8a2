#include "gdet/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "gdet/bipoly.hpp"
#include "gdet/errors.hpp"
#include "gdet/extend.hpp"
#include "gdet/geometry.hpp"
#include "gdet/hardy.hpp"
#include "gdet/inner.hpp"
#include "gdet/pick.hpp"
#include "gdet/sampling.hpp"
#include "gdet/variety.hpp"

namespace gdet::acceptance {
namespace {

using Rng = std::mt19937_64;

cplx in_disk(Rng& rng, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = radius * std::sqrt(u(rng));
  return r * unimodular(kTwoPi * u(rng));
}

// Dense polynomial with independent coefficients in the unit disk, total degree <= deg.
BiPoly random_poly(Rng& rng, Space space, int deg) {
  BiPoly p(space, Bidegree{deg, deg});
  for (int i = 0; i <= deg; ++i) {
    for (int j = 0; i + j <= deg; ++j) p.set_coeff(i, j, in_disk(rng, 1.0));
  }
  return p.trimmed();
}

BiPoly sp(const std::vector<std::vector<cplx>>& rows) { return BiPoly(Space::SP, rows); }

const BiPoly& royal_xi() {
  static const BiPoly xi = sp({{0.0, -4.0}, {0.0}, {1.0}});
  return xi;
}

// s^5 - 5 s^3 p + 5 s p^2 - p^2 - p^3
const BiPoly& neil_xi() {
  static const BiPoly xi = [] {
    BiPoly p(Space::SP, Bidegree{5, 3});
    p.set_coeff(5, 0, 1.0);
    p.set_coeff(3, 1, -5.0);
    p.set_coeff(1, 2, 5.0);
    p.set_coeff(0, 2, -1.0);
    p.set_coeff(0, 3, -1.0);
    return p;
  }();
  return xi;
}

struct Check {
  bool ok = true;
  std::ostringstream msg;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) msg << "; ";
      else msg.str("");
      ok = false;
      msg << what;
    }
  }
};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

// 1: Bergman Pick matrix on {0, 1/2} with values {0, 1/2}.
std::string bergman(Check& c, std::uint64_t) {
  PickProblem p{{Node::disk(0.0), Node::disk(0.5)}, {0.0, 0.5}, make_kernel("bergman")};
  const Eigen::MatrixXcd m = pick_matrix(p);
  const cplx expect[2][2] = {{1.0, 1.0}, {1.0, 4.0 / 3.0}};
  double gap = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) gap = std::max(gap, std::abs(m(i, j) - expect[i][j]));
  }
  const SingularityResult s = singularity_test(m);
  c.require(gap <= 1e-15, "matrix entries off by " + num(gap));
  c.require(!s.singular, "matrix reported singular");
  c.require(s.smin >= 0.4, "smin = " + num(s.smin) + " < 0.4");
  return "max entry gap " + num(gap) + ", smin " + num(s.smin);
}

// 2: Szego uniqueness and Blaschke reconstruction.
std::string szego(Check& c, std::uint64_t seed) {
  PickProblem p{{Node::disk(0.0), Node::disk(0.5)}, {0.0, 0.5}, make_kernel("szego")};
  const SingularityResult s = singularity_test(pick_matrix(p));
  c.require(s.smin < 1e-12, "Szego matrix smin " + num(s.smin));
  if (s.null_vector) {
    const auto v = propagate_value(p, *s.null_vector, Node::disk(0.25));
    c.require(v && std::abs(*v - 0.25) <= 1e-12, "propagated value at 1/4 wrong");
  } else {
    c.require(false, "no null vector");
  }

  Rng rng(seed + 2);
  double worst_trailing = 0.0;
  double worst_value = 0.0;
  int trials = 0;
  for (int d = 1; d <= 2; ++d) {
    for (int n = d + 1; n <= 5; ++n) {
      for (int rep = 0; rep < 10; ++rep, ++trials) {
        std::vector<cplx> zeros;
        for (int k = 0; k < d; ++k) zeros.push_back(in_disk(rng, 0.8));
        const cplx phase = unimodular(kTwoPi * std::uniform_real_distribution<double>(0, 1)(rng));
        auto blaschke = [&](cplx z) {
          cplx b = phase;
          for (cplx a : zeros) b *= (z - a) / (1.0 - std::conj(a) * z);
          return b;
        };
        PickProblem q{{}, {}, make_kernel("szego")};
        while (static_cast<int>(q.nodes.size()) < n) {
          const cplx z = in_disk(rng, 0.85);
          bool far = true;
          for (const Node& o : q.nodes) far = far && std::abs(o.c[0] - z) > 0.15;
          if (!far) continue;
          q.nodes.push_back(Node::disk(z));
          q.values.push_back(blaschke(z));
        }
        const SingularityResult r = singularity_test(pick_matrix(q));
        int rank = 0;
        for (double sv : r.singular_values) rank += sv >= 1e-8 * r.smax ? 1 : 0;
        c.require(rank == d, "Blaschke degree " + std::to_string(d) + " rank " + std::to_string(rank));
        for (std::size_t k = static_cast<std::size_t>(d); k < r.singular_values.size(); ++k) {
          worst_trailing = std::max(worst_trailing, r.singular_values[k] / r.smax);
        }
        if (!r.null_vector) {
          c.require(false, "missing null vector");
          continue;
        }
        for (int t = 0; t < 20; ++t) {
          const cplx z = in_disk(rng, 0.85);
          const auto v = propagate_value(q, *r.null_vector, Node::disk(z));
          if (!v) {
            c.require(false, "target outside uniqueness region");
            continue;
          }
          worst_value = std::max(worst_value, std::abs(*v - blaschke(z)));
        }
      }
    }
  }
  c.require(worst_value <= 1e-8, "reconstruction error " + num(worst_value));
  return std::to_string(trials) + " Blaschke trials, trailing sv " + num(worst_trailing) +
         ", reconstruction error " + num(worst_value);
}

// 3: determining sets separate distinct low-degree rational inner functions.
std::string determining(Check& c, std::uint64_t seed) {
  Rng rng(seed + 3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const PairSamples coarse = to_symmetric_coords(closed_bidisk_pairs(16));
  double min_gap = INFINITY;
  int trials = 0;
  for (int n = 2; n <= 3; ++n) {
    for (int t = 0; t < 200; ++t, ++trials) {
      std::vector<cplx> lambdas{0.0};
      std::vector<cplx> betas;
      while (static_cast<int>(lambdas.size()) < n) {
        const cplx z = in_disk(rng, 0.9);
        bool ok = std::abs(z) > 0.05;
        for (cplx o : lambdas) ok = ok && std::abs(o - z) > 0.05 && std::abs(o + z) > 0.05;
        if (ok) lambdas.push_back(z);
      }
      while (static_cast<int>(betas.size()) < n) {
        const cplx b = unimodular(kTwoPi * u(rng));
        bool ok = true;
        for (cplx o : betas) ok = ok && std::abs(o - b) > 0.05;
        if (ok) betas.push_back(b);
      }
      const std::vector<PointG> pts = determining_set(n, lambdas, betas);
      c.require(static_cast<int>(pts.size()) == n * n - n + 1, "wrong determining set size");

      auto draw = [&] {
        for (;;) {
          InnerFun f = random_inner(rng, n - 1);
          if (numerator_total_degree(f) < n) return f;
        }
      };
      InnerFun f = draw();
      InnerFun g = draw();
      for (;;) {
        double sup = 0.0;
        for (std::size_t k = 0; k < coarse.size(); ++k) {
          const PointG pt{coarse.z_at(k), coarse.w_at(k)};
          if (classify_point(pt) != PointClass::InteriorG) continue;
          sup = std::max(sup, std::abs(f(pt) - g(pt)));
        }
        if (sup >= 1e-6) break;
        g = draw();
      }
      const AgreementReport r = check_agreement([&](const PointG& x) { return f(x); },
                                                [&](const PointG& x) { return g(x); }, pts, 1e-10);
      min_gap = std::min(min_gap, r.max_gap);
      c.require(!r.agree, "distinct functions agree on a determining set (N=" + std::to_string(n) + ")");
    }
  }
  return std::to_string(trials) + " trials, smallest disagreement " + num(min_gap);
}

// 4: certified epsilon for the disk family.
std::string epsilon(Check& c, std::uint64_t) {
  const EpsilonCertificate cert = find_epsilon({1.0, cplx(0.0, 1.0)}, -1.0);
  c.require(cert.epsilon >= 1e-3, "epsilon " + num(cert.epsilon));
  double worst = 0.0;
  for (const CertifiedIntersection& w : cert.witnesses) {
    const double r = std::abs(w.root);
    c.require(r > 0.0 && r < 1.0, "root outside the punctured disk");
    const cplx q = std::conj(w.a) * w.beta * w.root * w.root + (w.zeta - w.beta) * w.root - w.a * w.zeta;
    worst = std::max(worst, std::abs(q));
  }
  c.require(!cert.witnesses.empty(), "no witnesses");
  c.require(worst < 1e-10, "quadratic residual " + num(worst));
  return "epsilon " + num(cert.epsilon) + ", " + std::to_string(cert.witnesses.size()) +
         " witnesses, residual " + num(worst);
}

// 5: g_eps on the royal variety.
std::string royal_family(Check& c, std::uint64_t seed) {
  const InnerFun f(2, BiPoly::constant(Space::SP, 1.0));
  const VarietySpec v(royal_xi());
  const double eps = 0.1;
  const EpsFamily g(f, v, eps);
  const BiPoly zmw = BiPoly::x(Space::ZW) - BiPoly::y(Space::ZW);
  const BiPoly num_expect = BiPoly::monomial(Space::ZW, 2, 2) + eps * (zmw * zmw);
  const BiPoly den_expect = BiPoly::constant(Space::ZW, 1.0) + eps * (zmw * zmw);
  const double dn = max_coeff_diff(g.numerator(), num_expect);
  const double dd = max_coeff_diff(g.denominator(), den_expect);
  c.require(dn <= 1e-14 && dd <= 1e-14, "expanded forms differ by " + num(std::max(dn, dd)));

  double on_v = 0.0;
  for (const PointG& pt : variety_samples(v, 50, seed + 5)) on_v = std::max(on_v, std::abs(g(pt) - f(pt)));
  c.require(on_v <= 1e-10, "g differs from f on the variety by " + num(on_v));

  const double at = std::abs(g(PointG{0.5, 0.0}) - 0.025 / 1.025);
  c.require(at <= 1e-12, "g(1/2, 0) off by " + num(at));

  double dev = 0.0;
  const int n = 64;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const cplx z = unimodular(kTwoPi * a / n);
      const cplx w = unimodular(kTwoPi * b / n);
      dev = std::max(dev, std::abs(std::abs(g.eval_zw(z, w)) - 1.0));
    }
  }
  c.require(dev <= 1e-8, "|g| deviates from 1 on the torus by " + num(dev));
  return "coefficient gap " + num(std::max(dn, dd)) + ", variety gap " + num(on_v) +
         ", torus deviation " + num(dev);
}

// 6: Hardy inner products and the orthogonality criterion.
std::string hardy(Check& c, std::uint64_t seed) {
  double norm_gap = 0.0;
  for (int m = 0; m <= 5; ++m) {
    const BiPoly pm = BiPoly::monomial(Space::SP, 0, m);
    norm_gap = std::max(norm_gap, std::abs(hinner_poly(pm, pm) - 1.0));
  }
  c.require(norm_gap == 0.0, "||p^m|| differs from 1 by " + num(norm_gap));

  Rng rng(seed + 6);
  std::uniform_int_distribution<int> deg(0, 6);
  double quad_gap = 0.0;
  for (int t = 0; t < 50; ++t) {
    const BiPoly f = random_poly(rng, Space::SP, deg(rng));
    const BiPoly g = random_poly(rng, Space::SP, deg(rng));
    const cplx exact = hinner_poly(f, g);
    const QuadratureResult q = hinner_quadrature(lift(f), lift(g));
    quad_gap = std::max(quad_gap, std::abs(q.value - exact));
  }
  c.require(quad_gap <= 1e-6, "quadrature differs from coefficients by " + num(quad_gap));

  const InnerFun f(1, BiPoly::constant(Space::SP, 1.0));
  const VarietySpec v(neil_xi());
  std::uniform_int_distribution<int> hdeg(0, 5);
  double ortho = 0.0;
  bool strict = true;
  for (int t = 0; t < 20; ++t) {
    const BiPoly h = random_poly(rng, Space::SP, hdeg(rng));
    ortho = std::max(ortho, std::abs(hinner_poly(BiPoly::monomial(Space::SP, 0, 1), v.xi() * h)));
    strict = strict && main4_condition(f, v, h).strict;
  }
  c.require(ortho <= 1e-12, "<p, xi h> = " + num(ortho));
  c.require(strict, "orthogonality criterion not strict");
  return "norm gap " + num(norm_gap) + ", quadrature gap " + num(quad_gap) + ", <p, xi h> " + num(ortho);
}

// 7: variety certificates and regularity.
std::string varieties(Check& c, std::uint64_t) {
  std::ostringstream out;
  for (const auto& [label, xi] : {std::pair{"royal", royal_xi()}, std::pair{"neil", neil_xi()}}) {
    const VarietySpec v(xi);
    const DistinguishedReport r = is_distinguished(v);
    c.require(r.passes, std::string(label) + " not distinguished");
    double dev = INFINITY;
    try {
      dev = std::abs(std::abs(self_reflection_constant(v)) - 1.0);
    } catch (const Error& e) {
      c.require(false, std::string(label) + ": " + e.what());
    }
    c.require(dev <= 1e-8, std::string(label) + " reflection constant off by " + num(dev));
    out << label << " |c|-1 = " << num(dev) << ", ";
  }
  const DistinguishedReport bad = is_distinguished(VarietySpec(BiPoly::monomial(Space::SP, 0, 1)));
  c.require(!bad.passes, "p = 0 reported distinguished");
  c.require(bad.witness && classify_point(*bad.witness, kBoundaryModulusTol) == PointClass::BoundaryNotBG,
            "p = 0 witness is not a boundary point outside bG");

  const BiPoly s = BiPoly::x(Space::SP);
  const BiPoly p = BiPoly::y(Space::SP);
  const BiPoly one = BiPoly::constant(Space::SP, 1.0);
  const RegularityReport good = regularity_scan(RatFun(3.0 * p - s, 3.0 * one - s));
  const RegularityReport sing = regularity_scan(RatFun(2.0 * p - s, 2.0 * one - s));
  c.require(good.regular, "(3p-s)/(3-s) classified non-regular");
  c.require(!sing.regular, "(2p-s)/(2-s) classified regular");
  out << "min denominators " << num(good.min_den) << " / " << num(sing.min_den);
  return out.str();
}

// 8: extension through symmetrization on the royal variety.
std::string extension(Check& c, std::uint64_t seed) {
  const VarietySpec v(royal_xi());
  const BiPoly f = BiPoly::y(Space::SP);
  const FixedProvider provider(RatFun(BiPoly::monomial(Space::ZW, 2, 0)), "z^2");
  const ExtensionResult r = extend_polynomial(v, f, provider, seed);
  const BiPoly expect = 0.5 * sp({{0.0, -2.0}, {0.0}, {1.0}});
  const auto dd = r.F.den().bidegree();
  const bool const_den = dd && dd->d1 == 0 && dd->d2 == 0;
  c.require(const_den, "F has a non-constant denominator");
  double coef = INFINITY;
  if (const_den) coef = max_coeff_diff(r.F.num() * (1.0 / r.F.den().coeff(0, 0)), expect);
  c.require(coef == 0.0, "F differs from (s^2 - 2p)/2 by " + num(coef));

  double gap = 0.0;
  for (const PointG& pt : variety_samples(v, 50, seed + 800)) {
    gap = std::max(gap, std::abs(r.F(pt.s, pt.p) - f(pt.s, pt.p)));
  }
  c.require(gap <= 1e-8, "F differs from f on the variety by " + num(gap));
  const AlphaEstimate a = estimate_alpha(v, f, r.F, 64);
  c.require(std::abs(a.alpha_hat - 1.0) <= 2e-2, "alpha_hat = " + num(a.alpha_hat));
  return "coefficient gap " + num(coef) + ", variety gap " + num(gap) + ", alpha_hat " + num(a.alpha_hat);
}

// 9: algebra round trips and reflection invariants.
std::string algebra(Check& c, std::uint64_t seed) {
  Rng rng(seed + 9);
  double round_trip = 0.0;
  for (int d = 0; d <= 12; ++d) {
    for (int rep = 0; rep < 4; ++rep) {
      const BiPoly q = random_poly(rng, Space::SP, d);
      round_trip = std::max(round_trip, max_coeff_diff(decompose_symmetric(compose_pi(q)), q));
    }
  }
  c.require(round_trip <= 1e-12, "decompose(compose(q)) differs by " + num(round_trip));

  std::uniform_int_distribution<int> deg(0, 6);
  double invol = 0.0;
  double modulus = 0.0;
  for (int t = 0; t < 100; ++t) {
    BiPoly p(Space::ZW, Bidegree{deg(rng), deg(rng)});
    const Bidegree b = p.declared_bidegree();
    for (int i = 0; i <= b.d1; ++i) {
      for (int j = 0; j <= b.d2; ++j) p.set_coeff(i, j, in_disk(rng, 1.0));
    }
    const BiPoly r = reflect(p);
    invol = std::max(invol, max_coeff_diff(reflect(r), p));
    for (int k = 0; k < 16; ++k) {
      const cplx z = unimodular(kTwoPi * std::uniform_real_distribution<double>(0, 1)(rng));
      const cplx w = unimodular(kTwoPi * std::uniform_real_distribution<double>(0, 1)(rng));
      const double a = std::abs(p(z, w));
      modulus = std::max(modulus, std::abs(std::abs(r(z, w)) - a) / std::max(1.0, a));
    }
  }
  c.require(invol == 0.0, "reflection is not an involution");
  c.require(modulus <= 1e-12, "reflection changes torus modulus by " + num(modulus));
  return "round trip " + num(round_trip) + ", torus modulus gap " + num(modulus);
}

struct Entry {
  const char* name;
  double budget;
  std::string (*run)(Check&, std::uint64_t);
};

constexpr Entry kEntries[kCriterionCount] = {
    {"Bergman Pick matrix", 1.0, bergman},
    {"Szego uniqueness and propagation", 5.0, szego},
    {"determining-set desk test", 60.0, determining},
    {"certified disk-family epsilon", 10.0, epsilon},
    {"royal eps-family", 10.0, royal_family},
    {"Hardy inner products", 30.0, hardy},
    {"variety certificates and regularity", 20.0, varieties},
    {"symmetrization extension", 10.0, extension},
    {"algebra invariants", 10.0, algebra},
};

}  // namespace

Outcome run_criterion(int id, std::uint64_t seed) {
  if (id < 1 || id > kCriterionCount) throw PreconditionError("criterion must be in 1.." + std::to_string(kCriterionCount));
  const Entry& e = kEntries[id - 1];
  Outcome o;
  o.id = id;
  o.name = e.name;
  o.budget_seconds = e.budget;
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  std::string summary;
  try {
    summary = e.run(c, seed);
  } catch (const std::exception& ex) {
    c.require(false, std::string("exception: ") + ex.what());
  }
  o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.require(o.seconds <= e.budget, "took " + num(o.seconds) + " s, budget " + num(e.budget) + " s");
  o.pass = c.ok;
  o.detail = c.ok ? summary : c.msg.str() + (summary.empty() ? "" : " (" + summary + ")");
  return o;
}

std::vector<Outcome> run_all(std::uint64_t seed) {
  std::vector<Outcome> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, seed));
  return out;
}

std::string format(const Outcome& o) {
  char time[32];
  std::snprintf(time, sizeof time, "%.2f", o.seconds);
  return std::string(o.pass ? "PASS" : "FAIL") + " [" + std::to_string(o.id) + "] " + o.name + " (" +
         time + " s): " + o.detail;
}

}  // namespace gdet::acceptance
