#include "doctest.h"
#include "gdet/errors.hpp"
#include "gdet/hardy.hpp"
#include "support.hpp"

using namespace gdet;
using namespace testing;

namespace {

// Plain torus average of (1/2) f(pi) conj g(pi) |z - w|^2; exact for polynomials of low degree.
cplx torus_oracle(const BiPoly& f, const BiPoly& g, int n = 64) {
  cplx acc = 0.0;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const cplx z = unimodular(kTwoPi * a / n), w = unimodular(kTwoPi * b / n);
      acc += f(z + w, z * w) * std::conj(g(z + w, z * w)) * std::norm(z - w);
    }
  }
  return 0.5 * acc / double(n * n);
}

}  // namespace

TEST_CASE("coefficient inner products") {
  const BiPoly p = sp_p(), c1 = one(Space::SP);
  CHECK(hinner_poly(p, p) == cplx(1.0));
  CHECK(hinner_poly(c1, c1) == cplx(1.0));
  CHECK(hinner_poly(p, neil()) == cplx(0.0));
  for (int m = 0; m <= 5; ++m) {
    const BiPoly pm = BiPoly::monomial(Space::SP, 0, m);
    CHECK(hinner_poly(pm, pm) == cplx(1.0));
  }
  CHECK(hinner_poly(BiPoly(Space::SP), BiPoly(Space::SP)) == cplx(0.0));
  CHECK_THROWS_AS(hinner_poly(zw_z(), zw_z()), SpaceMismatch);
}

TEST_CASE("coefficient inner products agree with a torus average") {
  std::mt19937_64 rng(111);
  for (int t = 0; t < 20; ++t) {
    const BiPoly f = random_total(rng, Space::SP, t % 5);
    const BiPoly g = random_total(rng, Space::SP, (t + 2) % 5);
    const cplx exact = hinner_poly(f, g);
    CHECK(std::abs(exact - torus_oracle(f, g)) < 1e-12);
    CHECK(hinner_poly(g, f) == std::conj(exact));
    CHECK(hinner_poly(f, f).real() > 0.0);
    CHECK(hinner_poly(f, f).imag() == 0.0);
  }
}

TEST_CASE("quadrature") {
  const BiPoly p = sp_p();
  const QuadratureResult pp = hinner_quadrature(lift(p), lift(p));
  CHECK(std::abs(pp.value - 1.0) < 1e-6);
  CHECK(pp.per_radius.size() == HardyConfig::default_schedule().size());
  CHECK(std::abs(hinner_quadrature(lift(p * p), lift(p)).value) < 1e-10);

  const InnerFun f = make_inner(1, 3.0 * one(Space::SP) - sp_s());
  const ZWFunction fz = [&](cplx z, cplx w) { return f.eval_zw(z, w); };
  const QuadratureResult ff = hinner_quadrature(fz, fz);
  CHECK(std::abs(ff.value - 1.0) < 1e-4);
  CHECK(std::abs(ff.value - 1.0) < 1e-6);
  // Circle averages increase with r; the last one still sits about 2h * degree below the limit.
  for (std::size_t k = 1; k < ff.per_radius.size(); ++k) CHECK(ff.per_radius[k].real() > ff.per_radius[k - 1].real());
  CHECK(1.0 - ff.per_radius.back().real() > 5e-3);

  std::mt19937_64 rng(112);
  const BiPoly a = random_total(rng, Space::SP, 4), b = random_total(rng, Space::SP, 3);
  const cplx ab = hinner_quadrature(lift(a), lift(b)).value;
  const cplx ba = hinner_quadrature(lift(b), lift(a)).value;
  CHECK(std::abs(ab - std::conj(ba)) < 1e-10);
  CHECK(std::abs(ab - hinner_poly(a, b)) < 1e-6);
}

TEST_CASE("quadrature configuration") {
  HardyConfig c;
  c.grid_n = 48;
  CHECK_THROWS_AS(c.validate(), PreconditionError);
  c.grid_n = 16;
  CHECK_THROWS_AS(c.validate(), PreconditionError);
  HardyConfig r;
  r.radius_schedule = {0.5, 0.4};
  CHECK_THROWS_AS(r.validate(), PreconditionError);
  r.radius_schedule = {0.5, 1.0};
  CHECK_THROWS_AS(r.validate(), PreconditionError);
  CHECK_NOTHROW(HardyConfig{}.validate());
}

TEST_CASE("orthogonality criterion on the Neil family") {
  const InnerFun f = make_inner(1, one(Space::SP));
  const VarietySpec v(neil());
  const Main4Result r = main4_condition(f, v, one(Space::SP));
  CHECK(r.lhs == 0.0);
  CHECK(r.rhs > 0.0);
  CHECK(r.strict);
  CHECK(r.method == "coeff");
  std::mt19937_64 rng(113);
  for (int t = 0; t < 20; ++t) {
    const BiPoly h = random_total(rng, Space::SP, t % 6);
    const Main4Result q = main4_condition(f, v, h);
    CHECK(std::abs(q.lhs) < 1e-12);
    CHECK(q.strict);
  }
  CHECK_THROWS_AS(main4_condition(f, v, BiPoly(Space::SP)), PreconditionError);
}

TEST_CASE("orthogonality criterion through quadrature") {
  const InnerFun f = make_inner(0, 3.0 * one(Space::SP) - sp_s());
  const Main4Result r = main4_condition(f, VarietySpec(royal()), one(Space::SP));
  CHECK(r.method == "quad");
  // Oracle: rhs is the coefficient norm of xi, lhs the quadrature of 2 Re <f, xi>.
  CHECK(r.rhs == doctest::Approx(hinner_poly(royal(), royal()).real()).epsilon(1e-9));
  CHECK(std::isfinite(r.lhs));
  CHECK(r.strict == (r.lhs < r.rhs - 1e-12));
}
