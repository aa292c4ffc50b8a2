#include "doctest.h"
#include "gdet/errors.hpp"
#include "gdet/inner.hpp"
#include "gdet/sampling.hpp"
#include "support.hpp"

using namespace gdet;
using namespace testing;

namespace {

const BiPoly kOne = one(Space::SP);

std::vector<PointG> interior_points(std::mt19937_64& rng, int n) {
  std::vector<PointG> out;
  for (int k = 0; k < n; ++k) out.push_back(pi_map(in_disk(rng, 0.97), in_disk(rng, 0.97)));
  return out;
}

}  // namespace

TEST_CASE("monomial inner functions") {
  std::mt19937_64 rng(91);
  const InnerFun f1 = make_inner(1, kOne);
  const InnerFun f2 = make_inner(2, kOne);
  for (const PointG& pt : interior_points(rng, 50)) {
    CHECK(std::abs(f1(pt) - pt.p) < 1e-14);
    CHECK(std::abs(f2(pt) - pt.p * pt.p) < 1e-14);
  }
  CHECK(std::abs(eval_inner(f2, {0.5, 0.0})) == 0.0);
  CHECK(std::abs(eval_inner(f2, {0.0, -0.25}) - 0.0625) < 1e-16);
  for (int t = 0; t < 20; ++t) {
    CHECK(std::abs(std::abs(eval_inner(f1, pi_map(on_circle(rng), on_circle(rng)))) - 1.0) < 1e-14);
  }
  for (int m = 0; m <= 6; ++m) CHECK(verify_inner(make_inner(m, kOne)));
}

TEST_CASE("inner function with a linear denominator") {
  const InnerFun f = make_inner(0, 3.0 * kOne - sp_s());
  CHECK(f.l() == 1);
  CHECK(verify_inner(f));
  std::mt19937_64 rng(92);
  for (int t = 0; t < 20; ++t) {
    const cplx z = in_disk(rng, 0.99), w = in_disk(rng, 0.99);
    // Oracle: reflection of 3 - z - w at (1,1) is 3 z w - z - w.
    const cplx expect = (3.0 * z * w - z - w) / (3.0 - z - w);
    CHECK(std::abs(f.eval_zw(z, w) - expect) < 1e-14);
    CHECK(std::abs(f.eval_zw(w, z) - f(pi_map(z, w))) < 1e-12);
  }
  const RatFun r = f.as_sp_ratfun();
  CHECK(r.num() == 3.0 * sp_p() - sp_s());
}

TEST_CASE("inner preconditions") {
  CHECK_THROWS_AS(make_inner(-1, kOne), PreconditionError);
  CHECK_THROWS_AS(make_inner(1, BiPoly(Space::SP)), PreconditionError);
  CHECK_THROWS_AS(make_inner(1, zw_z()), SpaceMismatch);
  CHECK_THROWS_AS(make_inner(1, 2.0 * kOne - sp_s()), CertificateError);
  CHECK_THROWS_AS(make_inner(1, kOne, 0.5), PreconditionError);
}

TEST_CASE("boundary modulus scan") {
  CHECK(inner_scan(make_inner(1, kOne)).max_deviation < 1e-14);
  const InnerFun g = make_inner(0, 3.0 * kOne - sp_s(), unimodular(0.3));
  const InnerReport r = inner_scan(g);
  CHECK(r.inner);
  CHECK(r.max_deviation < 1e-12);
}

TEST_CASE("epsilon margin") {
  const InnerFun f = make_inner(2, kOne);
  const VarietySpec v(royal());
  const EpsilonChoice c = choose_epsilon(f, v);
  CHECK(c.delta == 1.0);
  CHECK(c.xi_max == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(c.epsilon == doctest::Approx(0.125).epsilon(1e-12));
  CHECK(choose_epsilon(make_inner(3, kOne), v).delta == 1.0);
}

TEST_CASE("royal perturbation family") {
  const InnerFun f = make_inner(2, kOne);
  const VarietySpec v(royal());
  const double eps = 0.1;
  const EpsFamily g = make_eps_family(f, v, eps);
  const BiPoly d = zw_z() - zw_w();
  CHECK(max_coeff_diff(g.numerator(), BiPoly::monomial(Space::ZW, 2, 2) + eps * d * d) < 1e-14);
  CHECK(max_coeff_diff(g.denominator(), one(Space::ZW) + eps * d * d) < 1e-14);
  CHECK(g.shift() == 0);
  CHECK(std::abs(eval_eps(g, {0.5, 0.0}) - 0.025 / 1.025) < 1e-12);
  CHECK(max_coeff_diff(g.numerator(), reflect(g.denominator(), g.reflection_bidegree())) < 1e-12);

  std::mt19937_64 rng(93);
  for (const PointG& pt : variety_samples(v, 50, 17)) CHECK(std::abs(g(pt) - f(pt)) < 1e-10);
  int separated = 0;
  for (const PointG& pt : interior_points(rng, 40)) {
    if (std::abs(v(pt)) < 1e-3) continue;
    separated += separation_check(g, f, pt, 1e-6) ? 1 : 0;
  }
  CHECK(separated >= 20);
  CHECK_THROWS_AS(separation_check(g, f, variety_samples(v, 1, 2)[0]), PreconditionError);

  for (double e : {0.05, 0.1}) {
    const EpsFamily h = make_eps_family(f, v, e);
    double dev = 0.0;
    for (int a = 0; a < 64; ++a) {
      for (int b = 0; b < 64; ++b) {
        dev = std::max(dev, std::abs(std::abs(h.eval_zw(unimodular(kTwoPi * a / 64), unimodular(kTwoPi * b / 64))) - 1.0));
      }
    }
    CHECK(dev < 1e-8);
  }
  const PairSamples bidisk = closed_bidisk_pairs(32);
  double sup = 0.0;
  for (std::size_t k = 0; k < bidisk.size(); ++k) sup = std::max(sup, std::abs(g.eval_zw(bidisk.z_at(k), bidisk.w_at(k))));
  CHECK(sup <= 1.0 + 1e-8);
  double min_den = INFINITY;
  for (std::size_t k = 0; k < bidisk.size(); ++k) min_den = std::min(min_den, std::abs(g.denominator()(bidisk.z_at(k), bidisk.w_at(k))));
  CHECK(min_den >= 0.5);
}

TEST_CASE("zero perturbation reproduces f") {
  const InnerFun f = make_inner(2, kOne);
  const EpsFamily g = make_eps_family(f, VarietySpec(royal()), 0.0);
  std::mt19937_64 rng(94);
  for (const PointG& pt : interior_points(rng, 500)) {
    CHECK(std::abs(g(pt) - f(pt)) < 1e-12);
    if (std::abs(royal()(pt.s, pt.p)) > 1e-6) CHECK_FALSE(separation_check(g, f, pt));
  }
}

TEST_CASE("perturbation preconditions") {
  const InnerFun f = make_inner(2, kOne);
  CHECK_THROWS_AS(make_eps_family(f, VarietySpec(royal()), 0.2), PreconditionError);
  CHECK_THROWS_AS(make_eps_family(f, VarietySpec(royal()), -0.01), PreconditionError);
  CHECK_THROWS_AS(make_eps_family(f, VarietySpec(neil()), 0.01), PreconditionError);
}

TEST_CASE("random inner functions are inner, regular and low degree") {
  std::mt19937_64 rng(95);
  for (int t = 0; t < 60; ++t) {
    const int d = 1 + t % 3;
    const InnerFun f = random_inner(rng, d);
    CHECK(numerator_total_degree(f) <= d);
    CHECK(verify_inner(f, 32));
  }
}
