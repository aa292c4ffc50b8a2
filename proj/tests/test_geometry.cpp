#include "doctest.h"
#include "gdet/errors.hpp"
#include "gdet/geometry.hpp"
#include "support.hpp"

using namespace gdet;
using namespace testing;

namespace {

bool same_pair(std::pair<cplx, cplx> got, cplx a, cplx b, double tol) {
  return (std::abs(got.first - a) < tol && std::abs(got.second - b) < tol) ||
         (std::abs(got.first - b) < tol && std::abs(got.second - a) < tol);
}

}  // namespace

TEST_CASE("symmetrization map") {
  CHECK(pi_map(0.0, 0.0) == PointG{0.0, 0.0});
  CHECK(pi_map(1.0, 1.0) == PointG{2.0, 1.0});
  CHECK(pi_map(0.5, -0.5) == PointG{0.0, -0.25});
}

TEST_CASE("fibers") {
  CHECK(same_pair(fiber({2.0, 1.0}), 1.0, 1.0, 1e-7));
  CHECK(same_pair(fiber({0.0, -0.25}), 0.5, -0.5, 1e-15));
  CHECK(same_pair(fiber({1.0, 0.25}), 0.5, 0.5, 1e-7));
  std::mt19937_64 rng(81);
  for (int t = 0; t < 1000; ++t) {
    const PointG pt{in_disk(rng, 3.0), in_disk(rng, 2.0)};
    const auto [z, w] = fiber(pt);
    const PointG back = pi_map(z, w);
    CHECK(std::abs(back.s - pt.s) < 1e-12);
    CHECK(std::abs(back.p - pt.p) < 1e-12);
  }
}

TEST_CASE("point classification") {
  CHECK(classify_point({0.0, 0.0}) == PointClass::InteriorG);
  CHECK(classify_point({2.0, 1.0}) == PointClass::BG);
  CHECK(classify_point({1.0, 0.0}) == PointClass::BoundaryNotBG);
  CHECK(classify_point({3.0, 0.0}) == PointClass::Outside);
  CHECK(to_string(PointClass::BoundaryNotBG) == "boundary");
  std::mt19937_64 rng(82);
  for (int a = 0; a < 40; ++a) {
    for (int b = 0; b < 40; ++b) {
      const cplx z = 0.99 * (a / 39.0) * unimodular(kTwoPi * b / 40.0);
      const cplx w = in_disk(rng, 0.99);
      CHECK(classify_point(pi_map(z, w)) == PointClass::InteriorG);
    }
  }
  for (int t = 0; t < 200; ++t) CHECK(classify_point(pi_map(on_circle(rng), on_circle(rng))) == PointClass::BG);
}

TEST_CASE("Mobius maps") {
  const MobiusParam id(unimodular(0.7), 0.0);
  CHECK(std::abs(mobius_eval(id, 0.3) - unimodular(0.7) * 0.3) < 1e-16);
  const MobiusParam m(unimodular(1.1), cplx(0.2, -0.4));
  CHECK(std::abs(mobius_eval(m, cplx(0.2, -0.4))) < 1e-16);
  CHECK(std::abs(mobius_eval(MobiusParam(1.0, 0.5), 0.0) + 0.5) < 1e-16);
  CHECK_THROWS_AS(MobiusParam(2.0, 0.0), PreconditionError);
  CHECK_THROWS_AS(MobiusParam(1.0, 1.0), PreconditionError);
  std::mt19937_64 rng(83);
  for (int t = 0; t < 100; ++t) {
    const MobiusParam r(on_circle(rng), in_disk(rng, 0.95));
    CHECK(std::abs(mobius_eval(r, in_disk(rng, 0.999))) < 1.0);
    CHECK(std::abs(std::abs(mobius_eval(r, on_circle(rng))) - 1.0) < 1e-12);
  }
}

TEST_CASE("analytic disks") {
  CHECK(disk_point(DiskSpec(1.0), 0.5) == PointG{1.0, 0.25});
  CHECK(disk_point(DiskSpec(-1.0), 0.5) == PointG{0.0, -0.25});
  const PointG q = disk_point_general(MobiusParam(1.0, 0.0), 0.3);
  CHECK(std::abs(q.s - 0.6) < 1e-16);
  CHECK(std::abs(q.p - 0.09) < 1e-16);
  CHECK_THROWS_AS(DiskSpec(0.5), PreconditionError);
}

TEST_CASE("disk intersection parameters") {
  SUBCASE("centred Mobius map gives the origin") {
    const auto r = disk_intersection_params(1.0, MobiusParam(-1.0, 0.0));
    REQUIRE(r.size() == 1);
    CHECK(std::abs(r[0]) < 1e-16);
  }
  SUBCASE("quadratic formula oracle") {
    // beta z = m(z) clears to 0.1 z^2 - 2 z + 0.1 = 0 for beta = 1, zeta = -1, a = 0.1.
    const auto r = disk_intersection_params(1.0, MobiusParam(-1.0, 0.1));
    REQUIRE(r.size() == 2);
    const double small = (2.0 - std::sqrt(4.0 - 0.04)) / 0.2;
    const double large = (2.0 + std::sqrt(4.0 - 0.04)) / 0.2;
    CHECK(same_pair({r[0], r[1]}, small, large, 1e-12));
    CHECK(small == doctest::Approx(0.0501256).epsilon(1e-6));
  }
  SUBCASE("roots solve beta z = m(z)") {
    std::mt19937_64 rng(84);
    for (int t = 0; t < 200; ++t) {
      const cplx beta = on_circle(rng);
      const MobiusParam m(on_circle(rng), in_disk(rng, 0.9));
      for (cplx z : disk_intersection_params(beta, m)) {
        const cplx resid = std::conj(m.a()) * beta * z * z + (m.zeta() - beta) * z - m.a() * m.zeta();
        CHECK(std::abs(resid) < 1e-12);
        if (std::abs(z) < 10.0) CHECK(std::abs(beta * z - mobius_eval(m, z)) < 1e-10 * (1 + std::abs(z)));
      }
    }
  }
}

TEST_CASE("certified epsilon") {
  const EpsilonCertificate c = find_epsilon({1.0, cplx(0.0, 1.0)}, -1.0);
  CHECK(c.epsilon >= 0.05);
  CHECK(c.epsilon == 0.5);  // regression value for the default 32-point grid
  CHECK(c.witnesses.size() == 2u * 32u * 32u);
  for (const CertifiedIntersection& w : c.witnesses) {
    CHECK(std::abs(w.root) < 1.0);
    CHECK(std::abs(w.root) > 1e-12);
  }
  CHECK_THROWS_AS(find_epsilon({1.0}, 1.0), PreconditionError);
  CHECK_THROWS_AS(find_epsilon({}, 1.0), PreconditionError);
}
