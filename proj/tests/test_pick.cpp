#include <set>

#include "doctest.h"
#include "gdet/errors.hpp"
#include "gdet/inner.hpp"
#include "gdet/pick.hpp"
#include "support.hpp"

using namespace gdet;
using namespace testing;

namespace {

PickProblem two_point(const std::string& kernel) {
  return PickProblem{{Node::disk(0.0), Node::disk(0.5)}, {0.0, 0.5}, make_kernel(kernel)};
}

// Closed form of the symmetrized-bidisk Hardy kernel in fiber coordinates.
cplx symg_closed_form(cplx z1, cplx w1, cplx z2, cplx w2) {
  auto szego2 = [](cplx a, cplx b, cplx c, cplx d) {
    return 1.0 / ((1.0 - a * std::conj(c)) * (1.0 - b * std::conj(d)));
  };
  return (szego2(z1, w1, z2, w2) - szego2(z1, w1, w2, z2)) / ((z1 - w1) * std::conj(z2 - w2));
}

}  // namespace

TEST_CASE("two-point Pick matrices") {
  const Eigen::MatrixXcd b = pick_matrix(two_point("bergman"));
  CHECK(b(0, 0) == cplx(1.0));
  CHECK(b(0, 1) == cplx(1.0));
  CHECK(b(1, 0) == cplx(1.0));
  CHECK(std::abs(b(1, 1) - 4.0 / 3.0) <= 1e-15);
  const Eigen::MatrixXcd s = pick_matrix(two_point("szego"));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(std::abs(s(i, j) - 1.0) <= 1e-15);
  PickProblem single{{Node::disk(cplx(0.3, 0.1))}, {0.0}, make_kernel("szego")};
  CHECK(pick_matrix(single)(0, 0).real() > 0.0);
}

TEST_CASE("singularity test") {
  Eigen::MatrixXcd ones(2, 2);
  ones << 1.0, 1.0, 1.0, 1.0;
  const SingularityResult r = singularity_test(ones);
  CHECK(r.singular);
  CHECK(r.rank == 1);
  REQUIRE(r.null_vector.has_value());
  const Eigen::VectorXcd& g = *r.null_vector;
  CHECK(std::abs(g(0) + g(1)) < 1e-15);
  CHECK(std::abs(g.norm() - 1.0) < 1e-15);

  Eigen::MatrixXcd berg(2, 2);
  berg << 1.0, 1.0, 1.0, 4.0 / 3.0;
  const SingularityResult b = singularity_test(berg);
  CHECK_FALSE(b.singular);
  CHECK(b.smin == doctest::Approx((7.0 - std::sqrt(37.0)) / 6.0).epsilon(1e-14));
  CHECK(b.smax == doctest::Approx((7.0 + std::sqrt(37.0)) / 6.0).epsilon(1e-14));

  const SingularityResult id = singularity_test(Eigen::MatrixXcd::Identity(3, 3));
  CHECK_FALSE(id.singular);
  CHECK(id.smin == 1.0);
  CHECK_FALSE(id.null_vector.has_value());
}

TEST_CASE("value propagation on the identity data") {
  const PickProblem p = two_point("szego");
  Eigen::VectorXcd g(2);
  g << 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);
  const auto v = propagate_value(p, g, Node::disk(0.25));
  REQUIRE(v.has_value());
  CHECK(std::abs(*v - 0.25) < 1e-12);
  // L(1/4) = (1 - 8/7)/sqrt 2, nonzero.
  CHECK(std::abs(uniqueness_function(p, g, Node::disk(0.25)) + (1.0 / 7.0) / std::sqrt(2.0)) < 1e-15);
  CHECK(uniqueness_region_member(p, g, Node::disk(0.25)));
  // L(z) = 1 - 1/(1 - z/2) vanishes only at 0.
  CHECK_FALSE(uniqueness_region_member(p, g, Node::disk(0.0)));
  CHECK_FALSE(propagate_value(p, g, Node::disk(0.0)).has_value());
  const auto at_node = propagate_value(p, g, Node::disk(0.5));
  REQUIRE(at_node.has_value());
  CHECK(std::abs(*at_node - 0.5) < 1e-14);
  CHECK_THROWS_AS(propagate_value(p, Eigen::VectorXcd::Ones(3), Node::disk(0.1)), PreconditionError);
}

TEST_CASE("inconsistent propagation data") {
  // gamma with L(target) != 0 but the value-weighted sum 0: values all zero.
  PickProblem p{{Node::disk(0.0), Node::disk(0.5)}, {0.0, 0.0}, make_kernel("szego")};
  Eigen::VectorXcd g(2);
  g << 1.0, -1.0;
  CHECK_THROWS_AS(propagate_value(p, g, Node::disk(0.25)), InconsistentData);
}

TEST_CASE("Blaschke products are reconstructed") {
  std::mt19937_64 rng(101);
  for (int d = 1; d <= 2; ++d) {
    for (int n = 3; n <= 5; ++n) {
      std::vector<cplx> zeros;
      for (int k = 0; k < d; ++k) zeros.push_back(in_disk(rng, 0.7));
      auto b = [&](cplx z) {
        cplx v = 1.0;
        for (cplx a : zeros) v *= (z - a) / (1.0 - std::conj(a) * z);
        return v;
      };
      PickProblem p{{}, {}, make_kernel("szego")};
      for (int k = 0; k < n; ++k) {
        const cplx z = 0.75 * unimodular(kTwoPi * (k + 0.3 * d) / n);
        p.nodes.push_back(Node::disk(z));
        p.values.push_back(b(z));
      }
      const Eigen::MatrixXcd m = pick_matrix(p);
      CHECK((m - m.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
      const SingularityResult r = singularity_test(m);
      CHECK(r.rank == d);
      for (std::size_t k = d; k < r.singular_values.size(); ++k) CHECK(r.singular_values[k] < 1e-8 * r.smax);
      REQUIRE(r.null_vector.has_value());
      for (int t = 0; t < 20; ++t) {
        const cplx z = in_disk(rng, 0.9);
        if (!uniqueness_region_member(p, *r.null_vector, Node::disk(z))) continue;
        const auto v = propagate_value(p, *r.null_vector, Node::disk(z));
        REQUIRE(v.has_value());
        CHECK(std::abs(*v - b(z)) < 1e-8);
      }
    }
  }
}

TEST_CASE("Pick matrices are Hermitian") {
  std::mt19937_64 rng(102);
  for (const std::string k : {"szego", "bergman", "symg"}) {
    PickProblem p{{}, {}, make_kernel(k)};
    for (int j = 0; j < 5; ++j) {
      p.nodes.push_back(k == "symg" ? Node::g(pi_map(in_disk(rng, 0.8), in_disk(rng, 0.8))) : Node::disk(in_disk(rng, 0.9)));
      p.values.push_back(in_disk(rng, 1.0));
    }
    const Eigen::MatrixXcd m = pick_matrix(p);
    CHECK((m - m.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("symmetrized Hardy kernel matches its closed form") {
  std::mt19937_64 rng(103);
  const SymGHardyKernel k(24);
  for (int t = 0; t < 100; ++t) {
    const cplx z1 = in_disk(rng, 0.5), w1 = in_disk(rng, 0.5), z2 = in_disk(rng, 0.5), w2 = in_disk(rng, 0.5);
    const cplx got = k(Node::g(pi_map(z1, w1)), Node::g(pi_map(z2, w2)));
    CHECK(std::abs(got - symg_closed_form(z1, w1, z2, w2)) < 1e-8 * std::abs(symg_closed_form(z1, w1, z2, w2)));
  }
  CHECK(k.contains(Node::g({0.0, 0.0})));
  CHECK_FALSE(k.contains(Node::g({2.0, 1.0})));
  CHECK_THROWS_AS(make_kernel("poisson"), PreconditionError);
}

TEST_CASE("problem validation") {
  PickProblem p = two_point("szego");
  p.values.push_back(0.1);
  CHECK_THROWS_AS(p.validate(), PreconditionError);
  PickProblem out{{Node::disk(1.5)}, {0.0}, make_kernel("szego")};
  CHECK_THROWS_AS(out.validate(), PreconditionError);
  PickProblem big{{Node::disk(0.1)}, {1.5}, make_kernel("szego")};
  CHECK_THROWS_AS(big.validate(), PreconditionError);
}

TEST_CASE("determining set construction") {
  const auto d2 = determining_set(2, {0.0, 0.5}, {1.0, -1.0});
  REQUIRE(d2.size() == 3u);
  std::set<std::pair<double, double>> got;
  for (const PointG& pt : d2) {
    CHECK(pt.s.imag() == 0.0);
    got.insert({pt.s.real(), pt.p.real()});
  }
  CHECK(got == std::set<std::pair<double, double>>{{0.0, 0.0}, {1.0, 0.25}, {0.0, -0.25}});
  CHECK(determining_set(1, {0.0}, {cplx(0.0, 1.0)}).size() == 1u);

  std::mt19937_64 rng(104);
  for (int n = 1; n <= 6; ++n) {
    for (int t = 0; t < 10; ++t) {
      std::vector<cplx> lambdas{0.0}, betas;
      while (int(lambdas.size()) < n) lambdas.push_back(in_disk(rng, 0.95));
      while (int(betas.size()) < n) betas.push_back(on_circle(rng));
      const auto pts = determining_set(n, lambdas, betas);
      CHECK(int(pts.size()) == n * n - n + 1);
      for (const PointG& pt : pts) CHECK(classify_point(pt) == PointClass::InteriorG);
    }
  }
  CHECK_THROWS_AS(determining_set(2, {0.1, 0.5}, {1.0, -1.0}), PreconditionError);
  CHECK_THROWS_AS(determining_set(2, {0.0, 0.0}, {1.0, -1.0}), PreconditionError);
  CHECK_THROWS_AS(determining_set(2, {0.0, 0.5}, {1.0, 1.0}), PreconditionError);
  CHECK_THROWS_AS(determining_set(2, {0.0, 0.5}, {1.0, 0.5}), PreconditionError);
  CHECK_THROWS_AS(determining_set(2, {0.0}, {1.0, -1.0}), PreconditionError);
  // lambda and -lambda under beta = -1 land on the same point.
  CHECK_THROWS_AS(determining_set(3, {0.0, 0.5, -0.5}, {1.0, -1.0, cplx(0.0, 1.0)}), PreconditionError);
}

TEST_CASE("agreement reports") {
  const InnerFun f = make_inner(1, one(Space::SP));
  const InnerFun g = make_inner(2, one(Space::SP));
  const std::vector<PointG> pts{{0.0, 0.0}, {0.0, -0.25}, {1.0, 0.25}};
  auto ff = [&](const PointG& x) { return f(x); };
  auto gg = [&](const PointG& x) { return g(x); };
  const AgreementReport same = check_agreement(ff, ff, pts, 1e-12);
  CHECK(same.agree);
  CHECK(same.max_gap == 0.0);
  const AgreementReport diff = check_agreement(ff, gg, pts, 1e-12);
  CHECK_FALSE(diff.agree);
  double expect = 0.0;
  for (const PointG& pt : pts) expect = std::max(expect, std::abs(pt.p - pt.p * pt.p));
  CHECK(expect == 0.3125);
  CHECK(diff.max_gap == doctest::Approx(expect).epsilon(1e-15));
  CHECK_THROWS_AS(check_agreement(ff, gg, {}, 1e-12), PreconditionError);
}
