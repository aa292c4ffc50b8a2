#include "gdet/pick.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <map>

#include "gdet/errors.hpp"

namespace gdet {

cplx SzegoKernel::operator()(const Node& a, const Node& b) const {
  return 1.0 / (1.0 - a.c[0] * std::conj(b.c[0]));
}

cplx BergmanKernel::operator()(const Node& a, const Node& b) const {
  const cplx d = 1.0 - a.c[0] * std::conj(b.c[0]);
  return 1.0 / (d * d);
}

SymGHardyKernel::SymGHardyKernel(int order) : order_(order) {
  if (order < 1) throw PreconditionError("kernel truncation order must be positive");
}

bool SymGHardyKernel::contains(const Node& n) const {
  return classify_point(PointG{n.c[0], n.c[1]}) == PointClass::InteriorG;
}

std::vector<cplx> SymGHardyKernel::basis_values(const Node& n) const {
  const cplx s = n.c[0];
  const cplx p = n.c[1];
  // h_k = sum_{a+b=k} z^a w^b satisfies h_k = s h_{k-1} - p h_{k-2}.
  std::vector<cplx> h(static_cast<std::size_t>(order_), 0.0);
  h[0] = 1.0;
  if (order_ > 1) h[1] = s;
  for (int k = 2; k < order_; ++k) h[k] = s * h[k - 1] - p * h[k - 2];
  std::vector<cplx> ppow(static_cast<std::size_t>(order_), 1.0);
  for (int j = 1; j < order_; ++j) ppow[j] = ppow[j - 1] * p;
  // phi_ij o pi = (z^i w^j - z^j w^i) / (z - w) = p^j h_{i-j-1}.
  std::vector<cplx> out;
  out.reserve(static_cast<std::size_t>(order_ * (order_ + 1) / 2));
  for (int i = 1; i <= order_; ++i) {
    for (int j = 0; j < i; ++j) out.push_back(ppow[j] * h[i - j - 1]);
  }
  return out;
}

cplx SymGHardyKernel::operator()(const Node& a, const Node& b) const {
  const auto fa = basis_values(a);
  const auto fb = basis_values(b);
  cplx sum = 0.0;
  for (std::size_t k = 0; k < fa.size(); ++k) sum += fa[k] * std::conj(fb[k]);
  return sum;
}

std::shared_ptr<const Kernel> make_kernel(const std::string& name) {
  if (name == "szego") return std::make_shared<SzegoKernel>();
  if (name == "bergman") return std::make_shared<BergmanKernel>();
  if (name == "symg") return std::make_shared<SymGHardyKernel>();
  throw PreconditionError("unknown kernel '" + name + "'");
}

void PickProblem::validate() const {
  if (!kernel) throw PreconditionError("Pick problem has no kernel");
  if (nodes.size() != values.size()) throw PreconditionError("nodes and values differ in length");
  if (nodes.empty()) throw PreconditionError("Pick problem has no nodes");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!kernel->contains(nodes[i])) throw PreconditionError("node outside the kernel's domain");
    if (std::abs(values[i]) > 1.0 + 1e-12) throw PreconditionError("value with modulus above 1");
    for (std::size_t j = 0; j < i; ++j) {
      const double d = std::max(std::abs(nodes[i].c[0] - nodes[j].c[0]),
                                std::abs(nodes[i].c[1] - nodes[j].c[1]));
      if (d <= 1e-10) throw PreconditionError("nodes are not pairwise distinct");
    }
  }
}

Eigen::MatrixXcd pick_matrix(const PickProblem& p) {
  p.validate();
  const auto n = static_cast<Eigen::Index>(p.nodes.size());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      m(i, j) = (1.0 - p.values[i] * std::conj(p.values[j])) * (*p.kernel)(p.nodes[i], p.nodes[j]);
    }
  }
  return m;
}

SingularityResult singularity_test(const Eigen::MatrixXcd& m, double rel_tol) {
  if (m.rows() != m.cols() || m.rows() == 0) throw PreconditionError("matrix must be square");
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  SingularityResult r;
  r.smax = sv(0);
  r.smin = sv(sv.size() - 1);
  for (Eigen::Index k = 0; k < sv.size(); ++k) {
    r.singular_values.push_back(sv(k));
    if (sv(k) >= rel_tol * r.smax) ++r.rank;
  }
  r.singular = r.smin < rel_tol * r.smax;
  if (r.singular) r.null_vector = svd.matrixV().col(m.cols() - 1);
  return r;
}

cplx uniqueness_function(const PickProblem& p, const Eigen::VectorXcd& gamma, const Node& pt) {
  cplx sum = 0.0;
  for (std::size_t j = 0; j < p.nodes.size(); ++j) {
    sum += gamma(static_cast<Eigen::Index>(j)) * (*p.kernel)(pt, p.nodes[j]);
  }
  return sum;
}

namespace {

double uniqueness_scale(const PickProblem& p, const Eigen::VectorXcd& gamma, const Node& pt) {
  double s = 0.0;
  for (std::size_t j = 0; j < p.nodes.size(); ++j) {
    s += std::abs(gamma(static_cast<Eigen::Index>(j)) * (*p.kernel)(pt, p.nodes[j]));
  }
  return s;
}

}  // namespace

bool uniqueness_region_member(const PickProblem& p, const Eigen::VectorXcd& gamma,
                              const Node& pt, double tol) {
  return std::abs(uniqueness_function(p, gamma, pt)) > tol * uniqueness_scale(p, gamma, pt);
}

std::optional<cplx> propagate_value(const PickProblem& p, const Eigen::VectorXcd& gamma,
                                    const Node& target, double tol) {
  if (static_cast<std::size_t>(gamma.size()) != p.nodes.size()) {
    throw PreconditionError("gamma length differs from the number of nodes");
  }
  cplx r = 0.0;
  cplx c = 0.0;
  double scale = 0.0;
  for (std::size_t j = 0; j < p.nodes.size(); ++j) {
    const cplx t = gamma(static_cast<Eigen::Index>(j)) * (*p.kernel)(target, p.nodes[j]);
    r += t;
    c += std::conj(p.values[j]) * t;
    scale += std::abs(t);
  }
  if (std::abs(r) <= tol * scale) return std::nullopt;
  if (std::abs(c) <= tol * scale) {
    throw InconsistentData("propagation denominator vanishes while L(target) does not");
  }
  return r / c;
}

std::vector<PointG> determining_set(int n, const std::vector<cplx>& lambdas,
                                    const std::vector<cplx>& betas) {
  if (n < 1) throw PreconditionError("N must be at least 1");
  if (static_cast<int>(lambdas.size()) != n || static_cast<int>(betas.size()) != n) {
    throw PreconditionError("need exactly N lambdas and N betas");
  }
  if (lambdas[0] != 0.0) throw PreconditionError("lambda_1 must be 0");
  for (int i = 0; i < n; ++i) {
    if (!(std::abs(lambdas[i]) < 1.0)) throw PreconditionError("lambdas must lie in the open disk");
    if (std::abs(std::abs(betas[i]) - 1.0) > 1e-12) throw PreconditionError("betas must be unimodular");
    for (int j = 0; j < i; ++j) {
      if (std::abs(lambdas[i] - lambdas[j]) <= 1e-14) throw PreconditionError("duplicate lambda");
      if (std::abs(betas[i] - betas[j]) <= 1e-14) throw PreconditionError("duplicate beta");
    }
  }
  auto key = [](double x) { return std::llround(x * 1e14); };
  std::map<std::array<long long, 4>, PointG> seen;
  std::vector<PointG> out;
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      const PointG pt = disk_point(DiskSpec(betas[k]), lambdas[j]);
      const std::array<long long, 4> id{key(pt.s.real()), key(pt.s.imag()), key(pt.p.real()),
                                        key(pt.p.imag())};
      if (seen.emplace(id, pt).second) out.push_back(pt);
    }
  }
  if (static_cast<int>(out.size()) != n * n - n + 1) {
    throw PreconditionError("inputs produce colliding points (e.g. lambda and -lambda with beta = -1)");
  }
  return out;
}

AgreementReport check_agreement(const GFunction& f, const GFunction& g,
                                const std::vector<PointG>& pts, double tol) {
  if (pts.empty()) throw PreconditionError("agreement check needs at least one point");
  AgreementReport r;
  r.argmax = pts.front();
  for (const PointG& pt : pts) {
    const cplx a = f(pt);
    const cplx b = g(pt);
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()) || !std::isfinite(b.real()) ||
        !std::isfinite(b.imag())) {
      throw CertificateError("function evaluation failed during agreement check");
    }
    const double gap = std::abs(a - b);
    if (gap > r.max_gap) {
      r.max_gap = gap;
      r.argmax = pt;
    }
  }
  r.agree = r.max_gap <= tol;
  return r;
}

}  // namespace gdet
