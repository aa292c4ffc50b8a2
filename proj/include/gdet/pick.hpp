#pragma once
// Reproducing kernels, Pick matrices, the singular-Pick-matrix uniqueness test
// with its value-propagation formula, and the N^2 - N + 1 point determining
// set on G.

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gdet/geometry.hpp"

namespace gdet {

/// A point of a kernel's domain: the disk kernels read c[0] only; the
/// symmetrized-bidisk kernel reads (s, p) = (c[0], c[1]).
struct Node {
  std::array<cplx, 2> c{};
  static Node disk(cplx z) { return Node{{z, 0.0}}; }
  static Node g(const PointG& pt) { return Node{{pt.s, pt.p}}; }
};

class Kernel {
 public:
  virtual ~Kernel() = default;
  virtual std::string name() const = 0;
  /// Number of complex coordinates a node carries (1 for disk kernels).
  virtual int dimension() const = 0;
  virtual cplx operator()(const Node& lambda, const Node& mu) const = 0;
  /// Whether the node lies in the kernel's domain.
  virtual bool contains(const Node& n) const = 0;
};

/// 1 / (1 - z conj(w)) on the unit disk.
class SzegoKernel final : public Kernel {
 public:
  std::string name() const override { return "szego"; }
  int dimension() const override { return 1; }
  cplx operator()(const Node& a, const Node& b) const override;
  bool contains(const Node& n) const override { return std::abs(n.c[0]) < 1.0; }
};

/// 1 / (1 - z conj(w))^2 on the unit disk.
class BergmanKernel final : public Kernel {
 public:
  std::string name() const override { return "bergman"; }
  int dimension() const override { return 1; }
  cplx operator()(const Node& a, const Node& b) const override;
  bool contains(const Node& n) const override { return std::abs(n.c[0]) < 1.0; }
};

/// Hardy-space kernel of G under the normalized inner product
/// <f, g> = (1/2) <J f o pi, J g o pi>_{H^2(D^2)}, J = z - w. Summed over the
/// orthonormal family phi_ij o pi = (z^i w^j - z^j w^i) / (z - w), i > j,
/// truncated at i <= order.
class SymGHardyKernel final : public Kernel {
 public:
  explicit SymGHardyKernel(int order = 24);
  std::string name() const override { return "symg"; }
  int dimension() const override { return 2; }
  cplx operator()(const Node& a, const Node& b) const override;
  bool contains(const Node& n) const override;
  int order() const { return order_; }

 private:
  /// Values phi_ij(pt) for 0 <= j < i <= order, packed.
  std::vector<cplx> basis_values(const Node& n) const;
  int order_;
};

std::shared_ptr<const Kernel> make_kernel(const std::string& name);

struct PickProblem {
  std::vector<Node> nodes;
  std::vector<cplx> values;
  std::shared_ptr<const Kernel> kernel;

  /// Nodes pairwise separated by more than 1e-10, |values| <= 1, sizes match.
  void validate() const;
};

Eigen::MatrixXcd pick_matrix(const PickProblem& p);

inline constexpr double kSingularRelTol = 1e-10;

struct SingularityResult {
  bool singular = false;
  double smin = 0.0;
  double smax = 0.0;
  /// Number of singular values >= rel_tol * smax.
  int rank = 0;
  std::vector<double> singular_values;  // descending
  /// Unit vector for the smallest singular value (present when singular).
  std::optional<Eigen::VectorXcd> null_vector;
};

SingularityResult singularity_test(const Eigen::MatrixXcd& m, double rel_tol = kSingularRelTol);

/// Solves psi(target) * sum conj(v_j) g_j k(target, l_j) = sum g_j k(target, l_j).
/// Empty when |R| <= tol * sum |g_j k(target, l_j)| (target in Z(L)).
/// Throws InconsistentData when |C| is negligible but |R| is not.
std::optional<cplx> propagate_value(const PickProblem& p, const Eigen::VectorXcd& gamma,
                                    const Node& target, double tol = 1e-10);

/// L(z) = sum gamma_j k(z, lambda_j).
cplx uniqueness_function(const PickProblem& p, const Eigen::VectorXcd& gamma, const Node& pt);
bool uniqueness_region_member(const PickProblem& p, const Eigen::VectorXcd& gamma,
                              const Node& pt, double tol = 1e-10);

/// {(l_j (1 + b_k), b_k l_j^2)} for lambda_1 = 0, distinct lambdas in D and
/// distinct unimodular betas; exactly N^2 - N + 1 points after deduplication.
std::vector<PointG> determining_set(int n, const std::vector<cplx>& lambdas,
                                    const std::vector<cplx>& betas);

using GFunction = std::function<cplx(const PointG&)>;

struct AgreementReport {
  bool agree = false;
  double max_gap = 0.0;
  PointG argmax{};
};

AgreementReport check_agreement(const GFunction& f, const GFunction& g,
                                const std::vector<PointG>& pts, double tol);

}  // namespace gdet
