#pragma once
// Dense bivariate complex polynomials over the bidisk coordinates (z, w) or
// the symmetrized-bidisk coordinates (s, p).

#include <compare>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gdet/simd/kernels.hpp"
#include "gdet/types.hpp"

namespace gdet {

enum class Space { ZW, SP };

std::string_view to_string(Space s);

/// Largest power of the first and second variable.
struct Bidegree {
  int d1 = 0;
  int d2 = 0;
  friend bool operator==(const Bidegree&, const Bidegree&) = default;
  /// Componentwise order: a <= b iff a.d1 <= b.d1 and a.d2 <= b.d2.
  bool fits_in(const Bidegree& b) const { return d1 <= b.d1 && d2 <= b.d2; }
};

/// Dense coefficient grid: coeff(i, j) multiplies x^i y^j where (x, y) is
/// (z, w) or (s, p) according to space(). The grid is sized by the declared
/// bidegree; indices past it read as zero.
class BiPoly {
 public:
  /// The zero polynomial.
  explicit BiPoly(Space space = Space::ZW);
  /// All-zero grid of the given declared bidegree.
  BiPoly(Space space, Bidegree declared);
  /// rows[i][j] is the coefficient of x^i y^j; ragged rows are zero padded.
  BiPoly(Space space, const std::vector<std::vector<cplx>>& rows);

  static BiPoly constant(Space space, cplx c);
  static BiPoly monomial(Space space, int i, int j, cplx c = 1.0);
  /// First variable (z or s).
  static BiPoly x(Space space) { return monomial(space, 1, 0); }
  /// Second variable (w or p).
  static BiPoly y(Space space) { return monomial(space, 0, 1); }

  Space space() const { return space_; }
  Bidegree declared_bidegree() const { return declared_; }

  cplx coeff(int i, int j) const;
  /// Writes a coefficient, growing the declared bidegree if needed.
  void set_coeff(int i, int j, cplx c);
  void add_to_coeff(int i, int j, cplx c);

  bool is_zero() const;
  /// Trimmed bidegree; empty for the zero polynomial.
  std::optional<Bidegree> bidegree() const;
  /// max(i + j) over the support; empty for the zero polynomial.
  std::optional<int> total_degree() const;
  double max_abs_coeff() const;

  /// Same polynomial with declared bidegree equal to the trimmed one.
  BiPoly trimmed() const;
  /// Exchanges the roles of the two variables (coefficient transpose).
  BiPoly swapped() const;
  /// Partial derivative in the first (var = 0) or second (var = 1) variable.
  BiPoly derivative(int var) const;

  cplx operator()(cplx x, cplx y) const;
  /// Batched evaluation through the active SIMD kernel table.
  void eval_batch(const simd::ComplexSoA& x, const simd::ComplexSoA& y,
                  simd::ComplexSoA& out) const;
  void eval_batch(const simd::KernelTable& kernels, const simd::ComplexSoA& x,
                  const simd::ComplexSoA& y, simd::ComplexSoA& out) const;

  BiPoly& operator+=(const BiPoly& q);
  BiPoly& operator-=(const BiPoly& q);
  BiPoly& operator*=(cplx c);

  friend BiPoly operator+(BiPoly p, const BiPoly& q) { return p += q; }
  friend BiPoly operator-(BiPoly p, const BiPoly& q) { return p -= q; }
  friend BiPoly operator-(BiPoly p) { return p *= -1.0; }
  friend BiPoly operator*(BiPoly p, cplx c) { return p *= c; }
  friend BiPoly operator*(cplx c, BiPoly p) { return p *= c; }
  friend BiPoly operator*(const BiPoly& p, const BiPoly& q);

  /// Coefficientwise comparison over the union of the grids.
  friend bool operator==(const BiPoly& p, const BiPoly& q);
  /// max |p_ij - q_ij| over the union of the grids.
  friend double max_coeff_diff(const BiPoly& p, const BiPoly& q);

 private:
  std::size_t rows() const { return static_cast<std::size_t>(declared_.d1) + 1; }
  std::size_t cols() const { return static_cast<std::size_t>(declared_.d2) + 1; }
  void grow_to(Bidegree b);
  void normalize_zero();
  BiPoly& accumulate(const BiPoly& q, double sign);

  Space space_;
  Bidegree declared_;
  std::vector<double> re_;  // row-major, rows() x cols()
  std::vector<double> im_;
};

/// Rational function num/den; no reduction is ever attempted.
class RatFun {
 public:
  RatFun(BiPoly num, BiPoly den);
  explicit RatFun(BiPoly num);

  const BiPoly& num() const { return num_; }
  const BiPoly& den() const { return den_; }
  Space space() const { return num_.space(); }
  cplx operator()(cplx x, cplx y) const { return num_(x, y) / den_(x, y); }

 private:
  BiPoly num_;
  BiPoly den_;
};

enum class ArithOp { Add, Sub, Mul };
BiPoly poly_arith(const BiPoly& p, const BiPoly& q, ArithOp op);

/// Coefficient rule out[i][j] = conj(p[d1-i][d2-j]). Requires space ZW and
/// `at` at or above the trimmed bidegree.
BiPoly reflect(const BiPoly& p, Bidegree at);
/// Reflection at the trimmed bidegree.
BiPoly reflect(const BiPoly& p);

/// Substitutes s -> z + w, p -> z w.
BiPoly compose_pi(const BiPoly& p);

bool is_symmetric(const BiPoly& q, double slack = 1e-12);

/// Rewrites a symmetric (z, w) polynomial in (s, p) so that compose_pi of
/// the result reproduces q. Uses power sums q_k = z^k + w^k through
/// q_k = s q_{k-1} - p q_{k-2} and z^i w^j + z^j w^i = p^j q_{i-j}.
BiPoly decompose_symmetric(const BiPoly& q, double slack = 1e-12);

/// Power sum z^k + w^k expressed in (s, p).
BiPoly power_sum_sp(int k);

struct RootConfig {
  int max_iterations = 200;
  double update_tol = 1e-13;
  /// Leading coefficients below this fraction of the largest are dropped.
  double leading_cutoff = 1e-14;
};

/// Roots, with multiplicity, of sum_k coeffs[k] t^k. Aberth-Ehrlich iteration
/// with a companion-matrix fallback; clustered roots are replaced by their
/// centroid when that lowers the residual.
std::vector<cplx> polynomial_roots(std::span<const cplx> coeffs, const RootConfig& cfg = {});

enum class SliceVar { FirstFixed, SecondFixed };

/// Coefficients (ascending) of the one-variable polynomial obtained by fixing
/// the first or second variable of p at c.
std::vector<cplx> slice_coeffs(const BiPoly& p, SliceVar fixed, cplx c);

/// All roots of the slice. Throws DegenerateSlice if it vanishes identically.
std::vector<cplx> slice_roots(const BiPoly& p, SliceVar fixed, cplx c,
                              const RootConfig& cfg = {});

}  // namespace gdet
