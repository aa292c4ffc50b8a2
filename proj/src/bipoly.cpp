#include "gdet/bipoly.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gdet/errors.hpp"

namespace gdet {

std::string_view to_string(Space s) { return s == Space::ZW ? "zw" : "sp"; }

BiPoly::BiPoly(Space space) : BiPoly(space, Bidegree{0, 0}) {}

BiPoly::BiPoly(Space space, Bidegree declared) : space_(space), declared_(declared) {
  if (declared.d1 < 0 || declared.d2 < 0) {
    throw PreconditionError("bidegree components must be nonnegative");
  }
  re_.assign(rows() * cols(), 0.0);
  im_.assign(rows() * cols(), 0.0);
}

BiPoly::BiPoly(Space space, const std::vector<std::vector<cplx>>& rows_in) : BiPoly(space) {
  int d1 = rows_in.empty() ? 0 : static_cast<int>(rows_in.size()) - 1;
  int d2 = 0;
  for (const auto& r : rows_in) d2 = std::max(d2, static_cast<int>(r.size()) - 1);
  *this = BiPoly(space, Bidegree{d1, d2});
  for (std::size_t i = 0; i < rows_in.size(); ++i) {
    for (std::size_t j = 0; j < rows_in[i].size(); ++j) {
      re_[i * cols() + j] = rows_in[i][j].real();
      im_[i * cols() + j] = rows_in[i][j].imag();
    }
  }
  normalize_zero();
}

BiPoly BiPoly::constant(Space space, cplx c) {
  BiPoly p(space);
  p.re_[0] = c.real();
  p.im_[0] = c.imag();
  return p;
}

BiPoly BiPoly::monomial(Space space, int i, int j, cplx c) {
  BiPoly p(space);
  p.set_coeff(i, j, c);
  p.normalize_zero();
  return p;
}

cplx BiPoly::coeff(int i, int j) const {
  if (i < 0 || j < 0 || i > declared_.d1 || j > declared_.d2) return 0.0;
  const std::size_t k = static_cast<std::size_t>(i) * cols() + static_cast<std::size_t>(j);
  return {re_[k], im_[k]};
}

void BiPoly::grow_to(Bidegree b) {
  if (b.fits_in(declared_)) return;
  BiPoly g(space_, Bidegree{std::max(b.d1, declared_.d1), std::max(b.d2, declared_.d2)});
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) {
      g.re_[i * g.cols() + j] = re_[i * cols() + j];
      g.im_[i * g.cols() + j] = im_[i * cols() + j];
    }
  }
  *this = std::move(g);
}

void BiPoly::set_coeff(int i, int j, cplx c) {
  if (i < 0 || j < 0) throw PreconditionError("negative monomial index");
  grow_to(Bidegree{i, j});
  const std::size_t k = static_cast<std::size_t>(i) * cols() + static_cast<std::size_t>(j);
  re_[k] = c.real();
  im_[k] = c.imag();
}

void BiPoly::add_to_coeff(int i, int j, cplx c) { set_coeff(i, j, coeff(i, j) + c); }

void BiPoly::normalize_zero() {
  if (is_zero() && (declared_.d1 != 0 || declared_.d2 != 0)) *this = BiPoly(space_);
}

bool BiPoly::is_zero() const {
  for (std::size_t k = 0; k < re_.size(); ++k) {
    if (re_[k] != 0.0 || im_[k] != 0.0) return false;
  }
  return true;
}

std::optional<Bidegree> BiPoly::bidegree() const {
  if (is_zero()) return std::nullopt;
  Bidegree b{0, 0};
  for (int i = 0; i <= declared_.d1; ++i) {
    for (int j = 0; j <= declared_.d2; ++j) {
      if (coeff(i, j) != 0.0) {
        b.d1 = std::max(b.d1, i);
        b.d2 = std::max(b.d2, j);
      }
    }
  }
  return b;
}

std::optional<int> BiPoly::total_degree() const {
  if (is_zero()) return std::nullopt;
  int t = 0;
  for (int i = 0; i <= declared_.d1; ++i) {
    for (int j = 0; j <= declared_.d2; ++j) {
      if (coeff(i, j) != 0.0) t = std::max(t, i + j);
    }
  }
  return t;
}

double BiPoly::max_abs_coeff() const {
  double m = 0.0;
  for (std::size_t k = 0; k < re_.size(); ++k) m = std::max(m, std::hypot(re_[k], im_[k]));
  return m;
}

BiPoly BiPoly::trimmed() const {
  const auto b = bidegree();
  if (!b) return BiPoly(space_);
  BiPoly t(space_, *b);
  for (int i = 0; i <= b->d1; ++i) {
    for (int j = 0; j <= b->d2; ++j) t.set_coeff(i, j, coeff(i, j));
  }
  return t;
}

BiPoly BiPoly::swapped() const {
  BiPoly t(space_, Bidegree{declared_.d2, declared_.d1});
  for (int i = 0; i <= declared_.d1; ++i) {
    for (int j = 0; j <= declared_.d2; ++j) t.set_coeff(j, i, coeff(i, j));
  }
  return t;
}

BiPoly BiPoly::derivative(int var) const {
  BiPoly d(space_);
  for (int i = 0; i <= declared_.d1; ++i) {
    for (int j = 0; j <= declared_.d2; ++j) {
      const cplx c = coeff(i, j);
      if (c == 0.0) continue;
      if (var == 0 && i > 0) d.add_to_coeff(i - 1, j, c * static_cast<double>(i));
      if (var == 1 && j > 0) d.add_to_coeff(i, j - 1, c * static_cast<double>(j));
    }
  }
  return d.trimmed();
}

cplx BiPoly::operator()(cplx x, cplx y) const {
  cplx acc = 0.0;
  for (int i = declared_.d1; i >= 0; --i) {
    cplx row = 0.0;
    for (int j = declared_.d2; j >= 0; --j) row = row * y + coeff(i, j);
    acc = acc * x + row;
  }
  return acc;
}

void BiPoly::eval_batch(const simd::ComplexSoA& x, const simd::ComplexSoA& y,
                        simd::ComplexSoA& out) const {
  eval_batch(simd::active(), x, y, out);
}

void BiPoly::eval_batch(const simd::KernelTable& kernels, const simd::ComplexSoA& x,
                        const simd::ComplexSoA& y, simd::ComplexSoA& out) const {
  const simd::GridView view{re_.data(), im_.data(), rows(), cols()};
  kernels.eval_grid(view, x, y, out);
}

BiPoly& BiPoly::accumulate(const BiPoly& q, double sign) {
  if (q.space_ != space_) throw SpaceMismatch("polynomials live in different spaces");
  grow_to(q.declared_);
  for (int i = 0; i <= q.declared_.d1; ++i) {
    for (int j = 0; j <= q.declared_.d2; ++j) {
      const cplx c = q.coeff(i, j);
      if (c != 0.0) add_to_coeff(i, j, sign * c);
    }
  }
  *this = trimmed();
  return *this;
}

BiPoly& BiPoly::operator+=(const BiPoly& q) { return accumulate(q, 1.0); }
BiPoly& BiPoly::operator-=(const BiPoly& q) { return accumulate(q, -1.0); }

BiPoly& BiPoly::operator*=(cplx c) {
  for (std::size_t k = 0; k < re_.size(); ++k) {
    const cplx v = cplx(re_[k], im_[k]) * c;
    re_[k] = v.real();
    im_[k] = v.imag();
  }
  *this = trimmed();
  return *this;
}

BiPoly operator*(const BiPoly& p, const BiPoly& q) {
  if (p.space_ != q.space_) throw SpaceMismatch("polynomials live in different spaces");
  const auto bp = p.bidegree();
  const auto bq = q.bidegree();
  if (!bp || !bq) return BiPoly(p.space_);
  BiPoly r(p.space_, Bidegree{bp->d1 + bq->d1, bp->d2 + bq->d2});
  for (int i = 0; i <= bp->d1; ++i) {
    for (int j = 0; j <= bp->d2; ++j) {
      const cplx a = p.coeff(i, j);
      if (a == 0.0) continue;
      for (int k = 0; k <= bq->d1; ++k) {
        for (int l = 0; l <= bq->d2; ++l) {
          const cplx b = q.coeff(k, l);
          if (b != 0.0) r.add_to_coeff(i + k, j + l, a * b);
        }
      }
    }
  }
  return r.trimmed();
}

bool operator==(const BiPoly& p, const BiPoly& q) {
  if (p.space_ != q.space_) return false;
  const int d1 = std::max(p.declared_.d1, q.declared_.d1);
  const int d2 = std::max(p.declared_.d2, q.declared_.d2);
  for (int i = 0; i <= d1; ++i) {
    for (int j = 0; j <= d2; ++j) {
      if (p.coeff(i, j) != q.coeff(i, j)) return false;
    }
  }
  return true;
}

double max_coeff_diff(const BiPoly& p, const BiPoly& q) {
  if (p.space_ != q.space_) throw SpaceMismatch("polynomials live in different spaces");
  const int d1 = std::max(p.declared_.d1, q.declared_.d1);
  const int d2 = std::max(p.declared_.d2, q.declared_.d2);
  double m = 0.0;
  for (int i = 0; i <= d1; ++i) {
    for (int j = 0; j <= d2; ++j) m = std::max(m, std::abs(p.coeff(i, j) - q.coeff(i, j)));
  }
  return m;
}

RatFun::RatFun(BiPoly num, BiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw PreconditionError("rational function with zero denominator");
  if (num_.space() != den_.space()) throw SpaceMismatch("numerator and denominator spaces differ");
}

RatFun::RatFun(BiPoly num) : RatFun(num, BiPoly::constant(num.space(), 1.0)) {}

BiPoly poly_arith(const BiPoly& p, const BiPoly& q, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return p + q;
    case ArithOp::Sub: return p - q;
    case ArithOp::Mul: return p * q;
  }
  return p;
}

BiPoly reflect(const BiPoly& p, Bidegree at) {
  if (p.space() != Space::ZW) throw SpaceMismatch("reflection is defined for (z,w) polynomials");
  const auto b = p.bidegree();
  if (!b) return BiPoly(Space::ZW, at);
  if (!b->fits_in(at)) throw PreconditionError("reflection bidegree below the trimmed bidegree");
  BiPoly r(Space::ZW, at);
  for (int i = 0; i <= b->d1; ++i) {
    for (int j = 0; j <= b->d2; ++j) {
      const cplx c = p.coeff(i, j);
      if (c != 0.0) r.set_coeff(at.d1 - i, at.d2 - j, std::conj(c));
    }
  }
  return r;
}

BiPoly reflect(const BiPoly& p) {
  return reflect(p, p.bidegree().value_or(Bidegree{0, 0}));
}

namespace {

std::vector<std::vector<double>> binomials(int n) {
  std::vector<std::vector<double>> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    c[i].assign(static_cast<std::size_t>(i) + 1, 1.0);
    for (int k = 1; k < i; ++k) c[i][k] = c[i - 1][k - 1] + c[i - 1][k];
  }
  return c;
}

}  // namespace

BiPoly compose_pi(const BiPoly& p) {
  if (p.space() != Space::SP) throw SpaceMismatch("compose_pi expects an (s,p) polynomial");
  const auto b = p.bidegree();
  if (!b) return BiPoly(Space::ZW);
  const auto binom = binomials(b->d1);
  const int top = b->d1 + b->d2;
  BiPoly r(Space::ZW, Bidegree{top, top});
  // s^i p^j = sum_k C(i,k) z^{k+j} w^{i-k+j}
  for (int i = 0; i <= b->d1; ++i) {
    for (int j = 0; j <= b->d2; ++j) {
      const cplx c = p.coeff(i, j);
      if (c == 0.0) continue;
      for (int k = 0; k <= i; ++k) r.add_to_coeff(k + j, i - k + j, c * binom[i][k]);
    }
  }
  return r.trimmed();
}

bool is_symmetric(const BiPoly& q, double slack) {
  const Bidegree d = q.declared_bidegree();
  const int n = std::max(d.d1, d.d2);
  for (int i = 0; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (std::abs(q.coeff(i, j) - q.coeff(j, i)) > slack) return false;
    }
  }
  return true;
}

BiPoly power_sum_sp(int k) {
  const BiPoly s = BiPoly::x(Space::SP);
  const BiPoly p = BiPoly::y(Space::SP);
  BiPoly prev = BiPoly::constant(Space::SP, 2.0);
  if (k == 0) return prev;
  BiPoly cur = s;
  for (int m = 2; m <= k; ++m) {
    BiPoly next = s * cur - p * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BiPoly decompose_symmetric(const BiPoly& q, double slack) {
  if (q.space() != Space::ZW) throw SpaceMismatch("decompose_symmetric expects a (z,w) polynomial");
  if (!is_symmetric(q, slack)) throw PreconditionError("polynomial is not symmetric in (z,w)");
  const auto b = q.bidegree();
  if (!b) return BiPoly(Space::SP);
  const int n = std::max(b->d1, b->d2);

  std::vector<BiPoly> sums;
  sums.reserve(static_cast<std::size_t>(n) + 1);
  sums.push_back(BiPoly::constant(Space::SP, 2.0));
  if (n >= 1) sums.push_back(BiPoly::x(Space::SP));
  const BiPoly s = BiPoly::x(Space::SP);
  const BiPoly p = BiPoly::y(Space::SP);
  for (int k = 2; k <= n; ++k) sums.push_back(s * sums[k - 1] - p * sums[k - 2]);

  BiPoly r(Space::SP);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= i; ++j) {
      if (i == j) {
        const cplx c = q.coeff(i, i);
        if (c != 0.0) r.add_to_coeff(0, i, c);
        continue;
      }
      const cplx c = 0.5 * (q.coeff(i, j) + q.coeff(j, i));
      if (c == 0.0) continue;
      const BiPoly& qk = sums[static_cast<std::size_t>(i - j)];
      const Bidegree kb = qk.declared_bidegree();
      for (int a = 0; a <= kb.d1; ++a) {
        for (int e = 0; e <= kb.d2; ++e) {
          const cplx t = qk.coeff(a, e);
          if (t != 0.0) r.add_to_coeff(a, e + j, c * t);
        }
      }
    }
  }
  return r.trimmed();
}

// ---------------------------------------------------------------------------
// Univariate roots

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct HornerResult {
  cplx value;
  cplx deriv;
  double bound;  // sum |c_k| |t|^k, for the rounding-error bound
};

HornerResult horner(std::span<const cplx> c, cplx t) {
  cplx v = c.back();
  cplx d = 0.0;
  double b = std::abs(c.back());
  const double at = std::abs(t);
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    d = d * t + v;
    v = v * t + c[k];
    b = b * at + std::abs(c[k]);
  }
  return {v, d, b};
}

std::vector<cplx> companion_roots(std::span<const cplx> c) {
  const int n = static_cast<int>(c.size()) - 1;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) m(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) m(i, n - 1) = -c[static_cast<std::size_t>(i)] / c.back();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, false);
  std::vector<cplx> r(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
  return r;
}

bool aberth(std::span<const cplx> c, const RootConfig& cfg, std::vector<cplx>& z) {
  const std::size_t n = c.size() - 1;
  // Initial guesses on a circle whose radius is the geometric mean root modulus.
  const double radius = std::pow(std::abs(c.front()) / std::abs(c.back()), 1.0 / static_cast<double>(n));
  z.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    z[k] = std::polar(radius, kTwoPi * static_cast<double>(k) / static_cast<double>(n) + 0.4);
  }
  std::vector<bool> done(n, false);
  for (int it = 0; it < cfg.max_iterations; ++it) {
    bool all = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      const HornerResult h = horner(c, z[i]);
      if (std::abs(h.value) <= 4.0 * static_cast<double>(n) * kEps * h.bound) {
        done[i] = true;
        continue;
      }
      const cplx ratio = h.value / h.deriv;
      cplx repulsion = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) repulsion += 1.0 / (z[i] - z[j]);
      }
      const cplx step = ratio / (1.0 - ratio * repulsion);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) return false;
      z[i] -= step;
      if (std::abs(step) <= cfg.update_tol * (1.0 + std::abs(z[i]))) {
        done[i] = true;
      } else {
        all = false;
      }
    }
    if (all) return true;
  }
  return std::all_of(done.begin(), done.end(), [](bool b) { return b; });
}

void merge_clusters(std::span<const cplx> c, std::vector<cplx>& z) {
  const std::size_t n = z.size();
  std::vector<int> group(n, -1);
  int groups = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (group[i] >= 0) continue;
    group[i] = groups;
    // Transitive closure over the cluster radius.
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t j = 0; j < n; ++j) {
        if (group[j] >= 0) continue;
        for (std::size_t k = 0; k < n; ++k) {
          if (group[k] == groups && std::abs(z[j] - z[k]) <= 1e-5 * (1.0 + std::abs(z[k]))) {
            group[j] = groups;
            grew = true;
            break;
          }
        }
      }
    }
    ++groups;
  }
  for (int g = 0; g < groups; ++g) {
    cplx sum = 0.0;
    int count = 0;
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (group[i] != g) continue;
      sum += z[i];
      ++count;
      worst = std::max(worst, std::abs(horner(c, z[i]).value));
    }
    if (count < 2) continue;
    const cplx centroid = sum / static_cast<double>(count);
    if (std::abs(horner(c, centroid).value) <= worst) {
      for (std::size_t i = 0; i < n; ++i) {
        if (group[i] == g) z[i] = centroid;
      }
    }
  }
}

}  // namespace

std::vector<cplx> polynomial_roots(std::span<const cplx> coeffs, const RootConfig& cfg) {
  double cmax = 0.0;
  for (const cplx& a : coeffs) cmax = std::max(cmax, std::abs(a));
  if (cmax == 0.0) throw DegenerateSlice("polynomial vanishes identically");

  std::size_t hi = coeffs.size();
  while (hi > 0 && std::abs(coeffs[hi - 1]) <= cfg.leading_cutoff * cmax) --hi;
  std::size_t lo = 0;
  while (lo < hi && coeffs[lo] == 0.0) ++lo;

  std::vector<cplx> roots(lo, cplx(0.0));
  std::span<const cplx> c = coeffs.subspan(lo, hi - lo);
  const std::size_t n = c.size() - 1;
  if (n == 0) return roots;
  if (n == 1) {
    roots.push_back(-c[0] / c[1]);
    return roots;
  }
  if (n == 2) {
    const cplx disc = std::sqrt(c[1] * c[1] - 4.0 * c[2] * c[0]);
    // Pick the sign that avoids cancellation, then use Vieta for the other root.
    const cplx qa = -c[1] + disc;
    const cplx qb = -c[1] - disc;
    const cplx q = std::abs(qa) >= std::abs(qb) ? qa : qb;
    const cplx r1 = q / (2.0 * c[2]);
    const cplx r2 = (2.0 * c[0]) / q;
    roots.push_back(r1);
    roots.push_back(r2);
    return roots;
  }

  std::vector<cplx> z;
  if (!aberth(c, cfg, z)) z = companion_roots(c);
  merge_clusters(c, z);
  roots.insert(roots.end(), z.begin(), z.end());
  return roots;
}

std::vector<cplx> slice_coeffs(const BiPoly& p, SliceVar fixed, cplx c) {
  const Bidegree d = p.declared_bidegree();
  std::vector<cplx> out;
  if (fixed == SliceVar::FirstFixed) {
    out.assign(static_cast<std::size_t>(d.d2) + 1, 0.0);
    for (int j = 0; j <= d.d2; ++j) {
      cplx acc = 0.0;
      for (int i = d.d1; i >= 0; --i) acc = acc * c + p.coeff(i, j);
      out[static_cast<std::size_t>(j)] = acc;
    }
  } else {
    out.assign(static_cast<std::size_t>(d.d1) + 1, 0.0);
    for (int i = 0; i <= d.d1; ++i) {
      cplx acc = 0.0;
      for (int j = d.d2; j >= 0; --j) acc = acc * c + p.coeff(i, j);
      out[static_cast<std::size_t>(i)] = acc;
    }
  }
  return out;
}

std::vector<cplx> slice_roots(const BiPoly& p, SliceVar fixed, cplx c, const RootConfig& cfg) {
  const auto coeffs = slice_coeffs(p, fixed, c);
  double m = 0.0;
  for (const cplx& a : coeffs) m = std::max(m, std::abs(a));
  if (m <= 1e-14 * std::max(1.0, p.max_abs_coeff())) {
    throw DegenerateSlice("slice polynomial vanishes identically");
  }
  return polynomial_roots(coeffs, cfg);
}

}  // namespace gdet
