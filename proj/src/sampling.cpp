#include "gdet/sampling.hpp"

#include <algorithm>

#include "gdet/errors.hpp"

namespace gdet {

std::vector<cplx> closed_disk_grid(int grid_n) {
  if (grid_n < 1) throw PreconditionError("grid size must be positive");
  const int radii = std::max(2, grid_n / 8);
  std::vector<cplx> pts;
  pts.reserve(static_cast<std::size_t>(radii * grid_n + 1));
  pts.emplace_back(0.0, 0.0);
  for (int k = 1; k <= radii; ++k) {
    const double r = static_cast<double>(k) / radii;
    for (int a = 0; a < grid_n; ++a) pts.push_back(std::polar(r, kTwoPi * a / grid_n));
  }
  return pts;
}

PairSamples closed_bidisk_pairs(int grid_n) {
  const auto disk = closed_disk_grid(grid_n);
  const std::size_t m = disk.size();
  PairSamples out;
  out.z.resize(m * m);
  out.w.resize(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t k = i * m + j;
      out.z.re[k] = disk[i].real();
      out.z.im[k] = disk[i].imag();
      out.w.re[k] = disk[j].real();
      out.w.im[k] = disk[j].imag();
    }
  }
  return out;
}

PairSamples torus_pairs(int n, double r) {
  if (n < 1) throw PreconditionError("torus grid size must be positive");
  std::vector<cplx> circle(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) circle[static_cast<std::size_t>(a)] = std::polar(r, kTwoPi * a / n);
  const auto m = static_cast<std::size_t>(n);
  PairSamples out;
  out.z.resize(m * m);
  out.w.resize(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t k = i * m + j;
      out.z.re[k] = circle[i].real();
      out.z.im[k] = circle[i].imag();
      out.w.re[k] = circle[j].real();
      out.w.im[k] = circle[j].imag();
    }
  }
  return out;
}

PairSamples to_symmetric_coords(const PairSamples& zw) {
  const std::size_t n = zw.size();
  PairSamples sp;
  sp.z.resize(n);
  sp.w.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const cplx z = zw.z_at(k);
    const cplx w = zw.w_at(k);
    const cplx s = z + w;
    const cplx p = z * w;
    sp.z.re[k] = s.real();
    sp.z.im[k] = s.imag();
    sp.w.re[k] = p.real();
    sp.w.im[k] = p.imag();
  }
  return sp;
}

}  // namespace gdet
