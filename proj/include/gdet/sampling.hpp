#pragma once
// Deterministic sample sets over the closed bidisk and the torus.

#include <vector>

#include "gdet/simd/kernels.hpp"
#include "gdet/types.hpp"

namespace gdet {

/// Paired samples (z_k, w_k) stored as two SoA vectors.
struct PairSamples {
  simd::ComplexSoA z;
  simd::ComplexSoA w;
  std::size_t size() const { return z.size(); }
  cplx z_at(std::size_t k) const { return {z.re[k], z.im[k]}; }
  cplx w_at(std::size_t k) const { return {w.re[k], w.im[k]}; }
};

/// Polar grid on the closed unit disk: the origin plus radii k / R, k = 1..R,
/// times grid_n equispaced angles, with R = max(2, grid_n / 8). Grids for
/// grid_n and 2 grid_n are nested when grid_n is a multiple of 16.
std::vector<cplx> closed_disk_grid(int grid_n);

/// Cartesian product of closed_disk_grid with itself.
PairSamples closed_bidisk_pairs(int grid_n);

/// (r e^{2 pi i a / n}, r e^{2 pi i b / n}) for a, b in [0, n).
PairSamples torus_pairs(int n, double r = 1.0);

/// Maps (z, w) samples to (s, p) = (z + w, z w).
PairSamples to_symmetric_coords(const PairSamples& zw);

}  // namespace gdet
