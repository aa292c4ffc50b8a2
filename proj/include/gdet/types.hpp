#pragma once

#include <complex>
#include <numbers>

namespace gdet {

using cplx = std::complex<double>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Unit-modulus number e^{i theta}.
inline cplx unimodular(double theta) { return std::polar(1.0, theta); }

}  // namespace gdet
