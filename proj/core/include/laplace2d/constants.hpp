#pragma once

#include <complex>

// Conventions used throughout the library. Everything that depends on a
// sign or a factor of two is pinned here and in the comments below; all
// modules and tests are written against these definitions.
//
//   z     = x + i y
//   dz    = d/dx - i d/dy        (applied to z gives 2, annihilates conj(z))
//   dzbar = d/dx + i d/dy        (annihilates analytic functions)
//   lap   = dz dzbar = d^2/dx^2 + d^2/dy^2
//
// A second-order operator is kept as the quadruple (A, B, V, H) of
//
//   L = (1/2) (dzbar + B)(dz + A) + V,
//   2H = dz B - dzbar A,   U = V + H.
//
// With this normalization the swap identity reads
//
//   (1/2)(dz + A)(dzbar + B) = (1/2)(dzbar + B)(dz + A) + H,
//
// so one unit of H in the coefficients is one unit of energy, and the
// chain arithmetic below holds verbatim at the operator level:
//
//   Hnew = H + (1/2) lap(log V),   Vnew = V + Hnew.
//
// In the real gauge A = A2 + i*A1, B = -conj(A), the physical field is
// H = d A1/dy - d A2/dx, i.e. A2' = -H for y-independent data, and the
// ladder of the constant-field operator with V = H0 sits at
// energies {0, H0, 2*H0, ...} of (-L).
namespace laplace2d {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

using Complex = std::complex<double>;
inline constexpr Complex kI{0.0, 1.0};

// Default tolerances: spectral residuals on band-limited data, and
// special-function evaluations.
inline constexpr double kSpectralTol = 1e-9;
inline constexpr double kSpecialFunctionTol = 1e-12;

}  // namespace laplace2d
