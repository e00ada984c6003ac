#pragma once

#include "laplace2d/grid_field.hpp"
#include "laplace2d/spectral.hpp"

namespace laplace2d {

enum class GaugeTag { general, real_lorentz };

// Coefficients (A, B, V) of L = (1/2)(dzbar + B)(dz + A) + V together with
// the derived fields H = (dz B - dzbar A)/2 and U = V + H.
//
// In the integer-flux case the gauge potential is not doubly periodic; its
// non-periodic content is the single real coefficient a2_linear of x in
// A2, so A and B are stored as
//
//   A(x, y) = a2_linear * x + A0(x, y),   B(x, y) = -a2_linear * x + B0(x, y)
//
// with A0, B0 doubly periodic. The canonical real Lorentz gauge built by
// from_physical uses A0 = -chi_x + i chi_y with lap(chi) = H - Hbar and
// a2_linear = -Hbar, Hbar = flux / (T1 T2).
struct OperatorCoefficients {
  Cell cell;
  double a2_linear = 0.0;
  ComplexField A0, B0;
  RealField V;
  GaugeTag gauge_tag = GaugeTag::general;

  static OperatorCoefficients from_physical(const RealField& H, const RealField& V);

  // Derived fields, recomputed spectrally from the stored coefficients.
  RealField field_H() const;
  RealField field_U() const;
  double flux() const;
  double hbar() const { return -a2_linear; }

  // Deviation from B = -conj(A) and Im(dzbar A) = 0.
  double real_lorentz_residual() const;
  // Deviation of the recomputed H from a reference field.
  double h_residual(const RealField& href) const { return max_abs_diff(field_H(), href); }
};

// Coefficients of exp(-f) L exp(f): A -> A + dz f, B -> B + dzbar f, with V
// (and hence H, U) unchanged. f must be doubly periodic and band-limited.
OperatorCoefficients gauge_transform(const OperatorCoefficients& L, const RealField& f);
OperatorCoefficients gauge_transform(const OperatorCoefficients& L, const ComplexField& f);

}  // namespace laplace2d
