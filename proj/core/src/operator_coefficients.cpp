#include "laplace2d/operator_coefficients.hpp"

namespace laplace2d {

OperatorCoefficients OperatorCoefficients::from_physical(const RealField& H, const RealField& V) {
  const Cell& cell = H.cell();
  OperatorCoefficients L;
  L.cell = cell;
  L.V = V;
  const double hbar = laplace2d::flux(H) / cell.area();
  L.a2_linear = -hbar;
  RealField hper = H;
  hper += -hbar;
  const RealField chi = poisson_solve_periodic(hper, 1e-8);
  const RealField chix = deriv_x(chi), chiy = deriv_y(chi);
  // A0 = A2per + i A1 with A1 = chi_y, A2per = -chi_x, so that
  // H = dA1/dy - dA2/dx = lap(chi) + Hbar.
  L.A0 = ComplexField(cell);
  L.B0 = ComplexField(cell);
  for (int i = 0; i < cell.N1; ++i)
    for (int j = 0; j < cell.N2; ++j) {
      const Complex a0(-chix(i, j), chiy(i, j));
      L.A0(i, j) = a0;
      L.B0(i, j) = -std::conj(a0);
    }
  L.gauge_tag = GaugeTag::real_lorentz;
  return L;
}

RealField OperatorCoefficients::field_H() const {
  // 2H = dz B - dzbar A; the linear parts contribute the constant
  // dz(-a2 x) - dzbar(a2 x) = -2 a2_linear.
  ComplexField twoH = dz(B0) - dzbar(A0);
  RealField H = real_part(twoH);
  H *= 0.5;
  H += -a2_linear;
  return H;
}

RealField OperatorCoefficients::field_U() const { return field_H() + V; }

double OperatorCoefficients::flux() const { return laplace2d::flux(field_H()); }

double OperatorCoefficients::real_lorentz_residual() const {
  double r = 0.0;
  for (int i = 0; i < cell.N1; ++i)
    for (int j = 0; j < cell.N2; ++j)
      r = std::max(r, std::abs(B0(i, j) + std::conj(A0(i, j))));
  // Im(dzbar A): the linear part is real, so only A0 contributes.
  const RealField lorentz = imag_part(dzbar(A0));
  return std::max(r, lorentz.max_abs());
}

OperatorCoefficients gauge_transform(const OperatorCoefficients& L, const ComplexField& f) {
  OperatorCoefficients out = L;
  out.A0 += dz(f);
  out.B0 += dzbar(f);
  out.gauge_tag = GaugeTag::general;
  return out;
}

OperatorCoefficients gauge_transform(const OperatorCoefficients& L, const RealField& f) {
  return gauge_transform(L, to_complex(f));
}

}  // namespace laplace2d
