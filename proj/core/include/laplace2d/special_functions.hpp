#pragma once

#include <vector>

#include "laplace2d/cell.hpp"
#include "laplace2d/constants.hpp"

namespace laplace2d {

// Theta[u|a] = sum_{n in Z} exp(-a n^2 / 2 + n u), a > 0.
// Truncated so the dropped tail is below 1e-14 of the result.
double theta_series(double u, double a);
// log of the same sum, stable for arguments where the sum overflows.
double theta_series_log(double u, double a);

// Weierstrass functions for the rectangular lattice spanned by T1 and i*T2.
// Backed by Jacobi theta_1 with nome q = exp(-pi T2 / T1); lattice constants
// are computed once per instance.
class EllipticCell {
 public:
  EllipticCell(double T1, double T2);

  double T1() const { return T1_; }
  double T2() const { return T2_; }
  double omega1() const { return 0.5 * T1_; }
  Complex omega2() const { return Complex(0.0, 0.5 * T2_); }
  double eta1() const { return eta1_; }       // zeta(omega1), real here
  Complex eta2() const { return eta2_; }      // zeta(omega2), from the Legendre relation

  Complex sigma(Complex z) const;
  Complex zeta(Complex z) const;              // sigma'/sigma
  Complex wp(Complex z) const;                // -zeta'

  // [zeta, zeta', ..., zeta^{(order)}](z): d/dz derivatives of log sigma
  // starting at order one. Used by transports that need exact z-derivatives
  // of sigma products.
  std::vector<Complex> zeta_jet(Complex z, int order) const;

  // d^k/dv^k theta_1(v, q) for k = 0..order.
  std::vector<Complex> theta1_jet(Complex v, int order) const;

 private:
  double T1_, T2_, q_, eta1_;
  Complex eta2_;
  double theta1_prime0_;
};

}  // namespace laplace2d
