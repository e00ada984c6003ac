#pragma once

#include <random>

#include "laplace2d/grid_field.hpp"

// Fourier machinery on the period cell: derivatives dz/dzbar/lap are
// diagonal in the trigonometric basis, which keeps every residual test in
// the suite at spectral accuracy for band-limited data.
namespace laplace2d {

ComplexField fft2(const ComplexField& f);    // forward, unnormalized
ComplexField ifft2(const ComplexField& f);   // inverse, normalized by 1/(N1*N2)

// First partials (Nyquist mode dropped so d/dx of a real field stays real).
ComplexField deriv_x(const ComplexField& f);
ComplexField deriv_y(const ComplexField& f);
RealField deriv_x(const RealField& f);
RealField deriv_y(const RealField& f);

// dz = d/dx - i d/dy and dzbar = d/dx + i d/dy.
ComplexField dz(const ComplexField& f);
ComplexField dzbar(const ComplexField& f);
ComplexField dz(const RealField& f);
ComplexField dzbar(const RealField& f);

RealField laplacian(const RealField& f);
ComplexField laplacian(const ComplexField& f);

// Magnetic flux through the cell: the integral of H over one period.
double flux(const RealField& H);

// Unique zero-mean phi with lap(phi) = rhs. The right-hand side must have
// zero mean (solvability on the torus); tol is relative to max|rhs|.
RealField poisson_solve_periodic(const RealField& rhs, double mean_tol = 1e-10);

// Band-limited random field: modes with |k1| <= kmax1, |k2| <= kmax2,
// amplitude-scaled; zero-mean unless a mean is requested.
RealField random_band_limited(const Cell& cell, std::mt19937_64& rng, int kmax1, int kmax2,
                              double amplitude, double mean = 0.0);

// Trigonometric interpolation of a sampled field at an arbitrary point.
// O(N1*N2) per evaluation; intended for verification, not inner loops.
Complex eval_trig(const ComplexField& f, double x, double y);
double eval_trig(const RealField& f, double x, double y);

// Fourier coefficients cached for repeated off-grid evaluation of one field
// and its dz-derivatives of any order (used by the chain transport checks).
class TrigSeries {
 public:
  explicit TrigSeries(const RealField& f);
  explicit TrigSeries(const ComplexField& f);
  // (dz)^m f evaluated at (x, y).
  Complex dz_eval(double x, double y, int m = 0) const;

 private:
  Cell cell_;
  ComplexField coeff_;  // normalized Fourier coefficients
};

}  // namespace laplace2d
