#pragma once

#include <Eigen/Dense>

#include <vector>

#include "laplace2d/profiles.hpp"

namespace laplace2d {

// A y-independent operator in the real gauge A1 = 0, A2(x) = -Hbar x + A2per
// with A2' = -H (so Hbar = mean H = flux/(T1 T2) > 0 for positive flux).
// After psi = e^{iky} phi(x) the spectral problem reduces to the
// oscillator-like family
//
//   Lambda_k = d^2/dx^2 - (k + A2(x))^2 + (2 V(x) - H(x)),
//
// whose negative is twice the energy of the two-dimensional operator:
// eigs(-Lambda_k) = 2 * eps. Spectra are invariant under k -> k + Hbar*T1.
struct ReducedOperator {
  double T1 = 0.0, T2 = 0.0, Hbar = 0.0;
  std::vector<double> xs, H, V, A2per;  // samples over one x-period

  double a2_linear() const { return -Hbar; }
  double flux() const;                   // T2 * integral of H over a period
  double A2(double x) const;             // -Hbar x + periodic part
  double V_at(double x) const;
  double H_at(double x) const;

  int samples() const { return static_cast<int>(H.size()); }

 private:
  friend ReducedOperator build_reduced_operator(const Profile1D&, double, int);
  mutable std::vector<Complex> a2hat_, vhat_, hhat_;  // cached 1D Fourier coefficients
  void ensure_coeffs() const;
  double eval_periodic(const std::vector<Complex>& hat, double x) const;
};

// Builds the reduced operator of chain link `link` over the profile:
// quasi-cyclic profiles default to L2 (link 2), semi-cyclic to L0 (link 0).
// Links supported: 0, 1, 2.
ReducedOperator build_reduced_operator(const Profile1D& p, double T2, int link = -1);

// Symmetric 4th-order finite-difference discretization of Lambda_k on a
// Dirichlet window centered at the classical center k/Hbar; the window
// half-width defaults to |k|/Hbar-independent padding + 10/sqrt(Hbar).
Eigen::MatrixXd lambda_k_matrix(const ReducedOperator& op, double k, int Nx,
                                double extra_halfwidth = 0.0);

// Lowest nev eigenvalues of -Lambda_k / 2 (the energies of the reduced
// two-dimensional problem). Doubles the window and fails loudly if the
// lowest values move by more than `window_tol`.
std::vector<double> reduced_energies(const ReducedOperator& op, double k, int nev, int Nx,
                                     double window_tol = 1e-8);

}  // namespace laplace2d
