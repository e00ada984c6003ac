#pragma once

#include <functional>
#include <vector>

#include "laplace2d/spectral.hpp"

namespace laplace2d {

// Newton iteration in Fourier space for semilinear problems
// (1/2) lap u = F(u), with the analytic Jacobian (1/2) lap - F'(u) applied
// matrix-free and inverted by preconditioned MINRES.
struct NewtonReport {
  RealField solution;
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;
  bool collapsed_to_constant = false;
  double distance_from_constant = 0.0;   // max |u - mean(u)|
  double fourier_energy_x = 0.0;         // energy in modes with k1 != 0
  double fourier_energy_y = 0.0;         // energy in modes with k2 != 0
};

NewtonReport solve_semilinear(const RealField& seed,
                              const std::function<double(double)>& F,
                              const std::function<double(double)>& Fprime,
                              double tol = 1e-11, int max_iterations = 60);

// (1/2) lap f = C2 - 2 e^f on the square (T, T) torus, seeded with
// f = log(C2/2) + seed_amplitude (cos(2 pi x / T) + cos(2 pi y / T)).
// Reports collapse when the converged solution is closer to a constant
// than seed_amplitude / 10.
NewtonReport solve_quasicyclic_pde(double C2, double T, double seed_amplitude, int N = 64);

// (1/2) lap g = -c sinh(2 g) on the square torus; the pair (g, -g) is then
// a period-2 solution of the lattice system.
NewtonReport solve_sinh_gordon(double c, double T, double seed_amplitude, int N = 64);

// Threshold periods of the quasi-cyclic n = 2 equation on the square
// torus. The linearization (1/2) lap d = -C2 d is singular for the (1,0)
// mode at (2 pi / T)^2 = 2 C2; the nonconstant branch there is
// single-variable (the pendulum period grows with amplitude, so those
// solutions live at T above the threshold but depend on x only). The
// first branch that depends on both variables bifurcates from the
// diagonal (1,1) mode at T = 2 pi / sqrt(C2): the same pendulum profiles
// run along x + y. Both constants are derived in the tests; the diagonal
// one matches the constant quoted for the two-variable family.
double quasicyclic_bifurcation_period(double C2);           // (1,0) mode
double quasicyclic_bifurcation_period_diagonal(double C2);  // (1,1) mode

// Constant base solution of the length-n quasi-cyclic system, found by
// Newton on the algebraic system; returns V*_0..V*_{n-1} = (j+1) Cn / n.
std::vector<double> quasicyclic_constant_base(int n, double Cn);

// Values t_i < 0 such that a Fourier mode with (1/2) lap eigenvalue
// mu = t_i * Cn / n makes the linearized chain system singular; each maps
// to a threshold period T_i = 2 pi sqrt(n (k^2+l^2) / (-2 t_i Cn)) for the
// (k, l) mode.
std::vector<double> quasicyclic_linearization_roots(int n);

// Number of nonzero modes (k, l) on the (T, T) torus at which the
// linearization about the constant base is singular (within reltol).
int linearized_mode_count(int n, double Cn, double T, double reltol = 1e-8);

// Threshold periods for the (1,0) mode in increasing order.
std::vector<double> quasicyclic_threshold_periods(int n, double Cn);

}  // namespace laplace2d
