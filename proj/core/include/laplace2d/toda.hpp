#pragma once

#include <vector>

#include "laplace2d/laplace_chain.hpp"

namespace laplace2d {

// Cumulative potentials phi_j with f_j = phi_j - phi_{j-1}; solutions of
// the lattice system (1/2) lap phi_j = e^{phi_{j+1}-phi_j} - e^{phi_j-phi_{j-1}}.
struct TodaField {
  Cell cell;
  std::vector<RealField> phis;
  bool periodic = false;  // indices taken mod N when set

  int size() const { return static_cast<int>(phis.size()); }
  const RealField& phi(int j) const {
    const int n = size();
    return phis[((j % n) + n) % n];
  }
};

struct TodaSubstitution {
  TodaField phis;
  RealField harmonic;          // fitted j-independent correction h(z, zbar)
  double residual = 0.0;       // max_j of |(1/2) lap phi_j - T_j - h|
  double h_variance = 0.0;     // spread of the per-j corrections around h
};

// Builds phi_j by cumulative summation (phi_0 = 0) and fits the
// j-independent harmonic correction as the across-j mean of the defect;
// the chain solves the lattice equations iff the remaining residual is small.
TodaSubstitution toda_substitute(const ChainState& chain);

// Absorbs the fitted correction into the phis (phi_j -> phi_j + alpha with
// (1/2) lap alpha = -h). Requires h to have zero mean up to `mean_tol`.
TodaField remove_harmonic(const TodaField& phis, const RealField& h, double mean_tol = 1e-7);

// Flatness defect of the matrix pair attached to a period-N solution:
//   P = diag(dz phi_j) + superdiag(1), P(N,1) = lambda,
//   Q = subdiag(-2 e^{phi_{j+1}-phi_j}), Q(1,N) = -2 e^{phi_1-phi_N}/lambda,
// returning max over the grid of the entrywise sup norm of
// dzbar P - dz Q + [P, Q]; zero exactly on solutions of the lattice system.
// The -2 normalization matches the (1/2) lap convention recorded in
// constants.hpp.
double zero_curvature_residual(const TodaField& phis, Complex lambda);

// Max residual of the linearized lattice system at xi around phis.
double toda_linearized_residual(const std::vector<RealField>& xi, const TodaField& phis);

}  // namespace laplace2d
