#pragma once

#include <optional>
#include <string>
#include <vector>

#include "laplace2d/operator_coefficients.hpp"

namespace laplace2d {

// One step of the transformation in physical variables:
//   Hnew = H + (1/2) lap(log V),   Vnew = V + Hnew.
// V must be strictly positive (the log); the fluxes satisfy
// [Hnew] = [H] and [Vnew] = [V] + [Hnew] at quadrature level.
struct LaplaceStepResult {
  RealField H, V;
};
LaplaceStepResult laplace_step(const RealField& H, const RealField& V);

// Inverse in physical variables: the second argument is the U-potential
// W = Vnew - Hnew of the image (positive where the inverse exists);
// returns (H, V) with V = W and H = Hnew - (1/2) lap(log W).
LaplaceStepResult inverse_laplace_step(const RealField& Hnew, const RealField& W);

// Self-adjoint form of the step (real Lorentz gauge):
//   Bnew = B + (1/2) dzbar(log V),   Anew = A - (1/2) dz(log V),
// with the output again in the real Lorentz gauge.
OperatorCoefficients laplace_step_real_gauge(const OperatorCoefficients& L);

enum class ChainClosure { none, cyclic, semi_cyclic, quasi_cyclic };
std::string to_string(ChainClosure c);

struct ChainLink {
  RealField H;  // H_j
  RealField f;  // f_j = log V_j
  double recursion_residual = 0.0;  // link-level check of the three-term recursion
};

// A finite sequence of transformations kept in physical variables.
struct ChainState {
  Cell cell;
  std::vector<ChainLink> links;  // links[j] = (H_j, f_j), j = 0..n
  ChainClosure closure = ChainClosure::none;
  double closure_constant = 0.0;          // C_n when semi- or quasi-cyclic
  double closure_residual = 0.0;          // field residual of the detected closure
  std::optional<int> failure_link;        // set when positivity broke at link j

  int length() const { return static_cast<int>(links.size()) - 1; }
  RealField V(int j) const { return links[j].f.map([](double v) { return std::exp(v); }); }
};

// Iterates n steps from (f0, H0), aborting gracefully when some V_j loses
// positivity (chains may genuinely terminate), and classifies the result:
// cyclic (V_n = V_0, flux necessarily zero), semi-cyclic (H_n = H_0,
// V_n = V_0 + C_n), quasi-cyclic (H_0 = V_0 and V_n = H_n + C_n).
ChainState chain_iterate(const RealField& f0, const RealField& H0, int n,
                         double classify_tol = 1e-6);

// Recursion residual of link j: (1/2) lap f_j - (e^{f_{j+1}} - 2 e^{f_j} + e^{f_{j-1}}).
double chain_recursion_residual(const ChainState& chain, int j);

}  // namespace laplace2d
