#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "laplace2d/constants.hpp"

namespace laplace2d {

enum class ProfileKind { semi_cyclic, quasi_cyclic };

// One period of a y-independent chain profile g(x), obtained by inverting
// the quadrature of the first integral
//
//   (1/4) g'^2 + Phi(g) = C,
//
// where Phi(g) = 2 e^g - C2 g          (quasi-cyclic, (1/2) g'' = C2 - 2 e^g)
//       Phi(g) = C2 g + 4 e^{a/2} cosh g  (semi-cyclic,
//                                          (1/2) g'' = -C2 - 4 e^{a/2} sinh g).
//
// Oscillatory profiles exist for C slightly above the well bottom
// Phi(g*); the degenerate value C = Phi(g*) gives the constant solution.
struct Profile1D {
  ProfileKind kind = ProfileKind::quasi_cyclic;
  double C2 = 0.0;
  double a = 0.0;      // semi-cyclic asymmetry parameter
  double C = 0.0;      // first-integral constant (energy convention above)
  double period = 0.0; // T1 of the generated profile
  std::vector<double> xs, g;
  std::vector<double> H0;  // semi-cyclic: emitted magnetic field samples
  bool degenerate = false;
  bool singular_L2_warning = false;  // quasi-cyclic: max e^g >= C2
  double energy_residual = 0.0;      // drift of the first integral along the profile
  double turning_min = 0.0, turning_max = 0.0;

  int samples() const { return static_cast<int>(g.size()); }
};

// Well bottom of the first integral; profiles degenerate to the constant
// solution there.
double quasicyclic_degenerate_C(double C2);
double semicyclic_degenerate_C(double C2, double a);

Profile1D quasicyclic_profile(double C2, double C, int samples);
Profile1D semicyclic_profile(double C2, double a, double C, int samples);

// Plain pendulum-type quadrature inversion for a user potential; also used
// for the cyclic sinh-Gordon orbits feeding the flatness tests.
struct QuadratureProblem {
  std::function<double(double)> phi;      // Phi(g)
  std::function<double(double)> dphi;     // Phi'(g)
  double energy = 0.0;                    // C
  double guess = 0.0;                     // point inside the well
};
struct QuadratureOrbit {
  double period = 0.0;
  double gmin = 0.0, gmax = 0.0;
  std::vector<double> xs, g;
  bool degenerate = false;
};
QuadratureOrbit invert_quadrature(const QuadratureProblem& prob, int samples);

}  // namespace laplace2d
