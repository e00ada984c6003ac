#pragma once

#include <array>

#include "laplace2d/grid_field.hpp"
#include "laplace2d/operator_coefficients.hpp"

namespace laplace2d {

// Phase functions of the two magnetic translations for a gauge whose
// non-periodic content is linear: f1(x,y) = lin1 * y, f2(x,y) = lin2 * x.
// For the canonical gauge of OperatorCoefficients, lin1 = a2_linear * T1
// and lin2 = 0; the translation phases then close up to the flux:
// composing the two translations in the two orders differs by
// exp(-i*[H]) in exact exponent arithmetic.
struct MagneticPhases {
  double lin1 = 0.0;
  double lin2 = 0.0;

  static MagneticPhases for_gauge(const OperatorCoefficients& op) {
    return {op.a2_linear * op.cell.T1, 0.0};
  }
  double f1(double /*x*/, double y) const { return lin1 * y; }
  double f2(double x, double /*y*/) const { return lin2 * x; }
  // Phase excess of (T2 then T1) over (T1 then T2); equals -[H] for the
  // canonical gauge.
  double commutator_phase(const Cell& cell) const { return lin1 * cell.T2 - lin2 * cell.T1; }
};

// Samples of a magnetic Bloch section over a domain of q1 x q2 period
// cells. The stored function is treated as periodic over the domain, so a
// magnetic translation is a cyclic shift by one cell plus the gauge phase.
struct SectionField {
  Cell cell;          // one period cell
  int q1 = 1, q2 = 1; // stored domain spans q1 x q2 cells
  int flux_quanta = 0;
  ComplexField values;  // grid over the enlarged domain
  std::array<double, 2> quasimomentum = {0.0, 0.0};

  static SectionField random(const Cell& cell, int flux_quanta, std::mt19937_64& rng,
                             int q1 = 1, int q2 = 1);
  Cell domain() const { return Cell(cell.T1 * q1, cell.T2 * q2, cell.N1 * q1, cell.N2 * q2); }
};

// T_k applied to a periodic section sample: a cyclic shift by one period
// plus multiplication by exp(i f_k). Throws if the declared flux quanta and
// the phase data are inconsistent (non-integer flux breaks the sectors).
SectionField magnetic_translate(const SectionField& s, int direction, const MagneticPhases& ph);

}  // namespace laplace2d
