#include "laplace2d/section_field.hpp"

#include <stdexcept>

namespace laplace2d {

SectionField SectionField::random(const Cell& cell, int flux_quanta, std::mt19937_64& rng,
                                  int q1, int q2) {
  SectionField s;
  s.cell = cell;
  s.q1 = q1;
  s.q2 = q2;
  s.flux_quanta = flux_quanta;
  const Cell dom = s.domain();
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  s.values = ComplexField(dom);
  for (int i = 0; i < dom.N1; ++i)
    for (int j = 0; j < dom.N2; ++j) s.values(i, j) = Complex(u(rng), u(rng));
  return s;
}

SectionField magnetic_translate(const SectionField& s, int direction, const MagneticPhases& ph) {
  if (direction != 1 && direction != 2)
    throw std::invalid_argument("magnetic_translate: direction must be 1 or 2");
  const double comm = ph.commutator_phase(s.cell);
  const double quanta = -comm / kTwoPi;
  if (std::abs(quanta - s.flux_quanta) > 1e-9)
    throw std::invalid_argument(
        "magnetic_translate: flux is not the declared integer multiple of 2*pi; "
        "Bloch sectors are ill-defined");

  const Cell dom = s.domain();
  SectionField out = s;
  const int si = (direction == 1) ? s.cell.N1 : 0;
  const int sj = (direction == 2) ? s.cell.N2 : 0;
  for (int i = 0; i < dom.N1; ++i) {
    for (int j = 0; j < dom.N2; ++j) {
      const double f =
          (direction == 1) ? ph.f1(dom.x(i), dom.y(j)) : ph.f2(dom.x(i), dom.y(j));
      out.values(i, j) = std::exp(kI * f) * s.values.wrap(i + si, j + sj);
    }
  }
  return out;
}

}  // namespace laplace2d
