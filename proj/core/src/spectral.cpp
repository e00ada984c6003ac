#include "laplace2d/spectral.hpp"

#include <fftw3.h>

#include <stdexcept>

namespace laplace2d {

namespace {

ComplexField transform(const ComplexField& f, int sign) {
  const Cell& c = f.cell();
  ComplexField out(c);
  // FFTW_ESTIMATE keeps plan creation cheap; grids here are small.
  fftw_plan plan = fftw_plan_dft_2d(
      c.N1, c.N2,
      reinterpret_cast<fftw_complex*>(const_cast<Complex*>(f.data())),
      reinterpret_cast<fftw_complex*>(out.data()), sign, FFTW_ESTIMATE | FFTW_PRESERVE_INPUT);
  fftw_execute(plan);
  fftw_destroy_plan(plan);
  return out;
}

// Signed integer frequency for index i on an N-point grid; the Nyquist
// index of even N is flagged for removal in odd-order derivatives.
inline int freq_index(int i, int n) { return (i <= n / 2) ? i : i - n; }
inline bool is_nyquist(int i, int n) { return (n % 2 == 0) && (i == n / 2); }

template <typename Op>
ComplexField apply_symbol(const ComplexField& f, Op symbol) {
  const Cell& c = f.cell();
  ComplexField fh = transform(f, FFTW_FORWARD);
  for (int i = 0; i < c.N1; ++i) {
    const double k1 = kTwoPi * freq_index(i, c.N1) / c.T1;
    for (int j = 0; j < c.N2; ++j) {
      const double k2 = kTwoPi * freq_index(j, c.N2) / c.T2;
      fh(i, j) *= symbol(k1, k2, is_nyquist(i, c.N1), is_nyquist(j, c.N2));
    }
  }
  ComplexField out = transform(fh, FFTW_BACKWARD);
  out *= 1.0 / c.size();
  return out;
}

}  // namespace

ComplexField fft2(const ComplexField& f) { return transform(f, FFTW_FORWARD); }

ComplexField ifft2(const ComplexField& f) {
  ComplexField out = transform(f, FFTW_BACKWARD);
  out *= 1.0 / f.cell().size();
  return out;
}

ComplexField deriv_x(const ComplexField& f) {
  return apply_symbol(f, [](double k1, double, bool nyq1, bool) {
    return nyq1 ? Complex(0.0) : kI * k1;
  });
}

ComplexField deriv_y(const ComplexField& f) {
  return apply_symbol(f, [](double, double k2, bool, bool nyq2) {
    return nyq2 ? Complex(0.0) : kI * k2;
  });
}

RealField deriv_x(const RealField& f) { return real_part(deriv_x(to_complex(f))); }
RealField deriv_y(const RealField& f) { return real_part(deriv_y(to_complex(f))); }

ComplexField dz(const ComplexField& f) {
  return apply_symbol(f, [](double k1, double k2, bool nyq1, bool nyq2) {
    return (nyq1 ? Complex(0.0) : kI * k1) - kI * (nyq2 ? Complex(0.0) : kI * k2);
  });
}

ComplexField dzbar(const ComplexField& f) {
  return apply_symbol(f, [](double k1, double k2, bool nyq1, bool nyq2) {
    return (nyq1 ? Complex(0.0) : kI * k1) + kI * (nyq2 ? Complex(0.0) : kI * k2);
  });
}

ComplexField dz(const RealField& f) { return dz(to_complex(f)); }
ComplexField dzbar(const RealField& f) { return dzbar(to_complex(f)); }

ComplexField laplacian(const ComplexField& f) {
  return apply_symbol(f, [](double k1, double k2, bool, bool) {
    return Complex(-(k1 * k1 + k2 * k2), 0.0);
  });
}

RealField laplacian(const RealField& f) { return real_part(laplacian(to_complex(f))); }

double flux(const RealField& H) { return integrate(H); }

RealField poisson_solve_periodic(const RealField& rhs, double mean_tol) {
  const double m = rhs.mean();
  const double scale = std::max(rhs.max_abs(), 1.0);
  if (std::abs(m) > mean_tol * scale) {
    throw std::invalid_argument("poisson_solve_periodic: right-hand side has nonzero mean " +
                                std::to_string(m));
  }
  ComplexField sol = apply_symbol(to_complex(rhs), [](double k1, double k2, bool, bool) {
    const double k2sum = k1 * k1 + k2 * k2;
    return k2sum == 0.0 ? Complex(0.0) : Complex(-1.0 / k2sum, 0.0);
  });
  return real_part(sol);
}

RealField random_band_limited(const Cell& cell, std::mt19937_64& rng, int kmax1, int kmax2,
                              double amplitude, double mean) {
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  RealField out(cell, mean);
  for (int k1 = -kmax1; k1 <= kmax1; ++k1) {
    for (int k2 = -kmax2; k2 <= kmax2; ++k2) {
      if (k1 == 0 && k2 == 0) continue;
      if (k1 < 0 || (k1 == 0 && k2 < 0)) continue;  // one of each conjugate pair
      const double ac = amplitude * coeff(rng), as = amplitude * coeff(rng);
      const double w1 = kTwoPi * k1 / cell.T1, w2 = kTwoPi * k2 / cell.T2;
      for (int i = 0; i < cell.N1; ++i) {
        for (int j = 0; j < cell.N2; ++j) {
          const double ph = w1 * cell.x(i) + w2 * cell.y(j);
          out(i, j) += ac * std::cos(ph) + as * std::sin(ph);
        }
      }
    }
  }
  return out;
}

Complex eval_trig(const ComplexField& f, double x, double y) { return TrigSeries(f).dz_eval(x, y, 0); }
double eval_trig(const RealField& f, double x, double y) {
  return TrigSeries(f).dz_eval(x, y, 0).real();
}

TrigSeries::TrigSeries(const RealField& f) : TrigSeries(to_complex(f)) {}

TrigSeries::TrigSeries(const ComplexField& f) : cell_(f.cell()), coeff_(fft2(f)) {
  coeff_ *= 1.0 / cell_.size();
}

Complex TrigSeries::dz_eval(double x, double y, int m) const {
  Complex s = 0.0;
  for (int i = 0; i < cell_.N1; ++i) {
    if (m > 0 && is_nyquist(i, cell_.N1)) continue;
    const double k1 = kTwoPi * freq_index(i, cell_.N1) / cell_.T1;
    for (int j = 0; j < cell_.N2; ++j) {
      if (m > 0 && is_nyquist(j, cell_.N2)) continue;
      const double k2 = kTwoPi * freq_index(j, cell_.N2) / cell_.T2;
      // dz e^{i(k1 x + k2 y)} = i(k1 - i k2) e^{...}
      Complex factor = 1.0;
      if (m > 0) {
        const Complex sym = kI * (k1 - kI * k2);
        factor = std::pow(sym, m);
      }
      s += coeff_(i, j) * factor * std::exp(kI * (k1 * x + k2 * y));
    }
  }
  return s;
}

}  // namespace laplace2d
