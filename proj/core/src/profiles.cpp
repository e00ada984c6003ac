#include "laplace2d/profiles.hpp"

#include <fftw3.h>

#include <cmath>
#include <stdexcept>

namespace laplace2d {

namespace {

// 32-node Gauss-Legendre rule mapped to [0, 1].
struct GaussRule {
  std::vector<double> x, w;
  GaussRule() {
    const int n = 32;
    x.resize(n);
    w.resize(n);
    for (int i = 0; i < n; ++i) {
      double t = std::cos(kPi * (i + 0.75) / (n + 0.5));
      double p1 = 0.0, dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0;
        p1 = t;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (t * p1 - p0) / (t * t - 1.0);
        const double dt = p1 / dp;
        t -= dt;
        if (std::abs(dt) < 1e-15) break;
      }
      x[i] = 0.5 * (t + 1.0);
      w[i] = 1.0 / ((1.0 - t * t) * dp * dp);
    }
  }
};
const GaussRule& gauss() {
  static GaussRule r;
  return r;
}

double brent_root(const std::function<double(double)>& f, double a, double b) {
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (fa * fb > 0.0) throw std::runtime_error("quadrature: root not bracketed");
  for (int it = 0; it < 200; ++it) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    if ((b - a) < 1e-15 * (1.0 + std::abs(m)) || fm == 0.0) return m;
    if (fa * fm <= 0.0) {
      b = m;
      fb = fm;
    } else {
      a = m;
      fa = fm;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

double quasicyclic_degenerate_C(double C2) {
  const double gs = std::log(0.5 * C2);
  return 2.0 * std::exp(gs) - C2 * gs;
}

double semicyclic_degenerate_C(double C2, double a) {
  const double gs = std::asinh(-C2 / (4.0 * std::exp(0.5 * a)));
  return C2 * gs + 4.0 * std::exp(0.5 * a) * std::cosh(gs);
}

QuadratureOrbit invert_quadrature(const QuadratureProblem& prob, int samples) {
  QuadratureOrbit orbit;
  // Well bottom from the supplied guess (Newton on Phi').
  double gs = prob.guess;
  for (int it = 0; it < 200; ++it) {
    const double h = 1e-6 * (1.0 + std::abs(gs));
    const double d2 = (prob.dphi(gs + h) - prob.dphi(gs - h)) / (2.0 * h);
    if (!(d2 > 0.0)) break;
    const double step = prob.dphi(gs) / d2;
    gs -= step;
    if (std::abs(step) < 1e-14 * (1.0 + std::abs(gs))) break;
  }
  const double phimin = prob.phi(gs);
  const double depth = prob.energy - phimin;
  if (depth <= 1e-12 * std::max(1.0, std::abs(prob.energy))) {
    orbit.degenerate = true;
    orbit.gmin = orbit.gmax = gs;
    return orbit;
  }

  auto diff = [&](double g) { return prob.phi(g) - prob.energy; };
  double lo = gs, step = std::sqrt(depth) * 0.5 + 1e-3;
  while (diff(lo) < 0.0) {
    lo -= step;
    step *= 1.7;
    if (!std::isfinite(lo)) throw std::domain_error("quadrature: no left turning point");
  }
  double hi = gs;
  step = std::sqrt(depth) * 0.5 + 1e-3;
  while (diff(hi) < 0.0) {
    hi += step;
    step *= 1.7;
    if (!std::isfinite(hi)) throw std::domain_error("quadrature: no right turning point");
  }
  orbit.gmin = brent_root(diff, lo, gs);
  orbit.gmax = brent_root(diff, gs, hi);

  // x(g) with the endpoint singularities removed: substitute g = gmin + s^2
  // from the left and g = gmax - s^2 from the right, dx = s ds / sqrt(E - Phi).
  const double gm = 0.5 * (orbit.gmin + orbit.gmax);
  auto from_turning = [&](bool left, double upto) {
    const double span = left ? (upto - orbit.gmin) : (orbit.gmax - upto);
    if (span <= 0.0) return 0.0;
    const double s_end = std::sqrt(span);
    const auto& rule = gauss();
    double acc = 0.0;
    for (size_t k = 0; k < rule.x.size(); ++k) {
      const double s = s_end * rule.x[k];
      const double g = left ? orbit.gmin + s * s : orbit.gmax - s * s;
      const double under = prob.energy - prob.phi(g);
      if (under <= 0.0) continue;  // roundoff at the endpoint
      acc += rule.w[k] * s / std::sqrt(under);
    }
    return acc * s_end;
  };
  const double half_period = from_turning(true, gm) + from_turning(false, gm);
  orbit.period = 2.0 * half_period;

  auto x_of_g = [&](double g) {
    return (g <= gm) ? from_turning(true, g) : half_period - from_turning(false, g);
  };
  orbit.xs.resize(samples);
  orbit.g.resize(samples);
  for (int i = 0; i < samples; ++i) {
    const double x = orbit.period * i / samples;
    const double xh = (x <= half_period) ? x : orbit.period - x;
    double g;
    if (xh <= 0.0) {
      g = orbit.gmin;
    } else if (xh >= half_period) {
      g = orbit.gmax;
    } else {
      g = brent_root([&](double gg) { return x_of_g(gg) - xh; }, orbit.gmin, orbit.gmax);
    }
    orbit.xs[i] = x;
    orbit.g[i] = g;
  }
  return orbit;
}

namespace {

Profile1D finish_profile(Profile1D p, const QuadratureProblem& prob, const QuadratureOrbit& orbit) {
  p.period = orbit.period;
  p.xs = orbit.xs;
  p.g = orbit.g;
  p.degenerate = orbit.degenerate;
  p.turning_min = orbit.gmin;
  p.turning_max = orbit.gmax;
  if (orbit.degenerate) return p;

  // First-integral drift with g' computed spectrally: the periodic
  // extension of the orbit is smooth, so the derivative converges
  // exponentially in the sample count.
  const int n = p.samples();
  std::vector<Complex> in(n), hat(n);
  for (int i = 0; i < n; ++i) in[i] = p.g[i];
  fftw_plan plan = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(in.data()),
                                    reinterpret_cast<fftw_complex*>(hat.data()),
                                    FFTW_FORWARD, FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);
  for (int m = 0; m < n; ++m) {
    const int f = (m <= n / 2) ? m : m - n;
    hat[m] *= (2 * std::abs(f) == n) ? Complex(0.0) : kI * (kTwoPi * f / p.period);
    hat[m] /= n;
  }
  std::vector<Complex> gp(n);
  fftw_plan back = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(hat.data()),
                                    reinterpret_cast<fftw_complex*>(gp.data()),
                                    FFTW_BACKWARD, FFTW_ESTIMATE);
  fftw_execute(back);
  fftw_destroy_plan(back);
  double res = 0.0;
  for (int i = 0; i < n; ++i) {
    const double e = 0.25 * gp[i].real() * gp[i].real() + prob.phi(p.g[i]);
    res = std::max(res, std::abs(e - prob.energy));
  }
  p.energy_residual = res;
  return p;
}

}  // namespace

Profile1D quasicyclic_profile(double C2, double C, int samples) {
  if (!(C2 > 0.0)) throw std::invalid_argument("quasicyclic_profile: C2 must be positive");
  QuadratureProblem prob;
  prob.phi = [C2](double g) { return 2.0 * std::exp(g) - C2 * g; };
  prob.dphi = [C2](double g) { return 2.0 * std::exp(g) - C2; };
  prob.energy = C;
  prob.guess = std::log(0.5 * C2);
  const double cdeg = quasicyclic_degenerate_C(C2);
  if (C < cdeg - 1e-12 * std::max(1.0, std::abs(cdeg)))
    throw std::domain_error("quasicyclic_profile: energy below the well bottom, no oscillation");

  Profile1D p;
  p.kind = ProfileKind::quasi_cyclic;
  p.C2 = C2;
  p.C = C;
  p = finish_profile(std::move(p), prob, invert_quadrature(prob, samples));
  if (!p.degenerate) p.singular_L2_warning = !(std::exp(p.turning_max) < C2);
  return p;
}

Profile1D semicyclic_profile(double C2, double a, double C, int samples) {
  if (!(C2 > 0.0)) throw std::invalid_argument("semicyclic_profile: C2 must be positive");
  const double w = 4.0 * std::exp(0.5 * a);
  QuadratureProblem prob;
  prob.phi = [C2, w](double g) { return C2 * g + w * std::cosh(g); };
  prob.dphi = [C2, w](double g) { return C2 + w * std::sinh(g); };
  prob.energy = C;
  prob.guess = std::asinh(-C2 / w);
  const double cdeg = semicyclic_degenerate_C(C2, a);
  if (C < cdeg - 1e-12 * std::max(1.0, std::abs(cdeg)))
    throw std::domain_error("semicyclic_profile: energy below the well bottom, no oscillation");

  Profile1D p;
  p.kind = ProfileKind::semi_cyclic;
  p.a = a;
  p.C2 = C2;
  p.C = C;
  p = finish_profile(std::move(p), prob, invert_quadrature(prob, samples));
  // Magnetic field along the profile, from the chain step; its mean is C2/2
  // by the virial identity of the orbit.
  p.H0.resize(p.g.size());
  for (size_t i = 0; i < p.g.size(); ++i)
    p.H0[i] = C2 + 2.0 * std::exp(0.5 * a) * std::sinh(p.g[i]);
  return p;
}

}  // namespace laplace2d
