#include "laplace2d/special_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace laplace2d {

namespace {

// Exponents of the terms around the peak n0 ~ u/a; summation proceeds
// outward until terms are negligible relative to the accumulated sum.
template <typename Accum>
void theta_sum(double u, double a, Accum&& add) {
  if (!(a > 0.0)) throw std::invalid_argument("theta_series: scale a must be positive");
  const long n0 = std::lround(u / a);
  auto exponent = [&](long n) { return -0.5 * a * n * n + n * u; };
  const double e0 = exponent(n0);
  add(e0 - e0);  // peak term, scaled
  for (int dir : {+1, -1}) {
    for (long k = 1;; ++k) {
      const long n = n0 + dir * k;
      const double e = exponent(n) - e0;
      if (e < -40.0) break;  // exp(-40) ~ 4e-18, below any accumulation target
      add(e);
    }
  }
}

}  // namespace

double theta_series(double u, double a) {
  double s = 0.0;
  const long n0 = std::lround(u / a);
  const double e0 = -0.5 * a * n0 * n0 + n0 * u;
  theta_sum(u, a, [&](double e) { s += std::exp(e); });
  return s * std::exp(e0);
}

double theta_series_log(double u, double a) {
  double s = 0.0;
  const long n0 = std::lround(u / a);
  const double e0 = -0.5 * a * n0 * n0 + n0 * u;
  theta_sum(u, a, [&](double e) { s += std::exp(e); });
  return e0 + std::log(s);
}

EllipticCell::EllipticCell(double T1, double T2) : T1_(T1), T2_(T2) {
  if (!(T1 > 0.0) || !(T2 > 0.0)) throw std::invalid_argument("EllipticCell: periods must be positive");
  q_ = std::exp(-kPi * T2_ / T1_);
  // eta1 = -pi^2 theta1'''(0) / (12 omega1 theta1'(0)).
  double tp = 0.0, tppp = 0.0;
  for (int n = 0;; ++n) {
    const double qe = std::pow(q_, (n + 0.5) * (n + 0.5));
    if (qe < 1e-18 && n > 2) break;
    const double sgn = (n % 2 == 0) ? 1.0 : -1.0;
    const double m = 2.0 * n + 1.0;
    tp += 2.0 * sgn * qe * m;
    tppp += -2.0 * sgn * qe * m * m * m;
  }
  theta1_prime0_ = tp;
  eta1_ = -kPi * kPi * tppp / (12.0 * omega1() * tp);
  // Legendre: eta1*omega2 - eta2*omega1 = i pi / 2.
  eta2_ = (eta1_ * omega2() - kI * kPi * 0.5) / omega1();
}

std::vector<Complex> EllipticCell::theta1_jet(Complex v, int order) const {
  std::vector<Complex> jet(order + 1, Complex(0.0));
  for (int n = 0;; ++n) {
    const double qe = std::pow(q_, (n + 0.5) * (n + 0.5));
    if (qe < 1e-18 && n > 2) break;
    const double sgn = (n % 2 == 0) ? 1.0 : -1.0;
    const double m = 2.0 * n + 1.0;
    const Complex s = std::sin(m * v), c = std::cos(m * v);
    double mk = 1.0;
    for (int k = 0; k <= order; ++k) {
      // d^k sin(mv) cycles sin, cos, -sin, -cos.
      Complex base;
      switch (k % 4) {
        case 0: base = s; break;
        case 1: base = c; break;
        case 2: base = -s; break;
        default: base = -c; break;
      }
      jet[k] += 2.0 * sgn * qe * mk * base;
      mk *= m;
    }
  }
  return jet;
}

Complex EllipticCell::sigma(Complex z) const {
  const double w1 = omega1();
  const Complex v = kPi * z / (2.0 * w1);
  const Complex t1 = theta1_jet(v, 0)[0];
  return (2.0 * w1 / kPi) * std::exp(eta1_ * z * z / (2.0 * w1)) * t1 / theta1_prime0_;
}

Complex EllipticCell::zeta(Complex z) const { return zeta_jet(z, 0)[0]; }

Complex EllipticCell::wp(Complex z) const { return -zeta_jet(z, 1)[1]; }

std::vector<Complex> EllipticCell::zeta_jet(Complex z, int order) const {
  const double w1 = omega1();
  const double s = kPi / (2.0 * w1);
  const Complex v = s * z;
  const std::vector<Complex> t = theta1_jet(v, order + 1);
  // log-derivative jet of theta1: u_k = d^k log theta1 / dv^k, k >= 1, from
  // t_k = sum_{j=1..k} C(k-1, j-1) u_j t_{k-j}.
  std::vector<Complex> u(order + 2, Complex(0.0));
  for (int k = 1; k <= order + 1; ++k) {
    Complex acc = t[k];
    for (int j = 1; j < k; ++j) {
      // binomial C(k-1, j-1)
      double binom = 1.0;
      for (int r = 1; r <= j - 1; ++r) binom = binom * (k - 1 - (j - 1) + r) / r;
      acc -= binom * u[j] * t[k - j];
    }
    u[k] = acc / t[0];
  }
  std::vector<Complex> jet(order + 1);
  for (int k = 0; k <= order; ++k) {
    // zeta^{(k)}(z) = delta_{k0} eta1 z / omega1 + delta_{k1} eta1/omega1 ... ;
    // the quadratic sigma prefactor contributes eta1 z/omega1 to zeta and
    // eta1/omega1 to zeta', nothing beyond.
    Complex val = std::pow(s, k + 1) * u[k + 1];
    if (k == 0) val += eta1_ * z / w1;
    if (k == 1) val += eta1_ / w1;
    jet[k] = val;
  }
  return jet;
}

}  // namespace laplace2d
