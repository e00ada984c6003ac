#include "laplace2d/reduced_operator.hpp"

#include <fftw3.h>

#include <cmath>
#include <stdexcept>

namespace laplace2d {

namespace {

std::vector<Complex> fft_1d(const std::vector<double>& v) {
  const int n = static_cast<int>(v.size());
  std::vector<Complex> in(n), out(n);
  for (int i = 0; i < n; ++i) in[i] = v[i];
  fftw_plan plan = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(in.data()),
                                    reinterpret_cast<fftw_complex*>(out.data()),
                                    FFTW_FORWARD, FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);
  for (auto& c : out) c /= n;
  return out;
}

}  // namespace

void ReducedOperator::ensure_coeffs() const {
  if (!a2hat_.empty()) return;
  a2hat_ = fft_1d(A2per);
  vhat_ = fft_1d(V);
  hhat_ = fft_1d(H);
}

double ReducedOperator::eval_periodic(const std::vector<Complex>& hat, double x) const {
  const int n = static_cast<int>(hat.size());
  Complex s = 0.0;
  for (int m = 0; m < n; ++m) {
    const int f = (m <= n / 2) ? m : m - n;
    if (2 * std::abs(f) == n) {  // Nyquist: cosine part only
      s += hat[m] * std::cos(kTwoPi * f * x / T1);
      continue;
    }
    s += hat[m] * std::exp(kI * (kTwoPi * f * x / T1));
  }
  return s.real();
}

double ReducedOperator::A2(double x) const {
  ensure_coeffs();
  return -Hbar * x + eval_periodic(a2hat_, x);
}
double ReducedOperator::V_at(double x) const {
  ensure_coeffs();
  return eval_periodic(vhat_, x);
}
double ReducedOperator::H_at(double x) const {
  ensure_coeffs();
  return eval_periodic(hhat_, x);
}

double ReducedOperator::flux() const {
  double s = 0.0;
  for (double h : H) s += h;
  return T2 * s * T1 / samples();
}

ReducedOperator build_reduced_operator(const Profile1D& p, double T2, int link) {
  if (p.degenerate) throw std::invalid_argument("build_reduced_operator: degenerate profile");
  if (link < 0) link = (p.kind == ProfileKind::quasi_cyclic) ? 2 : 0;
  const int n = p.samples();
  ReducedOperator op;
  op.T1 = p.period;
  op.T2 = T2;
  op.xs = p.xs;
  op.H.resize(n);
  op.V.resize(n);

  for (int i = 0; i < n; ++i) {
    const double eg = std::exp(p.g[i]);
    if (p.kind == ProfileKind::quasi_cyclic) {
      // Chain over the profile: V0 = H0 = e^g, V1 = C2, H1 = H2 = C2 - e^g,
      // V2 = 2 C2 - e^g.
      switch (link) {
        case 0: op.H[i] = eg;            op.V[i] = eg; break;
        case 1: op.H[i] = p.C2 - eg;     op.V[i] = p.C2; break;
        case 2: op.H[i] = p.C2 - eg;     op.V[i] = 2.0 * p.C2 - eg; break;
        default: throw std::invalid_argument("build_reduced_operator: link must be 0, 1 or 2");
      }
    } else {
      // Semi-cyclic: H0 emitted by the profile, V0 = e^g; one step up:
      // V1 = e^{a-g}, H1 = e^{a-g} - e^g; closing step: H2 = H0, V2 = V0 + C2
      // with C2 = 2 * mean(H0).
      const double eag = std::exp(p.a - p.g[i]);
      switch (link) {
        case 0: op.H[i] = p.H0[i];       op.V[i] = eg; break;
        case 1: op.H[i] = eag - eg;      op.V[i] = eag; break;
        case 2: op.H[i] = p.H0[i];       op.V[i] = eg + p.C2; break;
        default: throw std::invalid_argument("build_reduced_operator: link must be 0, 1 or 2");
      }
    }
  }

  double mean = 0.0;
  for (double h : op.H) mean += h;
  mean /= n;
  op.Hbar = mean;

  // A2per' = -(H - Hbar), integrated spectrally with zero mean.
  std::vector<Complex> hhat = fft_1d(op.H);
  op.A2per.resize(n);
  for (int i = 0; i < n; ++i) {
    Complex s = 0.0;
    for (int m = 1; m < n; ++m) {
      const int f = (m <= n / 2) ? m : m - n;
      if (2 * std::abs(f) == n) continue;
      const double kx = kTwoPi * f / op.T1;
      s += -hhat[m] / (kI * kx) * std::exp(kI * (kx * p.xs[i]));
    }
    op.A2per[i] = s.real();
  }
  return op;
}

Eigen::MatrixXd lambda_k_matrix(const ReducedOperator& op, double k, int Nx,
                                double extra_halfwidth) {
  if (!(op.Hbar > 0.0)) throw std::invalid_argument("lambda_k_matrix: needs positive mean field");
  const double xc = k / op.Hbar;
  const double halfwidth = 10.0 / std::sqrt(op.Hbar) + op.T1 + extra_halfwidth;
  const double x0 = xc - halfwidth;
  const double h = 2.0 * halfwidth / (Nx + 1);

  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(Nx, Nx);
  // 4th-order symmetric stencil of d^2/dx^2 with Dirichlet walls.
  const double c0 = -30.0 / 12.0, c1 = 16.0 / 12.0, c2 = -1.0 / 12.0;
  for (int i = 0; i < Nx; ++i) {
    const double x = x0 + (i + 1) * h;
    const double ka = k + op.A2(x);
    const double pot = -ka * ka + 2.0 * op.V_at(x) - op.H_at(x);
    M(i, i) = c0 / (h * h) + pot;
    if (i + 1 < Nx) { M(i, i + 1) = c1 / (h * h); M(i + 1, i) = c1 / (h * h); }
    if (i + 2 < Nx) { M(i, i + 2) = c2 / (h * h); M(i + 2, i) = c2 / (h * h); }
  }
  return M;
}

std::vector<double> reduced_energies(const ReducedOperator& op, double k, int nev, int Nx,
                                     double window_tol) {
  auto lowest = [&](double extra, int nx) {
    const Eigen::MatrixXd M = lambda_k_matrix(op, k, nx, extra);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M, Eigen::EigenvaluesOnly);
    // Energies are eigs(-Lambda)/2, i.e. the negated top of Lambda's spectrum.
    std::vector<double> e(nev);
    for (int i = 0; i < nev; ++i) e[i] = -0.5 * es.eigenvalues()(nx - 1 - i);
    return e;
  };
  // Grow the window at exactly the same grid spacing so the comparison
  // isolates the Dirichlet truncation error (exponentially small for
  // confined states) from the finite-difference error.
  const double base = 10.0 / std::sqrt(op.Hbar) + op.T1;
  const double h = 2.0 * base / (Nx + 1);
  const int extra_nodes = std::max(1, static_cast<int>(std::lround(5.0 / std::sqrt(op.Hbar) / h)));
  const double extra = 0.5 * h * (2 * extra_nodes);
  const int Nx2 = Nx + 2 * extra_nodes;
  std::vector<double> e1 = lowest(0.0, Nx);
  std::vector<double> e2 = lowest(extra, Nx2);
  for (int i = 0; i < nev; ++i)
    if (std::abs(e1[i] - e2[i]) > window_tol * std::max(1.0, std::abs(e2[i])))
      throw std::runtime_error("reduced_energies: window too small, eigenvalue " +
                               std::to_string(i) + " moved by " +
                               std::to_string(std::abs(e1[i] - e2[i])));
  return e2;
}

}  // namespace laplace2d
