#include "laplace2d/toda.hpp"

#include <Eigen/Dense>

#include <stdexcept>

namespace laplace2d {

TodaSubstitution toda_substitute(const ChainState& chain) {
  const int n = chain.length();
  if (n < 2) throw std::invalid_argument("toda_substitute: chain needs at least 3 entries");
  TodaSubstitution out;
  out.phis.cell = chain.cell;
  out.phis.phis.push_back(RealField(chain.cell, 0.0));
  for (int j = 1; j <= n; ++j)
    out.phis.phis.push_back(out.phis.phis.back() + chain.links[j].f);

  // Defect fields R_j = (1/2) lap phi_j - (V_{j+1} - V_j) for interior j.
  std::vector<RealField> defects;
  for (int j = 1; j < n; ++j) {
    const RealField lhs = 0.5 * laplacian(out.phis.phis[j]);
    const RealField tj = chain.V(j + 1) - chain.V(j);
    defects.push_back(lhs - tj);
  }
  RealField h(chain.cell, 0.0);
  for (const auto& d : defects) h += d;
  h *= 1.0 / defects.size();
  out.harmonic = h;

  double res = 0.0;
  for (const auto& d : defects) res = std::max(res, (d - h).max_abs());
  out.residual = res;

  // Pointwise variance of the per-j corrections; zero iff the correction
  // really is independent of the chain position.
  double var = 0.0;
  for (size_t k = 0; k < h.size(); ++k) {
    double sq = 0.0;
    for (const auto& d : defects) {
      const double dev = d.data()[k] - h.data()[k];
      sq += dev * dev;
    }
    var = std::max(var, sq / defects.size());
  }
  out.h_variance = var;
  return out;
}

TodaField remove_harmonic(const TodaField& phis, const RealField& h, double mean_tol) {
  RealField rhs = h;
  rhs *= -2.0;
  const RealField alpha = poisson_solve_periodic(rhs, mean_tol);
  TodaField out = phis;
  for (auto& p : out.phis) p += alpha;
  return out;
}

double zero_curvature_residual(const TodaField& phis, Complex lambda) {
  const int N = phis.size();
  if (N < 2) throw std::invalid_argument("zero_curvature_residual: need period N >= 2");
  if (!phis.periodic)
    throw std::invalid_argument("zero_curvature_residual: phis must carry period-N closure");
  const Cell& cell = phis.cell;

  std::vector<ComplexField> dphi, dE;
  std::vector<RealField> lapphi, E;
  for (int j = 0; j < N; ++j) {
    dphi.push_back(dz(phis.phis[j]));
    lapphi.push_back(laplacian(phis.phis[j]));
    const RealField diff = phis.phi(j + 1) - phis.phi(j);
    E.push_back(diff.map([](double v) { return std::exp(v); }));
    dE.push_back(dz(E.back()));
  }

  double worst = 0.0;
  Eigen::MatrixXcd P(N, N), Q(N, N), dbarP(N, N), dQ(N, N);
  for (int i = 0; i < cell.N1; ++i) {
    for (int jj = 0; jj < cell.N2; ++jj) {
      P.setZero(); Q.setZero(); dbarP.setZero(); dQ.setZero();
      for (int k = 0; k < N; ++k) {
        P(k, k) = dphi[k](i, jj);
        dbarP(k, k) = lapphi[k](i, jj);  // dzbar dz = lap
        const int kp = (k + 1) % N;
        if (kp == 0) {
          P(k, kp) = lambda;
          Q(kp, k) = -2.0 * E[k](i, jj) / lambda;
          dQ(kp, k) = -2.0 * dE[k](i, jj) / lambda;
        } else {
          P(k, kp) = 1.0;
          Q(kp, k) = -2.0 * E[k](i, jj);
          dQ(kp, k) = -2.0 * dE[k](i, jj);
        }
      }
      const Eigen::MatrixXcd R = dbarP - dQ + P * Q - Q * P;
      worst = std::max(worst, R.cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

double toda_linearized_residual(const std::vector<RealField>& xi, const TodaField& phis) {
  const int N = phis.size();
  if (static_cast<int>(xi.size()) != N)
    throw std::invalid_argument("toda_linearized_residual: xi and phis length mismatch");
  auto xiw = [&](int j) -> const RealField& { return xi[((j % N) + N) % N]; };

  std::vector<RealField> E;
  for (int j = 0; j < N; ++j) {
    const RealField diff = phis.phi(j + 1) - phis.phi(j);
    E.push_back(diff.map([](double v) { return std::exp(v); }));
  }
  auto Ew = [&](int j) -> const RealField& { return E[((j % N) + N) % N]; };

  double worst = 0.0;
  for (int k = 0; k < N; ++k) {
    RealField rhs(phis.cell, 0.0);
    for (int i = 0; i < phis.cell.N1; ++i)
      for (int j = 0; j < phis.cell.N2; ++j)
        rhs(i, j) = xiw(k + 1)(i, j) * Ew(k)(i, j) -
                    xiw(k)(i, j) * (Ew(k)(i, j) + Ew(k - 1)(i, j)) +
                    xiw(k - 1)(i, j) * Ew(k - 1)(i, j);
    const RealField lhs = 0.5 * laplacian(xi[k]);
    worst = std::max(worst, max_abs_diff(lhs, rhs));
  }
  return worst;
}

}  // namespace laplace2d
