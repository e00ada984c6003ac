#include "laplace2d/laplace_chain.hpp"

#include <cmath>
#include <stdexcept>

namespace laplace2d {

namespace {

RealField log_positive(const RealField& V, const char* who) {
  const Cell& c = V.cell();
  for (int i = 0; i < c.N1; ++i)
    for (int j = 0; j < c.N2; ++j)
      if (!(V(i, j) > 0.0))
        throw std::domain_error(std::string(who) + ": potential not positive at grid node (" +
                                std::to_string(i) + "," + std::to_string(j) +
                                "), value = " + std::to_string(V(i, j)));
  return V.map([](double v) { return std::log(v); });
}

}  // namespace

LaplaceStepResult laplace_step(const RealField& H, const RealField& V) {
  const RealField logV = log_positive(V, "laplace_step");
  RealField Hnew = H + 0.5 * laplacian(logV);
  RealField Vnew = V + Hnew;
  return {std::move(Hnew), std::move(Vnew)};
}

LaplaceStepResult inverse_laplace_step(const RealField& Hnew, const RealField& W) {
  const RealField logW = log_positive(W, "inverse_laplace_step");
  RealField H = Hnew - 0.5 * laplacian(logW);
  return {std::move(H), W};
}

OperatorCoefficients laplace_step_real_gauge(const OperatorCoefficients& L) {
  if (L.gauge_tag != GaugeTag::real_lorentz)
    throw std::invalid_argument("laplace_step_real_gauge: operator must be in the real Lorentz gauge");
  const RealField logV = log_positive(L.V, "laplace_step_real_gauge");
  const ComplexField dlogV = dz(logV);

  OperatorCoefficients out = L;
  // dzbar(logV) = conj(dz(logV)) for real logV.
  for (int i = 0; i < L.cell.N1; ++i)
    for (int j = 0; j < L.cell.N2; ++j) {
      out.A0(i, j) = L.A0(i, j) - 0.5 * dlogV(i, j);
      out.B0(i, j) = L.B0(i, j) + 0.5 * std::conj(dlogV(i, j));
    }
  out.V = L.V + out.field_H();
  out.gauge_tag = GaugeTag::real_lorentz;
  return out;
}

ChainState chain_iterate(const RealField& f0, const RealField& H0, int n, double classify_tol) {
  ChainState chain;
  chain.cell = f0.cell();
  chain.links.push_back({H0, f0, 0.0});

  RealField H = H0;
  RealField V = f0.map([](double v) { return std::exp(v); });
  for (int j = 0; j < n; ++j) {
    LaplaceStepResult next;
    try {
      next = laplace_step(H, V);
    } catch (const std::domain_error&) {
      chain.failure_link = j + 1;
      break;
    }
    bool positive = true;
    for (size_t k = 0; k < next.V.size() && positive; ++k) positive = next.V.data()[k] > 0.0;
    if (!positive) {
      chain.failure_link = j + 1;
      break;
    }
    H = next.H;
    V = next.V;
    chain.links.push_back({H, V.map([](double v) { return std::log(v); }), 0.0});
  }

  for (int j = 1; j + 1 < static_cast<int>(chain.links.size()); ++j)
    chain.links[j].recursion_residual = chain_recursion_residual(chain, j);

  // Closure classification against the first link.
  if (!chain.failure_link && chain.length() == n && n > 0) {
    const RealField V0 = chain.V(0), Vn = chain.V(n);
    const RealField &Hn = chain.links[n].H, &H0ref = chain.links[0].H;
    const double scale = std::max({1.0, V0.max_abs(), H0ref.max_abs()});

    const RealField dV = Vn - V0;
    if (dV.max_abs() <= classify_tol * scale && flux(H0ref) == 0.0) {
      chain.closure = ChainClosure::cyclic;
      chain.closure_residual = dV.max_abs();
    }
    const double cn = dV.mean();
    RealField dV_centered = dV;
    dV_centered += -cn;
    const double semi_res =
        std::max(max_abs_diff(Hn, H0ref), dV_centered.max_abs());
    if (chain.closure == ChainClosure::none && semi_res <= classify_tol * scale) {
      chain.closure = ChainClosure::semi_cyclic;
      chain.closure_constant = cn;
      chain.closure_residual = semi_res;
    }
    if (chain.closure == ChainClosure::none) {
      const RealField dq = Vn - Hn;
      const double cq = dq.mean();
      RealField dq_centered = dq;
      dq_centered += -cq;
      const double quasi_res =
          std::max(max_abs_diff(V0, H0ref), dq_centered.max_abs());
      if (quasi_res <= classify_tol * scale) {
        chain.closure = ChainClosure::quasi_cyclic;
        chain.closure_constant = cq;
        chain.closure_residual = quasi_res;
      }
    }
    // A cyclic chain is also semi-cyclic with C = 0.
    if (chain.closure == ChainClosure::cyclic) chain.closure_constant = 0.0;
  }
  return chain;
}

double chain_recursion_residual(const ChainState& chain, int j) {
  if (j < 1 || j + 1 >= static_cast<int>(chain.links.size()))
    throw std::out_of_range("chain_recursion_residual: interior link required");
  const RealField lhs = 0.5 * laplacian(chain.links[j].f);
  const RealField rhs = chain.V(j + 1) - 2.0 * chain.V(j) + chain.V(j - 1);
  return max_abs_diff(lhs, rhs);
}

std::string to_string(ChainClosure c) {
  switch (c) {
    case ChainClosure::cyclic: return "cyclic";
    case ChainClosure::semi_cyclic: return "semi-cyclic";
    case ChainClosure::quasi_cyclic: return "quasi-cyclic";
    default: return "none";
  }
}

}  // namespace laplace2d
