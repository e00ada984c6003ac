#include <cmath>
#include <random>

#include "doctest.h"
#include "laplace2d/laplace_chain.hpp"
#include "laplace2d/section_field.hpp"
#include "laplace2d/special_functions.hpp"
#include "laplace2d/spectral.hpp"

using namespace laplace2d;

namespace {
std::mt19937_64 rng(12345);
}

TEST_CASE("flux of simple fields") {
  Cell cell(kTwoPi, 1.0, 32, 16);
  RealField one(cell, 1.0);
  CHECK(flux(one) == doctest::Approx(kTwoPi).epsilon(1e-14));

  auto h = RealField::sample(cell, [&](double x, double) { return std::sin(kTwoPi * x / cell.T1); });
  CHECK(std::abs(flux(h)) < 1e-13);
}

TEST_CASE("flux matches refined-grid quadrature for band-limited fields") {
  Cell coarse(3.0, 2.0, 64, 64);
  Cell fine(3.0, 2.0, 640, 640);
  // One draw of mode coefficients, sampled on both grids.
  std::mt19937_64 r1(777), r2(777);
  RealField hc = random_band_limited(coarse, r1, 6, 6, 0.7, 0.3);
  RealField hf = random_band_limited(fine, r2, 6, 6, 0.7, 0.3);
  CHECK(std::abs(flux(hc) - flux(hf)) < 1e-12 * std::max(1.0, std::abs(flux(hf))));
}

TEST_CASE("flux is linear") {
  Cell cell(2.5, 1.5, 32, 32);
  RealField h1 = random_band_limited(cell, rng, 5, 5, 1.0, 0.2);
  RealField h2 = random_band_limited(cell, rng, 5, 5, 1.0, -0.4);
  const double a = 1.7, b = -0.3;
  RealField combo = a * h1 + b * h2;
  CHECK(flux(combo) == doctest::Approx(a * flux(h1) + b * flux(h2)).epsilon(1e-12));
}

TEST_CASE("periodic Poisson solver") {
  Cell cell(kTwoPi, kTwoPi, 32, 32);

  SUBCASE("zero rhs gives zero") {
    RealField zero(cell, 0.0);
    CHECK(poisson_solve_periodic(zero).max_abs() == 0.0);
  }

  SUBCASE("single mode inversion") {
    auto rhs = RealField::sample(cell, [](double x, double) { return std::cos(x); });
    auto expect = RealField::sample(cell, [](double x, double) { return -std::cos(x); });
    RealField phi = poisson_solve_periodic(rhs);
    CHECK(max_abs_diff(phi, expect) < 1e-12);
  }

  SUBCASE("round trip on random zero-mean rhs") {
    RealField rhs = random_band_limited(cell, rng, 8, 8, 1.0);
    RealField phi = poisson_solve_periodic(rhs);
    CHECK(max_abs_diff(laplacian(phi), rhs) < 1e-9 * std::max(1.0, rhs.max_abs()));
    CHECK(std::abs(phi.mean()) < 1e-12);
  }

  SUBCASE("nonzero mean is rejected with the mean reported") {
    RealField rhs(cell, 0.25);
    CHECK_THROWS_WITH_AS(poisson_solve_periodic(rhs),
                         doctest::Contains("nonzero mean"), std::invalid_argument);
  }

  SUBCASE("flux of a Laplacian vanishes") {
    RealField phi = random_band_limited(cell, rng, 7, 7, 2.0, 1.0);
    CHECK(std::abs(flux(laplacian(phi))) < 1e-9);
  }
}

TEST_CASE("spectral derivative conventions: dz dzbar = lap") {
  Cell cell(2.0, 3.0, 32, 32);
  RealField f = random_band_limited(cell, rng, 6, 6, 1.0);
  ComplexField lhs = dz(dzbar(f));
  RealField lap = laplacian(f);
  CHECK(max_abs_diff(real_part(lhs), lap) < 1e-10);
  CHECK(imag_part(lhs).max_abs() < 1e-10);
  // dzbar annihilates analytic samples: z is not periodic, use exp(i k (x + i y)).
  auto analytic = ComplexField::sample(cell, [&](double x, double y) {
    return std::exp(kI * (kTwoPi / cell.T1) * Complex(x, y));
  });
  // exp(i k z) is T1-periodic in x but decaying in y; skip unless both periods match.
  (void)analytic;
}

TEST_CASE("gauge transform preserves H and U") {
  Cell cell(kTwoPi, kTwoPi, 48, 48);
  const double hbar = 2.0 / cell.area() * kTwoPi;  // arbitrary nonzero mean
  RealField H = random_band_limited(cell, rng, 5, 5, 0.3, hbar);
  RealField V = random_band_limited(cell, rng, 5, 5, 0.2, 1.5);
  OperatorCoefficients L = OperatorCoefficients::from_physical(H, V);
  CHECK(L.h_residual(H) < 1e-10);
  CHECK(L.real_lorentz_residual() < 1e-10);

  SUBCASE("identity and constant gauges change nothing") {
    for (double c : {0.0, 0.8}) {
      OperatorCoefficients Lg = gauge_transform(L, RealField(cell, c));
      CHECK(max_abs_diff(Lg.A0, L.A0) < 1e-12);
      CHECK(max_abs_diff(Lg.B0, L.B0) < 1e-12);
    }
  }

  SUBCASE("random gauge leaves the derived fields alone") {
    RealField f = random_band_limited(cell, rng, 4, 4, 0.5);
    OperatorCoefficients Lg = gauge_transform(L, f);
    CHECK(max_abs_diff(Lg.field_H(), L.field_H()) < 1e-10);
    CHECK(max_abs_diff(Lg.field_U(), L.field_U()) < 1e-10);
    CHECK(Lg.gauge_tag == GaugeTag::general);
  }
}

TEST_CASE("magnetic translations") {
  Cell cell(kTwoPi, kTwoPi, 16, 16);

  SUBCASE("zero field: plain cyclic shift") {
    SectionField s = SectionField::random(cell, 0, rng, 2, 1);
    MagneticPhases none{};
    SectionField t = magnetic_translate(s, 1, none);
    for (int i = 0; i < t.values.cell().N1; ++i)
      for (int j = 0; j < t.values.cell().N2; ++j)
        CHECK(t.values(i, j) == s.values.wrap(i + cell.N1, j));
  }

  SUBCASE("commutation phase at integer flux") {
    for (int m : {1, 3}) {
      const double hbar = kTwoPi * m / cell.area();
      MagneticPhases ph{-hbar * cell.T1, 0.0};
      // Exact exponent arithmetic: the composed phases differ by the flux.
      CHECK(ph.commutator_phase(cell) == doctest::Approx(-kTwoPi * m).epsilon(1e-14));

      SectionField s = SectionField::random(cell, m, rng);
      SectionField t12 = magnetic_translate(magnetic_translate(s, 2, ph), 1, ph);
      SectionField t21 = magnetic_translate(magnetic_translate(s, 1, ph), 2, ph);
      // At integer flux exp(-i [H]) = 1 and the two orders agree pointwise.
      CHECK(max_abs_diff(t12.values, t21.values) < 1e-10);
    }
  }

  SUBCASE("non-integer flux is rejected") {
    MagneticPhases ph{-0.5 * kTwoPi / cell.T2, 0.0};  // half a quantum
    SectionField s = SectionField::random(cell, 0, rng);
    CHECK_THROWS_AS(magnetic_translate(s, 1, ph), std::invalid_argument);
  }
}

TEST_CASE("theta series") {
  SUBCASE("value frozen from the direct summation oracle") {
    // Direct summation: 1 + 2 sum_{n>=1} exp(-5 n^2) for a = 10.
    double oracle = 1.0;
    for (int n = 1; n < 20; ++n) oracle += 2.0 * std::exp(-5.0 * n * n);
    CHECK(theta_series(0.0, 10.0) == doctest::Approx(oracle).epsilon(1e-14));
    CHECK(theta_series(0.0, 10.0) == doctest::Approx(1.0134758982).epsilon(1e-9));
  }

  SUBCASE("even in u") {
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int t = 0; t < 20; ++t) {
      const double uu = u(rng), a = 1.0 + std::abs(u(rng));
      CHECK(theta_series(uu, a) == doctest::Approx(theta_series(-uu, a)).epsilon(1e-13));
    }
  }

  SUBCASE("index shift identity") {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int t = 0; t < 20; ++t) {
      const double uu = u(rng), a = 0.7 + std::abs(u(rng));
      const double lhs = theta_series(uu + a, a);
      const double rhs = std::exp(0.5 * a + uu) * theta_series(uu, a);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
  }

  SUBCASE("nonpositive scale diverges") {
    CHECK_THROWS_AS(theta_series(0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(theta_series(0.0, -1.0), std::invalid_argument);
  }

  SUBCASE("log-scaled version agrees and survives large arguments") {
    CHECK(theta_series_log(1.3, 2.0) == doctest::Approx(std::log(theta_series(1.3, 2.0))).epsilon(1e-13));
    CHECK(std::isfinite(theta_series_log(90.0, 1.4)));
  }
}

TEST_CASE("weierstrass sigma") {
  EllipticCell ec(2.0, 3.0);

  SUBCASE("lattice zero and oddness") {
    CHECK(std::abs(ec.sigma(Complex(0.0))) == 0.0);
    std::uniform_real_distribution<double> u(-0.8, 0.8);
    for (int t = 0; t < 20; ++t) {
      const Complex z(u(rng), u(rng));
      CHECK(std::abs(ec.sigma(-z) + ec.sigma(z)) < 1e-12 * std::max(1.0, std::abs(ec.sigma(z))));
    }
  }

  SUBCASE("normalization sigma(z)/z -> 1") {
    const Complex z(1e-4, -0.7e-4);
    CHECK(std::abs(ec.sigma(z) / z - 1.0) < 1e-7);
  }

  SUBCASE("zeros exactly on lattice points") {
    CHECK(std::abs(ec.sigma(Complex(2.0, 3.0))) < 1e-10);
    CHECK(std::abs(ec.sigma(Complex(-2.0, 3.0))) < 1e-10);
    CHECK(std::abs(ec.sigma(Complex(0.37, 0.0))) > 0.1);
  }

  SUBCASE("quasi-periodicity in both directions") {
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    for (int t = 0; t < 8; ++t) {
      const Complex z(u(rng) + 0.1, u(rng) - 0.2);
      const Complex lhs1 = ec.sigma(z + ec.T1());
      const Complex rhs1 = -ec.sigma(z) * std::exp(2.0 * ec.eta1() * (z + 0.5 * ec.T1()));
      CHECK(std::abs(lhs1 - rhs1) < 1e-10 * std::abs(rhs1));
      const Complex lhs2 = ec.sigma(z + Complex(0.0, ec.T2()));
      const Complex rhs2 = -ec.sigma(z) * std::exp(2.0 * ec.eta2() * (z + Complex(0.0, 0.5 * ec.T2())));
      CHECK(std::abs(lhs2 - rhs2) < 1e-10 * std::abs(rhs2));
    }
  }

  SUBCASE("zeta is the log derivative and wp = -zeta'") {
    const Complex z(0.31, -0.42);
    const double h = 1e-5;
    const Complex num = (ec.sigma(z + h) - ec.sigma(z - h)) / (2.0 * h * ec.sigma(z));
    CHECK(std::abs(ec.zeta(z) - num) < 1e-7);
    const Complex numz = (ec.zeta(z + h) - ec.zeta(z - h)) / (2.0 * h);
    CHECK(std::abs(ec.wp(z) + numz) < 1e-6);
  }

  SUBCASE("zeta jet matches finite differences to high order") {
    const Complex z(0.22, 0.18);
    auto jet = ec.zeta_jet(z, 3);
    const double h = 1e-4;
    auto jp = ec.zeta_jet(z + h, 2), jm = ec.zeta_jet(z - h, 2);
    for (int k = 0; k + 1 <= 3; ++k) {
      const Complex fd = (jp[k] - jm[k]) / (2.0 * h);
      CHECK(std::abs(jet[k + 1] - fd) < 1e-5 * std::max(1.0, std::abs(fd)));
    }
  }
}
