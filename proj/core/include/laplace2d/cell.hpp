#pragma once

#include <stdexcept>

namespace laplace2d {

// Rectangular period cell [0,T1) x [0,T2) sampled on a uniform N1 x N2 grid.
struct Cell {
  double T1 = kDefaultPeriod;
  double T2 = kDefaultPeriod;
  int N1 = 64;
  int N2 = 64;

  static constexpr double kDefaultPeriod = 6.283185307179586476925286766559;

  Cell() = default;
  Cell(double t1, double t2, int n1, int n2) : T1(t1), T2(t2), N1(n1), N2(n2) {
    if (!(T1 > 0.0) || !(T2 > 0.0)) throw std::invalid_argument("Cell: periods must be positive");
    if (N1 < 8 || N2 < 8) throw std::invalid_argument("Cell: grid must be at least 8x8");
  }

  double area() const { return T1 * T2; }
  double hx() const { return T1 / N1; }
  double hy() const { return T2 / N2; }
  double x(int i) const { return T1 * i / N1; }
  double y(int j) const { return T2 * j / N2; }
  int size() const { return N1 * N2; }

  friend bool operator==(const Cell& a, const Cell& b) {
    return a.T1 == b.T1 && a.T2 == b.T2 && a.N1 == b.N1 && a.N2 == b.N2;
  }
};

}  // namespace laplace2d
