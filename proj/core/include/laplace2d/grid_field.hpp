#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

#include "laplace2d/cell.hpp"
#include "laplace2d/constants.hpp"

namespace laplace2d {

// Samples of a doubly periodic function on the grid of a Cell.
// Storage is row-major in the x index: data[i * N2 + j] = f(x_i, y_j).
template <typename T>
class GridField {
 public:
  GridField() = default;
  explicit GridField(const Cell& cell, T fill = T{})
      : cell_(cell), data_(static_cast<size_t>(cell.size()), fill) {}

  static GridField sample(const Cell& cell, const std::function<T(double, double)>& f) {
    GridField out(cell);
    for (int i = 0; i < cell.N1; ++i)
      for (int j = 0; j < cell.N2; ++j) out(i, j) = f(cell.x(i), cell.y(j));
    return out;
  }

  const Cell& cell() const { return cell_; }
  T& operator()(int i, int j) { return data_[index(i, j)]; }
  const T& operator()(int i, int j) const { return data_[index(i, j)]; }
  // Periodic accessor: indices taken mod (N1, N2).
  const T& wrap(int i, int j) const {
    const int n1 = cell_.N1, n2 = cell_.N2;
    i %= n1; if (i < 0) i += n1;
    j %= n2; if (j < 0) j += n2;
    return data_[index(i, j)];
  }
  T* data() { return data_.data(); }
  const T* data() const { return data_.data(); }
  size_t size() const { return data_.size(); }

  T mean() const {
    T s{};
    for (const auto& v : data_) s += v;
    return s / static_cast<double>(data_.size());
  }
  double max_abs() const {
    double m = 0;
    for (const auto& v : data_) m = std::max(m, std::abs(v));
    return m;
  }
  T min() const requires std::is_same_v<T, double> {
    return *std::min_element(data_.begin(), data_.end());
  }

  GridField& operator+=(const GridField& o) { binary(o, [](T& a, const T& b) { a += b; }); return *this; }
  GridField& operator-=(const GridField& o) { binary(o, [](T& a, const T& b) { a -= b; }); return *this; }
  GridField& operator*=(double s) { for (auto& v : data_) v *= s; return *this; }
  GridField& operator+=(T s) { for (auto& v : data_) v += s; return *this; }

  friend GridField operator+(GridField a, const GridField& b) { a += b; return a; }
  friend GridField operator-(GridField a, const GridField& b) { a -= b; return a; }
  friend GridField operator*(double s, GridField a) { a *= s; return a; }

  template <typename F>
  GridField<std::invoke_result_t<F, T>> map(F&& f) const {
    GridField<std::invoke_result_t<F, T>> out(cell_);
    for (size_t k = 0; k < data_.size(); ++k) out.data()[k] = f(data_[k]);
    return out;
  }

 private:
  size_t index(int i, int j) const { return static_cast<size_t>(i) * cell_.N2 + j; }
  template <typename Op>
  void binary(const GridField& o, Op op) {
    if (!(cell_ == o.cell_)) throw std::invalid_argument("GridField: cell mismatch");
    for (size_t k = 0; k < data_.size(); ++k) op(data_[k], o.data_[k]);
  }

  Cell cell_;
  std::vector<T> data_;
};

using RealField = GridField<double>;
using ComplexField = GridField<Complex>;

inline ComplexField to_complex(const RealField& f) {
  return f.map([](double v) { return Complex(v, 0.0); });
}
inline RealField real_part(const ComplexField& f) {
  return f.map([](Complex v) { return v.real(); });
}
inline RealField imag_part(const ComplexField& f) {
  return f.map([](Complex v) { return v.imag(); });
}

inline double max_abs_diff(const RealField& a, const RealField& b) { return (a - b).max_abs(); }
inline double max_abs_diff(const ComplexField& a, const ComplexField& b) { return (a - b).max_abs(); }

// Periodic quadrature over the cell (trapezoid rule on a torus = plain sum
// times the cell measure; exact for trigonometric polynomials below Nyquist).
inline double integrate(const RealField& f) {
  double s = 0;
  for (size_t k = 0; k < f.size(); ++k) s += f.data()[k];
  return s * f.cell().hx() * f.cell().hy();
}

}  // namespace laplace2d
