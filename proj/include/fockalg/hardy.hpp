#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Core>

#include "fockalg/errors.hpp"
#include "fockalg/types.hpp"

namespace fockalg {

/// Truncated one-variable power series sum_{k<=K} c_k z^k.
template <typename Scalar>
struct PowerSeries {
  using Coefficients = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  Coefficients coeffs;

  PowerSeries() = default;
  explicit PowerSeries(Coefficients c) : coeffs(std::move(c)) {}
  static PowerSeries constant(Scalar c0) { return PowerSeries(Coefficients::Constant(1, c0)); }
  /// The identity function z.
  static PowerSeries z() {
    Coefficients c = Coefficients::Zero(2);
    c(1) = Scalar(1);
    return PowerSeries(std::move(c));
  }

  /// K, the highest stored index; -1 when empty.
  Eigen::Index order() const noexcept { return coeffs.size() - 1; }
  /// c_k, zero beyond the stored range.
  Scalar operator[](Eigen::Index k) const { return k < coeffs.size() ? coeffs(k) : Scalar(0); }
  double l2_norm() const { return coeffs.norm(); }
};

using ScalarSeries = PowerSeries<Complex>;

/// c_k = 1/(k+1) for k = 0..K.
template <typename Scalar = Complex>
PowerSeries<Scalar> harmonic_series(Eigen::Index order) {
  typename PowerSeries<Scalar>::Coefficients c(order + 1);
  for (Eigen::Index k = 0; k <= order; ++k) c(k) = Scalar(1.0 / static_cast<double>(k + 1));
  return PowerSeries<Scalar>(std::move(c));
}

/// First K+1 coefficients of s*t.
template <typename Scalar>
PowerSeries<Scalar> cauchy_product(const PowerSeries<Scalar>& s, const PowerSeries<Scalar>& t,
                                   Eigen::Index order) {
  typename PowerSeries<Scalar>::Coefficients c =
      PowerSeries<Scalar>::Coefficients::Zero(order + 1);
  for (Eigen::Index i = 0; i <= std::min(order, s.order()); ++i)
    for (Eigen::Index j = 0; j <= std::min(order - i, t.order()); ++j)
      c(i + j) += s.coeffs(i) * t.coeffs(j);
  return PowerSeries<Scalar>(std::move(c));
}

/// g with (s*g)_k = delta_{k0} for k <= K, by the triangular recursion
/// g_0 = 1/c_0, g_k = -(1/c_0) sum_{j=1..k} c_j g_{k-j}.
/// Throws HypothesisViolation when |c_0| <= 1e-12.
template <typename Scalar>
PowerSeries<Scalar> reciprocal(const PowerSeries<Scalar>& s, Eigen::Index order) {
  if (s.coeffs.size() == 0 || std::abs(s.coeffs(0)) <= 1e-12)
    throw HypothesisViolation("reciprocal: constant coefficient vanishes");
  const Scalar inv_c0 = Scalar(1) / s.coeffs(0);
  typename PowerSeries<Scalar>::Coefficients g(order + 1);
  g(0) = inv_c0;
  for (Eigen::Index k = 1; k <= order; ++k) {
    Scalar acc(0);
    for (Eigen::Index j = 1; j <= std::min(k, s.order()); ++j) acc += s.coeffs(j) * g(k - j);
    g(k) = -inv_c0 * acc;
  }
  return PowerSeries<Scalar>(std::move(g));
}

/// Horner evaluation of the stored partial sum at z.
template <typename Scalar>
Complex evaluate(const PowerSeries<Scalar>& s, Complex z) {
  Complex acc{};
  for (Eigen::Index k = s.order(); k >= 0; --k) acc = acc * z + Complex(s.coeffs(k));
  return acc;
}

/// max over grid points e^{i 2 pi j / grid} of |sum_{k<=m} c_k e^{ik theta}|.
template <typename Scalar>
double partial_sum_sup(const PowerSeries<Scalar>& s, Eigen::Index m, int grid) {
  if (grid < 8) throw std::invalid_argument("partial_sum_sup: grid must be >= 8");
  if (m > s.order()) throw std::invalid_argument("partial_sum_sup: m exceeds the series order");
  const PowerSeries<Scalar> head(s.coeffs.head(m + 1));
  double best = 0.0;
  for (int j = 0; j < grid; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / grid;
    best = std::max(best, std::abs(evaluate(head, std::polar(1.0, theta))));
  }
  return best;
}

/// Closed-form |f(e^{i theta})| for f(z) = sum z^k/(k+1):
/// sqrt(log^2|2 sin(theta/2)| + ((|theta| - pi)/2)^2), using |f(e^{-i theta})| =
/// |f(e^{i theta})|. Throws std::domain_error at theta = 0 (mod 2 pi).
double boundary_modulus(double theta);

/// -log(1 - z)/z on the principal branch, with value 1 at z = 0.
Complex harmonic_closed_form(Complex z);

} // namespace fockalg
