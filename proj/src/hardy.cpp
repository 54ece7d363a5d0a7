#include "fockalg/hardy.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fockalg {

double boundary_modulus(double theta) {
  // reduce to (-pi, pi], then fold onto (0, pi] by conjugation symmetry
  double t = std::remainder(theta, 2.0 * std::numbers::pi);
  if (t == -std::numbers::pi) t = std::numbers::pi;
  t = std::abs(t);
  if (t == 0.0) throw std::domain_error("boundary_modulus: f is unbounded at theta = 0");
  const double log_part = std::log(std::abs(2.0 * std::sin(t / 2.0)));
  const double arg_part = (t - std::numbers::pi) / 2.0;
  return std::sqrt(log_part * log_part + arg_part * arg_part);
}

Complex harmonic_closed_form(Complex z) {
  if (z == Complex{}) return 1.0;
  return -std::log(Complex(1.0) - z) / z;
}

} // namespace fockalg
