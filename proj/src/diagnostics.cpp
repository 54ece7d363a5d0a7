#include "fockalg/diagnostics.hpp"

#include <cmath>
#include <stdexcept>

#include "fockalg/errors.hpp"

namespace fockalg {

double spectral_norm(const SparseMatrixXc& a, int max_iter, double rel_tol) {
  if (a.nonZeros() == 0) return 0.0;
  // fixed start vector keeps the estimate deterministic
  VectorXc v = VectorXc::Ones(a.cols()) / std::sqrt(static_cast<double>(a.cols()));
  double estimate = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    VectorXc w = a.adjoint() * (a * v);
    const double nw = w.norm();
    if (nw == 0.0) return 0.0;
    v = w / nw;
    const double next = std::sqrt(nw);
    if (std::abs(next - estimate) <= rel_tol * next) return next;
    estimate = next;
  }
  return estimate;
}

double op_norm(const TruncOp& x) {
  if (x.basis().size() <= kDenseCap) return spectral_norm(x.dense());
  return spectral_norm(x.sparse());
}

double commutant_residual(const TruncOp& x) {
  if (x.frontier() < 1) return 0.0;
  const auto cols = static_cast<Eigen::Index>(x.basis().size_through(x.frontier() - 1));
  double worst = 0.0;
  for (int i = 1; i <= x.n(); ++i) {
    const TruncOp r = creation_op(Side::Right, Word{i}, x.n(), x.level());
    const TruncOp diff = compose(x, r) - compose(r, x);
    double norm = 0.0;
    if (diff.basis().size() <= kDenseCap) {
      norm = spectral_norm(diff.dense().leftCols(cols));
    } else {
      SparseMatrixXc block = diff.sparse().leftCols(cols);
      norm = spectral_norm(block);
    }
    worst = std::max(worst, norm);
  }
  return worst;
}

std::vector<double> adjoint_power_orbit(const TruncOp& l, const FockVector& xi, int kmax,
                                        double contraction_tol) {
  if (kmax < 0) throw std::invalid_argument("adjoint_power_orbit: kmax < 0");
  const double norm = op_norm(l);
  if (norm > 1.0 + contraction_tol)
    throw HypothesisViolation("adjoint_power_orbit: compression norm " + std::to_string(norm) +
                              " exceeds 1");
  const TruncOp ladj = adjoint(l);
  VectorXc v = xi.to_dense(l.basis());
  std::vector<double> orbit;
  orbit.reserve(static_cast<std::size_t>(kmax) + 1);
  orbit.push_back(v.norm());
  for (int k = 1; k <= kmax; ++k) {
    v = ladj.apply(v);
    orbit.push_back(v.norm());
  }
  return orbit;
}

double falling_binomial(double x, int j) {
  double out = 1.0;
  for (int i = 0; i < j; ++i) out *= (x - i) / (i + 1);
  return out;
}

double adjoint_power_bound(int k, double abs_lambda, const std::vector<double>& weights) {
  double total = 0.0;
  const int top = std::min<int>(k, static_cast<int>(weights.size()) - 1);
  for (int j = 0; j <= top; ++j) {
    const double lam_pow = (k - j == 0) ? 1.0 : std::pow(abs_lambda, k - j);
    total += falling_binomial(k, j) * lam_pow * weights[static_cast<std::size_t>(j)];
  }
  return total;
}

DefectRanks defect_ranks(const TruncOp& l, double rel_tol) {
  const MatrixXc a = l.dense();
  const MatrixXc eye = MatrixXc::Identity(a.rows(), a.cols());
  DefectRanks out;
  out.co_isometric = numerical_rank(eye - a * a.adjoint(), rel_tol);
  out.isometric = numerical_rank(eye - a.adjoint() * a, rel_tol);
  return out;
}

int range_complement_level_dims(const TruncOp& l, int k, double rel_tol) {
  const Complex constant = l.column(0)(0);
  if (std::abs(constant) > kExactTol)
    throw HypothesisViolation("range_complement_level_dims: (L xi_1, xi_1) != 0");
  if (k < 1 || k > l.frontier())
    throw HypothesisViolation("range_complement_level_dims: level outside [1, frontier]");
  const MatrixXc block = level_block(l, k, k, 0, k - 1);
  return static_cast<int>(l.basis().level_size(k)) - numerical_rank(block, rel_tol);
}

} // namespace fockalg
