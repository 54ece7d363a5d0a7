#pragma once

#include <vector>

#include <Eigen/SVD>

#include "fockalg/fock.hpp"
#include "fockalg/trunc_op.hpp"
#include "fockalg/types.hpp"

namespace fockalg {

/// Singular values in decreasing order.
template <typename Derived>
Eigen::VectorXd singular_values(const Eigen::MatrixBase<Derived>& a) {
  using Plain = typename Derived::PlainObject;
  if (a.rows() == 0 || a.cols() == 0) return Eigen::VectorXd();
  Eigen::BDCSVD<Plain> svd(a.eval());
  return svd.singularValues();
}

/// Count of singular values >= rel_tol * sigma_max.
template <typename Derived>
int numerical_rank(const Eigen::MatrixBase<Derived>& a, double rel_tol = kRankTol) {
  const Eigen::VectorXd s = singular_values(a);
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) >= rel_tol * s(0)) ++r;
  return r;
}

template <typename Derived>
double spectral_norm(const Eigen::MatrixBase<Derived>& a) {
  const Eigen::VectorXd s = singular_values(a);
  return s.size() == 0 ? 0.0 : s(0);
}

/// Largest singular value by power iteration on A*A; used above kDenseCap.
double spectral_norm(const SparseMatrixXc& a, int max_iter = 500, double rel_tol = 1e-12);

/// Compression norm: sigma_max of the truncated matrix. A lower bound for
/// the norm of the untruncated operator.
double op_norm(const TruncOp& x);

/// max_i || (X R_i - R_i X) restricted to columns of levels <= frontier - 1 ||.
double commutant_residual(const TruncOp& x);

/// ||(L*)^k xi|| for k = 0..kmax. Throws HypothesisViolation when the
/// compression norm of L exceeds 1 + contraction_tol.
std::vector<double> adjoint_power_orbit(const TruncOp& l, const FockVector& xi, int kmax,
                                        double contraction_tol = 1e-9);

/// p_j(x) = x(x-1)...(x-j+1)/j!.
double falling_binomial(double x, int j);

/// sum_{j=0..l} p_j(k) |lambda|^{k-j} weights[j], with 0^0 = 1 and terms
/// with j > k omitted.
double adjoint_power_bound(int k, double abs_lambda, const std::vector<double>& weights);

struct DefectRanks {
  int co_isometric = 0; // rank(I - L L*)
  int isometric = 0;    // rank(I - L* L)
};

DefectRanks defect_ranks(const TruncOp& l, double rel_tol = kRankTol);

/// n^k - rank(P_k L P_{<k}). Requires (L xi_1, xi_1) = 0 and 1 <= k <= frontier.
int range_complement_level_dims(const TruncOp& l, int k, double rel_tol = kRankTol);

} // namespace fockalg
