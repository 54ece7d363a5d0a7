#pragma once

#include <complex>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace fockalg {

using Complex = std::complex<double>;

using MatrixXc = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
using VectorXc = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;
using SparseMatrixXc = Eigen::SparseMatrix<Complex, Eigen::ColMajor>;

/// Tolerance for identities that hold exactly in exact arithmetic.
inline constexpr double kExactTol = 1e-12;

/// Relative singular-value threshold for numerical rank.
inline constexpr double kRankTol = 1e-9;

} // namespace fockalg
