#include <doctest.h>

#include <random>

#include "fockalg/diagnostics.hpp"
#include "fockalg/errors.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace fockalg;

TEST_CASE("diagnostics: numerical rank agrees with Gaussian elimination") {
  std::mt19937_64 rng(8);
  std::normal_distribution<double> gauss;
  for (int trial = 0; trial < 50; ++trial) {
    const int rows = 4 + trial % 5;
    const int cols = 3 + trial % 4;
    const int r = 1 + trial % std::min(rows, cols);
    MatrixXc a = MatrixXc::Zero(rows, r);
    MatrixXc b = MatrixXc::Zero(r, cols);
    for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = Complex(gauss(rng), gauss(rng));
    for (Eigen::Index i = 0; i < b.size(); ++i) b.data()[i] = Complex(gauss(rng), gauss(rng));
    const MatrixXc m = a * b;
    CHECK(numerical_rank(m) == oracle::gauss_rank(m));
    CHECK(numerical_rank(m) == r);
  }
}

TEST_CASE("diagnostics: compression norms of isometries and sparse power iteration") {
  CHECK(op_norm(creation_op(Side::Left, Word{1, 2}, 2, 5)) == doctest::Approx(1.0));
  const TruncOp big = 0.5 * creation_op(Side::Right, Word{1}, 2, 12);
  CHECK(op_norm(big) == doctest::Approx(0.5).epsilon(1e-9));
  MatrixXc d = MatrixXc::Zero(3, 3);
  d(0, 0) = 3.0;
  d(1, 2) = Complex(0.0, -4.0);
  CHECK(spectral_norm(d) == doctest::Approx(4.0));
}

TEST_CASE("diagnostics: symbols commute with the right creation operators") {
  gen::Source g(9);
  for (int trial = 0; trial < 20; ++trial) {
    const FreeSeries s = g.series(2, 3, 6);
    CHECK(commutant_residual(series_to_op(s, 2, 6)) <= 1e-12);
  }
  std::mt19937_64 rng(10);
  std::normal_distribution<double> gauss;
  for (int trial = 0; trial < 20; ++trial) {
    MatrixXc m(127, 127);
    for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = Complex(gauss(rng), gauss(rng));
    CHECK(commutant_residual(TruncOp::from_matrix(2, 6, m)) > 1e-3);
  }
}

TEST_CASE("diagnostics: adjoint orbit of the shift empties a word") {
  const int level = 5;
  const TruncOp l1 = creation_op(Side::Left, Word{1}, 2, level);
  for (int m = 0; m <= 4; ++m) {
    const auto orbit = adjoint_power_orbit(l1, FockVector::basis(2, level, Word::repeat(1, m)), 6);
    for (int k = 0; k <= m; ++k) CHECK(orbit[static_cast<std::size_t>(k)] == doctest::Approx(1.0));
    CHECK(orbit[static_cast<std::size_t>(m + 1)] == 0.0);
  }
  CHECK_THROWS_AS(adjoint_power_orbit(2.0 * l1, FockVector::basis(2, level, Word{}), 3),
                  HypothesisViolation);
}

TEST_CASE("diagnostics: falling binomials and the orbit bound") {
  CHECK(falling_binomial(5, 0) == 1.0);
  CHECK(falling_binomial(5, 2) == doctest::Approx(10.0));
  CHECK(falling_binomial(2, 3) == 0.0);
  // sum_j p_j(k) |lambda|^{k-j} w_j by hand for k = 2
  const std::vector<double> w{1.0, 0.5, 0.25};
  CHECK(adjoint_power_bound(2, 0.3, w) == doctest::Approx(0.09 + 2 * 0.3 * 0.5 + 0.25));
  CHECK(adjoint_power_bound(0, 0.0, w) == doctest::Approx(1.0));
  CHECK(adjoint_power_bound(1, 0.0, w) == doctest::Approx(0.5));
}

TEST_CASE("diagnostics: complement dimensions of ran L1 match brute-force ranks") {
  const int level = 6;
  const TruncOp l1 = creation_op(Side::Left, Word{1}, 2, level);
  const MatrixXc dense = l1.dense();
  const BasisIndexer& basis = l1.basis();
  for (int k = 1; k <= 5; ++k) {
    const auto rows = static_cast<Eigen::Index>(basis.level_size(k));
    const MatrixXc block = dense.block(static_cast<Eigen::Index>(basis.level_offset(k)), 0, rows,
                                       static_cast<Eigen::Index>(basis.size_through(k - 1)));
    const int want = static_cast<int>(rows) - oracle::gauss_rank(block);
    CHECK(range_complement_level_dims(l1, k) == want);
    CHECK(want == (1 << (k - 1)));
  }
  FreeSeries avg(2);
  avg.add(Word{1}, 1.0 / std::sqrt(2.0));
  avg.add(Word{2}, 1.0 / std::sqrt(2.0));
  CHECK(range_complement_level_dims(series_to_op(avg, 2, 4), 1) == 1);
  CHECK_THROWS_AS(range_complement_level_dims(TruncOp::identity(2, 3), 1), HypothesisViolation);
  CHECK_THROWS_AS(range_complement_level_dims(l1, level), HypothesisViolation);
}

TEST_CASE("diagnostics: defect ranks of the truncated shift") {
  // 15 basis words at N = 3; L1 L1* projects onto the 7 words starting with z1,
  // L1* L1 onto the 7 words of length <= 2
  const DefectRanks d = defect_ranks(creation_op(Side::Left, Word{1}, 2, 3));
  CHECK(d.co_isometric == 8);
  CHECK(d.isometric == 8);
  const DefectRanks id = defect_ranks(TruncOp::identity(2, 3));
  CHECK(id.co_isometric == 0);
  CHECK(id.isometric == 0);
}
