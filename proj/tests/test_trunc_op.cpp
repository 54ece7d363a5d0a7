#include <doctest.h>

#include "fockalg/errors.hpp"
#include "fockalg/trunc_op.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace fockalg;

namespace {

/// Permutes a brute-force matrix (oracle word order) into canonical order.
MatrixXc to_canonical(const oracle::Matrix& m, int n, int level) {
  const auto words = oracle::words_through(n, level);
  const BasisIndexer basis(n, level);
  MatrixXc out = MatrixXc::Zero(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out(static_cast<Eigen::Index>(basis.index(Word(words[static_cast<std::size_t>(i)]))),
          static_cast<Eigen::Index>(basis.index(Word(words[static_cast<std::size_t>(j)])))) = m(i, j);
  return out;
}

} // namespace

TEST_CASE("trunc op: creation operators match the brute-force matrices") {
  gen::Source g(5);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = g.uniform(1, 3);
    const int level = g.uniform(1, 4);
    const Word w = g.word(n, level);
    for (Side side : {Side::Left, Side::Right}) {
      const TruncOp op = creation_op(side, w, n, level);
      const MatrixXc want = to_canonical(oracle::word_matrix(w.letters(), n, level, side == Side::Left), n, level);
      CHECK((op.dense() - want).norm() == 0.0);
      CHECK(op.frontier() == level - static_cast<int>(w.length()));
      CHECK(op.exact_compression());
    }
  }
}

TEST_CASE("trunc op: symbols become sums of left creation operators") {
  gen::Source g(6);
  for (int trial = 0; trial < 30; ++trial) {
    const FreeSeries s = g.series(2, 3, 5);
    const TruncOp op = series_to_op(s, 2, 4);
    MatrixXc want = MatrixXc::Zero(op.dim(), op.dim());
    for (const auto& [w, c] : s.coefficients())
      want += c * to_canonical(oracle::word_matrix(w.letters(), 2, 4, true), 2, 4);
    CHECK((op.dense() - want).norm() < 1e-12);
    CHECK(op.frontier() == 4 - s.degree());
    CHECK(max_coeff_distance(fourier_of(op, 4), s) < 1e-15);
  }
}

TEST_CASE("trunc op: composition of left words concatenates on the exact region") {
  const int level = 5;
  const TruncOp lu = creation_op(Side::Left, Word{1, 2}, 2, level);
  const TruncOp lv = creation_op(Side::Left, Word{2}, 2, level);
  const TruncOp luv = creation_op(Side::Left, Word{1, 2, 2}, 2, level);
  const TruncOp prod = lu * lv;
  CHECK(prod.frontier() == level - 3);
  CHECK((prod.dense() - luv.dense()).norm() == 0.0);
}

TEST_CASE("trunc op: left and right creation operators commute") {
  const int level = 5;
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      const TruncOp l = creation_op(Side::Left, Word{i}, 2, level);
      const TruncOp r = creation_op(Side::Right, Word{j}, 2, level);
      CHECK(((l * r) - (r * l)).dense().norm() == 0.0);
    }
}

TEST_CASE("trunc op: adjoints are conjugate transposes with swapped level shifts") {
  FreeSeries s(2);
  s.add(Word{1}, Complex(0.5, 0.5));
  s.add(Word{2, 1}, 2.0);
  const TruncOp x = series_to_op(s, 2, 4);
  const TruncOp xa = adjoint(x);
  CHECK((xa.dense() - x.dense().adjoint()).norm() == 0.0);
  CHECK(xa.level_drop() == x.level_raise());
  CHECK(xa.level_raise() == x.level_drop());
  // an adjoint of an exact compression only lowers levels, so it is exact everywhere
  CHECK(adjoint(creation_op(Side::Left, Word{1}, 2, 4)).frontier() == 4);
}

TEST_CASE("trunc op: level blocks and dense cap") {
  const TruncOp l = creation_op(Side::Left, Word{1}, 2, 4);
  const MatrixXc block = level_block(l, 2, 2, 1, 1);
  CHECK(block.rows() == 4);
  CHECK(block.cols() == 2);
  CHECK(block.cwiseAbs().sum() == doctest::Approx(2.0));
  const TruncOp big = TruncOp::identity(2, 12);
  CHECK(big.is_sparse());
  CHECK_THROWS_AS(big.dense(), ResourceError);
  CHECK(big.apply(VectorXc::Ones(big.dim())).sum() == Complex(static_cast<double>(big.dim())));
}

TEST_CASE("trunc op: mismatched shapes and oversized words are rejected") {
  CHECK_THROWS_AS(TruncOp::identity(2, 3) + TruncOp::identity(2, 4), DimensionMismatch);
  CHECK_THROWS_AS(creation_op(Side::Left, Word{1, 1, 1}, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(fourier_of(TruncOp::identity(2, 2), 3), std::out_of_range);
}

TEST_CASE("trunc op: apply on Fock vectors") {
  const TruncOp r = creation_op(Side::Right, Word{2}, 2, 3);
  const FockVector out = r.apply(FockVector::basis(2, 3, Word{1}));
  CHECK(out.coeff(Word{1, 2}) == Complex(1.0));
  CHECK(out.squared_norm() == doctest::Approx(1.0));
  CHECK(r.apply(FockVector::basis(2, 3, Word{1, 1, 1})).squared_norm() == 0.0);
}
