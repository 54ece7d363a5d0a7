#include "fockalg/trunc_op.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "fockalg/errors.hpp"

namespace fockalg {

namespace {

std::optional<int> add_opt(std::optional<int> a, std::optional<int> b) {
  if (a && b) return *a + *b;
  return std::nullopt;
}

std::optional<int> max_opt(std::optional<int> a, std::optional<int> b) {
  if (a && b) return std::max(*a, *b);
  return std::nullopt;
}

template <typename F>
auto visit_pair(const TruncOp::Storage& a, const TruncOp::Storage& b, F&& f) {
  return std::visit([&](const auto& lhs, const auto& rhs) { return f(lhs, rhs); }, a, b);
}

} // namespace

TruncOp::TruncOp(BasisIndexer basis, Storage storage)
    : basis_(std::move(basis)), storage_(std::move(storage)) {
  const auto d = dim();
  std::visit(
      [d](const auto& m) {
        if (m.rows() != d || m.cols() != d)
          throw DimensionMismatch("matrix shape does not match the truncated basis");
      },
      storage_);
}

TruncOp TruncOp::from_matrix(int n, int level, MatrixXc m, std::optional<int> frontier) {
  TruncOp op(BasisIndexer(n, level), std::move(m));
  op.with_structure(frontier.value_or(level), std::nullopt, std::nullopt, false);
  return op;
}

TruncOp TruncOp::from_matrix(int n, int level, SparseMatrixXc m, std::optional<int> frontier) {
  m.makeCompressed();
  TruncOp op(BasisIndexer(n, level), std::move(m));
  op.with_structure(frontier.value_or(level), std::nullopt, std::nullopt, false);
  return op;
}

TruncOp TruncOp::identity(int n, int level) {
  BasisIndexer basis(n, level);
  const auto d = static_cast<Eigen::Index>(basis.size());
  SparseMatrixXc eye(d, d);
  eye.setIdentity();
  TruncOp op(std::move(basis), std::move(eye));
  op.with_structure(level, 0, 0, true);
  return op;
}

TruncOp TruncOp::zero(int n, int level) {
  BasisIndexer basis(n, level);
  const auto d = static_cast<Eigen::Index>(basis.size());
  TruncOp op(std::move(basis), SparseMatrixXc(d, d));
  op.with_structure(level, 0, 0, true);
  return op;
}

TruncOp& TruncOp::with_structure(int frontier, std::optional<int> raise,
                                 std::optional<int> drop, bool exact_compression) {
  frontier_ = std::clamp(frontier, -1, level());
  raise_ = raise;
  drop_ = drop;
  exact_ = exact_compression;
  return *this;
}

Eigen::Index TruncOp::exact_dim() const {
  return frontier_ < 0 ? 0 : static_cast<Eigen::Index>(basis_.size_through(frontier_));
}

MatrixXc TruncOp::dense() const {
  if (basis_.size() > kDenseCap)
    throw ResourceError("dense form requested for a basis of size " +
                        std::to_string(basis_.size()) + " (cap " + std::to_string(kDenseCap) +
                        ")");
  return std::visit([](const auto& m) -> MatrixXc { return MatrixXc(m); }, storage_);
}

SparseMatrixXc TruncOp::sparse() const {
  if (const auto* s = std::get_if<SparseMatrixXc>(&storage_)) return *s;
  return std::get<MatrixXc>(storage_).sparseView();
}

VectorXc TruncOp::apply(const VectorXc& x) const {
  if (x.size() != dim()) throw DimensionMismatch("apply: vector length does not match basis");
  return std::visit([&x](const auto& m) -> VectorXc { return m * x; }, storage_);
}

FockVector TruncOp::apply(const FockVector& x) const {
  return FockVector::from_dense(basis_, apply(x.to_dense(basis_)));
}

VectorXc TruncOp::column(Eigen::Index j) const {
  return std::visit([j](const auto& m) -> VectorXc { return m.col(j); }, storage_);
}

void TruncOp::check_compatible(const TruncOp& other) const {
  if (!(basis_ == other.basis_))
    throw DimensionMismatch("operators act on different truncated spaces");
}

TruncOp& TruncOp::operator+=(const TruncOp& other) {
  check_compatible(other);
  storage_ = visit_pair(storage_, other.storage_, [](const auto& a, const auto& b) -> Storage {
    using A = std::decay_t<decltype(a)>;
    using B = std::decay_t<decltype(b)>;
    if constexpr (std::is_same_v<A, SparseMatrixXc> && std::is_same_v<B, SparseMatrixXc>)
      return SparseMatrixXc(a + b);
    else
      return MatrixXc(MatrixXc(a) + MatrixXc(b));
  });
  with_structure(std::min(frontier_, other.frontier_), max_opt(raise_, other.raise_),
                 max_opt(drop_, other.drop_), exact_ && other.exact_);
  return *this;
}

TruncOp& TruncOp::operator-=(const TruncOp& other) {
  TruncOp neg = other;
  neg *= -1.0;
  return *this += neg;
}

TruncOp& TruncOp::operator*=(Complex scale) {
  std::visit([scale](auto& m) { m *= scale; }, storage_);
  return *this;
}

TruncOp operator+(TruncOp a, const TruncOp& b) { return a += b; }
TruncOp operator-(TruncOp a, const TruncOp& b) { return a -= b; }
TruncOp operator*(Complex scale, TruncOp x) { return x *= scale; }

TruncOp creation_op(Side side, const Word& w, int n, int level) {
  if (w.length() > static_cast<std::size_t>(level))
    throw std::invalid_argument("creation_op: |w| exceeds the truncation level");
  if (!w.valid_for(n)) throw std::invalid_argument("creation_op: letter outside alphabet");
  const BasisIndexer basis(n, level);
  const auto d = static_cast<Eigen::Index>(basis.size());
  const int top = level - static_cast<int>(w.length());
  std::vector<Eigen::Triplet<Complex>> entries;
  entries.reserve(basis.size_through(top));
  for (std::size_t j = 0; j < basis.size_through(top); ++j) {
    const Word v = basis.word(j);
    const Word out = side == Side::Left ? concat(w, v) : concat(v, w);
    entries.emplace_back(static_cast<Eigen::Index>(basis.index(out)), static_cast<Eigen::Index>(j),
                         Complex(1.0));
  }
  SparseMatrixXc m(d, d);
  m.setFromTriplets(entries.begin(), entries.end());
  auto op = TruncOp::from_matrix(n, level, std::move(m));
  const int len = static_cast<int>(w.length());
  op.with_structure(top, len, 0, true);
  return op;
}

TruncOp series_to_op(const FreeSeries& s, int n, int level) {
  if (s.n() != n) throw DimensionMismatch("series_to_op: alphabet size mismatch");
  const int deg = s.degree();
  if (deg > level) throw std::invalid_argument("series_to_op: symbol degree exceeds N");
  const BasisIndexer basis(n, level);
  const auto d = static_cast<Eigen::Index>(basis.size());
  std::vector<Eigen::Triplet<Complex>> entries;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const Word v = basis.word(j);
    const std::size_t room = static_cast<std::size_t>(level) - v.length();
    for (const auto& [w, a] : s.coefficients()) {
      if (w.length() > room) break;
      if (a == Complex{}) continue;
      entries.emplace_back(static_cast<Eigen::Index>(basis.index(concat(w, v))),
                           static_cast<Eigen::Index>(j), a);
    }
  }
  SparseMatrixXc m(d, d);
  m.setFromTriplets(entries.begin(), entries.end());
  auto op = TruncOp::from_matrix(n, level, std::move(m));
  op.with_structure(level - std::max(deg, 0), std::max(deg, 0), 0, true);
  return op;
}

FreeSeries fourier_of(const TruncOp& x, int depth) {
  if (depth > x.level() || depth < 0) throw std::out_of_range("fourier_of: depth outside [0, N]");
  const VectorXc col = x.column(0);
  FreeSeries s(x.n());
  const auto upto = static_cast<Eigen::Index>(x.basis().size_through(depth));
  for (Eigen::Index i = 0; i < upto; ++i)
    if (col(i) != Complex{}) s.set(x.basis().word(static_cast<std::size_t>(i)), col(i));
  return s;
}

TruncOp adjoint(const TruncOp& x) {
  TruncOp out = std::visit(
      [&x](const auto& m) {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, SparseMatrixXc>)
          return TruncOp::from_matrix(x.n(), x.level(), SparseMatrixXc(m.adjoint()));
        else
          return TruncOp::from_matrix(x.n(), x.level(), MatrixXc(m.adjoint()));
      },
      x.storage());
  int frontier = x.frontier();
  if (x.exact_compression() && x.level_drop() == 0) {
    // X never lowers a level, so X* never raises one and its exact
    // compression acts exactly everywhere.
    frontier = x.level();
  } else if (x.level_drop()) {
    frontier = std::min(x.frontier(), x.level() - *x.level_drop());
  }
  out.with_structure(frontier, x.level_drop(), x.level_raise(), x.exact_compression());
  return out;
}

TruncOp compose(const TruncOp& x, const TruncOp& y) {
  if (!(x.basis() == y.basis()))
    throw DimensionMismatch("compose: operators act on different truncated spaces");
  TruncOp out = visit_pair(x.storage(), y.storage(), [&x](const auto& a, const auto& b) {
    using A = std::decay_t<decltype(a)>;
    using B = std::decay_t<decltype(b)>;
    if constexpr (std::is_same_v<A, SparseMatrixXc> && std::is_same_v<B, SparseMatrixXc>) {
      SparseMatrixXc p = (a * b).pruned();
      return TruncOp::from_matrix(x.n(), x.level(), std::move(p));
    } else {
      return TruncOp::from_matrix(x.n(), x.level(), MatrixXc(a * b));
    }
  });
  const int frontier = y.level_raise() ? std::min(y.frontier(), x.frontier() - *y.level_raise())
                                       : std::min(x.frontier(), y.frontier());
  const bool same_direction = (x.level_drop() == 0 && y.level_drop() == 0) ||
                              (x.level_raise() == 0 && y.level_raise() == 0);
  out.with_structure(frontier, add_opt(x.level_raise(), y.level_raise()),
                     add_opt(x.level_drop(), y.level_drop()),
                     x.exact_compression() && y.exact_compression() && same_direction);
  return out;
}

TruncOp power(const TruncOp& x, int k) {
  if (k < 0) throw std::invalid_argument("power: negative exponent");
  TruncOp out = TruncOp::identity(x.n(), x.level());
  for (int i = 0; i < k; ++i) out = compose(x, out);
  return out;
}

MatrixXc level_block(const TruncOp& x, int row_lo, int row_hi, int col_lo, int col_hi) {
  const auto& b = x.basis();
  auto range = [&b](int lo, int hi) -> std::pair<Eigen::Index, Eigen::Index> {
    lo = std::max(lo, 0);
    hi = std::min(hi, b.level());
    if (hi < lo) return {0, 0};
    return {static_cast<Eigen::Index>(b.level_offset(lo)),
            static_cast<Eigen::Index>(b.size_through(hi))};
  };
  const auto [r0, r1] = range(row_lo, row_hi);
  const auto [c0, c1] = range(col_lo, col_hi);
  if (static_cast<std::size_t>(r1 - r0) > kDenseCap || static_cast<std::size_t>(c1 - c0) > kDenseCap)
    throw ResourceError("level_block: block too large to densify");
  MatrixXc out = MatrixXc::Zero(r1 - r0, c1 - c0);
  std::visit(
      [&](const auto& m) {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, SparseMatrixXc>) {
          for (Eigen::Index j = c0; j < c1; ++j)
            for (SparseMatrixXc::InnerIterator it(m, j); it; ++it)
              if (it.row() >= r0 && it.row() < r1) out(it.row() - r0, j - c0) = it.value();
        } else {
          out = m.block(r0, c0, r1 - r0, c1 - c0);
        }
      },
      x.storage());
  return out;
}

} // namespace fockalg
