#pragma once

#include <optional>
#include <variant>

#include "fockalg/fock.hpp"
#include "fockalg/free_series.hpp"
#include "fockalg/types.hpp"
#include "fockalg/words.hpp"

namespace fockalg {

/// Largest basis size for which operators are densified (SVD, rank, norms).
inline constexpr std::size_t kDenseCap = 4096;

enum class Side { Left, Right };

/// Compression P_N X P_N of an operator on the Fock space, as a matrix over
/// the canonical basis of levels <= N.
///
/// Besides the matrix, a TruncOp records what is known about exactness:
///  - frontier: largest m such that X xi_v is reproduced exactly for every
///    |v| <= m (-1 when no level is exact);
///  - level_raise / level_drop: bounds on how many levels X can move a basis
///    vector up or down, when known;
///  - exact_compression: every stored entry equals the corresponding entry of
///    the untruncated operator.
/// Identities between truncated operators only hold on the exact region.
class TruncOp {
public:
  using Storage = std::variant<MatrixXc, SparseMatrixXc>;

  /// Raw matrix with no structural knowledge: frontier defaults to N.
  static TruncOp from_matrix(int n, int level, MatrixXc m, std::optional<int> frontier = {});
  static TruncOp from_matrix(int n, int level, SparseMatrixXc m,
                             std::optional<int> frontier = {});
  static TruncOp identity(int n, int level);
  static TruncOp zero(int n, int level);

  int n() const noexcept { return basis_.n(); }
  int level() const noexcept { return basis_.level(); }
  const BasisIndexer& basis() const noexcept { return basis_; }
  Eigen::Index dim() const noexcept { return static_cast<Eigen::Index>(basis_.size()); }

  int frontier() const noexcept { return frontier_; }
  std::optional<int> level_raise() const noexcept { return raise_; }
  std::optional<int> level_drop() const noexcept { return drop_; }
  bool exact_compression() const noexcept { return exact_; }
  /// Number of basis vectors in the exact region (levels <= frontier).
  Eigen::Index exact_dim() const;

  bool is_sparse() const noexcept { return std::holds_alternative<SparseMatrixXc>(storage_); }
  const Storage& storage() const noexcept { return storage_; }
  /// Dense copy; throws ResourceError above kDenseCap.
  MatrixXc dense() const;
  SparseMatrixXc sparse() const;

  VectorXc apply(const VectorXc& x) const;
  FockVector apply(const FockVector& x) const;
  VectorXc column(Eigen::Index j) const;

  /// Overrides the structural metadata. Used by constructors of structured
  /// operators; the frontier is clipped to [-1, N].
  TruncOp& with_structure(int frontier, std::optional<int> raise, std::optional<int> drop,
                          bool exact_compression);

  TruncOp& operator+=(const TruncOp& other);
  TruncOp& operator-=(const TruncOp& other);
  TruncOp& operator*=(Complex scale);

private:
  TruncOp(BasisIndexer basis, Storage storage);
  void check_compatible(const TruncOp& other) const;

  BasisIndexer basis_;
  Storage storage_;
  int frontier_ = -1;
  std::optional<int> raise_;
  std::optional<int> drop_;
  bool exact_ = false;
};

TruncOp operator+(TruncOp a, const TruncOp& b);
TruncOp operator-(TruncOp a, const TruncOp& b);
TruncOp operator*(Complex scale, TruncOp x);

/// L_w : xi_v -> xi_{wv} (Left) or R_w : xi_v -> xi_{vw} (Right); outputs
/// longer than N are dropped. Throws std::invalid_argument when |w| > N.
TruncOp creation_op(Side side, const Word& w, int n, int level);

/// xi_v -> sum_w a_w xi_{wv}, overflow dropped; frontier N - deg(s).
/// Throws std::invalid_argument when deg(s) > N.
TruncOp series_to_op(const FreeSeries& s, int n, int level);

/// a_w = (X xi_1, xi_w) for |w| <= depth. Throws std::out_of_range if depth > N.
FreeSeries fourier_of(const TruncOp& x, int depth);

TruncOp adjoint(const TruncOp& x);

/// Matrix product XY with frontier min(f_Y, f_X - raise(Y)) when Y's level
/// raise is known, otherwise min(f_X, f_Y).
TruncOp compose(const TruncOp& x, const TruncOp& y);
inline TruncOp operator*(const TruncOp& x, const TruncOp& y) { return compose(x, y); }

/// X^k by repeated composition.
TruncOp power(const TruncOp& x, int k);

/// Dense block of X with rows in levels [row_lo, row_hi] and columns in
/// levels [col_lo, col_hi] (inclusive; an empty range when hi < lo).
MatrixXc level_block(const TruncOp& x, int row_lo, int row_hi, int col_lo, int col_hi);

} // namespace fockalg
