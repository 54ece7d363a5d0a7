#pragma once

#include <optional>
#include <vector>

#include "fockalg/free_series.hpp"
#include "fockalg/hardy.hpp"
#include "fockalg/report.hpp"
#include "fockalg/trunc_op.hpp"

namespace fockalg {

/// Holds a contraction X of the left algebra together with its cached
/// powers X^0..X^K, for evaluating h(X) = sum_k h_k X^k.
class CalculusContext {
public:
  /// Throws HypothesisViolation when ||X|| > 1 + contraction_tol.
  explicit CalculusContext(TruncOp x, double contraction_tol = 1e-9);

  const TruncOp& op() const noexcept { return x_; }
  /// X^k, extending the cache as needed.
  const TruncOp& power(int k);
  /// sum_{k<=K} h_k X^k. Throws HypothesisViolation when X^K has no exact
  /// region left at the truncation level.
  TruncOp apply(const ScalarSeries& h);

private:
  TruncOp x_;
  std::vector<TruncOp> powers_;
};

TruncOp apply_series(const ScalarSeries& h, const TruncOp& x);

/// Symbol of h(X) for X given by its symbol, truncated at max_degree.
FreeSeries apply_series(const ScalarSeries& h, const FreeSeries& x, int max_degree);

/// sum_k h_k X^k L for isometries X, L whose products X^k L have pairwise
/// orthogonal ranges. The isometry and orthogonality hypotheses are checked
/// on the exact region; violations above tol throw HypothesisViolation.
TruncOp h2_times_isometry(const ScalarSeries& h, const TruncOp& x, const TruncOp& l,
                          double tol = 1e-10);

/// Symbol route: sum_k h_k X^k L with X, L given by their symbols.
FreeSeries h2_times_isometry(const ScalarSeries& h, const FreeSeries& x, const FreeSeries& l,
                             std::optional<int> max_degree = std::nullopt);

/// Fourier-coefficient comparison of g(X) A against target for words of
/// length <= depth. Passes iff the largest deviation is <= tol.
/// Matrix route: requires depth <= frontier of g(X) A.
Report verify_factorization(const ScalarSeries& g, const TruncOp& x, const TruncOp& a,
                            const TruncOp& target, int depth, double tol = 1e-9);
/// Symbol route for truncation levels too large for matrices.
Report verify_factorization(const ScalarSeries& g, const FreeSeries& x, const FreeSeries& a,
                            const FreeSeries& target, int depth, double tol = 1e-9);

/// max over basis pairs a, b in the common exact region of |(X xi_a, Y xi_b)|.
double range_orthogonality(const TruncOp& x, const TruncOp& y);

/// max over a boundary grid of | |f|^2 + |g|^2 - 1 |.
double boundary_modulus_defect(const ScalarSeries& f, const ScalarSeries& g, int grid = 1024);

struct RemarkPair {
  TruncOp l;   // L1 f(L1) + L2 g(L1)
  TruncOp x;   // (beta L1 L2 - lambda alpha L2^2) / (|alpha|^2 + |beta|^2)
  FreeSeries l_symbol;
  FreeSeries x_symbol;
  Complex alpha;
  Complex beta;
  Complex lambda;
  double x_norm = 0.0; // compression norm of X; 1 only when |alpha|^2 + |beta|^2 = 1
};

/// Builds the orthogonal-range pair from f, g with |f|^2 + |g|^2 = 1 on the
/// circle (n = 2). Throws HypothesisViolation when the modulus constraint
/// fails by more than 1e-6 or alpha = beta = 0.
RemarkPair remark_pair(const ScalarSeries& f, const ScalarSeries& g, int level);

/// Only coefficient of s on words ending in z_i sits at z_i itself, and it is
/// nonzero. Requires sum |a_w|^2 = 1 and a_1 = 0 (HypothesisViolation).
bool irreducibility_hypothesis(const FreeSeries& s, int letter, double tol = kExactTol);
/// Variant allowing the single coefficient to sit at w z_i; returns w.
std::optional<Word> extended_irreducibility_hypothesis(const FreeSeries& s, int letter,
                                                       double tol = kExactTol);

} // namespace fockalg
