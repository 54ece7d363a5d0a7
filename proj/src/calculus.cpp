#include "fockalg/calculus.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fockalg/diagnostics.hpp"
#include "fockalg/errors.hpp"

namespace fockalg {

CalculusContext::CalculusContext(TruncOp x, double contraction_tol) : x_(std::move(x)) {
  const double norm = op_norm(x_);
  if (norm > 1.0 + contraction_tol)
    throw HypothesisViolation("functional calculus needs a contraction; compression norm is " +
                              std::to_string(norm));
  powers_.push_back(TruncOp::identity(x_.n(), x_.level()));
}

const TruncOp& CalculusContext::power(int k) {
  if (k < 0) throw std::invalid_argument("CalculusContext::power: negative exponent");
  while (static_cast<int>(powers_.size()) <= k) powers_.push_back(compose(x_, powers_.back()));
  return powers_[static_cast<std::size_t>(k)];
}

TruncOp CalculusContext::apply(const ScalarSeries& h) {
  const auto order = static_cast<int>(h.order());
  if (order < 0) return TruncOp::zero(x_.n(), x_.level());
  if (power(order).frontier() < 0)
    throw HypothesisViolation("series order " + std::to_string(order) +
                              " leaves no exact region at truncation level " +
                              std::to_string(x_.level()));
  TruncOp out = TruncOp::zero(x_.n(), x_.level());
  for (int k = 0; k <= order; ++k)
    if (h.coeffs(k) != Complex{}) out += h.coeffs(k) * power(k);
  return out;
}

TruncOp apply_series(const ScalarSeries& h, const TruncOp& x) {
  CalculusContext ctx(x);
  return ctx.apply(h);
}

FreeSeries apply_series(const ScalarSeries& h, const FreeSeries& x, int max_degree) {
  FreeSeries out(x.n());
  // Horner: all terms are powers of the same x, so the order of products is immaterial
  for (Eigen::Index k = h.order(); k >= 0; --k) {
    out = multiply(out, x, max_degree);
    if (h.coeffs(k) != Complex{}) out.add(Word{}, h.coeffs(k));
  }
  return out.prune();
}

namespace {

double max_abs(const SparseMatrixXc& m) {
  double best = 0.0;
  for (Eigen::Index j = 0; j < m.outerSize(); ++j)
    for (SparseMatrixXc::InnerIterator it(m, j); it; ++it) best = std::max(best, std::abs(it.value()));
  return best;
}

/// max over exact columns of | ||X xi_v|| - 1 |.
double isometry_defect(const TruncOp& x) {
  const SparseMatrixXc m = x.sparse();
  double worst = 0.0;
  for (Eigen::Index j = 0; j < x.exact_dim(); ++j)
    worst = std::max(worst, std::abs(m.col(j).norm() - 1.0));
  return worst;
}

} // namespace

TruncOp h2_times_isometry(const ScalarSeries& h, const TruncOp& x, const TruncOp& l, double tol) {
  const auto order = static_cast<int>(h.order());
  if (isometry_defect(x) > tol || isometry_defect(l) > tol)
    throw HypothesisViolation("h2_times_isometry: X and L must be isometries on the exact region");
  std::vector<TruncOp> terms;
  terms.push_back(l);
  for (int k = 1; k <= order; ++k) terms.push_back(compose(x, terms.back()));
  const Eigen::Index exact = terms.back().exact_dim();
  if (exact == 0)
    throw HypothesisViolation("h2_times_isometry: series order leaves no exact region");
  for (int j = 0; j <= order; ++j) {
    const SparseMatrixXc pj = terms[static_cast<std::size_t>(j)].sparse().leftCols(exact);
    for (int k = j + 1; k <= order; ++k) {
      const SparseMatrixXc pk = terms[static_cast<std::size_t>(k)].sparse().leftCols(exact);
      const SparseMatrixXc gram = pj.adjoint() * pk;
      if (max_abs(gram) > tol)
        throw HypothesisViolation("h2_times_isometry: ranges of X^" + std::to_string(j) +
                                  " L and X^" + std::to_string(k) + " L are not orthogonal");
    }
  }
  TruncOp out = TruncOp::zero(x.n(), x.level());
  for (int k = 0; k <= order; ++k)
    if (h.coeffs(k) != Complex{}) out += h.coeffs(k) * terms[static_cast<std::size_t>(k)];
  return out;
}

FreeSeries h2_times_isometry(const ScalarSeries& h, const FreeSeries& x, const FreeSeries& l,
                             std::optional<int> max_degree) {
  FreeSeries out(x.n());
  FreeSeries xk = FreeSeries::scalar(x.n(), 1.0);
  for (Eigen::Index k = 0; k <= h.order(); ++k) {
    if (h.coeffs(k) != Complex{}) out += h.coeffs(k) * multiply(xk, l, max_degree);
    xk = multiply(xk, x, max_degree);
  }
  return out.prune();
}

namespace {

Report compare_fourier(const FreeSeries& got, const FreeSeries& want, int depth, double tol) {
  Report r;
  r.name = "verify_factorization";
  r.params["depth"] = depth;
  double worst = 0.0;
  Word worst_word;
  auto visit = [&](const Word& w) {
    if (w.length() > static_cast<std::size_t>(depth)) return;
    const double d = std::abs(got.coeff(w) - want.coeff(w));
    if (d > worst) {
      worst = d;
      worst_word = w;
    }
  };
  for (const auto& [w, c] : got.coefficients()) visit(w);
  for (const auto& [w, c] : want.coefficients()) visit(w);
  r.measurements["max_coefficient_error"] = worst;
  r.measurements["worst_word"] = to_string(worst_word);
  r.tolerances["max_coefficient_error"] = tol;
  r.anchors.push_back("g(X) A = L coefficientwise, since g f = 1 as power series");
  r.check("coefficients match", worst <= tol);
  return r;
}

} // namespace

Report verify_factorization(const ScalarSeries& g, const TruncOp& x, const TruncOp& a,
                            const TruncOp& target, int depth, double tol) {
  const TruncOp product = compose(apply_series(g, x), a);
  if (depth > product.level() || product.frontier() < 0 || !product.exact_compression())
    throw HypothesisViolation("verify_factorization: depth exceeds the exact region");
  Report r = compare_fourier(fourier_of(product, depth), fourier_of(target, depth), depth, tol);
  r.params["route"] = "matrix";
  r.params["level"] = x.level();
  r.params["series_order"] = g.order();
  return r;
}

Report verify_factorization(const ScalarSeries& g, const FreeSeries& x, const FreeSeries& a,
                            const FreeSeries& target, int depth, double tol) {
  const FreeSeries product = multiply(apply_series(g, x, depth), a, depth);
  Report r = compare_fourier(product, target, depth, tol);
  r.params["route"] = "symbol";
  r.params["series_order"] = g.order();
  return r;
}

double range_orthogonality(const TruncOp& x, const TruncOp& y) {
  if (!(x.basis() == y.basis()))
    throw DimensionMismatch("range_orthogonality: operators act on different spaces");
  const Eigen::Index exact = std::min(x.exact_dim(), y.exact_dim());
  if (exact == 0) return 0.0;
  const SparseMatrixXc xs = x.sparse().leftCols(exact);
  const SparseMatrixXc ys = y.sparse().leftCols(exact);
  return max_abs(SparseMatrixXc(xs.adjoint() * ys));
}

double boundary_modulus_defect(const ScalarSeries& f, const ScalarSeries& g, int grid) {
  double worst = 0.0;
  for (int j = 0; j < grid; ++j) {
    const Complex z = std::polar(1.0, 2.0 * std::numbers::pi * j / grid);
    worst = std::max(worst, std::abs(std::norm(evaluate(f, z)) + std::norm(evaluate(g, z)) - 1.0));
  }
  return worst;
}

RemarkPair remark_pair(const ScalarSeries& f, const ScalarSeries& g, int level) {
  constexpr int n = 2;
  if (boundary_modulus_defect(f, g) > 1e-6)
    throw HypothesisViolation("remark_pair: |f|^2 + |g|^2 != 1 on the circle");
  if (std::max(f.order(), g.order()) + 1 > level)
    throw HypothesisViolation("remark_pair: f and g do not fit the truncation level");
  const Complex alpha = f[0];
  const Complex beta = g[0];
  const double mass = std::norm(alpha) + std::norm(beta);
  if (mass <= kExactTol) throw HypothesisViolation("remark_pair: f(0) = g(0) = 0");
  // lambda alpha conj(beta) = conj(alpha) beta; any unimodular lambda works when alpha beta = 0
  const Complex lambda = (std::abs(alpha * beta) > kExactTol)
                             ? std::conj(alpha) * beta / (alpha * std::conj(beta))
                             : Complex(1.0);

  FreeSeries l_symbol(n);
  for (Eigen::Index k = 0; k <= f.order(); ++k)
    if (f.coeffs(k) != Complex{}) l_symbol.add(Word::repeat(1, static_cast<std::size_t>(k + 1)), f.coeffs(k));
  for (Eigen::Index k = 0; k <= g.order(); ++k)
    if (g.coeffs(k) != Complex{})
      l_symbol.add(concat(Word{2}, Word::repeat(1, static_cast<std::size_t>(k))), g.coeffs(k));

  FreeSeries x_symbol(n);
  x_symbol.add(Word{1, 2}, beta / mass);
  x_symbol.add(Word{2, 2}, -lambda * alpha / mass);

  RemarkPair out{series_to_op(l_symbol, n, level), series_to_op(x_symbol, n, level),
                 l_symbol, x_symbol, alpha, beta, lambda, 0.0};
  out.x_norm = op_norm(out.x);
  return out;
}

namespace {

std::vector<Word> support_ending_in(const FreeSeries& s, int letter, double tol) {
  const double mass = s.squared_norm();
  if (std::abs(mass - 1.0) > 1e-9)
    throw HypothesisViolation("irreducibility test needs sum |a_w|^2 = 1");
  if (std::abs(s.coeff(Word{})) > tol)
    throw HypothesisViolation("irreducibility test needs a vanishing constant term");
  std::vector<Word> out;
  for (const auto& [w, c] : s.coefficients())
    if (!w.empty() && w[w.length() - 1] == letter && std::abs(c) > tol) out.push_back(w);
  return out;
}

} // namespace

bool irreducibility_hypothesis(const FreeSeries& s, int letter, double tol) {
  const auto support = support_ending_in(s, letter, tol);
  return support.size() == 1 && support.front() == Word{letter};
}

std::optional<Word> extended_irreducibility_hypothesis(const FreeSeries& s, int letter, double tol) {
  const auto support = support_ending_in(s, letter, tol);
  if (support.size() != 1) return std::nullopt;
  return strip_suffix(support.front(), Word{letter});
}

} // namespace fockalg
