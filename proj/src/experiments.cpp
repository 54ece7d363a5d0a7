#include "fockalg/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "fockalg/calculus.hpp"
#include "fockalg/diagnostics.hpp"
#include "fockalg/errors.hpp"
#include "fockalg/hardy.hpp"
#include "fockalg/trunc_op.hpp"

namespace fockalg {

namespace {

constexpr int kPlane = 2; // alphabet size of the constructions on two generators

/// Least-squares slope of ys against xs.
double fit_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  const auto m = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double denom = m * sxx - sx * sx;
  return denom == 0.0 ? 0.0 : (m * sxy - sx * sy) / denom;
}

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

/// lambda_k = c/(k+1) with c = (sum_{k>=1} 1/k^2)^{-1/2} = sqrt(6)/pi.
double square_summable_scale() { return std::sqrt(6.0) / std::numbers::pi; }

ScalarSeries scaled_harmonic(Eigen::Index order) {
  ScalarSeries s = harmonic_series(order);
  s.coeffs *= square_summable_scale();
  return s;
}

struct GrowthEvidence {
  std::vector<double> sups;
  double ratio = 0.0;
  double slope_vs_log_m = 0.0;
};

/// Sup norms over the circle grid of the partial sums of s at each m.
GrowthEvidence sup_growth(const ScalarSeries& s, const std::vector<int>& terms, int grid) {
  GrowthEvidence g;
  std::vector<double> logs;
  for (int m : terms) {
    g.sups.push_back(partial_sum_sup(s, m, grid));
    logs.push_back(std::log(static_cast<double>(m)));
  }
  g.ratio = g.sups.back() / g.sups.front();
  g.slope_vs_log_m = fit_slope(logs, g.sups);
  return g;
}

std::vector<int> checked_terms(std::vector<int> terms) {
  std::sort(terms.begin(), terms.end());
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
  if (terms.size() < 2 || terms.front() < 1)
    throw std::invalid_argument("growth scan needs at least two positive term counts");
  return terms;
}

/// Diagonal projection onto span{xi_w : w in words}.
TruncOp word_projection(int n, int level, const std::vector<Word>& words) {
  const BasisIndexer basis(n, level);
  std::vector<Eigen::Triplet<Complex>> entries;
  for (const Word& w : words) {
    const auto i = static_cast<Eigen::Index>(basis.index(w));
    entries.emplace_back(i, i, Complex(1.0));
  }
  SparseMatrixXc m(static_cast<Eigen::Index>(basis.size()), static_cast<Eigen::Index>(basis.size()));
  m.setFromTriplets(entries.begin(), entries.end());
  TruncOp q = TruncOp::from_matrix(n, level, std::move(m));
  q.with_structure(level, 0, 0, true);
  return q;
}

/// Largest |entry| of x among rows whose level is <= max_row_level.
double max_entry_in_rows(const TruncOp& x, int max_row_level) {
  if (max_row_level < 0) return 0.0;
  const auto rows = static_cast<Eigen::Index>(x.basis().size_through(max_row_level));
  const SparseMatrixXc m = x.sparse();
  double worst = 0.0;
  for (Eigen::Index j = 0; j < m.outerSize(); ++j)
    for (SparseMatrixXc::InnerIterator it(m, j); it; ++it)
      if (it.row() < rows) worst = std::max(worst, std::abs(it.value()));
  return worst;
}

Word z1_power(int k) { return Word::repeat(1, static_cast<std::size_t>(k)); }

} // namespace

Report exp_adjoint_decay(Complex lambda, int level, int kmax) {
  const double abs_lambda = std::abs(lambda);
  if (abs_lambda >= 1.0) throw HypothesisViolation("adjoint decay needs |lambda| < 1");
  if (level < 3) throw std::invalid_argument("adjoint decay: sample words need level >= 3");
  if (kmax < 1) throw std::invalid_argument("adjoint decay: kmax must be >= 1");

  // |lambda| + ||A|| <= 1 keeps L a contraction; sqrt(1 - |lambda|^2) L1 would not
  const TruncOp shift = (1.0 - abs_lambda) * creation_op(Side::Left, Word{1}, kPlane, level);
  const TruncOp l = lambda * TruncOp::identity(kPlane, level) + shift;

  Report r;
  r.name = "adjoint-decay";
  r.params = {{"n", kPlane}, {"level", level}, {"kmax", kmax}, {"lambda", complex_json(lambda)}};

  const std::vector<Word> samples{Word{}, Word{1}, Word{1, 2}, Word{1, 1, 1}};
  bool under_bound = true;
  double worst_ratio = 0.0;
  double worst_final = 0.0;
  Json per_word = Json::object();
  for (const Word& w : samples) {
    const FockVector xi = FockVector::basis(kPlane, level, w);
    const std::vector<double> orbit = adjoint_power_orbit(l, xi, kmax);
    // ||(A*)^j xi_w|| vanishes for j > |w|
    const std::vector<double> weights = adjoint_power_orbit(shift, xi, static_cast<int>(w.length()));
    std::vector<double> bound;
    for (int k = 0; k <= kmax; ++k) {
      bound.push_back(adjoint_power_bound(k, abs_lambda, weights));
      const double b = bound.back();
      if (orbit[static_cast<std::size_t>(k)] > b * (1.0 + 1e-12) + 1e-15) under_bound = false;
      if (b > 0.0) worst_ratio = std::max(worst_ratio, orbit[static_cast<std::size_t>(k)] / b);
    }
    worst_final = std::max(worst_final, orbit.back());
    per_word[w.empty() ? "1" : to_string(w)] = {{"orbit", orbit}, {"bound", bound}};
  }

  const std::vector<double> unit_orbit =
      adjoint_power_orbit(l, FockVector::basis(kPlane, level, Word{}), kmax);
  double unit_error = 0.0;
  for (int k = 0; k <= kmax; ++k)
    unit_error = std::max(unit_error, std::abs(unit_orbit[static_cast<std::size_t>(k)] -
                                               (k == 0 ? 1.0 : std::pow(abs_lambda, k))));

  r.measurements["compression_norm"] = op_norm(l);
  r.measurements["orbits"] = per_word;
  r.measurements["max_orbit_to_bound_ratio"] = worst_ratio;
  r.measurements["max_final_orbit"] = worst_final;
  r.measurements["unit_vector_orbit_error"] = unit_error;
  r.tolerances["final_orbit"] = 1e-3;
  r.tolerances["unit_vector_orbit_error"] = 1e-12;
  r.anchors.push_back("(L*)^k = sum_j C(k, j) conj(lambda)^{k-j} (A*)^j, so the orbit is bounded by "
                      "sum_j p_j(k) |lambda|^{k-j} ||(A*)^j xi||");
  r.anchors.push_back("L* xi_1 = conj(lambda) xi_1");
  r.check("orbit below binomial bound", under_bound);
  r.check("final orbit below 1e-3", worst_final < 1e-3);
  r.check("unit vector orbit is |lambda|^k", unit_error <= 1e-12);
  return r;
}

Report exp_codim_counts(const FreeSeries& l_symbol, int level) {
  const int n = l_symbol.n();
  if (n < 2) throw std::invalid_argument("codim counts: needs n >= 2");
  const TruncOp l = series_to_op(l_symbol, n, level);
  if (l.frontier() < 1) throw std::invalid_argument("codim counts: no exact level >= 1");

  Report r;
  r.name = "codim-counts";
  r.params = {{"n", n}, {"level", level}, {"symbol", to_json(l_symbol)}};

  // columns of levels <= frontier should be orthonormal
  const Eigen::Index exact = l.exact_dim();
  const SparseMatrixXc cols = l.sparse().leftCols(exact);
  const MatrixXc gram = MatrixXc(cols.adjoint() * cols) - MatrixXc::Identity(exact, exact);
  const double isometry_defect = gram.cwiseAbs().maxCoeff();

  std::vector<int> level_sizes{1}, ranks{0}, complements{1}, totals{1};
  std::vector<double> lower_bounds{1.0};
  bool above_bound = true;
  for (int k = 1; k <= l.frontier(); ++k) {
    const auto size = static_cast<int>(l.basis().level_size(k));
    const int complement = range_complement_level_dims(l, k);
    const double bound = size - (size - 1.0) / (n - 1.0);
    level_sizes.push_back(size);
    ranks.push_back(size - complement);
    complements.push_back(complement);
    lower_bounds.push_back(bound);
    totals.push_back(totals.back() + complement);
    if (complement < bound - 1e-9) above_bound = false;
  }
  bool growing = true;
  for (std::size_t i = 1; i < totals.size(); ++i) growing = growing && totals[i] > totals[i - 1];

  // defect ranks of the compressions at increasing truncation levels
  std::vector<int> defect_levels, co_isometric, isometric;
  for (int m = std::max(1, l_symbol.degree()); m <= level; ++m) {
    if (BasisIndexer(n, m).size() > 1024) break;
    const DefectRanks d = defect_ranks(series_to_op(l_symbol, n, m));
    defect_levels.push_back(m);
    co_isometric.push_back(d.co_isometric);
    isometric.push_back(d.isometric);
  }
  bool defect_growing = co_isometric.size() >= 2;
  for (std::size_t i = 1; i < co_isometric.size(); ++i)
    defect_growing = defect_growing && co_isometric[i] > co_isometric[i - 1];

  r.measurements["frontier"] = l.frontier();
  r.measurements["isometry_defect"] = isometry_defect;
  r.measurements["level_size"] = level_sizes;
  r.measurements["range_rank"] = ranks;
  r.measurements["complement_dim"] = complements;
  r.measurements["complement_lower_bound"] = lower_bounds;
  r.measurements["cumulative_complement"] = totals;
  r.measurements["defect_levels"] = defect_levels;
  r.measurements["co_isometric_defect_rank"] = co_isometric;
  r.measurements["isometric_defect_rank"] = isometric;
  r.tolerances["isometry_defect"] = 1e-10;
  r.anchors.push_back("dim (P_k H minus P_k L P_{<k} H) >= n^k - (n^k - 1)/(n - 1) for an isometry L "
                      "with (L xi_1, xi_1) = 0");
  r.check("isometry on the exact region", isometry_defect <= 1e-10);
  r.check("complement meets the level bound", above_bound);
  r.check("total complement grows with the level", growing);
  r.check("co-isometric defect rank grows with the truncation", defect_growing);
  return r;
}

Report exp_factor_generator(int terms, int level) {
  if (terms < 1) throw std::invalid_argument("factor generator: terms must be >= 1");
  if (level < 2 || terms > level - 1)
    throw std::invalid_argument("factor generator: need N >= 2 and K <= N - 1");
  const int depth = terms;
  const ScalarSeries f = harmonic_series(terms - 1);
  const ScalarSeries g = reciprocal(f, terms - 1);

  const FreeSeries x = FreeSeries::monomial(kPlane, Word{1});
  FreeSeries a(kPlane);
  for (int k = 0; k < terms; ++k) a.add(concat(z1_power(k), Word{2}), f.coeffs(k));
  const FreeSeries target = FreeSeries::monomial(kPlane, Word{2});

  Report r;
  r.name = "factor-generator";
  r.params = {{"n", kPlane}, {"level", level}, {"terms", terms}, {"depth", depth}};

  const Report symbol_check = verify_factorization(g, x, a, target, depth);
  r.measurements["max_coefficient_error"] = symbol_check.measurements["max_coefficient_error"];
  r.measurements["worst_word"] = symbol_check.measurements["worst_word"];
  r.tolerances["max_coefficient_error"] = 1e-9;
  r.check("coefficients of g(L1) A match L2", symbol_check.pass);

  // the matrix route needs the product's first column exact and a sparse-sized basis
  const bool matrix_route = 2 * terms - 1 <= level && checked_power(kPlane, level + 1) <= (1u << 15);
  r.measurements["matrix_route"] = matrix_route;
  if (matrix_route) {
    const TruncOp xop = creation_op(Side::Left, Word{1}, kPlane, level);
    const Report matrix_check = verify_factorization(g, xop, series_to_op(a, kPlane, level),
                                                     series_to_op(target, kPlane, level), depth);
    r.measurements["matrix_route_error"] = matrix_check.measurements["max_coefficient_error"];
    r.check("matrix route agrees", matrix_check.pass);
  }

  const FreeSeries product = multiply(apply_series(g, x, depth), a, depth);
  r.measurements["coefficient_z2"] = complex_json(product.coeff(Word{2}));
  r.measurements["coefficient_z1z2"] = complex_json(product.coeff(Word{1, 2}));
  r.measurements["g_coefficients_head"] = to_json(ScalarSeries(g.coeffs.head(std::min<Eigen::Index>(4, g.coeffs.size()))));

  const bool trivial = terms == 1;
  r.measurements["trivial"] = trivial;
  if (trivial) {
    r.notes.push_back("K = 1 gives g = 1 and A = L2: a trivial factorization");
  } else {
    int nonzero_a = 0;
    for (const auto& [w, c] : a.coefficients()) nonzero_a += std::abs(c) > kExactTol;
    r.measurements["g_degree"] = g.order();
    r.measurements["a_support"] = nonzero_a;
    r.check("g is not constant", g.order() >= 1 && std::abs(g.coeffs.tail(g.order()).norm()) > kExactTol);
    r.check("A is not a multiple of a word operator", nonzero_a >= 2);
  }
  r.anchors.push_back("sum_{a+b=j} g_a / (b+1) = delta_{j0}, so g(L1) A = L2");
  return r;
}

Report exp_thin_isometry(int kmax, int level) {
  if (kmax < 0) throw std::invalid_argument("thin isometry: kmax must be >= 0");
  const int n = kPlane;
  const int big_n = level < 0 ? 3 * kmax + 1 : level;
  if (big_n < 3 * kmax + 1)
    throw std::invalid_argument("thin isometry: truncation level must be >= 3 kmax + 1");

  Report r;
  r.name = "thin-isometry";
  r.params = {{"n", n}, {"kmax", kmax}, {"level", big_n}};

  FockVector x(n, big_n);
  std::vector<double> piece_norms;
  for (int k = 0; k <= kmax; ++k) {
    const std::vector<Word> words = enumerate_words(n, k);
    const double piece_norm = std::sqrt(static_cast<double>(words.size()));
    piece_norms.push_back(piece_norm);
    const double coeff = std::pow(2.0, -(k + 1) / 2.0) / piece_norm;
    const Word tail = concat(Word{2}, z1_power(k));
    for (const Word& w : words) x.add(concat(concat(w, w), tail), coeff);
  }
  const double norm2 = x.squared_norm();
  const double tail_mass = std::pow(2.0, -(kmax + 1));
  r.measurements["piece_norms"] = piece_norms;
  r.measurements["squared_norm"] = norm2;
  r.measurements["unit_norm_error"] = std::abs(norm2 + tail_mass - 1.0);
  r.notes.push_back("the truncated sum omits the pieces k > kmax, of total squared norm 2^{-(kmax+1)}");
  r.check("norm plus omitted tail is 1", std::abs(norm2 + tail_mass - 1.0) <= 1e-12);

  const BasisIndexer basis(n, big_n);
  const VectorXc xv = x.to_dense(basis);
  const TruncOp r1_adj = adjoint(creation_op(Side::Right, Word{1}, n, big_n));
  const TruncOp r2_adj = adjoint(creation_op(Side::Right, Word{2}, n, big_n));

  double recovery_error = 0.0;
  std::vector<VectorXc> recovering, short_suffix;
  VectorXc after_r1 = xv; // (R1^k)* x
  for (int k = 0; k <= kmax; ++k) {
    if (k > 0) after_r1 = r1_adj.apply(after_r1);
    const VectorXc after_r2 = r2_adj.apply(after_r1);
    const double scale = std::pow(2.0, (k + 1) / 2.0) * piece_norms[static_cast<std::size_t>(k)];
    for (const Word& u : enumerate_words(n, k)) {
      const TruncOp ru_adj = adjoint(creation_op(Side::Right, u, n, big_n));
      VectorXc got = scale * ru_adj.apply(after_r2);
      got(static_cast<Eigen::Index>(basis.index(u))) -= 1.0;
      recovery_error = std::max(recovery_error, got.norm());
      const Word suffix = concat(concat(u, Word{2}), z1_power(k));
      recovering.push_back(adjoint(creation_op(Side::Right, suffix, n, big_n)).apply(xv));
    }
  }
  for (int k = 0; k <= kmax; ++k)
    for (const Word& u : enumerate_words(n, k))
      short_suffix.push_back(adjoint(creation_op(Side::Right, u, n, big_n)).apply(xv));
  r.measurements["recovery_error"] = recovery_error;
  r.tolerances["recovery_error"] = 1e-12;
  r.check("recovery identity", recovery_error <= 1e-12);

  auto rank_of = [&](const std::vector<VectorXc>& family) {
    MatrixXc m(xv.size(), static_cast<Eigen::Index>(family.size()));
    for (std::size_t i = 0; i < family.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = family[i];
    return numerical_rank(m);
  };
  // R_{u z2 z1^k}* x is a multiple of xi_u, so these span every level <= kmax
  const int rank = rank_of(recovering);
  const auto expected = static_cast<int>(basis.size_through(kmax));
  r.measurements["gram_rank"] = rank;
  r.measurements["words_through_kmax"] = expected;
  r.measurements["short_suffix_rank"] = rank_of(short_suffix);
  r.notes.push_back("gram_rank uses the vectors R_v* x with v = u z2 z1^k, |u| = k <= kmax; "
                    "short_suffix_rank uses v = u with |u| <= kmax, several of which vanish");
  r.check("vectors R_{u z2 z1^k}* x span levels <= kmax", rank == expected);
  r.anchors.push_back("2^{(k+1)/2} ||x_k|| R_u* R2* (R1^k)* x = xi_u for |u| = k");
  return r;
}

Report exp_ideal_counterexample(const FreeSeries& a, const std::vector<int>& sup_terms, int level,
                                int grid) {
  const int n = a.n();
  if (n < 2) throw std::invalid_argument("ideal counterexample: needs n >= 2");
  if (a.empty()) throw std::invalid_argument("ideal counterexample: a must be nonzero");
  const auto terms = checked_terms(sup_terms);
  const auto& [v, a_v] = *a.coefficients().begin(); // canonical order puts a shortest word first
  if (a.degree() + 1 > level)
    throw std::invalid_argument("ideal counterexample: support does not fit the truncation level");

  const double c = square_summable_scale();
  FreeSeries j_symbol(n);
  for (const auto& [w, aw] : a.coefficients())
    for (int k = 0; static_cast<int>(w.length()) + 1 + k <= level; ++k)
      j_symbol.add(concat(concat(w, Word{2}), z1_power(k)), aw * c / (k + 1.0));

  std::vector<Word> diagonal;
  for (int k = 0; k <= level; ++k) diagonal.push_back(z1_power(k));
  const TruncOp q = word_projection(n, level, diagonal);
  const TruncOp lhs = q * adjoint(creation_op(Side::Left, Word{2}, n, level)) *
                      adjoint(creation_op(Side::Left, v, n, level)) *
                      series_to_op(j_symbol, n, level) * q;
  FreeSeries lambda_symbol(n);
  for (int k = 0; k <= level; ++k) lambda_symbol.add(z1_power(k), c / (k + 1.0));
  const TruncOp rhs = a_v * series_to_op(lambda_symbol, n, level) * q;
  // the adjoints move levels down, so rows above N - |v| - 1 miss truncated terms
  const int exact_rows = level - static_cast<int>(v.length()) - 1;
  const double identity_error = max_entry_in_rows(lhs - rhs, exact_rows);
  const double identity_scale = max_entry_in_rows(rhs, exact_rows);

  const ScalarSeries lambdas = scaled_harmonic(terms.back());
  const GrowthEvidence growth = sup_growth(lambdas, terms, grid);
  const int m0 = std::min(terms.front(), level);
  FreeSeries head(n);
  for (int k = 0; k <= m0; ++k) head.add(z1_power(k), c / (k + 1.0));
  const double compression_norm = spectral_norm(series_to_op(head, n, level).sparse());

  Report r;
  r.name = "ideal-counterexample";
  r.params = {{"n", n}, {"level", level}, {"grid", grid}, {"sup_terms", terms}, {"a", to_json(a)}};
  r.measurements["minimal_word"] = to_string(v);
  r.measurements["scale_c"] = c;
  r.measurements["exact_row_level"] = exact_rows;
  r.measurements["compression_identity_error"] = identity_error;
  r.measurements["compression_identity_scale"] = identity_scale;
  r.measurements["sup_norms"] = growth.sups;
  r.measurements["sup_ratio"] = growth.ratio;
  r.measurements["sup_slope_vs_log_m"] = growth.slope_vs_log_m;
  r.measurements["compression_norm_head_terms"] = m0;
  r.measurements["compression_norm_head"] = compression_norm;
  r.tolerances["compression_identity_error"] = 1e-12;
  r.tolerances["sup_ratio"] = 2.0;
  r.anchors.push_back("Q L2* Lv* J Q = a_v sum_k lambda_k L1^k Q");
  r.anchors.push_back("sum_k lambda_k z^k is square summable but its partial sums are unbounded on the circle");
  r.notes.push_back("growth is evidence from finitely many partial sums, not a proof of unboundedness");
  r.check("compression identity", exact_rows >= 0 && identity_scale > 0.0 && identity_error <= 1e-12);
  r.check("sup norm ratio exceeds 2", growth.ratio > 2.0);
  r.check("compression norm is below the sup norm",
          compression_norm <= partial_sum_sup(lambdas, m0, grid) + 1e-9);
  return r;
}

Report exp_membership_witness(const std::vector<FreeSeries>& b, const std::vector<FreeSeries>& c,
                              int terms, double tol) {
  if (b.size() != c.size()) throw DimensionMismatch("membership witness: need as many B_i as C_i");
  if (terms < 0) throw std::invalid_argument("membership witness: terms must be >= 0");

  std::vector<double> deviations;
  double worst = 0.0;
  int worst_k = 0;
  for (int k = 0; k <= terms; ++k) {
    Complex sum{};
    for (std::size_t i = 0; i < b.size(); ++i) sum += b[i].coeff(z1_power(k)) * c[i].coeff(Word{});
    const double d = std::abs(sum - 1.0 / (k + 1.0));
    deviations.push_back(d);
    if (d > worst) {
      worst = d;
      worst_k = k;
    }
  }

  Report r;
  r.name = "membership-witness";
  r.params = {{"terms", terms}, {"candidates", b.size()}};
  r.measurements["deviations"] = deviations;
  r.measurements["max_deviation"] = worst;
  r.measurements["worst_k"] = worst_k;
  r.tolerances["max_deviation"] = tol;
  r.anchors.push_back("a representation A = sum_i B_i L2 C_i forces sum_i b^i_{z1^k} c^i_1 = 1/(k+1)");
  r.check("candidate certified not to represent A", worst > tol);
  return r;
}

Report exp_eigenvector(const VectorXc& lambda, int level, double tol) {
  const auto n = static_cast<int>(lambda.size());
  if (n < 1) throw std::invalid_argument("eigenvector: empty lambda");
  if (lambda.norm() >= 1.0) throw HypothesisViolation("eigenvector: needs ||lambda|| < 1");

  const BasisIndexer basis(n, level);
  VectorXc v(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Complex prod = 1.0;
    const Word w = basis.word(i);
    for (int letter : w.letters()) prod *= lambda(letter - 1);
    v(static_cast<Eigen::Index>(i)) = std::conj(prod);
  }
  const double raw_norm = v.norm();
  v /= raw_norm;

  const auto exact = static_cast<Eigen::Index>(basis.size_through(level - 1));
  std::vector<double> residuals;
  for (int i = 1; i <= n; ++i) {
    const VectorXc got = adjoint(creation_op(Side::Right, Word{i}, n, level)).apply(v);
    residuals.push_back((got - std::conj(lambda(i - 1)) * v).head(exact).cwiseAbs().maxCoeff());
  }
  const double worst = *std::max_element(residuals.begin(), residuals.end());

  Report r;
  r.name = "eigenvector";
  Json lam = Json::array();
  for (Eigen::Index i = 0; i < lambda.size(); ++i) lam.push_back(complex_json(lambda(i)));
  r.params = {{"n", n}, {"level", level}, {"lambda", lam}};
  r.measurements["lambda_norm"] = lambda.norm();
  r.measurements["truncated_norm_before_scaling"] = raw_norm;
  r.measurements["eigen_residuals"] = residuals;
  r.measurements["max_eigen_residual"] = worst;
  r.tolerances["max_eigen_residual"] = tol;
  r.anchors.push_back("R_i* v_lambda = conj(lambda_i) v_lambda");
  r.check("eigen relation on levels <= N - 1", worst <= tol);
  return r;
}

Report exp_cesaro(const FreeSeries& s, int kmax) {
  if (kmax < 2) throw std::invalid_argument("cesaro: kmax must be >= 2");
  std::vector<double> errors;
  for (int k = 1; k <= kmax; ++k) errors.push_back(std::sqrt((cesaro_sum(s, k) - s).squared_norm()));

  bool nonincreasing = true;
  for (std::size_t i = 1; i < errors.size(); ++i)
    nonincreasing = nonincreasing && errors[i] <= errors[i - 1] + 1e-15;
  std::vector<double> logk, loge;
  for (int k = kmax / 2; k <= kmax; ++k) {
    const double e = errors[static_cast<std::size_t>(k - 1)];
    if (e <= 0.0) continue;
    logk.push_back(std::log(static_cast<double>(k)));
    loge.push_back(std::log(e));
  }
  const double slope = logk.size() >= 2 ? fit_slope(logk, loge) : -std::numeric_limits<double>::infinity();

  Report r;
  r.name = "cesaro";
  r.params = {{"kmax", kmax}, {"degree", s.degree()}, {"support", s.coefficients().size()}};
  r.measurements["errors"] = errors;
  r.measurements["final_error"] = errors.back();
  r.measurements["loglog_slope"] = std::isfinite(slope) ? Json(slope) : Json("exact");
  r.anchors.push_back("sum_{|v|<k} (1 - |v|/k) a_v L_v xi_1 -> A xi_1");
  r.check("error is nonincreasing", nonincreasing);
  r.check("error decays", errors.back() < errors.front() && slope < 0.0);
  return r;
}

Report exp_flip_examples(int level, const std::vector<int>& sup_terms, int grid) {
  const int n = kPlane;
  if (level < 3) throw std::invalid_argument("flip examples: level must be >= 3");
  const auto terms = checked_terms(sup_terms);
  const BasisIndexer basis(n, level);
  const VectorXc unit = FockVector::basis(n, level, Word{}).to_dense(basis);

  Report r;
  r.name = "flip-examples";
  r.params = {{"n", n}, {"level", level}, {"grid", grid}, {"sup_terms", terms}};

  Json words = Json::array();
  double flip_error = 0.0;
  for (const Word& w : {Word{}, Word{1}, Word{2, 1}, Word{1, 2, 2}}) {
    const TruncOp right = creation_op(Side::Right, w, n, level);
    const TruncOp left = creation_op(Side::Left, w, n, level);
    const double err = (right.apply(unit) - left.apply(unit)).norm();
    flip_error = std::max(flip_error, err);
    words.push_back({{"word", to_string(w)},
                     {"flip_error", err},
                     {"same_operator", max_entry_in_rows(right - left, level) == 0.0}});
  }
  r.measurements["word_flips"] = words;
  r.check("R_w xi_1 = L_w xi_1", flip_error == 0.0);

  // R = sum_k lambda_k R1^k R2 and its only candidate flip J ~ L2 sum_k lambda_k L1^k
  const double c = square_summable_scale();
  TruncOp right_sum = TruncOp::zero(n, level);
  FreeSeries j_symbol(n);
  for (int k = 0; k + 1 <= level; ++k) {
    const Word tail = concat(Word{2}, z1_power(k));
    right_sum += (c / (k + 1.0)) * creation_op(Side::Right, tail, n, level);
    j_symbol.add(tail, c / (k + 1.0));
  }
  const double candidate_error =
      (right_sum.apply(unit) - series_to_op(j_symbol, n, level).apply(unit)).norm();
  const GrowthEvidence growth = sup_growth(scaled_harmonic(terms.back()), terms, grid);
  r.measurements["non_flip_candidate_error"] = candidate_error;
  r.measurements["non_flip_sup_norms"] = growth.sups;
  r.measurements["non_flip_sup_ratio"] = growth.ratio;
  r.check("candidate J matches R xi_1 coefficientwise", candidate_error <= 1e-14);
  r.check("candidate J has growing z1-diagonal sup norms", growth.ratio > 2.0);

  // the net J_m = sum_{k<=m} L1^k/(k+1): J_m xi_1 converges in norm, ||J_m|| does not stay bounded
  const ScalarSeries f = harmonic_series(terms.back());
  std::vector<double> vector_norms, net_sups, literal_variant;
  for (int m : terms) {
    vector_norms.push_back(f.coeffs.head(m + 1).norm());
    net_sups.push_back(partial_sum_sup(f, m, grid));
    literal_variant.push_back(f.coeffs.head(m + 1).real().sum());
  }
  const double limit = std::numbers::pi / std::sqrt(6.0);
  FreeSeries net_head(n);
  for (int k = 0; k <= level; ++k) net_head.add(z1_power(k), 1.0 / (k + 1.0));
  const VectorXc applied = series_to_op(net_head, n, level).apply(unit);
  const double net_vector_error =
      (applied - net_head.to_vector(level).to_dense(basis)).norm();
  r.measurements["net_vector_norms"] = vector_norms;
  r.measurements["net_vector_norm_limit"] = limit;
  r.measurements["net_vector_error"] = net_vector_error;
  r.measurements["net_sup_norms"] = net_sups;
  r.measurements["net_sup_ratio"] = net_sups.back() / net_sups.front();
  r.measurements["exponent_m_variant_vector_norms"] = literal_variant;
  r.notes.push_back("the net uses L1^k in its k-th term; with L1^m in every term J_m xi_1 = H_{m+1} "
                    "xi_{z1^m} has norm H_{m+1} and does not converge");
  r.check("J_m xi_1 has the harmonic coefficients", net_vector_error <= 1e-14);
  r.check("J_m xi_1 stays bounded in norm",
          vector_norms.back() <= limit && vector_norms.back() - vector_norms.front() < 0.1);
  r.check("sup norms of J_m grow", net_sups.back() / net_sups.front() > 2.0);
  r.anchors.push_back("R_w xi_1 = xi_w = L_w xi_1");
  r.anchors.push_back("J_m xi_1 -> sum_k xi_{z1^k}/(k+1), of norm pi/sqrt(6)");
  return r;
}

Report exp_ball_factor_search(const Word& w, const BallSearchOptions& options, int witness_level) {
  const int n = kPlane;
  const std::vector<BallCandidate> found = search_ball_factorizations(w, n, options);

  Report r;
  r.name = "ball-factor-search";
  r.params = {{"n", n},           {"word", to_string(w)},         {"degree", options.degree},
              {"level", options.level}, {"restarts", options.restarts}, {"seed", options.seed},
              {"witness_level", witness_level}};

  std::vector<double> residuals;
  Json splits = Json::array();
  int converged = 0;
  double worst_distance = 0.0;
  double worst_norm = 0.0;
  for (const BallCandidate& cand : found) {
    residuals.push_back(cand.residual);
    worst_norm = std::max({worst_norm, cand.b_norm, cand.c_norm});
    if (cand.residual <= options.classify_below && cand.split) {
      ++converged;
      worst_distance = std::max(worst_distance, cand.split->distance);
      splits.push_back({{"split", to_string(cand.split->left) + "|" + to_string(cand.split->right)},
                        {"distance", cand.split->distance}});
    }
  }
  r.measurements["residuals"] = residuals;
  r.measurements["converged"] = converged;
  r.measurements["splits"] = splits;
  r.measurements["max_split_distance"] = worst_distance;
  r.measurements["max_factor_norm"] = worst_norm;
  r.tolerances["classify_below"] = options.classify_below;
  r.tolerances["max_split_distance"] = 1e-3;
  r.check("some restart converged", converged >= 1);
  r.check("converged factors are word splits", worst_distance <= 1e-3);
  if (options.enforce_norm) r.check("factors stay in the unit ball", worst_norm <= 1.0 + 1e-9);

  // without the norm bound: g(L1) A = L2 with g = 1/f truncated at the witness level
  const int wl = witness_level;
  const ScalarSeries g = reciprocal(harmonic_series(wl), wl);
  FreeSeries a(n);
  for (int k = 0; k + 1 <= wl; ++k) a.add(concat(z1_power(k), Word{2}), 1.0 / (k + 1.0));
  const TruncOp g_op = apply_series(g, creation_op(Side::Left, Word{1}, n, wl));
  const TruncOp a_op = series_to_op(a, n, wl);
  const double witness_residual =
      op_norm(compose(g_op, a_op) - creation_op(Side::Left, Word{2}, n, wl));
  r.measurements["witness_residual"] = witness_residual;
  r.measurements["witness_g_norm"] = op_norm(g_op);
  r.measurements["witness_a_norm"] = op_norm(a_op);
  r.tolerances["witness_residual"] = 1e-9;
  r.check("unconstrained pair factors L2", witness_residual <= 1e-9);
  r.anchors.push_back("factorizations of L_w inside the unit ball are lambda L_u, conj(lambda) L_v with uv = w");
  r.anchors.push_back("g(L1) A = L2 with A = sum_k L1^k L2/(k+1)");
  return r;
}

Report exp_harmonic_reciprocal(int terms, int grid, double guard) {
  if (terms < 1) throw std::invalid_argument("harmonic reciprocal: terms must be >= 1");
  if (grid < 8) throw std::invalid_argument("harmonic reciprocal: grid must be >= 8");
  const ScalarSeries f = harmonic_series(terms);
  const ScalarSeries g = reciprocal(f, terms);
  const ScalarSeries fg = cauchy_product(f, g, terms);
  double delta_error = std::abs(fg.coeffs(0) - 1.0);
  for (Eigen::Index k = 1; k <= terms; ++k) delta_error = std::max(delta_error, std::abs(fg.coeffs(k)));

  const double r_near = 1.0 - 1e-6;
  double closed_form_gap = 0.0;
  double min_mod2 = std::numeric_limits<double>::infinity();
  double argmin = 0.0;
  int scanned = 0;
  for (int j = 0; j < grid; ++j) {
    const double theta = -std::numbers::pi + 2.0 * std::numbers::pi * (j + 1) / grid; // (-pi, pi]
    if (std::abs(theta) < guard) continue;
    ++scanned;
    const double closed = boundary_modulus(theta);
    const double near = std::abs(harmonic_closed_form(std::polar(r_near, theta)));
    closed_form_gap = std::max(closed_form_gap, std::abs(closed - near));
    if (closed * closed < min_mod2) {
      min_mod2 = closed * closed;
      argmin = theta;
    }
  }
  const double lower = std::log(2.0) * std::log(2.0) / 4.0;

  std::vector<int> sup_terms;
  for (int m = 10; m <= terms; m *= 10) sup_terms.push_back(m);
  std::vector<double> sups;
  for (int m : sup_terms) sups.push_back(partial_sum_sup(f, m, grid));

  Report r;
  r.name = "harmonic-reciprocal";
  r.params = {{"terms", terms}, {"grid", grid}, {"guard", guard}, {"radius", r_near}};
  r.measurements["product_delta_error"] = delta_error;
  r.measurements["g_head"] = to_json(ScalarSeries(g.coeffs.head(std::min<Eigen::Index>(4, g.coeffs.size()))));
  r.measurements["grid_points_scanned"] = scanned;
  r.measurements["closed_form_gap"] = closed_form_gap;
  r.measurements["min_modulus_squared"] = min_mod2;
  r.measurements["argmin_theta"] = argmin;
  r.measurements["modulus_squared_lower_bound"] = lower;
  r.measurements["sup_terms"] = sup_terms;
  r.measurements["partial_sum_sups"] = sups;
  r.tolerances["product_delta_error"] = 1e-12;
  r.tolerances["closed_form_gap"] = 1e-3;
  r.anchors.push_back("f g = 1 for f = sum z^k/(k+1)");
  r.anchors.push_back("|f(e^{i theta})|^2 = log^2 |2 sin(theta/2)| + ((theta - pi)/2)^2 >= (log 2)^2/4");
  r.anchors.push_back("z f(z) = -log(1 - z)");
  r.check("f times its reciprocal is 1", delta_error <= 1e-12);
  r.check("closed form matches -log(1-z)/z near the circle", closed_form_gap <= 1e-3);
  r.check("boundary modulus lower bound", min_mod2 >= lower);
  bool monotone = true;
  for (std::size_t i = 1; i < sups.size(); ++i) monotone = monotone && sups[i] >= sups[i - 1];
  r.check("partial sum sups are nondecreasing", monotone);
  return r;
}

const std::vector<ExperimentInfo>& experiment_catalog() {
  static const std::vector<ExperimentInfo> catalog{
      {"harmonic-reciprocal", "f = sum z^k/(k+1), its reciprocal and boundary modulus"},
      {"adjoint-decay", "decay of ||(L*)^k xi|| for L = lambda I + (1-|lambda|) L1"},
      {"codim-counts", "per-level complement of the range of L1"},
      {"factor-generator", "g(L1) A = L2 coefficientwise"},
      {"thin-isometry", "unit vector x, its recovery identity and the span of R_v* x"},
      {"ideal-counterexample", "compression identity and unbounded z1-diagonal"},
      {"membership-witness", "coefficient identity test for A = sum B_i L2 C_i"},
      {"eigenvector", "eigenvectors of the adjoints R_i*"},
      {"cesaro", "Cesaro sums along the z1-diagonal harmonic series"},
      {"flip-examples", "word flips, a non-flip and the net J_m"},
      {"ball-factor-search", "factorizations of L_{z1 z2} in the unit ball"},
  };
  return catalog;
}

namespace {

VectorXc random_ball_point(int n, double radius, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  VectorXc v(n);
  for (int i = 0; i < n; ++i) v(i) = Complex(gauss(rng), gauss(rng));
  return radius * v / v.norm();
}

} // namespace

Report run_experiment(const std::string& name, const ExperimentParams& p) {
  if (name == "harmonic-reciprocal")
    return exp_harmonic_reciprocal(p.terms.value_or(1024), p.grid.value_or(1024));
  if (name == "adjoint-decay")
    return exp_adjoint_decay(p.lambda.value_or(0.9), p.level.value_or(4), p.kmax.value_or(200));
  if (name == "codim-counts") {
    const int n = p.n.value_or(2);
    return exp_codim_counts(FreeSeries::monomial(n, Word{1}), p.level.value_or(6));
  }
  if (name == "factor-generator")
    return exp_factor_generator(p.terms.value_or(64), p.level.value_or(66));
  if (name == "thin-isometry") return exp_thin_isometry(p.kmax.value_or(2), p.level.value_or(-1));
  if (name == "ideal-counterexample") {
    FreeSeries a(kPlane);
    a.add(Word{1}, 1.0);
    a.add(Word{2, 1}, 0.5);
    return exp_ideal_counterexample(a, {10, 100, p.terms.value_or(1000)}, p.level.value_or(10),
                                    p.grid.value_or(1024));
  }
  if (name == "membership-witness") {
    const int degree = p.terms.value_or(16);
    FreeSeries b(kPlane);
    for (int k = 0; k <= degree; ++k) b.add(z1_power(k), 1.0 / (k + 1.0));
    return exp_membership_witness({b}, {FreeSeries::scalar(kPlane, 1.0)},
                                  p.kmax.value_or(2 * degree), p.tol.value_or(1e-9));
  }
  if (name == "eigenvector") {
    const int n = p.n.value_or(2);
    VectorXc lambda = random_ball_point(n, 0.7, p.seed);
    if (p.lambda) {
      lambda.setZero();
      lambda(0) = *p.lambda;
    }
    return exp_eigenvector(lambda, p.level.value_or(12), p.tol.value_or(1e-12));
  }
  if (name == "cesaro") {
    FreeSeries s(kPlane);
    for (int k = 0; k <= p.terms.value_or(1024); ++k) s.add(z1_power(k), 1.0 / (k + 1.0));
    return exp_cesaro(s, p.kmax.value_or(128));
  }
  if (name == "flip-examples")
    return exp_flip_examples(p.level.value_or(10), {10, 100, p.terms.value_or(1000)},
                             p.grid.value_or(1024));
  if (name == "ball-factor-search") {
    BallSearchOptions opt;
    opt.level = p.level.value_or(4);
    opt.restarts = p.terms.value_or(32);
    opt.seed = p.seed;
    return exp_ball_factor_search(Word{1, 2}, opt);
  }
  throw std::invalid_argument("unknown experiment '" + name + "'");
}

std::vector<Report> run_all(std::uint64_t seed) {
  std::vector<Report> out;
  ExperimentParams p;
  p.seed = seed;
  for (const auto& info : experiment_catalog()) out.push_back(run_experiment(info.name, p));
  return out;
}

} // namespace fockalg
