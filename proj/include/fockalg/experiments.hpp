#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fockalg/ball_search.hpp"
#include "fockalg/free_series.hpp"
#include "fockalg/report.hpp"

namespace fockalg {

/// Orbits ||(L*)^k xi_w|| for the contraction L = lambda I + (1 - |lambda|) L1 (n = 2)
/// on sample words, against the binomial bound sum_j p_j(k) |lambda|^{k-j}
/// ||(A*)^j xi_w|| with A = L - lambda I.
Report exp_adjoint_decay(Complex lambda, int level = 4, int kmax = 200);

/// Per-level dimension of the complement of ran L, for L given by its
/// symbol. Requires a vanishing constant term.
Report exp_codim_counts(const FreeSeries& l_symbol, int level = 6);

/// g(L1) A = L2 with g the reciprocal of the harmonic series and
/// A = sum_{k<K} L1^k L2 / (k+1), compared coefficientwise up to length K.
Report exp_factor_generator(int terms = 64, int level = 66);

/// The unit vector x = sum_k 2^{-(k+1)/2} x_k / ||x_k|| with
/// x_k = sum_{|w|=k} xi_{w w z2 z1^k} (n = 2), its recovery identity and the
/// rank of {R_v* x : v = u z2 z1^k, |u| = k <= kmax}. level defaults to 3 kmax + 1.
Report exp_thin_isometry(int kmax = 2, int level = -1);

/// Compression identity Q L2* Lv* J Q = a_v sum_k lambda_k L1^k Q for
/// J ~ sum a_w lambda_k L_w L2 L1^k, lambda_k = c/(k+1), and growth of the
/// sup norm of the partial sums sum_{k<=m} lambda_k z^k.
Report exp_ideal_counterexample(const FreeSeries& a, const std::vector<int>& sup_terms = {10, 100, 1000},
                                int level = 10, int grid = 1024);

/// Checks the necessary identity sum_i b^i_{z1^k} c^i_1 = 1/(k+1), k <= K, for
/// a candidate representation sum_i B_i L2 C_i of sum_k L1^k L2 / (k+1).
/// Passes when the candidate is certified not to be such a representation.
Report exp_membership_witness(const std::vector<FreeSeries>& b, const std::vector<FreeSeries>& c,
                              int terms, double tol = 1e-9);

/// v_lambda with coefficients conj(lambda_{i1} ... lambda_{ik}) and the
/// relation R_i* v = conj(lambda_i) v on levels <= N - 1.
Report exp_eigenvector(const VectorXc& lambda, int level = 12, double tol = 1e-12);

/// ||cesaro_sum(s, k) xi_1 - s xi_1|| for k = 1..kmax.
Report exp_cesaro(const FreeSeries& s, int kmax = 256);

/// Word flips R_w xi_1 = L_w xi_1, the non-flip sum_k lambda_k R1^k R2, and
/// the net J_m = sum_{k<=m} L1^k / (k+1).
Report exp_flip_examples(int level = 10, const std::vector<int>& sup_terms = {10, 100, 1000},
                         int grid = 1024);

/// Unit-ball search for factorizations of L_w, classified against word
/// splits, plus the unconstrained pair (g(L1), A) for L2 at witness_level.
Report exp_ball_factor_search(const Word& w, const BallSearchOptions& options,
                              int witness_level = 8);

/// The harmonic series f and its reciprocal: f g = 1 up to order K, the
/// boundary modulus formula against -log(1 - z)/z near the circle, and its
/// lower bound (log 2)^2 / 4.
Report exp_harmonic_reciprocal(int terms = 1024, int grid = 1024, double guard = 0.05);

struct ExperimentInfo {
  std::string name;
  std::string summary;
};

/// Names accepted by run_experiment, in run-all order.
const std::vector<ExperimentInfo>& experiment_catalog();

/// Overrides for run_experiment; unset fields keep each experiment's default.
struct ExperimentParams {
  std::optional<int> n;
  std::optional<int> level;
  std::optional<int> terms;
  std::optional<int> kmax;
  std::optional<double> tol;
  std::optional<int> grid;
  std::optional<Complex> lambda;
  std::uint64_t seed = 7;
};

/// Runs one named experiment. Throws std::invalid_argument for unknown names.
Report run_experiment(const std::string& name, const ExperimentParams& params);

/// Every catalog experiment with default parameters and the given seed.
std::vector<Report> run_all(std::uint64_t seed);

} // namespace fockalg
