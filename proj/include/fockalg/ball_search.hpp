#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fockalg/free_series.hpp"
#include "fockalg/trunc_op.hpp"

namespace fockalg {

/// Nearest point of the family {(lambda L_u, conj(lambda) L_v) : uv = w, |lambda| = 1},
/// measured as the l2 distance between symbol coefficient vectors.
struct WordSplit {
  Word left;
  Word right;
  Complex lambda;
  double distance = 0.0;
};

WordSplit classify_word_factorization(const FreeSeries& b, const FreeSeries& c, const Word& w);

struct BallCandidate {
  FreeSeries b;
  FreeSeries c;
  double residual = 0.0; // compression norm of BC - L_w
  double b_norm = 0.0;
  double c_norm = 0.0;
  int iterations = 0;
  /// Filled for candidates with residual <= the classification threshold.
  std::optional<WordSplit> split;
};

struct BallSearchOptions {
  int degree = 2;
  int level = 4;
  int restarts = 32;
  std::uint64_t seed = 0;
  int max_iterations = 2000;
  /// A restart ends after `patience` sweeps without improving its best
  /// residual by more than stall_tol.
  double stall_tol = 1e-15;
  int patience = 25;
  /// Rescale each factor into the unit ball after every half-step.
  bool enforce_norm = true;
  double classify_below = 1e-6;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

/// ||series_to_op(B) series_to_op(C) - L_w|| as a compression norm.
double factorization_residual(const FreeSeries& b, const FreeSeries& c, const Word& w, int level);

/// Divides s by the compression norm of its operator when that exceeds 1.
FreeSeries project_to_unit_ball(const FreeSeries& s, int level);

/// Alternating least squares over coefficient vectors of B and C of degree
/// <= options.degree, minimizing the Frobenius norm of the compressed
/// residual BC - L_w. One candidate per restart, in restart order; results do
/// not depend on the thread schedule.
std::vector<BallCandidate> search_ball_factorizations(const Word& w, int n,
                                                      const BallSearchOptions& options);

} // namespace fockalg
