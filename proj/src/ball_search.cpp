#include "fockalg/ball_search.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

#include "fockalg/diagnostics.hpp"
#include "fockalg/errors.hpp"

namespace fockalg {

WordSplit classify_word_factorization(const FreeSeries& b, const FreeSeries& c, const Word& w) {
  WordSplit best;
  best.distance = std::numeric_limits<double>::infinity();
  const double mass = b.squared_norm() + c.squared_norm() + 2.0;
  for (std::size_t cut = 0; cut <= w.length(); ++cut) {
    const Word u(std::vector<int>(w.letters().begin(), w.letters().begin() + static_cast<std::ptrdiff_t>(cut)));
    const Word v(std::vector<int>(w.letters().begin() + static_cast<std::ptrdiff_t>(cut), w.letters().end()));
    const Complex z = b.coeff(u) + std::conj(c.coeff(v));
    const double d2 = std::max(0.0, mass - 2.0 * std::abs(z));
    if (std::sqrt(d2) < best.distance) {
      best.left = u;
      best.right = v;
      best.lambda = std::abs(z) > 0.0 ? z / std::abs(z) : Complex(1.0);
      best.distance = std::sqrt(d2);
    }
  }
  return best;
}

double factorization_residual(const FreeSeries& b, const FreeSeries& c, const Word& w, int level) {
  const int n = b.n();
  const TruncOp diff = compose(series_to_op(b, n, level), series_to_op(c, n, level)) -
                       creation_op(Side::Left, w, n, level);
  return op_norm(diff);
}

FreeSeries project_to_unit_ball(const FreeSeries& s, int level) {
  const double norm = op_norm(series_to_op(s, s.n(), level));
  if (norm <= 1.0) return s;
  return (1.0 / norm) * FreeSeries(s);
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Dense compressions of L_u for every word of length <= degree.
struct MonomialBasis {
  std::vector<Word> words;
  std::vector<MatrixXc> ops;
  MatrixXc target;
  Eigen::Index dim = 0;

  MonomialBasis(const Word& w, int n, int degree, int level) {
    for (int k = 0; k <= degree; ++k)
      for (Word& u : enumerate_words(n, k)) words.push_back(std::move(u));
    for (const Word& u : words) ops.push_back(creation_op(Side::Left, u, n, level).dense());
    target = creation_op(Side::Left, w, n, level).dense();
    dim = target.rows();
  }

  MatrixXc assemble(const VectorXc& coeffs) const {
    MatrixXc m = MatrixXc::Zero(dim, dim);
    for (std::size_t i = 0; i < ops.size(); ++i) m += coeffs(static_cast<Eigen::Index>(i)) * ops[i];
    return m;
  }

  FreeSeries to_series(const VectorXc& coeffs, int n) const {
    FreeSeries s(n);
    for (std::size_t i = 0; i < words.size(); ++i) s.set(words[i], coeffs(static_cast<Eigen::Index>(i)));
    return s;
  }
};

/// Least squares for the coefficients of one factor with the other fixed.
/// left_unknown: minimize ||(sum x_u L_u) other - target||_F, else
/// ||other (sum x_u L_u) - target||_F.
VectorXc solve_half_step(const MonomialBasis& basis, const MatrixXc& other, bool left_unknown) {
  const Eigen::Index rows = basis.dim * basis.dim;
  MatrixXc design(rows, static_cast<Eigen::Index>(basis.ops.size()));
  for (std::size_t i = 0; i < basis.ops.size(); ++i) {
    MatrixXc prod = left_unknown ? MatrixXc(basis.ops[i] * other) : MatrixXc(other * basis.ops[i]);
    design.col(static_cast<Eigen::Index>(i)) = Eigen::Map<const VectorXc>(prod.data(), rows);
  }
  const Eigen::Map<const VectorXc> rhs(basis.target.data(), rows);
  return Eigen::CompleteOrthogonalDecomposition<MatrixXc>(design).solve(rhs);
}

double project(const MonomialBasis& basis, VectorXc& coeffs, bool enforce) {
  const double norm = spectral_norm(basis.assemble(coeffs));
  if (enforce && norm > 1.0) {
    coeffs /= norm;
    return 1.0;
  }
  return norm;
}

BallCandidate run_restart(const MonomialBasis& basis, const Word& w, int n,
                          const BallSearchOptions& opt, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const auto m = static_cast<Eigen::Index>(basis.words.size());
  VectorXc b(m), c(m);
  for (Eigen::Index i = 0; i < m; ++i) b(i) = Complex(gauss(rng), gauss(rng));
  for (Eigen::Index i = 0; i < m; ++i) c(i) = Complex(gauss(rng), gauss(rng));
  project(basis, b, true);
  project(basis, c, true);

  double residual = spectral_norm(basis.assemble(b) * basis.assemble(c) - basis.target);
  double best = residual;
  int since_best = 0;
  int it = 0;
  for (; it < opt.max_iterations; ++it) {
    b = solve_half_step(basis, basis.assemble(c), true);
    project(basis, b, opt.enforce_norm);
    c = solve_half_step(basis, basis.assemble(b), false);
    project(basis, c, opt.enforce_norm);
    residual = spectral_norm(basis.assemble(b) * basis.assemble(c) - basis.target);
    if (residual < 1e-14) break;
    if (best - residual > opt.stall_tol) {
      best = residual;
      since_best = 0;
    } else if (++since_best >= opt.patience) {
      break;
    }
  }

  BallCandidate out{basis.to_series(b, n), basis.to_series(c, n), residual, 0.0, 0.0, it + 1, {}};
  out.b.prune(1e-15);
  out.c.prune(1e-15);
  out.b_norm = spectral_norm(basis.assemble(b));
  out.c_norm = spectral_norm(basis.assemble(c));
  if (residual <= opt.classify_below) out.split = classify_word_factorization(out.b, out.c, w);
  return out;
}

} // namespace

std::vector<BallCandidate> search_ball_factorizations(const Word& w, int n,
                                                      const BallSearchOptions& opt) {
  if (!w.valid_for(n)) throw std::invalid_argument("search: word uses letters outside alphabet");
  if (static_cast<int>(w.length()) > 2 * opt.degree || 2 * opt.degree > opt.level)
    throw std::invalid_argument("search: need |w| <= 2 degree <= N");
  if (opt.restarts < 0) throw std::invalid_argument("search: negative restart count");
  const MonomialBasis basis(w, n, opt.degree, opt.level);

  std::vector<std::optional<BallCandidate>> slots(static_cast<std::size_t>(opt.restarts));
  unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max(opt.restarts, 1)));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t r = t; r < slots.size(); r += threads)
          slots[r] = run_restart(basis, w, n, opt, splitmix64(opt.seed ^ splitmix64(r)));
      });
    }
  }
  std::vector<BallCandidate> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

} // namespace fockalg
