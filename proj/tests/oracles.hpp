#pragma once

// Brute-force reference implementations. They share no code with the library
// beyond the Eigen and std types, so agreement is independent evidence.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <map>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;
using Letters = std::vector<int>;
using Matrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;

/// All words of length <= level, built level by level by appending letters.
inline std::vector<Letters> words_through(int n, int level) {
  std::vector<Letters> out{{}};
  std::size_t begin = 0;
  for (int k = 1; k <= level; ++k) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (int a = 1; a <= n; ++a) {
        Letters w = out[i];
        w.push_back(a);
        out.push_back(std::move(w));
      }
    begin = end;
  }
  return out;
}

inline std::map<Letters, int> positions(const std::vector<Letters>& words) {
  std::map<Letters, int> pos;
  for (std::size_t i = 0; i < words.size(); ++i) pos[words[i]] = static_cast<int>(i);
  return pos;
}

inline Letters join(const Letters& a, const Letters& b) {
  Letters out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

/// Compression of L_w (left = true) or R_w on words of length <= level.
inline Matrix word_matrix(const Letters& w, int n, int level, bool left) {
  const auto words = words_through(n, level);
  const auto pos = positions(words);
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(words.size()), static_cast<Eigen::Index>(words.size()));
  for (std::size_t j = 0; j < words.size(); ++j) {
    const Letters image = left ? join(w, words[j]) : join(words[j], w);
    if (auto it = pos.find(image); it != pos.end()) m(it->second, static_cast<Eigen::Index>(j)) = 1.0;
  }
  return m;
}

/// Rank by Gaussian elimination with partial pivoting.
inline int gauss_rank(Matrix a, double tol = 1e-9) {
  const double scale = a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
  if (scale == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index col = 0; col < a.cols() && rank < a.rows(); ++col) {
    Eigen::Index pivot = rank;
    for (Eigen::Index r = rank; r < a.rows(); ++r)
      if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
    if (std::abs(a(pivot, col)) <= tol * scale) continue;
    a.row(pivot).swap(a.row(rank));
    for (Eigen::Index r = rank + 1; r < a.rows(); ++r) {
      const Complex f = a(r, col) / a(rank, col);
      a.row(r) -= f * a.row(rank);
    }
    ++rank;
  }
  return rank;
}

/// First order+1 coefficients of the product of two power series.
inline std::vector<Complex> series_product(const std::vector<Complex>& a, const std::vector<Complex>& b,
                                           std::size_t order) {
  std::vector<Complex> c(order + 1);
  for (std::size_t k = 0; k <= order; ++k)
    for (std::size_t i = 0; i <= k; ++i)
      if (i < a.size() && k - i < b.size()) c[k] += a[i] * b[k - i];
  return c;
}

/// Symbol product by enumerating all coefficient pairs.
inline std::map<Letters, Complex> symbol_product(const std::map<Letters, Complex>& s,
                                                 const std::map<Letters, Complex>& t) {
  std::map<Letters, Complex> out;
  for (const auto& [u, a] : s)
    for (const auto& [v, b] : t) out[join(u, v)] += a * b;
  return out;
}

/// Eigenvector coefficients from c_1 = 1, c_{w z_i} = conj(lambda_i) c_w, over
/// words_through(n, level) ordering.
inline std::vector<Complex> eigen_recursion(const std::vector<Complex>& lambda, int level) {
  const int n = static_cast<int>(lambda.size());
  const auto words = words_through(n, level);
  const auto pos = positions(words);
  std::vector<Complex> c(words.size());
  c[0] = 1.0;
  for (std::size_t i = 1; i < words.size(); ++i) {
    Letters parent(words[i].begin(), words[i].end() - 1);
    c[i] = std::conj(lambda[static_cast<std::size_t>(words[i].back() - 1)]) * c[static_cast<std::size_t>(pos.at(parent))];
  }
  return c;
}

} // namespace oracle
