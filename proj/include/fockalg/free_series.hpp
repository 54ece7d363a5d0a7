#pragma once

#include <map>
#include <optional>

#include "fockalg/fock.hpp"
#include "fockalg/types.hpp"
#include "fockalg/words.hpp"

namespace fockalg {

/// Fourier symbol X ~ sum_w a_w L_w of an element of the left algebra,
/// stored sparsely. Also read as the vector X xi_1.
class FreeSeries {
public:
  using Coefficients = std::map<Word, Complex>;

  explicit FreeSeries(int n);
  /// c * L_w.
  static FreeSeries monomial(int n, const Word& w, Complex c = 1.0);
  /// The scalar c * I.
  static FreeSeries scalar(int n, Complex c) { return monomial(n, Word{}, c); }

  int n() const noexcept { return n_; }
  const Coefficients& coefficients() const noexcept { return coeffs_; }
  bool empty() const noexcept { return coeffs_.empty(); }

  Complex coeff(const Word& w) const;
  void set(const Word& w, Complex value);
  void add(const Word& w, Complex value);

  /// Longest stored word with a nonzero coefficient; -1 for the zero series.
  int degree() const noexcept;
  /// sum |a_w|^2 = ||X xi_1||^2.
  double squared_norm() const;

  /// Drops coefficients with modulus <= tol.
  FreeSeries& prune(double tol = 0.0);

  FreeSeries& operator+=(const FreeSeries& other);
  FreeSeries& operator-=(const FreeSeries& other);
  FreeSeries& operator*=(Complex scale);

  /// Coefficients of words of length <= N, as X xi_1 in the truncated space.
  FockVector to_vector(int level) const;
  static FreeSeries from_vector(const FockVector& v);

private:
  void check_word(const Word& w) const;

  int n_;
  Coefficients coeffs_;
};

FreeSeries operator+(FreeSeries a, const FreeSeries& b);
FreeSeries operator-(FreeSeries a, const FreeSeries& b);
FreeSeries operator*(Complex scale, FreeSeries s);

/// Symbol of the product XY: (st)_w = sum_{uv = w} s_u t_v. Terms longer
/// than max_degree are dropped when it is given.
FreeSeries multiply(const FreeSeries& s, const FreeSeries& t,
                    std::optional<int> max_degree = std::nullopt);

/// Largest coefficient modulus of s - t.
double max_coeff_distance(const FreeSeries& s, const FreeSeries& t);

/// The unique expansion X = sum_{|w|<k} x_w L_w + sum_{|w|=k} L_w X_w.
struct GradedDecomposition {
  int k = 1;
  std::map<Word, Complex> scalars;   // x_w for |w| < k
  std::map<Word, FreeSeries> corners; // X_w for |w| = k, only nonzero ones stored
};

/// Throws std::invalid_argument for k < 1.
GradedDecomposition decompose_at(const FreeSeries& s, int k);
/// Rebuilds sum x_w L_w + sum L_w X_w.
FreeSeries reconstruct(const GradedDecomposition& d, int n);

/// Fejer-weighted truncation sum_{|v|<k} (1 - |v|/k) a_v L_v.
FreeSeries cesaro_sum(const FreeSeries& s, int k);

} // namespace fockalg
