#pragma once

#include <cstdint>
#include <map>

#include "fockalg/types.hpp"
#include "fockalg/words.hpp"

namespace fockalg {

/// A finitely supported vector of the Fock space truncated to levels <= N,
/// stored as a sparse map word -> coefficient of xi_w.
class FockVector {
public:
  using Coefficients = std::map<Word, Complex>;

  FockVector(int n, int level);
  /// The basis vector xi_w.
  static FockVector basis(int n, int level, const Word& w);

  int n() const noexcept { return n_; }
  int level() const noexcept { return level_; }
  const Coefficients& coefficients() const noexcept { return coeffs_; }

  Complex coeff(const Word& w) const;
  /// Throws std::out_of_range for words that do not fit (n, N).
  void set(const Word& w, Complex value);
  void add(const Word& w, Complex value);

  double squared_norm() const;
  double norm() const;

  FockVector& operator+=(const FockVector& other);
  FockVector& operator-=(const FockVector& other);
  FockVector& operator*=(Complex scale);

  VectorXc to_dense(const BasisIndexer& basis) const;
  /// Entries with modulus <= drop_below are not stored.
  static FockVector from_dense(const BasisIndexer& basis, const VectorXc& values,
                               double drop_below = 0.0);

private:
  void check_word(const Word& w) const;
  void check_compatible(const FockVector& other) const;

  int n_;
  int level_;
  Coefficients coeffs_;
};

FockVector operator+(FockVector a, const FockVector& b);
FockVector operator-(FockVector a, const FockVector& b);
FockVector operator*(Complex scale, FockVector v);

/// Sum of xi(w) * conj(eta(w)): linear in the first slot, conjugate-linear
/// in the second. Throws DimensionMismatch on differing (n, N).
Complex inner(const FockVector& xi, const FockVector& eta);

/// P_k: keeps exactly the length-k coefficients.
FockVector project_level(const FockVector& xi, int k);

/// Deterministic pseudo-random unit vector with complex Gaussian entries on
/// every basis word of length <= N.
FockVector random_vector(int n, int level, std::uint64_t seed);

} // namespace fockalg
