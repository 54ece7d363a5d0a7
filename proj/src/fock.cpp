#include "fockalg/fock.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "fockalg/errors.hpp"

namespace fockalg {

FockVector::FockVector(int n, int level) : n_(n), level_(level) {
  if (n < 1 || level < 0) throw std::invalid_argument("FockVector: need n >= 1, N >= 0");
}

FockVector FockVector::basis(int n, int level, const Word& w) {
  FockVector v(n, level);
  v.set(w, 1.0);
  return v;
}

void FockVector::check_word(const Word& w) const {
  if (w.length() > static_cast<std::size_t>(level_) || !w.valid_for(n_))
    throw std::out_of_range("word '" + to_string(w) + "' does not fit the truncated space");
}

void FockVector::check_compatible(const FockVector& other) const {
  if (n_ != other.n_ || level_ != other.level_)
    throw DimensionMismatch("Fock vectors live in different truncated spaces");
}

Complex FockVector::coeff(const Word& w) const {
  auto it = coeffs_.find(w);
  return it == coeffs_.end() ? Complex{} : it->second;
}

void FockVector::set(const Word& w, Complex value) {
  check_word(w);
  coeffs_[w] = value;
}

void FockVector::add(const Word& w, Complex value) {
  check_word(w);
  coeffs_[w] += value;
}

double FockVector::squared_norm() const {
  double s = 0.0;
  for (const auto& [w, c] : coeffs_) s += std::norm(c);
  return s;
}

double FockVector::norm() const { return std::sqrt(squared_norm()); }

FockVector& FockVector::operator+=(const FockVector& other) {
  check_compatible(other);
  for (const auto& [w, c] : other.coeffs_) coeffs_[w] += c;
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& other) {
  check_compatible(other);
  for (const auto& [w, c] : other.coeffs_) coeffs_[w] -= c;
  return *this;
}

FockVector& FockVector::operator*=(Complex scale) {
  for (auto& [w, c] : coeffs_) c *= scale;
  return *this;
}

FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
FockVector operator*(Complex scale, FockVector v) { return v *= scale; }

VectorXc FockVector::to_dense(const BasisIndexer& basis) const {
  if (basis.n() != n_ || basis.level() != level_)
    throw DimensionMismatch("basis does not match the vector's truncated space");
  VectorXc out = VectorXc::Zero(static_cast<Eigen::Index>(basis.size()));
  for (const auto& [w, c] : coeffs_) out(static_cast<Eigen::Index>(basis.index(w))) = c;
  return out;
}

FockVector FockVector::from_dense(const BasisIndexer& basis, const VectorXc& values,
                                  double drop_below) {
  if (static_cast<std::size_t>(values.size()) != basis.size())
    throw DimensionMismatch("dense vector length does not match the basis size");
  FockVector out(basis.n(), basis.level());
  for (Eigen::Index i = 0; i < values.size(); ++i)
    if (std::abs(values(i)) > drop_below)
      out.coeffs_.emplace(basis.word(static_cast<std::size_t>(i)), values(i));
  return out;
}

Complex inner(const FockVector& xi, const FockVector& eta) {
  if (xi.n() != eta.n() || xi.level() != eta.level())
    throw DimensionMismatch("inner: vectors live in different truncated spaces");
  Complex s{};
  const auto& small = xi.coefficients().size() <= eta.coefficients().size()
                          ? xi.coefficients()
                          : eta.coefficients();
  for (const auto& [w, unused] : small) s += xi.coeff(w) * std::conj(eta.coeff(w));
  return s;
}

FockVector project_level(const FockVector& xi, int k) {
  if (k < 0 || k > xi.level()) throw std::out_of_range("project_level: level out of range");
  FockVector out(xi.n(), xi.level());
  for (const auto& [w, c] : xi.coefficients())
    if (w.length() == static_cast<std::size_t>(k)) out.set(w, c);
  return out;
}

FockVector random_vector(int n, int level, std::uint64_t seed) {
  const BasisIndexer basis(n, level);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  VectorXc values(static_cast<Eigen::Index>(basis.size()));
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    values(i) = Complex(re, im);
  }
  values /= values.norm();
  return FockVector::from_dense(basis, values);
}

} // namespace fockalg
