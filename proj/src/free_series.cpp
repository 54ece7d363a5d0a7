#include "fockalg/free_series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fockalg/errors.hpp"

namespace fockalg {

FreeSeries::FreeSeries(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("FreeSeries: need n >= 1");
}

FreeSeries FreeSeries::monomial(int n, const Word& w, Complex c) {
  FreeSeries s(n);
  s.set(w, c);
  return s;
}

void FreeSeries::check_word(const Word& w) const {
  if (!w.valid_for(n_))
    throw std::out_of_range("word '" + to_string(w) + "' uses letters outside the alphabet");
}

Complex FreeSeries::coeff(const Word& w) const {
  auto it = coeffs_.find(w);
  return it == coeffs_.end() ? Complex{} : it->second;
}

void FreeSeries::set(const Word& w, Complex value) {
  check_word(w);
  coeffs_[w] = value;
}

void FreeSeries::add(const Word& w, Complex value) {
  check_word(w);
  coeffs_[w] += value;
}

int FreeSeries::degree() const noexcept {
  // map is ordered by length first, so scan from the back
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    if (it->second != Complex{}) return static_cast<int>(it->first.length());
  return -1;
}

double FreeSeries::squared_norm() const {
  double s = 0.0;
  for (const auto& [w, c] : coeffs_) s += std::norm(c);
  return s;
}

FreeSeries& FreeSeries::prune(double tol) {
  std::erase_if(coeffs_, [tol](const auto& kv) { return std::abs(kv.second) <= tol; });
  return *this;
}

FreeSeries& FreeSeries::operator+=(const FreeSeries& other) {
  if (other.n_ != n_) throw DimensionMismatch("series over different alphabets");
  for (const auto& [w, c] : other.coeffs_) coeffs_[w] += c;
  return *this;
}

FreeSeries& FreeSeries::operator-=(const FreeSeries& other) {
  if (other.n_ != n_) throw DimensionMismatch("series over different alphabets");
  for (const auto& [w, c] : other.coeffs_) coeffs_[w] -= c;
  return *this;
}

FreeSeries& FreeSeries::operator*=(Complex scale) {
  for (auto& [w, c] : coeffs_) c *= scale;
  return *this;
}

FreeSeries operator+(FreeSeries a, const FreeSeries& b) { return a += b; }
FreeSeries operator-(FreeSeries a, const FreeSeries& b) { return a -= b; }
FreeSeries operator*(Complex scale, FreeSeries s) { return s *= scale; }

FockVector FreeSeries::to_vector(int level) const {
  FockVector v(n_, level);
  for (const auto& [w, c] : coeffs_)
    if (w.length() <= static_cast<std::size_t>(level)) v.set(w, c);
  return v;
}

FreeSeries FreeSeries::from_vector(const FockVector& v) {
  FreeSeries s(v.n());
  for (const auto& [w, c] : v.coefficients()) s.set(w, c);
  return s;
}

FreeSeries multiply(const FreeSeries& s, const FreeSeries& t, std::optional<int> max_degree) {
  if (s.n() != t.n()) throw DimensionMismatch("multiply: series over different alphabets");
  FreeSeries out(s.n());
  for (const auto& [u, a] : s.coefficients()) {
    if (a == Complex{}) continue;
    for (const auto& [v, b] : t.coefficients()) {
      if (b == Complex{}) continue;
      if (max_degree && static_cast<int>(u.length() + v.length()) > *max_degree) break;
      out.add(concat(u, v), a * b);
    }
  }
  return out;
}

double max_coeff_distance(const FreeSeries& s, const FreeSeries& t) {
  double d = 0.0;
  for (const auto& [w, c] : s.coefficients()) d = std::max(d, std::abs(c - t.coeff(w)));
  for (const auto& [w, c] : t.coefficients()) d = std::max(d, std::abs(c - s.coeff(w)));
  return d;
}

GradedDecomposition decompose_at(const FreeSeries& s, int k) {
  if (k < 1) throw std::invalid_argument("decompose_at: need k >= 1");
  GradedDecomposition d;
  d.k = k;
  const auto prefix_len = static_cast<std::size_t>(k);
  for (const auto& [w, c] : s.coefficients()) {
    if (w.length() < prefix_len) {
      d.scalars[w] = c;
      continue;
    }
    const Word prefix(std::vector<int>(w.letters().begin(), w.letters().begin() + k));
    const Word rest(std::vector<int>(w.letters().begin() + k, w.letters().end()));
    auto [it, inserted] = d.corners.try_emplace(prefix, s.n());
    it->second.add(rest, c);
  }
  return d;
}

FreeSeries reconstruct(const GradedDecomposition& d, int n) {
  FreeSeries out(n);
  for (const auto& [w, c] : d.scalars) out.add(w, c);
  for (const auto& [prefix, corner] : d.corners)
    for (const auto& [v, c] : corner.coefficients()) out.add(concat(prefix, v), c);
  return out;
}

FreeSeries cesaro_sum(const FreeSeries& s, int k) {
  if (k < 1) throw std::invalid_argument("cesaro_sum: need k >= 1");
  FreeSeries out(s.n());
  for (const auto& [v, c] : s.coefficients()) {
    const auto len = static_cast<int>(v.length());
    if (len < k) out.set(v, (1.0 - static_cast<double>(len) / k) * c);
  }
  return out;
}

} // namespace fockalg
