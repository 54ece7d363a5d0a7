#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fockalg {

/// A word in the unital free semigroup on generators z1..zn. Letters are
/// stored as integers 1..n; the empty word is the unit. A Word does not know
/// its alphabet size, so validity against n is checked where n is known.
class Word {
public:
  Word() = default;
  Word(std::initializer_list<int> letters);
  explicit Word(std::vector<int> letters);

  /// z_letter repeated `count` times.
  static Word repeat(int letter, std::size_t count);

  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  int operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<int>& letters() const noexcept { return letters_; }

  /// True iff every letter lies in [1, n].
  bool valid_for(int n) const noexcept;

  bool operator==(const Word&) const = default;
  /// Length first, then lexicographic: the canonical basis order.
  std::strong_ordering operator<=>(const Word& other) const;

private:
  std::vector<int> letters_;
};

Word concat(const Word& u, const Word& v);
Word reverse(const Word& w);

/// t with w = t u, or nothing when u is not a suffix of w.
std::optional<Word> strip_suffix(const Word& w, const Word& u);
/// t with w = u t, or nothing when u is not a prefix of w.
std::optional<Word> strip_prefix(const Word& w, const Word& u);

/// All words of length exactly k over n letters in lexicographic order.
/// Throws ResourceError when n^k exceeds basis_cap().
std::vector<Word> enumerate_words(int n, int k);

/// "z1 z2 z1"; the unit word is the empty string.
std::string to_string(const Word& w);
/// Inverse of to_string. Throws std::invalid_argument on malformed input.
Word parse_word(std::string_view text);

/// Hard cap on basis sizes and word lists. Defaults to 10^6 and may be
/// overridden by the FOCKALG_BASIS_CAP environment variable.
std::size_t basis_cap();

/// n^k, saturating at SIZE_MAX.
std::size_t checked_power(int n, int k);

/// Canonical indexing of {xi_w : |w| <= N}: words ordered by length and then
/// lexicographically, so each level occupies a contiguous index range.
class BasisIndexer {
public:
  BasisIndexer(int n, int level);

  int n() const noexcept { return n_; }
  int level() const noexcept { return level_; }
  std::size_t size() const noexcept { return offsets_.back(); }

  /// First index of words of length k.
  std::size_t level_offset(int k) const { return offsets_.at(k); }
  /// Number of words of length k (n^k).
  std::size_t level_size(int k) const { return offsets_.at(k + 1) - offsets_.at(k); }
  /// Number of words of length <= k.
  std::size_t size_through(int k) const { return offsets_.at(k + 1); }

  /// Throws std::out_of_range when |w| > N or a letter is outside [1, n].
  std::size_t index(const Word& w) const;
  Word word(std::size_t i) const;
  int level_of(std::size_t i) const;

  bool operator==(const BasisIndexer& other) const {
    return n_ == other.n_ && level_ == other.level_;
  }

private:
  int n_;
  int level_;
  std::vector<std::size_t> offsets_;
};

} // namespace fockalg
