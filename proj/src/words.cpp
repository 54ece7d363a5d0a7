#include "fockalg/words.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <stdexcept>

#include "fockalg/errors.hpp"

namespace fockalg {

Word::Word(std::initializer_list<int> letters) : letters_(letters) {
  for (int l : letters_)
    if (l < 1) throw std::invalid_argument("word letters must be >= 1");
}

Word::Word(std::vector<int> letters) : letters_(std::move(letters)) {
  for (int l : letters_)
    if (l < 1) throw std::invalid_argument("word letters must be >= 1");
}

Word Word::repeat(int letter, std::size_t count) {
  return Word(std::vector<int>(count, letter));
}

bool Word::valid_for(int n) const noexcept {
  return std::all_of(letters_.begin(), letters_.end(),
                     [n](int l) { return l >= 1 && l <= n; });
}

std::strong_ordering Word::operator<=>(const Word& other) const {
  if (auto c = letters_.size() <=> other.letters_.size(); c != 0) return c;
  return letters_ <=> other.letters_;
}

Word concat(const Word& u, const Word& v) {
  std::vector<int> out;
  out.reserve(u.length() + v.length());
  out.insert(out.end(), u.letters().begin(), u.letters().end());
  out.insert(out.end(), v.letters().begin(), v.letters().end());
  return Word(std::move(out));
}

Word reverse(const Word& w) {
  return Word(std::vector<int>(w.letters().rbegin(), w.letters().rend()));
}

std::optional<Word> strip_suffix(const Word& w, const Word& u) {
  if (u.length() > w.length()) return std::nullopt;
  const auto split = w.letters().end() - static_cast<std::ptrdiff_t>(u.length());
  if (!std::equal(split, w.letters().end(), u.letters().begin())) return std::nullopt;
  return Word(std::vector<int>(w.letters().begin(), split));
}

std::optional<Word> strip_prefix(const Word& w, const Word& u) {
  if (u.length() > w.length()) return std::nullopt;
  const auto split = w.letters().begin() + static_cast<std::ptrdiff_t>(u.length());
  if (!std::equal(w.letters().begin(), split, u.letters().begin())) return std::nullopt;
  return Word(std::vector<int>(split, w.letters().end()));
}

std::size_t checked_power(int n, int k) {
  std::size_t out = 1;
  for (int i = 0; i < k; ++i) {
    if (out > std::numeric_limits<std::size_t>::max() / static_cast<std::size_t>(n))
      return std::numeric_limits<std::size_t>::max();
    out *= static_cast<std::size_t>(n);
  }
  return out;
}

std::size_t basis_cap() {
  constexpr std::size_t kDefaultCap = 1'000'000;
  const char* env = std::getenv("FOCKALG_BASIS_CAP");
  if (env == nullptr || *env == '\0') return kDefaultCap;
  std::size_t cap = 0;
  const char* end = env + std::char_traits<char>::length(env);
  auto [ptr, ec] = std::from_chars(env, end, cap);
  if (ec != std::errc() || ptr != end || cap == 0) return kDefaultCap;
  return cap;
}

std::vector<Word> enumerate_words(int n, int k) {
  if (n < 1 || k < 0) throw std::invalid_argument("enumerate_words: need n >= 1, k >= 0");
  const std::size_t count = checked_power(n, k);
  if (count > basis_cap())
    throw ResourceError("enumerate_words: n^k = " + std::to_string(count) +
                        " exceeds the basis cap");
  std::vector<Word> out;
  out.reserve(count);
  std::vector<int> letters(static_cast<std::size_t>(k), 1);
  for (std::size_t i = 0; i < count; ++i) {
    out.emplace_back(letters);
    // odometer increment, last letter fastest
    for (int pos = k - 1; pos >= 0; --pos) {
      if (++letters[static_cast<std::size_t>(pos)] <= n) break;
      letters[static_cast<std::size_t>(pos)] = 1;
    }
  }
  return out;
}

std::string to_string(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (i > 0) out += ' ';
    out += 'z';
    out += std::to_string(w[i]);
  }
  return out;
}

Word parse_word(std::string_view text) {
  std::vector<int> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ') {
      ++pos;
      continue;
    }
    if (text[pos] != 'z') throw std::invalid_argument("malformed word: " + std::string(text));
    ++pos;
    int letter = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), letter);
    if (ec != std::errc() || letter < 1)
      throw std::invalid_argument("malformed word: " + std::string(text));
    letters.push_back(letter);
    pos = static_cast<std::size_t>(ptr - text.data());
    if (pos < text.size() && text[pos] != ' ')
      throw std::invalid_argument("malformed word: " + std::string(text));
  }
  return Word(std::move(letters));
}

BasisIndexer::BasisIndexer(int n, int level) : n_(n), level_(level) {
  if (n < 1 || level < 0) throw std::invalid_argument("BasisIndexer: need n >= 1, N >= 0");
  const std::size_t cap = basis_cap();
  offsets_.reserve(static_cast<std::size_t>(level) + 2);
  offsets_.push_back(0);
  for (int k = 0; k <= level; ++k) {
    const std::size_t sz = checked_power(n, k);
    if (sz > cap || offsets_.back() > cap - sz)
      throw ResourceError("basis of levels <= " + std::to_string(level) + " over " +
                          std::to_string(n) + " letters exceeds the basis cap of " +
                          std::to_string(cap));
    offsets_.push_back(offsets_.back() + sz);
  }
}

std::size_t BasisIndexer::index(const Word& w) const {
  if (w.length() > static_cast<std::size_t>(level_))
    throw std::out_of_range("word longer than truncation level");
  std::size_t rank = 0;
  for (int l : w.letters()) {
    if (l > n_) throw std::out_of_range("letter outside alphabet");
    rank = rank * static_cast<std::size_t>(n_) + static_cast<std::size_t>(l - 1);
  }
  return offsets_[w.length()] + rank;
}

int BasisIndexer::level_of(std::size_t i) const {
  if (i >= size()) throw std::out_of_range("basis index out of range");
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), i);
  return static_cast<int>(it - offsets_.begin()) - 1;
}

Word BasisIndexer::word(std::size_t i) const {
  const int k = level_of(i);
  std::size_t rank = i - offsets_[static_cast<std::size_t>(k)];
  std::vector<int> letters(static_cast<std::size_t>(k));
  for (int pos = k - 1; pos >= 0; --pos) {
    letters[static_cast<std::size_t>(pos)] = static_cast<int>(rank % static_cast<std::size_t>(n_)) + 1;
    rank /= static_cast<std::size_t>(n_);
  }
  return Word(std::move(letters));
}

} // namespace fockalg
