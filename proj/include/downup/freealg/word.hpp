#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace downup::freealg {

using Letter = std::uint8_t;

/// A generator of the free algebra. Indices within one algebra are 0..n-1.
struct Generator {
  Letter index = 0;
  std::string name;
  int weight = 1;
};

/// Noncommutative monomial: a finite sequence of generator indices.
/// The empty word is the identity.
class Word {
public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  static Word power(Letter x, std::size_t k) { return Word(std::vector<Letter>(k, x)); }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  Word subword(std::size_t pos, std::size_t len) const {
    return Word(std::vector<Letter>(letters_.begin() + pos, letters_.begin() + pos + len));
  }
  Word prefix(std::size_t len) const { return subword(0, len); }
  Word suffix(std::size_t len) const { return subword(size() - len, len); }

  bool occurs_at(const Word& pattern, std::size_t pos) const {
    return pos + pattern.size() <= size() &&
           std::equal(pattern.begin(), pattern.end(), letters_.begin() + pos);
  }

  /// First position >= from where `pattern` occurs.
  std::optional<std::size_t> find(const Word& pattern, std::size_t from = 0) const {
    if (pattern.size() > size())
      return std::nullopt;
    auto it = std::search(letters_.begin() + std::min(from, size()), letters_.end(),
                          pattern.begin(), pattern.end());
    if (it == letters_.end() && !pattern.empty())
      return std::nullopt;
    return static_cast<std::size_t>(it - letters_.begin());
  }

  std::optional<std::size_t> rfind(const Word& pattern) const {
    if (pattern.size() > size())
      return std::nullopt;
    for (std::size_t pos = size() - pattern.size() + 1; pos-- > 0;)
      if (occurs_at(pattern, pos))
        return pos;
    return std::nullopt;
  }

  bool contains(const Word& pattern) const { return find(pattern).has_value(); }

  Word& operator*=(const Word& rhs) {
    letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
    return *this;
  }
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }

  /// Structural order (plain lexicographic on indices, shorter first on
  /// ties). Used for containers only; the algebra ordering lives in
  /// WeightedOrder.
  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

private:
  std::vector<Letter> letters_;
};

/// Replace `len` letters at `pos` in `w` by `replacement`.
inline Word splice(const Word& w, std::size_t pos, std::size_t len, const Word& replacement) {
  return w.prefix(pos) * replacement * w.subword(pos + len, w.size() - pos - len);
}

}  // namespace downup::freealg
