#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pingpong {

/// Maximum rank supported by the ASCII word syntax ('a'..'z').
inline constexpr int kMaxRank = 26;

/// A free generator or its formal inverse. Textual form: 'a','b',... for
/// generators and 'A','B',... for their inverses.
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(int generator, bool inverted) : generator_(generator), inverted_(inverted) {}

  /// Throws std::invalid_argument for non-letters.
  static Letter from_char(char c);

  constexpr int generator() const { return generator_; }
  constexpr bool inverted() const { return inverted_; }
  constexpr Letter inverse() const { return {generator_, !inverted_}; }

  /// Dense index in [0, 2n): generator a_i -> 2i, its inverse -> 2i+1.
  /// Also the ordering used for lexicographic comparison of words.
  constexpr int code() const { return 2 * generator_ + (inverted_ ? 1 : 0); }
  static constexpr Letter from_code(int code) { return {code / 2, (code % 2) != 0}; }

  char to_char() const;

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr auto operator<=>(Letter x, Letter y) { return x.code() <=> y.code(); }

 private:
  int generator_ = 0;
  bool inverted_ = false;
};

/// A reduced word in the free group of the given rank. The rank is carried so
/// that mixed-rank operations fail fast.
class Word {
 public:
  explicit Word(int rank);

  /// Free reduction of an arbitrary letter sequence.
  static Word reduce(int rank, std::span<const Letter> raw);

  /// Parses the ASCII syntax; whitespace is ignored and "1" (or an empty
  /// string) denotes the identity. Throws std::invalid_argument.
  static Word parse(int rank, std::string_view text);

  int rank() const { return rank_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }
  std::span<const Letter> letters() const { return letters_; }

  Word inverse() const;
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  /// Shortlex order.
  friend std::strong_ordering operator<=>(const Word& x, const Word& y);

 private:
  int rank_;
  std::vector<Letter> letters_;
};

/// reduce(concat(u, v)). Throws std::invalid_argument on rank mismatch.
Word multiply(const Word& u, const Word& v);

inline Word operator*(const Word& u, const Word& v) { return multiply(u, v); }

/// All reduced words of length <= radius, in shortlex order.
std::vector<Word> ball(int rank, int radius);

/// 1 + sum_{d=1..radius} 2n(2n-1)^{d-1}.
std::size_t ball_size(int rank, int radius);

}  // namespace pingpong
