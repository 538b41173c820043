#include "pingpong/freegroup.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace pingpong {

Letter Letter::from_char(char c) {
  if (c >= 'a' && c <= 'z') return {c - 'a', false};
  if (c >= 'A' && c <= 'Z') return {c - 'A', true};
  throw std::invalid_argument(std::string("not a letter: '") + c + "'");
}

char Letter::to_char() const {
  return static_cast<char>((inverted_ ? 'A' : 'a') + generator_);
}

Word::Word(int rank) : rank_(rank) {
  if (rank < 1 || rank > kMaxRank) {
    throw std::invalid_argument("rank must be in [1, 26], got " + std::to_string(rank));
  }
}

Word Word::reduce(int rank, std::span<const Letter> raw) {
  Word out(rank);
  for (Letter x : raw) {
    if (x.generator() < 0 || x.generator() >= rank) {
      throw std::invalid_argument(std::string("letter '") + x.to_char() +
                                  "' exceeds rank " + std::to_string(rank));
    }
    if (!out.letters_.empty() && out.letters_.back() == x.inverse()) {
      out.letters_.pop_back();
    } else {
      out.letters_.push_back(x);
    }
  }
  return out;
}

Word Word::parse(int rank, std::string_view text) {
  std::vector<Letter> raw;
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  if (compact == "1") return Word(rank);
  raw.reserve(compact.size());
  for (char c : compact) raw.push_back(Letter::from_char(c));
  return reduce(rank, raw);
}

Word Word::inverse() const {
  Word out(rank_);
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.letters_.push_back(it->inverse());
  }
  return out;
}

std::string Word::to_string() const {
  std::string s;
  s.reserve(letters_.size());
  for (Letter x : letters_) s.push_back(x.to_char());
  return s;
}

std::strong_ordering operator<=>(const Word& x, const Word& y) {
  if (auto c = x.rank_ <=> y.rank_; c != 0) return c;
  if (auto c = x.letters_.size() <=> y.letters_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(x.letters_.begin(), x.letters_.end(),
                                                y.letters_.begin(), y.letters_.end());
}

Word multiply(const Word& u, const Word& v) {
  if (u.rank() != v.rank()) {
    throw std::invalid_argument("rank mismatch: " + std::to_string(u.rank()) + " vs " +
                                std::to_string(v.rank()));
  }
  std::vector<Letter> raw(u.letters().begin(), u.letters().end());
  raw.insert(raw.end(), v.letters().begin(), v.letters().end());
  return Word::reduce(u.rank(), raw);
}

std::vector<Word> ball(int rank, int radius) {
  std::vector<Word> out{Word(rank)};
  std::size_t layer_begin = 0;
  for (int d = 1; d <= radius; ++d) {
    const std::size_t layer_end = out.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (int code = 0; code < 2 * rank; ++code) {
        const Letter x = Letter::from_code(code);
        const auto& base = out[i].letters();
        if (!base.empty() && base.back() == x.inverse()) continue;
        std::vector<Letter> raw(base.begin(), base.end());
        raw.push_back(x);
        out.push_back(Word::reduce(rank, raw));
      }
    }
    layer_begin = layer_end;
  }
  return out;
}

std::size_t ball_size(int rank, int radius) {
  std::size_t total = 1;
  std::size_t sphere = 2 * static_cast<std::size_t>(rank);
  for (int d = 1; d <= radius; ++d) {
    total += sphere;
    sphere *= 2 * static_cast<std::size_t>(rank) - 1;
  }
  return total;
}

}  // namespace pingpong
