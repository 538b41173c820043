#pragma once

#include <compare>
#include <string_view>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pingpong/freegroup.hpp"

namespace pingpong {

/// Position of a domain arc in the cyclic word.
struct ArcId {
  int value = 0;
  friend auto operator<=>(ArcId, ArcId) = default;
};

/// The outer gap between arc `value` and arc `value + 1` (mod m).
struct GapId {
  int value = 0;
  friend auto operator<=>(GapId, GapId) = default;
};

/// Combinatorial data of a ping-pong action.
///
/// `word` lists the letters of the domain arcs in counterclockwise order.
/// Occurrences of each letter are numbered in word order from position 0. Gap
/// i of D(a^{-1}) is the component of the complement of its closure that
/// follows occurrence i of a^{-1}; the generator a sends gap i onto occurrence
/// (i + offsets[a]) mod k(a) of a.
struct Configuration {
  int rank = 0;
  std::vector<Letter> word;
  std::vector<int> offsets;

  friend bool operator==(const Configuration&, const Configuration&) = default;
  friend auto operator<=>(const Configuration&, const Configuration&) = default;
};

struct Violation {
  std::string message;
  std::optional<Letter> letter;
};

class InvalidConfiguration : public std::invalid_argument {
 public:
  explicit InvalidConfiguration(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Raised when an internal consistency check fails. Indicates a defect.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Empty iff the configuration is valid.
std::vector<Violation> validate(const Configuration& cfg);

/// Throws InvalidConfiguration when validate() reports anything.
void require_valid(const Configuration& cfg);

/// Positional lookups over a valid configuration. Built once, queried often.
class ArcIndex {
 public:
  explicit ArcIndex(const Configuration& cfg);

  const Configuration& config() const { return cfg_; }
  int arc_count() const { return static_cast<int>(cfg_.word.size()); }
  int rank() const { return cfg_.rank; }

  Letter letter(ArcId arc) const { return cfg_.word[wrap(arc.value)]; }
  /// Occurrence number of the arc among arcs with the same letter.
  int occurrence(ArcId arc) const { return occurrence_[wrap(arc.value)]; }
  int count(Letter s) const { return static_cast<int>(positions_[s.code()].size()); }
  ArcId arc_of(Letter s, int occurrence) const;

  /// Occurrence index of s^{-1} whose gap contains the arc (arc must not be labelled s^{-1}).
  int inverse_gap_containing(Letter s, ArcId arc) const;

  /// Occurrence of s assigned to gap `gap` of D(s^{-1}).
  int assigned_occurrence(Letter s, int gap) const;

  /// Successor in the oriented graph of the arc's generator: the arc of
  /// D(s^{-1}) whose closure is the image, under s^{-1}, of the gap of D(s)
  /// right-adjacent to the given arc of D(s).
  ArcId gamma_successor(ArcId arc) const;
  ArcId gamma_predecessor(ArcId arc) const;

  int wrap(int position) const {
    const int m = arc_count();
    return ((position % m) + m) % m;
  }

 private:
  Configuration cfg_;
  std::vector<std::vector<int>> positions_;  // by letter code
  std::vector<int> occurrence_;              // by position
  std::vector<std::vector<int>> last_at_or_before_;  // [code][position] -> occurrence
};

/// Oriented 2k(a)-cycle on the arcs of D(a) and D(a^{-1}), starting at
/// occurrence 0 of a.
struct GammaCycle {
  int generator = 0;
  std::vector<ArcId> vertices;
};

/// Throws InternalError if the graph is not a single cycle of length 2k(a).
GammaCycle gamma_graph(const Configuration& cfg, int generator);

/// The assignments lambda_s for every letter s: table[s.code()][arc] is the
/// arc of D(s) receiving the arc, or nullopt when the arc lies in D(s^{-1}).
struct LambdaTable {
  std::vector<std::vector<std::optional<ArcId>>> table;

  std::optional<ArcId> at(Letter s, ArcId arc) const { return table[s.code()][arc.value]; }
};

LambdaTable lambda_assignments(const Configuration& cfg);

/// True iff occurrences of a and a^{-1} strictly alternate around the circle.
bool is_alternating(const Configuration& cfg, int generator);

/// Rotates the cyclic word so that position `shift` becomes position 0,
/// re-indexing offsets so that the same action is described.
Configuration rotate(const Configuration& cfg, int shift);

/// Lexicographically minimal rotation (word first, then offsets).
Configuration canonical_form(const Configuration& cfg);

/// Convenience constructor from the ASCII word syntax, e.g. "BABabAba".
Configuration make_configuration(int rank, std::string_view word, std::vector<int> offsets);

std::string word_string(const Configuration& cfg);

}  // namespace pingpong
