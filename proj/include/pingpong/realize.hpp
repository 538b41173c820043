#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pingpong/circle.hpp"
#include "pingpong/config.hpp"
#include "pingpong/freegroup.hpp"

namespace pingpong {

/// Arc placement for standard_realization. Both put arc j in the middle of
/// the j-th of m equal sectors: the standard layout uses the middle third,
/// the perturbed layout the middle fifth.
enum class Layout { standard, perturbed };

/// Generator maps plus ping-pong domains, as read from or written to an
/// action file. `maps[i]` acts as generator i; `domains[s.code()]` lists the
/// open arcs of D(s).
struct Action {
  int rank = 0;
  std::vector<PLCircleMap> maps;
  std::vector<std::vector<CircleInterval>> domains;
};

/// Exact piecewise-linear ping-pong action realizing a configuration.
class Realization {
 public:
  Realization(Configuration cfg, std::vector<CircleInterval> arcs, Layout layout);

  const Configuration& config() const { return cfg_; }
  Layout layout() const { return layout_; }
  /// Closed arc per position of the cyclic word.
  const std::vector<CircleInterval>& arcs() const { return arcs_; }
  const PLCircleMap& map(Letter s) const { return maps_[s.code()]; }
  /// Certified expansion: every s expands each arc of D(s^{-1}) by at least mu > 1.
  const Rational& mu() const { return mu_; }
  const CirclePoint& basepoint() const { return basepoint_; }

  std::vector<CircleInterval> domain(Letter s) const;
  Action action() const;

 private:
  Configuration cfg_;
  Layout layout_;
  std::vector<CircleInterval> arcs_;
  std::vector<PLCircleMap> maps_;  // by letter code
  Rational mu_;
  CirclePoint basepoint_;
};

Realization standard_realization(const Configuration& cfg, Layout layout = Layout::standard);

/// rho(w)(x); the rightmost letter acts first.
CirclePoint apply(const Realization& r, const Word& w, const CirclePoint& x);

CircleInterval image_of_interval(const Realization& r, Letter s, const CircleInterval& interval);

struct PingPongViolation {
  enum class Kind { missing_data, overlap, touching_closures, inclusion };
  Kind kind;
  std::optional<Letter> letter;
  CircleInterval witness;
  std::string message;
};

/// Checks that the domains are pairwise disjoint with disjoint component
/// closures, and that each s sends the complement of D(s^{-1}) into the
/// closure of D(s). Empty result means the action is ping-pong.
std::vector<PingPongViolation> verify_pingpong(const Action& action);

class ExtractionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Normalizes domains to D(a) := a(S^1 \ closure D(a^{-1})) and reads off the
/// configuration, returned in canonical form. Throws ExtractionError.
Configuration extract_config(const Action& action);

struct CoverPiece {
  CircleInterval interval;
  Letter letter;  // domain the piece lies in
  int parent = -1;  // index of the enclosing piece one level up
};

/// Level 0 is the closed domain arcs; level d+1 holds s(C) for every level-d
/// piece C outside D(s^{-1}). Returns levels 0..depth.
std::vector<std::vector<CoverPiece>> minimal_set_cover(const Realization& r, int depth);

}  // namespace pingpong
