#include "pingpong/config.hpp"

#include <algorithm>
#include <numeric>

namespace pingpong {

namespace {

int mod(int x, int k) { return ((x % k) + k) % k; }

std::string letter_name(Letter s) {
  std::string name(1, Letter(s.generator(), false).to_char());
  return s.inverted() ? name + "^{-1}" : name;
}

std::string join_messages(const std::vector<Violation>& violations) {
  std::string out = "invalid configuration:";
  for (const auto& v : violations) out += " " + v.message + ";";
  return out;
}

}  // namespace

InvalidConfiguration::InvalidConfiguration(std::vector<Violation> violations)
    : std::invalid_argument(join_messages(violations)), violations_(std::move(violations)) {}

std::vector<Violation> validate(const Configuration& cfg) {
  std::vector<Violation> out;
  if (cfg.rank < 2 || cfg.rank > kMaxRank) {
    out.push_back({"rank " + std::to_string(cfg.rank) + " outside [2, 26]", std::nullopt});
    return out;
  }
  if (cfg.word.empty()) out.push_back({"empty word", std::nullopt});

  std::vector<int> counts(2 * cfg.rank, 0);
  for (Letter s : cfg.word) {
    if (s.generator() < 0 || s.generator() >= cfg.rank) {
      out.push_back({"letter " + std::string(1, s.to_char()) + " exceeds rank", s});
      continue;
    }
    ++counts[s.code()];
  }
  for (int a = 0; a < cfg.rank; ++a) {
    const Letter pos(a, false);
    const int k = counts[pos.code()];
    const int k_inv = counts[pos.inverse().code()];
    if (k != k_inv) {
      out.push_back({"k(" + letter_name(pos) + ")=" + std::to_string(k) + " != k(" +
                         letter_name(pos.inverse()) + ")=" + std::to_string(k_inv),
                     pos});
    } else if (k == 0) {
      out.push_back({"generator " + letter_name(pos) + " has no domain arcs", pos});
    }
  }
  if (static_cast<int>(cfg.offsets.size()) != cfg.rank) {
    out.push_back({"expected " + std::to_string(cfg.rank) + " offsets, got " +
                       std::to_string(cfg.offsets.size()),
                   std::nullopt});
  } else {
    for (int a = 0; a < cfg.rank; ++a) {
      const Letter pos(a, false);
      const int k = counts[pos.code()];
      if (k > 0 && (cfg.offsets[a] < 0 || cfg.offsets[a] >= k)) {
        out.push_back({"offset of " + letter_name(pos) + " is " + std::to_string(cfg.offsets[a]) +
                           ", not reduced mod k=" + std::to_string(k),
                       pos});
      }
    }
  }
  return out;
}

void require_valid(const Configuration& cfg) {
  if (auto v = validate(cfg); !v.empty()) throw InvalidConfiguration(std::move(v));
}

ArcIndex::ArcIndex(const Configuration& cfg) : cfg_(cfg) {
  require_valid(cfg_);
  const int m = arc_count();
  positions_.assign(2 * cfg_.rank, {});
  occurrence_.resize(m);
  for (int p = 0; p < m; ++p) {
    auto& list = positions_[cfg_.word[p].code()];
    occurrence_[p] = static_cast<int>(list.size());
    list.push_back(p);
  }
  last_at_or_before_.assign(2 * cfg_.rank, std::vector<int>(m, 0));
  for (int code = 0; code < 2 * cfg_.rank; ++code) {
    const auto& list = positions_[code];
    int last = static_cast<int>(list.size()) - 1;  // wraps from the previous turn
    for (int p = 0; p < m; ++p) {
      if (cfg_.word[p].code() == code) last = occurrence_[p];
      last_at_or_before_[code][p] = last;
    }
  }
}

ArcId ArcIndex::arc_of(Letter s, int occ) const {
  const auto& list = positions_[s.code()];
  return ArcId{list[mod(occ, static_cast<int>(list.size()))]};
}

int ArcIndex::inverse_gap_containing(Letter s, ArcId arc) const {
  return last_at_or_before_[s.inverse().code()][wrap(arc.value)];
}

int ArcIndex::assigned_occurrence(Letter s, int gap) const {
  const int k = count(s);
  const int o = cfg_.offsets[s.generator()];
  // Orientation forces the inverse assignment once the generator's is fixed:
  // a maps arc i of D(a^{-1}) onto gap (i - 1 + o) of D(a).
  return s.inverted() ? mod(gap + 1 - o, k) : mod(gap + o, k);
}

ArcId ArcIndex::gamma_successor(ArcId arc) const {
  const Letter s = letter(arc);
  return arc_of(s.inverse(), assigned_occurrence(s.inverse(), occurrence(arc)));
}

ArcId ArcIndex::gamma_predecessor(ArcId arc) const {
  const Letter t = letter(arc);
  const int k = count(t);
  const int o = cfg_.offsets[t.generator()];
  const int j = occurrence(arc);
  const int gap = t.inverted() ? mod(j - 1 + o, k) : mod(j - o, k);
  return arc_of(t.inverse(), gap);
}

GammaCycle gamma_graph(const Configuration& cfg, int generator) {
  const ArcIndex index(cfg);
  if (generator < 0 || generator >= cfg.rank) {
    throw std::invalid_argument("generator index out of range");
  }
  const Letter a(generator, false);
  const int k = index.count(a);
  GammaCycle cycle{generator, {}};
  const ArcId start = index.arc_of(a, 0);
  ArcId v = start;
  std::vector<bool> seen(index.arc_count(), false);
  do {
    if (seen[v.value]) throw InternalError("graph revisits an arc before closing its cycle");
    seen[v.value] = true;
    cycle.vertices.push_back(v);
    const ArcId next = index.gamma_successor(v);
    if (index.letter(next) != index.letter(v).inverse()) {
      throw InternalError("graph edge is not bipartite");
    }
    if (index.gamma_predecessor(next) != v) throw InternalError("successor/predecessor mismatch");
    v = next;
  } while (v != start);
  if (static_cast<int>(cycle.vertices.size()) != 2 * k) {
    throw InternalError("graph of generator " + std::string(1, a.to_char()) +
                        " is not a single cycle of length " + std::to_string(2 * k));
  }
  return cycle;
}

LambdaTable lambda_assignments(const Configuration& cfg) {
  const ArcIndex index(cfg);
  const int m = index.arc_count();
  LambdaTable out;
  out.table.assign(2 * cfg.rank, std::vector<std::optional<ArcId>>(m));
  for (int code = 0; code < 2 * cfg.rank; ++code) {
    const Letter s = Letter::from_code(code);
    for (int p = 0; p < m; ++p) {
      if (cfg.word[p] == s.inverse()) continue;
      const int gap = index.inverse_gap_containing(s, ArcId{p});
      out.table[code][p] = index.arc_of(s, index.assigned_occurrence(s, gap));
    }
  }
  return out;
}

bool is_alternating(const Configuration& cfg, int generator) {
  require_valid(cfg);
  std::vector<bool> restricted;
  for (Letter s : cfg.word) {
    if (s.generator() == generator) restricted.push_back(s.inverted());
  }
  const std::size_t r = restricted.size();
  for (std::size_t i = 0; i < r; ++i) {
    if (restricted[i] == restricted[(i + 1) % r]) return false;
  }
  return true;
}

Configuration rotate(const Configuration& cfg, int shift) {
  const int m = static_cast<int>(cfg.word.size());
  shift = mod(shift, m);
  Configuration out{cfg.rank, {}, cfg.offsets};
  out.word.reserve(m);
  for (int p = 0; p < m; ++p) out.word.push_back(cfg.word[(p + shift) % m]);

  // Occurrences before the cut are renumbered to the end.
  std::vector<int> before(2 * cfg.rank, 0);
  std::vector<int> total(2 * cfg.rank, 0);
  for (int p = 0; p < m; ++p) {
    if (p < shift) ++before[cfg.word[p].code()];
    ++total[cfg.word[p].code()];
  }
  for (int a = 0; a < cfg.rank; ++a) {
    const int pos = Letter(a, false).code();
    const int k = total[pos];
    out.offsets[a] = mod(cfg.offsets[a] + before[pos + 1] - before[pos], k);
  }
  return out;
}

Configuration canonical_form(const Configuration& cfg) {
  require_valid(cfg);
  Configuration best = cfg;
  for (int r = 1; r < static_cast<int>(cfg.word.size()); ++r) {
    Configuration candidate = rotate(cfg, r);
    if (candidate < best) best = std::move(candidate);
  }
  return best;
}

Configuration make_configuration(int rank, std::string_view word, std::vector<int> offsets) {
  Configuration cfg{rank, {}, std::move(offsets)};
  for (char c : word) cfg.word.push_back(Letter::from_char(c));
  return cfg;
}

std::string word_string(const Configuration& cfg) {
  std::string s;
  for (Letter x : cfg.word) s.push_back(x.to_char());
  return s;
}

}  // namespace pingpong
