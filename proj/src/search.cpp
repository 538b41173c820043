#include "pingpong/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

namespace pingpong {

namespace {

void check_bound(const SearchBound& b) {
  if (b.rank < 2 || b.rank > kMaxRank) throw std::invalid_argument("search rank must be in [2, 26]");
  if (!b.max_k && !b.max_m) throw std::invalid_argument("search needs --max-k or --bound");
  if ((b.max_k && *b.max_k < 1) || (b.max_m && *b.max_m < 1)) {
    throw std::invalid_argument("search bounds must be positive");
  }
}

bool is_min_rotation(const std::vector<int>& codes) {
  const std::size_t m = codes.size();
  for (std::size_t r = 1; r < m; ++r) {
    for (std::size_t i = 0; i < m; ++i) {
      const int x = codes[(i + r) % m];
      if (x < codes[i]) return false;
      if (x > codes[i]) break;
    }
  }
  return true;
}

bool has_rotational_symmetry(const std::vector<int>& codes) {
  const std::size_t m = codes.size();
  for (std::size_t r = 1; r < m; ++r) {
    if (m % r != 0) continue;
    bool same = true;
    for (std::size_t i = 0; i < m && same; ++i) same = codes[(i + r) % m] == codes[i];
    if (same) return true;
  }
  return false;
}

/// Calls visit for every offset tuple in prod_a Z/k(a), odometer order.
template <class Visit>
void for_each_offsets(const std::vector<int>& k, Visit&& visit) {
  std::vector<int> offsets(k.size(), 0);
  while (true) {
    visit(offsets);
    std::size_t a = k.size();
    while (a > 0) {
      --a;
      if (++offsets[a] < k[a]) break;
      offsets[a] = 0;
      if (a == 0) return;
    }
    if (k.empty()) return;
  }
}

void accumulate(SurveyReport& report, const Configuration& cfg, const Verdict& v) {
  ++report.total;
  ++report.histogram[v.boundary_count];
  if (v.isolated) report.isolated.push_back({cfg, v});
  if ((v.boundary_count - (cfg.rank + 1)) % 2 != 0) report.parity_violations.push_back({cfg, v});
}

/// Classifies a batch on all hardware threads; results land in input order.
std::vector<Verdict> classify_batch(const std::vector<Configuration>& batch) {
  std::vector<Verdict> out(batch.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                           static_cast<unsigned>(batch.size() / 256 + 1)));
  if (workers == 1) {
    for (std::size_t i = 0; i < batch.size(); ++i) out[i] = classify(batch[i]);
    return out;
  }
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < batch.size(); i += workers) out[i] = classify(batch[i]);
    });
  }
  return out;
}

void finish(SurveyReport& report, bool fail_on_parity) {
  if (fail_on_parity && !report.parity_violations.empty()) {
    const auto& bad = report.parity_violations.front();
    throw InternalError("parity violation: " + word_string(bad.config) + " has " +
                        std::to_string(bad.verdict.boundary_count) + " boundary components at rank " +
                        std::to_string(bad.config.rank));
  }
}

}  // namespace

std::vector<std::vector<int>> count_vectors(const SearchBound& b) {
  check_bound(b);
  const int n = b.rank;
  int top = b.max_k.value_or(std::numeric_limits<int>::max());
  if (b.max_m) top = std::min(top, *b.max_m / 2 - (n - 1));
  std::vector<std::vector<int>> out;
  if (top < 1) return out;
  std::vector<int> k(n, 1);
  while (true) {
    int total = 0;
    for (int x : k) total += 2 * x;
    if (!b.max_m || total <= *b.max_m) out.push_back(k);
    int a = n - 1;
    while (a >= 0 && k[a] == top) k[a--] = 1;
    if (a < 0) break;
    ++k[a];
  }
  return out;
}

double estimated_configurations(const SearchBound& b) {
  double total = 0;
  for (const auto& k : count_vectors(b)) {
    int m = 0;
    for (int x : k) m += 2 * x;
    double log_arrangements = std::lgamma(m + 1.0);
    double offsets = 1;
    for (int x : k) {
      log_arrangements -= 2 * std::lgamma(x + 1.0);
      offsets *= x;
    }
    total += std::exp(log_arrangements) / m * offsets;
  }
  return total;
}

void enumerate_configs(const SearchBound& b, const std::function<void(const Configuration&)>& visit) {
  for (const auto& k : count_vectors(b)) {
    std::vector<int> codes;
    for (int a = 0; a < b.rank; ++a) {
      codes.insert(codes.end(), k[a], 2 * a);
      codes.insert(codes.end(), k[a], 2 * a + 1);
    }
    // The minimal rotation starts with the smallest code, so only the tail permutes.
    do {
      if (!is_min_rotation(codes)) continue;
      Configuration cfg{b.rank, {}, {}};
      for (int c : codes) cfg.word.push_back(Letter::from_code(c));
      const bool symmetric = has_rotational_symmetry(codes);
      for_each_offsets(k, [&](const std::vector<int>& offsets) {
        cfg.offsets = offsets;
        if (symmetric && canonical_form(cfg) != cfg) return;
        visit(cfg);
      });
    } while (std::next_permutation(codes.begin() + 1, codes.end()));
  }
}

std::vector<Configuration> enumerate_all(const SearchBound& b) {
  std::vector<Configuration> out;
  enumerate_configs(b, [&](const Configuration& cfg) { out.push_back(cfg); });
  return out;
}

Configuration random_configuration(int rank, int max_k, std::mt19937_64& rng) {
  if (rank < 2 || max_k < 1) throw std::invalid_argument("random configuration needs rank >= 2, max_k >= 1");
  std::uniform_int_distribution<int> count(1, max_k);
  Configuration cfg{rank, {}, std::vector<int>(rank, 0)};
  std::vector<int> k(rank);
  for (int a = 0; a < rank; ++a) {
    k[a] = count(rng);
    for (int i = 0; i < k[a]; ++i) {
      cfg.word.emplace_back(a, false);
      cfg.word.emplace_back(a, true);
    }
  }
  std::shuffle(cfg.word.begin(), cfg.word.end(), rng);
  for (int a = 0; a < rank; ++a) cfg.offsets[a] = std::uniform_int_distribution<int>(0, k[a] - 1)(rng);
  return canonical_form(cfg);
}

SurveyReport survey(const SearchBound& b, std::uint64_t ceiling, bool fail_on_parity) {
  const double estimate = estimated_configurations(b);
  if (estimate > static_cast<double>(ceiling)) {
    throw BoundTooLarge("estimated " + std::to_string(static_cast<std::uint64_t>(estimate)) +
                        " configurations exceeds ceiling " + std::to_string(ceiling));
  }
  SurveyReport report;
  std::vector<Configuration> batch;
  constexpr std::size_t kBatch = 1 << 14;
  auto flush = [&] {
    const auto verdicts = classify_batch(batch);
    for (std::size_t i = 0; i < batch.size(); ++i) accumulate(report, batch[i], verdicts[i]);
    batch.clear();
  };
  enumerate_configs(b, [&](const Configuration& cfg) {
    batch.push_back(cfg);
    if (batch.size() == kBatch) flush();
  });
  flush();
  finish(report, fail_on_parity);
  return report;
}

SurveyReport survey_list(const std::vector<Configuration>& configs, bool fail_on_parity) {
  SurveyReport report;
  const auto verdicts = classify_batch(configs);
  for (std::size_t i = 0; i < configs.size(); ++i) accumulate(report, configs[i], verdicts[i]);
  finish(report, fail_on_parity);
  return report;
}

}  // namespace pingpong
