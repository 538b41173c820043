#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "pingpong/config.hpp"
#include "pingpong/surface.hpp"

namespace pingpong {

/// Enumeration bound: every generator has 1..max_k arcs (if set) and the
/// total arc count is at most max_m (if set). At least one must be set.
struct SearchBound {
  int rank = 2;
  std::optional<int> max_k;
  std::optional<int> max_m;
};

inline constexpr std::uint64_t kDefaultCeiling = 10'000'000;

class BoundTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Per-generator arc counts admitted by the bound.
std::vector<std::vector<int>> count_vectors(const SearchBound& b);

/// Estimate of the configuration count: sum over count vectors of
/// (linear arrangements / m) * prod k(a).
double estimated_configurations(const SearchBound& b);

/// Streams every valid configuration within the bound exactly once, in
/// canonical form. Deterministic order.
void enumerate_configs(const SearchBound& b, const std::function<void(const Configuration&)>& visit);

std::vector<Configuration> enumerate_all(const SearchBound& b);

/// Uniformly random arrangement and offsets for random counts k(a) in [1, max_k].
Configuration random_configuration(int rank, int max_k, std::mt19937_64& rng);

struct SurveyEntry {
  Configuration config;
  Verdict verdict;
};

struct SurveyReport {
  std::uint64_t total = 0;
  std::map<int, std::uint64_t> histogram;  // boundary_count -> configurations
  std::vector<SurveyEntry> isolated;
  std::vector<SurveyEntry> parity_violations;
};

/// Classifies everything within the bound. Throws BoundTooLarge when the
/// estimate exceeds the ceiling, and InternalError on a parity violation
/// unless `fail_on_parity` is false (the violations are then reported).
SurveyReport survey(const SearchBound& b, std::uint64_t ceiling = kDefaultCeiling,
                    bool fail_on_parity = true);

/// Same report over an explicit list (used for random samples).
SurveyReport survey_list(const std::vector<Configuration>& configs, bool fail_on_parity = true);

}  // namespace pingpong
