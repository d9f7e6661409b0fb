#pragma once

// Deterministic verification suites: each checks one identity over an
// exhaustive or seeded-random instance set and counts failures.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "boxball/bbbs.hpp"

namespace boxball {

struct SuiteOptions {
  /// Largest path length (or exact length for "bijection"); 0 keeps the suite default.
  int max_len = 0;
  std::uint64_t seed = 20121212;
};

struct SuiteReport {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool passed() const noexcept { return failures == 0 && cases > 0; }
};

const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite name.
SuiteReport run_suite(std::string_view name, const SuiteOptions& options = {});

/// Random physical BBBS state: 1..max_sites sites, ≤ max_baskets baskets per
/// site, ≤ max_balls balls in total. Trailing V trimmed.
BbbsState random_bbbs_state(std::mt19937_64& rng, int max_sites = 10, int max_baskets = 2,
                            int max_balls = 5);

}  // namespace boxball
