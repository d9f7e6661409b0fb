#include "boxball/tau.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

#include "boxball/errors.hpp"

namespace boxball {

namespace {

void check_r(int r) {
  if (r != 0 && r != 1) throw std::invalid_argument("tau: r must be 0 or 1, got " + std::to_string(r));
}

int count_balls(const Path& b, int k) {
  int n = 0;
  const auto limit = std::min<std::size_t>(static_cast<std::size_t>(k), b.size());
  for (std::size_t i = 0; i < limit; ++i) n += b[i].balls();
  return n;
}

}  // namespace

TauContext::TauContext(std::vector<RcString> strings) : strings_(std::move(strings)) {
  const int g = static_cast<int>(strings_.size());
  if (g > kMaxStrings) {
    throw DomainError("TauContext: " + std::to_string(g) + " strings exceed the enumeration limit " +
                      std::to_string(kMaxStrings));
  }
  for (const auto& s : strings_) {
    if (s.length < 1) throw std::invalid_argument("TauContext: string length must be >= 1");
  }

  constexpr auto kInf = std::numeric_limits<std::int64_t>::max();
  for (auto& table : min_by_popcount_) table.assign(g + 1, kInf);

  // Gray-code walk over {0,1}^g. cross[i] = Σ_{j ∈ n} min(ν_i, ν_j) tracks the
  // quadratic form so each flip costs O(g).
  std::vector<std::int64_t> cross(g, 0);
  std::array<std::int64_t, 2> value{0, 0};
  int popcount = 0;
  min_by_popcount_[0][0] = min_by_popcount_[1][0] = 0;

  const std::uint64_t total = std::uint64_t{1} << g;
  std::uint64_t gray = 0;
  for (std::uint64_t step = 1; step < total; ++step) {
    const int i = std::countr_zero(step);
    const bool adding = ((gray >> i) & 1U) == 0;
    const auto& s = strings_[i];
    // Contribution of n_i: its linear term, the diagonal min(ν_i,ν_i), and
    // twice the cross terms with the other selected strings.
    const std::int64_t quad = s.length + 2 * cross[i];
    for (int r = 0; r < 2; ++r) {
      const std::int64_t delta = s.rigging + static_cast<std::int64_t>(r) * s.length + quad;
      value[r] += adding ? delta : -delta;
    }
    gray ^= std::uint64_t{1} << i;
    popcount += adding ? 1 : -1;
    for (int j = 0; j < g; ++j) {
      if (j == i) continue;
      const int m = std::min(s.length, strings_[j].length);
      cross[j] += adding ? m : -m;
    }
    for (int r = 0; r < 2; ++r) {
      min_by_popcount_[r][popcount] = std::min(min_by_popcount_[r][popcount], value[r]);
    }
  }
}

std::int64_t TauContext::tau(int r, std::int64_t k) const {
  check_r(r);
  const auto& table = min_by_popcount_[r];
  std::int64_t best = std::numeric_limits<std::int64_t>::min();
  for (std::size_t c = 0; c < table.size(); ++c) {
    best = std::max(best, k * static_cast<std::int64_t>(c) - table[c]);
  }
  return best;
}

std::int64_t tau(const TauContext& ctx, int r, std::int64_t k) { return ctx.tau(r, k); }

int x_of_k(const TauContext& ctx, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("x_of_k: k must be >= 1");
  const std::int64_t x = ctx.tau(0, k) - ctx.tau(0, k - 1) - ctx.tau(1, k) + ctx.tau(1, k - 1);
  if (x != 0 && x != 1) {
    throw DomainError("x_of_k: second difference " + std::to_string(x) + " at k = " +
                      std::to_string(k) + " is not a ball count");
  }
  return static_cast<int>(x);
}

Path path_from_tau(const TauContext& ctx, std::size_t length) {
  std::vector<BoxState> sites;
  sites.reserve(length);
  for (std::size_t k = 1; k <= length; ++k) {
    sites.push_back(x_of_k(ctx, static_cast<std::int64_t>(k)) ? BoxState::ball() : BoxState::vacuum());
  }
  return Path(std::move(sites));
}

Path solve_ivp(const Path& b, int t, CarrierCapacity l) {
  if (t < 0) throw std::invalid_argument("solve_ivp: t must be >= 0");
  const auto rc = linearized_evolve(phi(b), l, t);
  // Each ball moves at most ball_count sites per step.
  const std::size_t length = b.size() + static_cast<std::size_t>(t) * rc.size() + 1;
  return path_from_tau(TauContext(rc), length).trimmed();
}

std::int64_t tau_ballcount_oracle(const Path& b, int r, int k) {
  check_r(r);
  if (k < 0) throw std::invalid_argument("tau_ballcount_oracle: k must be >= 0");
  std::int64_t total = (1 - r) * count_balls(b, k);
  Path current = b;
  for (;;) {
    current = evolve_tinf(current);
    const int n = count_balls(current, k);
    if (n == 0) break;
    total += n;
  }
  return total;
}

}  // namespace boxball
