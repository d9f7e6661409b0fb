#pragma once

// Ultradiscrete tau functions and the piecewise-linear formula for Φ^{-1}:
//
//   τ_r(k) = −min_{n ∈ {0,1}^g} { Σ_i (J_i + r ν_i − k) n_i + Σ_{i,j} min(ν_i, ν_j) n_i n_j }
//   x(k)   = τ_0(k) − τ_0(k−1) − τ_1(k) + τ_1(k−1)
//
// where x(k) ∈ {0,1} is the ball count of site k. Combined with the linear
// motion of riggings this solves the initial value problem in closed form.

#include <array>
#include <cstdint>
#include <vector>

#include "boxball/crystal.hpp"
#include "boxball/evolution.hpp"
#include "boxball/rigged_config.hpp"

namespace boxball {

/// Strings of a rigged configuration, prepared for repeated τ evaluation.
///
/// The k-independent part of the objective is minimised once per popcount
/// |n| over all 2^g vectors; τ_r(k) is then max_c (k·c − min_{|n|=c} ...).
class TauContext {
 public:
  static constexpr int kMaxStrings = 30;

  TauContext() : TauContext(std::vector<RcString>{}) {}
  /// Throws std::invalid_argument on a length < 1, DomainError if g > kMaxStrings.
  explicit TauContext(std::vector<RcString> strings);
  explicit TauContext(const RiggedConfiguration& rc) : TauContext(rc.strings()) {}

  const std::vector<RcString>& strings() const noexcept { return strings_; }

  std::int64_t tau(int r, std::int64_t k) const;

 private:
  std::vector<RcString> strings_;
  // min_by_popcount_[r][c] = min over |n| = c of Σ (J_i + r ν_i) n_i + Σ min(ν_i,ν_j) n_i n_j
  std::array<std::vector<std::int64_t>, 2> min_by_popcount_;
};

/// τ_r(k). Throws std::invalid_argument unless r ∈ {0,1}.
std::int64_t tau(const TauContext& ctx, int r, std::int64_t k);

/// Second difference x(k) for k ≥ 1. Throws DomainError if it falls outside {0,1}.
int x_of_k(const TauContext& ctx, std::int64_t k);

/// Path with sites (1 − x(k), x(k)) for k = 1..length.
Path path_from_tau(const TauContext& ctx, std::size_t length);

/// T_l^t(b) through Φ, the linear rigging shift and the tau formula.
/// The result is trimmed of trailing vacuum.
Path solve_ivp(const Path& b, int t, CarrierCapacity l);

/// (1 − r)·#balls(b_1..b_k) + Σ_{i≥1} #balls(first k sites of T_∞^i(b)).
/// Iteration stops at the first iterate with no balls among the first k sites.
std::int64_t tau_ballcount_oracle(const Path& b, int r, int k);

}  // namespace boxball
