#pragma once

// Time evolutions of the box-ball system and its conserved energies.

#include <limits>
#include <vector>

#include "boxball/crystal.hpp"

namespace boxball {

/// Capacity l of the carrier u_l = (l, 0); `infinite()` selects T_∞.
class CarrierCapacity {
 public:
  /// Throws std::invalid_argument for l < 1.
  explicit CarrierCapacity(int l);
  static CarrierCapacity infinite() noexcept { return CarrierCapacity(); }

  bool is_infinite() const noexcept { return infinite_; }
  /// Finite capacity; throws std::logic_error when infinite.
  int value() const;
  /// min(l, n), reading l = ∞ as unbounded.
  int clamp(int n) const noexcept { return infinite_ ? n : (n < value_ ? n : value_); }

  friend bool operator==(const CarrierCapacity&, const CarrierCapacity&) = default;

 private:
  CarrierCapacity() : infinite_(true) {}
  int value_ = 0;
  bool infinite_ = false;
};

/// Output of one carrier sweep. `carrier_trace[i]` is u_l^{(i)} and
/// `energies[i]` is H(u_l^{(i)} ⊗ b_{i+1}); both cover the padded sites too.
struct SweepRecord {
  Path output;
  std::vector<BoxState> carrier_trace;
  std::vector<int> energies;
};

/// T_l via the carrier u_l swept left to right. The input is padded with
/// vacuum until at least one padded site has been processed and the carrier
/// is empty again, so `output.size() > b.size()`.
/// Throws std::invalid_argument for l < 1.
SweepRecord evolve_tl(const Path& b, int l);

/// The ball-moving rule: each ball, left to right, jumps to the next empty box.
/// The result is padded only as far as the balls require.
Path evolve_tinf(const Path& b);

/// T_l for finite l, evolve_tinf otherwise; returns just the state.
Path evolve(const Path& b, CarrierCapacity l);

/// E_l(b) = Σ H(u_l^{(i-1)} ⊗ b_i), with E_0 = 0.
int energy_el(const Path& b, int l);

}  // namespace boxball
