#pragma once

// The box-basket-ball system.
//
// Each site is a triple (a, b, c): a empty places, b baskets, c balls. Boxes
// have capacity one; baskets stack on a box and each holds at most one ball,
// so a physical site satisfies a + c = 1 + b and fills its box first. The
// dynamics are the carrier sweep of the box-ball system with the combinatorial
// R-matrix replaced by the whurl relation.

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace boxball {

class BbbsSite {
 public:
  constexpr BbbsSite() = default;
  /// Throws std::invalid_argument on a negative coordinate.
  BbbsSite(int empty_places, int baskets, int balls);

  static BbbsSite vacuum() { return {1, 0, 0}; }               // V
  static BbbsSite ball() { return {0, 0, 1}; }                 // F
  static BbbsSite empty_baskets(int i);                         // B_i = (i+1, i, 0)
  static BbbsSite loaded_box(int i);                            // U_i = (i, i, 1)

  int empty_places() const noexcept { return a_; }
  int baskets() const noexcept { return b_; }
  int balls() const noexcept { return c_; }

  /// a + c = 1 + b: one box of capacity one plus b baskets.
  bool is_physical() const noexcept { return a_ + c_ == 1 + b_; }

  bool is_vacuum() const noexcept { return *this == vacuum(); }
  bool is_ball() const noexcept { return *this == ball(); }
  /// i if the site is B_i (i ≥ 1).
  std::optional<int> as_empty_baskets() const noexcept;
  /// i if the site is U_i (i ≥ 1).
  std::optional<int> as_loaded_box() const noexcept;
  /// One of V, F, B_i, U_i.
  bool is_named() const noexcept;

  friend auto operator<=>(const BbbsSite&, const BbbsSite&) = default;

 private:
  int a_ = 0;
  int b_ = 0;
  int c_ = 0;
};

using BbbsState = std::vector<BbbsSite>;

/// Copy with trailing V sites removed.
BbbsState trimmed(BbbsState s);
bool same_state(const BbbsState& lhs, const BbbsState& rhs);
/// Σ balls + Σ baskets.
int total_content(const BbbsState& s);

/// (a,b,c) ⊗ (d,e,f) -> (d',e',f') ⊗ (a',b',c').
/// Preserves a+d, b+e and c+f. Throws DomainError on a negative output.
std::pair<BbbsSite, BbbsSite> whurl(const BbbsSite& x, const BbbsSite& y);

struct BbbsSweepOptions {
  /// Cap on padded V sites; 0 selects 8·(total content + 1) + 8.
  std::size_t max_padding = 0;
};

/// T_l: the carrier (l,0,0) swept left to right through whurl, padding with V
/// until it is empty again (at least one padded site). Output is trimmed.
/// Throws std::invalid_argument for l < 1, IterationCapError at the padding cap.
BbbsState bbbs_evolve_tl(const BbbsState& s, int l, const BbbsSweepOptions& options = {});

/// T_∞ by the two-phase rule: every empty basket moves one site right, then
/// each ball, left to right, moves to the next free box or basket.
/// Requires physical sites (DomainError otherwise). Output is trimmed.
BbbsState bbbs_evolve_tinf(const BbbsState& s);

/// A sequence of F, B_i, U_i with no adjacent FF or FU.
/// Throws std::invalid_argument on an empty segment, V, or an unnamed site.
bool is_slow_soliton(std::span<const BbbsSite> segment);

/// A maximal run of non-V sites; `start` is a 0-based site index.
struct Segment {
  std::size_t start = 0;
  std::vector<BbbsSite> sites;

  friend bool operator==(const Segment&, const Segment&) = default;
};

std::vector<Segment> segments(const BbbsState& s);

/// Free velocity of a separated segment: l for F_l, 1 for a slow soliton,
/// nullopt for anything else (mid-collision composites).
std::optional<int> free_velocity(std::span<const BbbsSite> segment);

/// Amplitudes of the elementary solitons, each sorted in decreasing order.
struct SolitonContent {
  std::vector<int> fermionic;  // l for each F_l
  std::vector<int> bosonic;    // i for each B_i

  friend bool operator==(const SolitonContent&, const SolitonContent&) = default;
};

struct DecomposeOptions {
  /// Probe amplitude K; 0 selects total content + 1.
  int probe = 0;
  /// V sites between a new probe and the state; 0 selects K.
  int gap = 0;
  /// T_∞ steps allowed per round; 0 selects 10·(length + content) + 64.
  std::size_t max_steps = 0;
  /// Probe rounds allowed; 0 selects 10·(content + 1).
  std::size_t max_probes = 0;
};

/// Evolves until separated, then scatters fast probes F_K off the state until
/// every segment is an F_l run or a run of B_i's. Throws IterationCapError
/// when a cap is reached.
SolitonContent decompose(const BbbsState& s, const DecomposeOptions& options = {});

/// A soliton to be hit by a probe: F_k, or a run B_{a_1} ... B_{a_m}.
struct SolitonDescriptor {
  std::vector<BbbsSite> sites;

  static SolitonDescriptor fermion(int k);
  static SolitonDescriptor bosons(std::span<const int> amplitudes);
  bool is_fermion() const noexcept;
};

struct PhaseShiftOptions {
  /// V sites between probe and target; 0 selects probe length.
  int gap = 0;
  /// 0 selects 10·(length + content) + 64.
  std::size_t max_steps = 0;
};

/// Position of the target after an F_l probe has passed through it, minus its
/// position under free propagation for the same number of steps.
/// Throws std::invalid_argument unless the probe is faster (l > k for F_k,
/// l ≥ 2 for baskets), IterationCapError if the pair never separates.
int phase_shift(int probe_length, const SolitonDescriptor& target,
                const PhaseShiftOptions& options = {});

}  // namespace boxball
