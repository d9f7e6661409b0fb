#pragma once

// Type A^(1)_1 crystals B^{1,s}: box states, the combinatorial R-matrix,
// the energy function and the affine R-matrix.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace boxball {

/// An element (a, b) of B^{1,s}: a box of capacity s = a + b holding b balls.
class BoxState {
 public:
  constexpr BoxState() = default;
  /// Throws std::invalid_argument on a negative count.
  BoxState(int empty_slots, int balls);

  static BoxState vacuum() { return {1, 0}; }
  static BoxState ball() { return {0, 1}; }
  /// The empty carrier u_l = (l, 0).
  static BoxState carrier(int capacity) { return {capacity, 0}; }

  int empty_slots() const noexcept { return empty_; }
  int balls() const noexcept { return balls_; }
  int capacity() const noexcept { return empty_ + balls_; }

  friend auto operator<=>(const BoxState&, const BoxState&) = default;

 private:
  int empty_ = 0;
  int balls_ = 0;
};

/// A box-ball state b_1 ⊗ ... ⊗ b_L with every site in B^{1,1}.
/// Site positions are 1-based in the public interface.
class Path {
 public:
  Path() = default;
  /// Throws std::invalid_argument unless every site has capacity 1.
  explicit Path(std::vector<BoxState> sites);

  /// Path of `length` sites with balls at the given 1-based positions.
  static Path from_balls(std::span<const int> positions, std::size_t length);
  static Path from_balls(std::initializer_list<int> positions, std::size_t length);
  static Path vacuum(std::size_t length);

  std::size_t size() const noexcept { return sites_.size(); }
  bool empty() const noexcept { return sites_.empty(); }
  const std::vector<BoxState>& sites() const noexcept { return sites_; }
  const BoxState& operator[](std::size_t i) const { return sites_[i]; }
  bool has_ball(std::size_t position) const;

  int ball_count() const noexcept;
  std::vector<int> ball_positions() const;

  /// Copy with trailing vacuum sites removed.
  Path trimmed() const;
  /// Copy extended with vacuum sites to at least `length` sites.
  Path padded(std::size_t length) const;

  friend bool operator==(const Path&, const Path&) = default;

 private:
  std::vector<BoxState> sites_;
};

/// Equality of box-ball states: trailing vacuum is representation, not state.
bool same_state(const Path& lhs, const Path& rhs);

/// b[d]: a crystal element decorated with an integer mode.
struct AffineElement {
  BoxState element;
  int mode = 0;

  friend auto operator<=>(const AffineElement&, const AffineElement&) = default;
};

/// R : (a,b) ⊗ (c,d) -> (c',d') ⊗ (a',b').
/// Total over all box states; the first output has the capacity of `y`, the
/// second the capacity of `x`.
std::pair<BoxState, BoxState> combinatorial_r(const BoxState& x, const BoxState& y);

/// H((a,b) ⊗ (c,d)) = min(a, d).
int energy_h(const BoxState& x, const BoxState& y);

/// b1[d1] ⊗ b2[d2] -> b2'[d2 - H] ⊗ b1'[d1 + H].
std::pair<AffineElement, AffineElement> affine_r(const AffineElement& x,
                                                 const AffineElement& y);

/// Whether (R⊗1)(1⊗R)(R⊗1) and (1⊗R)(R⊗1)(1⊗R) agree on x ⊗ y ⊗ z.
bool yang_baxter_holds(const BoxState& x, const BoxState& y, const BoxState& z);
bool yang_baxter_holds(const AffineElement& x, const AffineElement& y,
                       const AffineElement& z);

}  // namespace boxball
