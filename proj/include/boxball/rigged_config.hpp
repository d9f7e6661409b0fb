#pragma once

// Rigged configurations for paths in (B^{1,1})^{⊗L} and the bijection Φ.
//
// A rigged configuration is a multiset of strings (ν_i, J_i): a row length of
// a Young diagram ν and an integer rigging. Φ reads the ball positions
// k_1 < k_2 < ... of a path and grows the configuration one box per ball; the
// riggings then evolve linearly under every T_l, which makes Φ an
// inverse-scattering transform for the box-ball system.

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "boxball/crystal.hpp"
#include "boxball/evolution.hpp"

namespace boxball {

struct RcString {
  int length = 0;
  int rigging = 0;

  friend auto operator<=>(const RcString&, const RcString&) = default;
};

/// Strings are kept sorted by (length desc, rigging desc); that order is the
/// canonical form and equality is multiset equality plus path length.
class RiggedConfiguration {
 public:
  RiggedConfiguration() = default;
  /// Throws std::invalid_argument if a length is < 1.
  RiggedConfiguration(std::vector<RcString> strings, std::size_t path_length);

  const std::vector<RcString>& strings() const noexcept { return strings_; }
  std::size_t path_length() const noexcept { return path_length_; }
  /// Row lengths ν in canonical order.
  std::vector<int> partition() const;
  /// |ν|, the number of boxes.
  int size() const noexcept;
  bool empty() const noexcept { return strings_.empty(); }

  RiggedConfiguration with_path_length(std::size_t length) const;

  friend bool operator==(const RiggedConfiguration&, const RiggedConfiguration&) = default;

 private:
  std::vector<RcString> strings_;
  std::size_t path_length_ = 0;
};

/// Strings equal as multisets; path lengths ignored.
bool same_strings(const RiggedConfiguration& lhs, const RiggedConfiguration& rhs);

/// Q_ℓ(ν) = Σ min(ν_i, ℓ): boxes in the left ℓ columns.
int q_ell(std::span<const int> nu, int ell);

/// Vacancy number P_ℓ(k, ν) = k − 2 Q_ℓ(ν).
int vacancy(std::span<const int> nu, int k, int ell);

/// Which of several longest singular strings Φ extends.
enum class TieBreak { kFirstCanonical, kLastCanonical };

/// Φ. By default the longest singular string earliest in canonical order is
/// extended; the result does not depend on the tie-break.
RiggedConfiguration phi(const Path& b, TieBreak tie_break = TieBreak::kFirstCanonical);

/// Φ^{-1}. Throws NotInImageError if `rc` is not Φ of any path of its length.
Path phi_inverse(const RiggedConfiguration& rc);

/// Riggings shifted by steps·min(l, ν_i); ν and path length unchanged.
RiggedConfiguration linearized_evolve(const RiggedConfiguration& rc, CarrierCapacity l, int steps);

}  // namespace boxball
