#include "boxball/rigged_config.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "boxball/errors.hpp"

namespace boxball {

namespace {

void canonicalize(std::vector<RcString>& strings) {
  std::sort(strings.begin(), strings.end(), std::greater<>());
}

std::vector<int> lengths_of(const std::vector<RcString>& strings) {
  std::vector<int> nu;
  nu.reserve(strings.size());
  for (const auto& s : strings) nu.push_back(s.length);
  return nu;
}

int vacancy_of(const std::vector<RcString>& strings, int k, int ell) {
  int q = 0;
  for (const auto& s : strings) q += std::min(s.length, ell);
  return k - 2 * q;
}

// Index of the singular string (J_i = P_{ν_i}(k, ν)) chosen by `better`, if any.
template <typename Better>
std::optional<std::size_t> pick_singular(const std::vector<RcString>& strings, int k,
                                         Better better) {
  std::optional<std::size_t> pick;
  for (std::size_t i = 0; i < strings.size(); ++i) {
    if (strings[i].rigging != vacancy_of(strings, k, strings[i].length)) continue;
    if (!pick || better(strings[i], strings[*pick])) pick = i;
  }
  return pick;
}

}  // namespace

RiggedConfiguration::RiggedConfiguration(std::vector<RcString> strings, std::size_t path_length)
    : strings_(std::move(strings)), path_length_(path_length) {
  for (const auto& s : strings_) {
    if (s.length < 1) {
      throw std::invalid_argument("RiggedConfiguration: string length must be >= 1, got " +
                                  std::to_string(s.length));
    }
  }
  canonicalize(strings_);
}

std::vector<int> RiggedConfiguration::partition() const { return lengths_of(strings_); }

int RiggedConfiguration::size() const noexcept {
  int n = 0;
  for (const auto& s : strings_) n += s.length;
  return n;
}

RiggedConfiguration RiggedConfiguration::with_path_length(std::size_t length) const {
  RiggedConfiguration out = *this;
  out.path_length_ = length;
  return out;
}

bool same_strings(const RiggedConfiguration& lhs, const RiggedConfiguration& rhs) {
  return lhs.strings() == rhs.strings();
}

int q_ell(std::span<const int> nu, int ell) {
  int q = 0;
  for (int n : nu) q += std::min(n, ell);
  return q;
}

int vacancy(std::span<const int> nu, int k, int ell) { return k - 2 * q_ell(nu, ell); }

RiggedConfiguration phi(const Path& b, TieBreak tie_break) {
  std::vector<RcString> strings;
  for (int k : b.ball_positions()) {
    // Longest singular string at length k-1. Strings are kept unsorted here, so
    // "canonical order" among equal lengths means by rigging, then by index.
    auto pick = pick_singular(strings, k - 1, [&](const RcString& x, const RcString& y) {
      if (x.length != y.length) return x.length > y.length;
      if (tie_break == TieBreak::kFirstCanonical) return x.rigging > y.rigging;
      return x.rigging <= y.rigging;
    });
    std::size_t changed;
    if (pick) {
      changed = *pick;
      ++strings[changed].length;
    } else {
      strings.push_back({1, 0});
      changed = strings.size() - 1;
    }
    strings[changed].rigging = vacancy_of(strings, k, strings[changed].length);
  }
  return RiggedConfiguration(std::move(strings), b.size());
}

// Undo the insertions right to left. At length k a singular string exists iff
// site k holds a ball, and the string Φ modified there is the shortest
// singular one: shorter strings gained vacancy when the box was added.
Path phi_inverse(const RiggedConfiguration& rc) {
  const int length = static_cast<int>(rc.path_length());
  std::vector<RcString> strings = rc.strings();
  std::vector<int> balls;

  for (int k = length; k >= 1 && !strings.empty(); --k) {
    for (const auto& s : strings) {
      if (s.rigging > vacancy_of(strings, k, s.length)) {
        throw NotInImageError("phi_inverse: rigging " + std::to_string(s.rigging) +
                              " of a length-" + std::to_string(s.length) +
                              " string exceeds its vacancy number at length " + std::to_string(k));
      }
    }
    auto pick = pick_singular(strings, k, [](const RcString& x, const RcString& y) {
      return x.length < y.length;
    });
    if (!pick) continue;

    balls.push_back(k);
    auto& s = strings[*pick];
    if (--s.length == 0) {
      strings.erase(strings.begin() + static_cast<std::ptrdiff_t>(*pick));
    } else {
      s.rigging = vacancy_of(strings, k - 1, s.length);
    }
  }
  if (!strings.empty()) {
    throw NotInImageError("phi_inverse: strings left over after reading all " +
                          std::to_string(length) + " sites");
  }

  std::reverse(balls.begin(), balls.end());
  Path out = Path::from_balls(balls, rc.path_length());
  if (phi(out) != rc) {
    throw NotInImageError("phi_inverse: configuration is not in the image of phi");
  }
  return out;
}

RiggedConfiguration linearized_evolve(const RiggedConfiguration& rc, CarrierCapacity l, int steps) {
  if (steps < 0) throw std::invalid_argument("linearized_evolve: steps must be >= 0");
  std::vector<RcString> strings = rc.strings();
  for (auto& s : strings) s.rigging += steps * l.clamp(s.length);
  return RiggedConfiguration(std::move(strings), rc.path_length());
}

}  // namespace boxball
