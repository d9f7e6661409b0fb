#include "boxball/crystal.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace boxball {

BoxState::BoxState(int empty_slots, int balls) : empty_(empty_slots), balls_(balls) {
  if (empty_slots < 0 || balls < 0) {
    throw std::invalid_argument("BoxState: negative count (" + std::to_string(empty_slots) +
                                "," + std::to_string(balls) + ")");
  }
}

Path::Path(std::vector<BoxState> sites) : sites_(std::move(sites)) {
  for (std::size_t i = 0; i < sites_.size(); ++i) {
    if (sites_[i].capacity() != 1) {
      throw std::invalid_argument("Path: site " + std::to_string(i + 1) +
                                  " does not have capacity 1");
    }
  }
}

Path Path::from_balls(std::span<const int> positions, std::size_t length) {
  std::vector<BoxState> sites(length, BoxState::vacuum());
  for (int p : positions) {
    if (p < 1 || static_cast<std::size_t>(p) > length) {
      throw std::invalid_argument("Path: ball position " + std::to_string(p) +
                                  " outside 1.." + std::to_string(length));
    }
    sites[p - 1] = BoxState::ball();
  }
  return Path(std::move(sites));
}

Path Path::from_balls(std::initializer_list<int> positions, std::size_t length) {
  return from_balls(std::span<const int>(positions.begin(), positions.size()), length);
}

Path Path::vacuum(std::size_t length) {
  return Path(std::vector<BoxState>(length, BoxState::vacuum()));
}

bool Path::has_ball(std::size_t position) const {
  return sites_.at(position - 1).balls() == 1;
}

int Path::ball_count() const noexcept {
  return static_cast<int>(std::count(sites_.begin(), sites_.end(), BoxState::ball()));
}

std::vector<int> Path::ball_positions() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < sites_.size(); ++i) {
    if (sites_[i].balls() == 1) out.push_back(static_cast<int>(i + 1));
  }
  return out;
}

Path Path::trimmed() const {
  auto sites = sites_;
  while (!sites.empty() && sites.back() == BoxState::vacuum()) sites.pop_back();
  Path out;
  out.sites_ = std::move(sites);
  return out;
}

Path Path::padded(std::size_t length) const {
  Path out = *this;
  if (out.sites_.size() < length) out.sites_.resize(length, BoxState::vacuum());
  return out;
}

bool same_state(const Path& lhs, const Path& rhs) { return lhs.trimmed() == rhs.trimmed(); }

std::pair<BoxState, BoxState> combinatorial_r(const BoxState& x, const BoxState& y) {
  const int a = x.empty_slots(), b = x.balls();
  const int c = y.empty_slots(), d = y.balls();
  const int gain = std::min(b, c);
  const int loss = std::min(a, d);
  return {BoxState(c - gain + loss, d + gain - loss), BoxState(a + gain - loss, b - gain + loss)};
}

int energy_h(const BoxState& x, const BoxState& y) { return std::min(x.empty_slots(), y.balls()); }

std::pair<AffineElement, AffineElement> affine_r(const AffineElement& x, const AffineElement& y) {
  const int h = energy_h(x.element, y.element);
  auto [left, right] = combinatorial_r(x.element, y.element);
  return {AffineElement{left, y.mode - h}, AffineElement{right, x.mode + h}};
}

namespace {

template <typename T, typename Map>
bool braid_agrees(const T& x, const T& y, const T& z, Map r) {
  auto r12 = [&](std::array<T, 3> t) {
    auto [p, q] = r(t[0], t[1]);
    return std::array<T, 3>{p, q, t[2]};
  };
  auto r23 = [&](std::array<T, 3> t) {
    auto [p, q] = r(t[1], t[2]);
    return std::array<T, 3>{t[0], p, q};
  };
  const std::array<T, 3> start{x, y, z};
  return r12(r23(r12(start))) == r23(r12(r23(start)));
}

}  // namespace

bool yang_baxter_holds(const BoxState& x, const BoxState& y, const BoxState& z) {
  return braid_agrees(x, y, z, combinatorial_r);
}

bool yang_baxter_holds(const AffineElement& x, const AffineElement& y, const AffineElement& z) {
  return braid_agrees(x, y, z, affine_r);
}

}  // namespace boxball
