#include "doctest.h"

#include <stdexcept>
#include <tuple>
#include <vector>

#include "boxball/crystal.hpp"

using namespace boxball;

namespace {

std::vector<BoxState> states_up_to(int capacity) {
  std::vector<BoxState> out;
  for (int s = 0; s <= capacity; ++s)
    for (int b = 0; b <= s; ++b) out.emplace_back(s - b, b);
  return out;
}

}  // namespace

TEST_CASE("R on small examples") {
  auto [p, q] = combinatorial_r({2, 0}, {0, 1});
  CHECK(p == BoxState(1, 0));
  CHECK(q == BoxState(1, 1));

  std::tie(p, q) = combinatorial_r({1, 1}, {1, 0});
  CHECK(p == BoxState(0, 1));
  CHECK(q == BoxState(2, 0));

  std::tie(p, q) = combinatorial_r({1, 0}, {0, 1});
  CHECK(p == BoxState(1, 0));
  CHECK(q == BoxState(0, 1));
}

TEST_CASE("R exchanges capacities, conserves balls and is an involution") {
  const auto states = states_up_to(6);
  for (const auto& x : states) {
    for (const auto& y : states) {
      const auto [p, q] = combinatorial_r(x, y);
      CHECK(p.capacity() == y.capacity());
      CHECK(q.capacity() == x.capacity());
      CHECK(p.balls() + q.balls() == x.balls() + y.balls());
      const auto [x2, y2] = combinatorial_r(p, q);
      CHECK(x2 == x);
      CHECK(y2 == y);
      if (x.capacity() == y.capacity()) {
        CHECK(p == x);
        CHECK(q == y);
      }
    }
  }
}

TEST_CASE("local energy") {
  CHECK(energy_h({2, 0}, {0, 1}) == 1);
  CHECK(energy_h({0, 3}, {2, 2}) == 0);
  CHECK(energy_h({3, 0}, {1, 4}) == 3);
}

TEST_CASE("affine R shifts modes by the energy") {
  const AffineElement x{{2, 0}, 5};
  const AffineElement y{{0, 1}, -1};
  const auto [p, q] = affine_r(x, y);
  CHECK(p.element == BoxState(1, 0));
  CHECK(q.element == BoxState(1, 1));
  CHECK(p.mode == -2);
  CHECK(q.mode == 6);
}

TEST_CASE("braid relation spot checks") {
  const auto states = states_up_to(3);
  for (const auto& x : states)
    for (const auto& y : states)
      for (const auto& z : states) {
        CHECK(yang_baxter_holds(x, y, z));
        CHECK(yang_baxter_holds(AffineElement{x, 1}, AffineElement{y, -2}, AffineElement{z, 0}));
      }
}

TEST_CASE("BoxState rejects negative counts") {
  CHECK_THROWS_AS(BoxState(-1, 0), std::invalid_argument);
  CHECK_THROWS_AS(BoxState(0, -2), std::invalid_argument);
  CHECK(BoxState::carrier(4) == BoxState(4, 0));
}

TEST_CASE("Path construction and queries") {
  const Path b = Path::from_balls({1, 2, 3, 8}, 17);
  CHECK(b.size() == 17);
  CHECK(b.ball_count() == 4);
  CHECK(b.has_ball(8));
  CHECK_FALSE(b.has_ball(4));
  CHECK(b.ball_positions() == std::vector<int>{1, 2, 3, 8});
  CHECK(b.trimmed().size() == 8);
  CHECK(b.trimmed().padded(20).size() == 20);
  CHECK(same_state(b, b.trimmed()));
  CHECK_FALSE(b == b.trimmed());
  CHECK(Path::vacuum(5).trimmed().empty());

  CHECK_THROWS_AS(Path::from_balls({0}, 4), std::invalid_argument);
  CHECK_THROWS_AS(Path::from_balls({5}, 4), std::invalid_argument);
  CHECK_THROWS_AS(Path(std::vector<BoxState>{BoxState(2, 0)}), std::invalid_argument);
}
