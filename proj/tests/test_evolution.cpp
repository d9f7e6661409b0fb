#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "boxball/evolution.hpp"

using namespace boxball;

namespace {

Path path_from_mask(unsigned mask, int length) {
  std::vector<BoxState> sites;
  for (int i = 0; i < length; ++i) sites.push_back((mask >> i) & 1U ? BoxState::ball() : BoxState::vacuum());
  return Path(std::move(sites));
}

}  // namespace

TEST_CASE("T_l on a small state") {
  const Path b = Path::from_balls({1, 2, 3, 8}, 8);
  CHECK(evolve_tl(b, 1).output.ball_positions() == std::vector<int>{2, 3, 4, 9});
  CHECK(evolve_tl(b, 3).output.ball_positions() == std::vector<int>{4, 5, 6, 9});
  CHECK(evolve_tl(b, 4).output.ball_positions() == std::vector<int>{4, 5, 6, 9});
  CHECK(evolve_tinf(b).ball_positions() == std::vector<int>{4, 5, 6, 9});
  CHECK(evolve_tl(b, 1).output.size() == 9);
}

TEST_CASE("sweep record") {
  const Path b = Path::from_balls({1, 2, 3, 8}, 8);
  const auto one = evolve_tl(b, 1);
  const std::vector<BoxState> trace{{1, 0}, {0, 1}, {0, 1}, {0, 1}, {1, 0},
                                    {1, 0}, {1, 0}, {1, 0}, {0, 1}, {1, 0}};
  CHECK(one.carrier_trace == trace);
  CHECK(one.energies == std::vector<int>{1, 0, 0, 0, 0, 0, 0, 1, 0});
  CHECK(evolve_tl(b, 3).energies == std::vector<int>{1, 1, 1, 0, 0, 0, 0, 1, 0});
  CHECK(energy_el(b, 0) == 0);
  CHECK(energy_el(b, 1) == 2);
  CHECK(energy_el(b, 3) == 4);
  CHECK(energy_el(b, 4) == 4);
}

TEST_CASE("evolution of the vacuum and the empty path") {
  CHECK(evolve_tl(Path::vacuum(6), 2).output.ball_count() == 0);
  CHECK(evolve_tinf(Path{}).ball_count() == 0);
  CHECK(energy_el(Path{}, 3) == 0);
}

TEST_CASE("properties over short paths") {
  for (int length = 0; length <= 9; ++length) {
    for (unsigned mask = 0; mask < (1U << length); ++mask) {
      const Path b = path_from_mask(mask, length);
      const int n = b.ball_count();
      int previous_energy = 0;
      for (int l = 1; l <= 6; ++l) {
        const Path out = evolve_tl(b, l).output;
        CHECK(out.ball_count() == n);
        const int e = energy_el(b, l);
        CHECK(e >= previous_energy);
        previous_energy = e;
        if (l >= n) {
          CHECK(same_state(out, evolve_tinf(b)));
          CHECK(e == n);
        }
      }
    }
  }
}

TEST_CASE("carrier capacity") {
  CHECK_THROWS_AS(CarrierCapacity(0), std::invalid_argument);
  CHECK_THROWS_AS(CarrierCapacity::infinite().value(), std::logic_error);
  CHECK(CarrierCapacity(3).clamp(5) == 3);
  CHECK(CarrierCapacity::infinite().clamp(5) == 5);
  CHECK_THROWS_AS(evolve_tl(Path::vacuum(2), 0), std::invalid_argument);
  CHECK_THROWS_AS(energy_el(Path::vacuum(2), -1), std::invalid_argument);
  const Path b = Path::from_balls({2, 3}, 5);
  CHECK(same_state(evolve(b, CarrierCapacity(1)), evolve_tl(b, 1).output));
  CHECK(same_state(evolve(b, CarrierCapacity::infinite()), evolve_tinf(b)));
}
