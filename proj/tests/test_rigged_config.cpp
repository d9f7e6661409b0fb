#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "boxball/errors.hpp"
#include "boxball/evolution.hpp"
#include "boxball/rigged_config.hpp"

using namespace boxball;

namespace {

Path path_from_mask(unsigned mask, int length) {
  std::vector<BoxState> sites;
  for (int i = 0; i < length; ++i) sites.push_back((mask >> i) & 1U ? BoxState::ball() : BoxState::vacuum());
  return Path(std::move(sites));
}

}  // namespace

TEST_CASE("Q and vacancy numbers") {
  const std::vector<int> nu{4, 3, 1};
  CHECK(q_ell(nu, 0) == 0);
  CHECK(q_ell(nu, 1) == 3);
  CHECK(q_ell(nu, 2) == 5);
  CHECK(q_ell(nu, 9) == 8);
  CHECK(vacancy(nu, 16, 2) == 6);
  CHECK(vacancy({}, 7, 3) == 7);
}

TEST_CASE("phi golden values") {
  const auto rei1 = phi(Path::from_balls({1, 2, 3, 8}, 17));
  CHECK(rei1.strings() == std::vector<RcString>{{3, -3}, {1, 4}});
  CHECK(rei1.path_length() == 17);
  CHECK(rei1.partition() == std::vector<int>{3, 1});
  CHECK(rei1.size() == 4);

  const auto rei2 = phi(Path::from_balls({7, 8, 10, 11}, 17));
  CHECK(rei2.strings() == std::vector<RcString>{{3, 3}, {1, 6}});

  CHECK(phi(Path::from_balls({1}, 1)).strings() == std::vector<RcString>{{1, -1}});
  CHECK(phi(Path::vacuum(4)).empty());
}

TEST_CASE("phi_inverse round trip on all paths up to length 10") {
  for (int length = 0; length <= 10; ++length) {
    for (unsigned mask = 0; mask < (1U << length); ++mask) {
      const Path b = path_from_mask(mask, length);
      const auto rc = phi(b);
      CHECK(phi_inverse(rc) == b);
      CHECK(phi(b, TieBreak::kLastCanonical) == rc);
    }
  }
}

TEST_CASE("rigged configurations outside the image") {
  CHECK_THROWS_AS(phi_inverse(RiggedConfiguration({{1, 5}}, 3)), NotInImageError);
  CHECK_THROWS_AS(phi_inverse(RiggedConfiguration({{4, 0}}, 3)), NotInImageError);
  CHECK_THROWS_AS(phi_inverse(RiggedConfiguration({{1, 0}, {1, 0}, {1, 0}}, 4)), DomainError);
  CHECK_THROWS_AS(RiggedConfiguration({{0, 1}}, 3), std::invalid_argument);
}

TEST_CASE("strings are kept in descending order") {
  const RiggedConfiguration rc({{1, 4}, {3, -3}}, 17);
  CHECK(rc.strings() == std::vector<RcString>{{3, -3}, {1, 4}});
  CHECK(rc.with_path_length(20).path_length() == 20);
  CHECK(same_strings(rc, rc.with_path_length(20)));
  CHECK_FALSE(rc == rc.with_path_length(20));
}

TEST_CASE("linearized evolution") {
  const Path b = Path::from_balls({1, 2, 3, 8}, 17);
  const auto rc = phi(b);
  const auto shifted = linearized_evolve(rc, CarrierCapacity(2), 3);
  CHECK(shifted.strings() == std::vector<RcString>{{3, 3}, {1, 7}});
  for (int l = 1; l <= 4; ++l) {
    const Path next = evolve_tl(b, l).output.trimmed();
    CHECK(same_strings(phi(next), linearized_evolve(rc, CarrierCapacity(l), 1)));
    CHECK(energy_el(b, l) == q_ell(rc.partition(), l));
  }
  CHECK(same_strings(linearized_evolve(rc, CarrierCapacity::infinite(), 1), phi(evolve_tinf(b))));
  CHECK(linearized_evolve(rc, CarrierCapacity(1), 0) == rc);
  CHECK_THROWS_AS(linearized_evolve(rc, CarrierCapacity(1), -1), std::invalid_argument);
}
