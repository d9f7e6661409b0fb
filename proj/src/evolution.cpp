#include "boxball/evolution.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace boxball {

CarrierCapacity::CarrierCapacity(int l) : value_(l) {
  if (l < 1) throw std::invalid_argument("carrier capacity must be >= 1, got " + std::to_string(l));
}

int CarrierCapacity::value() const {
  if (infinite_) throw std::logic_error("CarrierCapacity::value on infinite capacity");
  return value_;
}

SweepRecord evolve_tl(const Path& b, int l) {
  if (l < 1) throw std::invalid_argument("evolve_tl: l must be >= 1, got " + std::to_string(l));

  const BoxState empty_carrier = BoxState::carrier(l);
  std::vector<BoxState> out;
  SweepRecord rec;
  rec.carrier_trace.push_back(empty_carrier);

  auto step = [&](const BoxState& site) {
    const BoxState& carrier = rec.carrier_trace.back();
    rec.energies.push_back(energy_h(carrier, site));
    auto [emitted, next] = combinatorial_r(carrier, site);
    out.push_back(emitted);
    rec.carrier_trace.push_back(next);
  };

  for (const auto& site : b.sites()) step(site);
  // A loaded carrier drops one ball per vacuum site, so this loop runs at most l+1 times.
  do {
    step(BoxState::vacuum());
  } while (rec.carrier_trace.back() != empty_carrier);

  rec.output = Path(std::move(out));
  return rec;
}

Path evolve_tinf(const Path& b) {
  std::vector<char> occupied;
  occupied.reserve(b.size() + b.ball_count() + 1);
  for (const auto& s : b.sites()) occupied.push_back(s.balls() == 1);

  const auto start = b.ball_positions();
  for (int pos : start) {
    std::size_t dest = static_cast<std::size_t>(pos);  // 0-based index of the next site
    while (dest < occupied.size() && occupied[dest]) ++dest;
    if (dest == occupied.size()) occupied.push_back(false);
    occupied[dest] = true;
    occupied[pos - 1] = false;
  }

  std::vector<BoxState> sites;
  sites.reserve(occupied.size());
  for (char o : occupied) sites.push_back(o ? BoxState::ball() : BoxState::vacuum());
  return Path(std::move(sites));
}

Path evolve(const Path& b, CarrierCapacity l) {
  if (l.is_infinite()) return evolve_tinf(b);
  return evolve_tl(b, l.value()).output;
}

int energy_el(const Path& b, int l) {
  if (l < 0) throw std::invalid_argument("energy_el: l must be >= 0");
  if (l == 0) return 0;
  const auto rec = evolve_tl(b, l);
  return std::accumulate(rec.energies.begin(), rec.energies.end(), 0);
}

}  // namespace boxball
