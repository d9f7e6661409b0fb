#include "boxball/bbbs.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>
#include <string>

#include "boxball/errors.hpp"

namespace boxball {

BbbsSite::BbbsSite(int empty_places, int baskets, int balls)
    : a_(empty_places), b_(baskets), c_(balls) {
  if (empty_places < 0 || baskets < 0 || balls < 0) {
    throw std::invalid_argument("BbbsSite: negative coordinate in (" + std::to_string(empty_places) +
                                "," + std::to_string(baskets) + "," + std::to_string(balls) + ")");
  }
}

BbbsSite BbbsSite::empty_baskets(int i) {
  if (i < 1) throw std::invalid_argument("B_i needs i >= 1");
  return {i + 1, i, 0};
}

BbbsSite BbbsSite::loaded_box(int i) {
  if (i < 1) throw std::invalid_argument("U_i needs i >= 1");
  return {i, i, 1};
}

std::optional<int> BbbsSite::as_empty_baskets() const noexcept {
  if (b_ >= 1 && c_ == 0 && a_ == b_ + 1) return b_;
  return std::nullopt;
}

std::optional<int> BbbsSite::as_loaded_box() const noexcept {
  if (b_ >= 1 && c_ == 1 && a_ == b_) return b_;
  return std::nullopt;
}

bool BbbsSite::is_named() const noexcept {
  return is_vacuum() || is_ball() || as_empty_baskets() || as_loaded_box();
}

BbbsState trimmed(BbbsState s) {
  while (!s.empty() && s.back().is_vacuum()) s.pop_back();
  return s;
}

bool same_state(const BbbsState& lhs, const BbbsState& rhs) { return trimmed(lhs) == trimmed(rhs); }

int total_content(const BbbsState& s) {
  int n = 0;
  for (const auto& site : s) n += site.baskets() + site.balls();
  return n;
}

std::pair<BbbsSite, BbbsSite> whurl(const BbbsSite& x, const BbbsSite& y) {
  const int a = x.empty_places(), b = x.baskets(), c = x.balls();
  const int d = y.empty_places(), e = y.baskets(), f = y.balls();
  const int m1 = std::min({a + b, a + c, b + f});
  const int m2 = std::min({e + c, d + c, d + b});
  const int m3 = std::min({a + e, d + f, e + f});

  const std::array<int, 6> out{d + m1 - m2, e + m1 - m3, f + m2 - m3,
                               a - m1 + m2, b - m1 + m3, c - m2 + m3};
  if (std::any_of(out.begin(), out.end(), [](int v) { return v < 0; })) {
    throw DomainError("whurl: negative output coordinate for (" + std::to_string(a) + "," +
                      std::to_string(b) + "," + std::to_string(c) + ") x (" + std::to_string(d) +
                      "," + std::to_string(e) + "," + std::to_string(f) + ")");
  }
  return {BbbsSite(out[0], out[1], out[2]), BbbsSite(out[3], out[4], out[5])};
}

BbbsState bbbs_evolve_tl(const BbbsState& s, int l, const BbbsSweepOptions& options) {
  if (l < 1) throw std::invalid_argument("bbbs_evolve_tl: l must be >= 1, got " + std::to_string(l));
  const std::size_t cap =
      options.max_padding ? options.max_padding : 8 * (static_cast<std::size_t>(total_content(s)) + 1) + 8;

  const BbbsSite empty_carrier(l, 0, 0);
  BbbsSite carrier = empty_carrier;
  BbbsState out;
  out.reserve(s.size() + 1);
  for (const auto& site : s) {
    auto [emitted, next] = whurl(carrier, site);
    out.push_back(emitted);
    carrier = next;
  }
  std::size_t padded = 0;
  do {
    if (padded++ == cap) {
      throw IterationCapError("bbbs_evolve_tl: carrier not empty after " + std::to_string(cap) +
                              " padded sites");
    }
    auto [emitted, next] = whurl(carrier, BbbsSite::vacuum());
    out.push_back(emitted);
    carrier = next;
  } while (carrier != empty_carrier);
  return trimmed(std::move(out));
}

BbbsState bbbs_evolve_tinf(const BbbsState& s) {
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (!s[j].is_physical()) {
      throw DomainError("bbbs_evolve_tinf: site " + std::to_string(j + 1) +
                        " is not a capacity-one box with baskets");
    }
  }
  const std::size_t n = s.size() + static_cast<std::size_t>(total_content(s)) + 2;
  auto at = [&](std::size_t j) { return j < s.size() ? s[j] : BbbsSite::vacuum(); };

  // Phase 1: empty baskets move one site right. The box fills first, so a
  // site with c balls has max(c - 1, 0) full baskets.
  std::vector<int> baskets(n, 0);
  int moving = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const BbbsSite site = at(j);
    const int full = std::max(site.balls() - 1, 0);
    baskets[j] = full + moving;
    moving = site.baskets() - full;
  }

  // Phase 2: balls left to right, each to the next site with a free slot.
  // Sites to the right of the current one still hold their unmoved balls.
  std::vector<int> arrived(n, 0);
  std::size_t cursor = 0;
  for (std::size_t j = 0; j < n; ++j) {
    for (int k = 0; k < at(j).balls(); ++k) {
      cursor = std::max(cursor, j + 1);
      while (cursor < n && 1 + baskets[cursor] - at(cursor).balls() - arrived[cursor] <= 0) ++cursor;
      if (cursor == n) throw std::logic_error("bbbs_evolve_tinf: ran past the padded state");
      ++arrived[cursor];
    }
  }

  BbbsState out;
  out.reserve(n);
  for (std::size_t j = 0; j < n; ++j) out.emplace_back(1 + baskets[j] - arrived[j], baskets[j], arrived[j]);
  return trimmed(std::move(out));
}

bool is_slow_soliton(std::span<const BbbsSite> segment) {
  if (segment.empty()) throw std::invalid_argument("is_slow_soliton: empty segment");
  for (const auto& site : segment) {
    if (site.is_vacuum() || !site.is_named()) {
      throw std::invalid_argument("is_slow_soliton: segment sites must be F, B_i or U_i");
    }
  }
  for (std::size_t i = 0; i + 1 < segment.size(); ++i) {
    if (segment[i].is_ball() && (segment[i + 1].is_ball() || segment[i + 1].as_loaded_box())) {
      return false;
    }
  }
  return true;
}

std::vector<Segment> segments(const BbbsState& s) {
  std::vector<Segment> out;
  for (std::size_t i = 0; i < s.size();) {
    if (s[i].is_vacuum()) {
      ++i;
      continue;
    }
    Segment seg{i, {}};
    while (i < s.size() && !s[i].is_vacuum()) seg.sites.push_back(s[i++]);
    out.push_back(std::move(seg));
  }
  return out;
}

std::optional<int> free_velocity(std::span<const BbbsSite> segment) {
  if (segment.empty()) return std::nullopt;
  if (std::all_of(segment.begin(), segment.end(), [](const BbbsSite& x) { return x.is_ball(); })) {
    return static_cast<int>(segment.size());
  }
  for (const auto& site : segment) {
    if (site.is_vacuum() || !site.is_named()) return std::nullopt;
  }
  if (is_slow_soliton(segment)) return 1;
  return std::nullopt;
}

namespace {

bool is_fermion_run(const std::vector<BbbsSite>& sites) {
  return std::all_of(sites.begin(), sites.end(), [](const BbbsSite& x) { return x.is_ball(); });
}

bool is_boson_run(const std::vector<BbbsSite>& sites) {
  return std::all_of(sites.begin(), sites.end(),
                     [](const BbbsSite& x) { return x.as_empty_baskets().has_value(); });
}

bool is_elementary(const Segment& seg) { return is_fermion_run(seg.sites) || is_boson_run(seg.sites); }

// Three consecutive states are asymptotic when every segment keeps its shape
// and moves by its free velocity, and velocities do not decrease to the right
// so no collision is pending.
bool separated(const std::array<BbbsState, 3>& window) {
  std::array<std::vector<Segment>, 3> segs;
  for (std::size_t t = 0; t < 3; ++t) segs[t] = segments(window[t]);
  if (segs[0].size() != segs[1].size() || segs[1].size() != segs[2].size()) return false;

  int previous = 0;
  for (std::size_t i = 0; i < segs[0].size(); ++i) {
    const auto v = free_velocity(segs[0][i].sites);
    if (!v || *v < previous) return false;
    previous = *v;
    for (std::size_t t = 0; t < 2; ++t) {
      if (segs[t + 1][i].sites != segs[t][i].sites) return false;
      if (segs[t + 1][i].start != segs[t][i].start + static_cast<std::size_t>(*v)) return false;
    }
  }
  return true;
}

struct Separation {
  BbbsState state;
  std::size_t steps = 0;  // T_∞ applications from the start state
};

Separation evolve_until_separated(const BbbsState& start, std::size_t max_steps) {
  std::array<BbbsState, 3> window{start, bbbs_evolve_tinf(start), {}};
  window[2] = bbbs_evolve_tinf(window[1]);
  std::size_t steps = 2;
  while (!separated(window)) {
    if (steps >= max_steps) {
      throw IterationCapError("no separated state within " + std::to_string(max_steps) + " steps");
    }
    window[0] = std::move(window[1]);
    window[1] = std::move(window[2]);
    window[2] = bbbs_evolve_tinf(window[1]);
    ++steps;
  }
  return {std::move(window[2]), steps};
}

std::size_t default_step_cap(const BbbsState& s) {
  return 10 * (s.size() + static_cast<std::size_t>(total_content(s))) + 64;
}

BbbsState strip_leading_vacuum(BbbsState s) {
  const auto first = std::find_if(s.begin(), s.end(), [](const BbbsSite& x) { return !x.is_vacuum(); });
  s.erase(s.begin(), first);
  return s;
}

int total_balls(const BbbsState& s) {
  int n = 0;
  for (const auto& site : s) n += site.balls();
  return n;
}

}  // namespace

SolitonContent decompose(const BbbsState& s, const DecomposeOptions& options) {
  BbbsState state = strip_leading_vacuum(trimmed(s));
  SolitonContent content;
  if (state.empty()) return content;

  const int amount = total_content(state);
  const int probe = options.probe ? options.probe : amount + 1;
  if (probe <= total_balls(state) || probe < 2) {
    throw std::invalid_argument("decompose: probe F_" + std::to_string(probe) +
                                " is not faster than every soliton of the state");
  }
  const int gap = options.gap ? options.gap : probe;
  const std::size_t max_probes =
      options.max_probes ? options.max_probes : 10 * (static_cast<std::size_t>(amount) + 1);
  auto step_cap = [&](const BbbsState& x) {
    return options.max_steps ? options.max_steps : default_step_cap(x);
  };

  state = evolve_until_separated(state, step_cap(state)).state;
  std::size_t rounds = 0;
  for (;;) {
    const auto segs = segments(state);
    if (std::all_of(segs.begin(), segs.end(), is_elementary)) break;
    if (rounds++ == max_probes) {
      throw IterationCapError("decompose: still composite after " + std::to_string(max_probes) +
                              " probes");
    }

    BbbsState probed(static_cast<std::size_t>(probe), BbbsSite::ball());
    probed.resize(probed.size() + static_cast<std::size_t>(gap), BbbsSite::vacuum());
    probed.insert(probed.end(), state.begin(), state.end());
    BbbsState after = evolve_until_separated(probed, step_cap(probed)).state;

    // The probe is the fastest soliton, so it leaves as the rightmost segment.
    const auto out_segs = segments(after);
    const Segment& last = out_segs.back();
    if (!is_fermion_run(last.sites) || last.sites.size() != static_cast<std::size_t>(probe)) {
      throw DomainError("decompose: probe did not emerge intact");
    }
    after.resize(last.start);
    state = strip_leading_vacuum(trimmed(std::move(after)));
  }

  for (const auto& seg : segments(state)) {
    if (is_fermion_run(seg.sites)) {
      content.fermionic.push_back(static_cast<int>(seg.sites.size()));
    } else {
      for (const auto& site : seg.sites) content.bosonic.push_back(*site.as_empty_baskets());
    }
  }
  std::sort(content.fermionic.begin(), content.fermionic.end(), std::greater<>());
  std::sort(content.bosonic.begin(), content.bosonic.end(), std::greater<>());
  return content;
}

SolitonDescriptor SolitonDescriptor::fermion(int k) {
  if (k < 1) throw std::invalid_argument("F_k needs k >= 1");
  return {std::vector<BbbsSite>(static_cast<std::size_t>(k), BbbsSite::ball())};
}

SolitonDescriptor SolitonDescriptor::bosons(std::span<const int> amplitudes) {
  if (amplitudes.empty()) throw std::invalid_argument("bosonic soliton needs at least one B_i");
  SolitonDescriptor d;
  for (int i : amplitudes) d.sites.push_back(BbbsSite::empty_baskets(i));
  return d;
}

bool SolitonDescriptor::is_fermion() const noexcept { return is_fermion_run(sites); }

int phase_shift(int probe_length, const SolitonDescriptor& target, const PhaseShiftOptions& options) {
  if (target.sites.empty() || !(target.is_fermion() || is_boson_run(target.sites))) {
    throw std::invalid_argument("phase_shift: target must be F_k or a run of B_i");
  }
  if (target.is_fermion() ? probe_length <= static_cast<int>(target.sites.size()) : probe_length < 2) {
    throw std::invalid_argument("phase_shift: probe F_" + std::to_string(probe_length) +
                                " is not faster than the target");
  }
  const std::size_t gap = options.gap ? static_cast<std::size_t>(options.gap)
                                      : static_cast<std::size_t>(probe_length);
  const std::size_t origin = static_cast<std::size_t>(probe_length) + gap;

  BbbsState start(static_cast<std::size_t>(probe_length), BbbsSite::ball());
  start.resize(origin, BbbsSite::vacuum());
  start.insert(start.end(), target.sites.begin(), target.sites.end());
  const std::size_t cap = options.max_steps ? options.max_steps : default_step_cap(start);
  const auto result = evolve_until_separated(start, cap);

  const auto segs = segments(result.state);
  if (segs.size() != 2 || segs[0].sites != target.sites) {
    throw DomainError("phase_shift: target did not emerge intact behind the probe");
  }

  BbbsState alone(origin, BbbsSite::vacuum());
  alone.insert(alone.end(), target.sites.begin(), target.sites.end());
  for (std::size_t t = 0; t < result.steps; ++t) alone = bbbs_evolve_tinf(alone);
  const auto free_segs = segments(alone);

  return static_cast<int>(segs[0].start) - static_cast<int>(free_segs.front().start);
}

}  // namespace boxball
