#include "boxball/verify.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <stdexcept>

#include "boxball/crystal.hpp"
#include "boxball/errors.hpp"
#include "boxball/evolution.hpp"
#include "boxball/rigged_config.hpp"
#include "boxball/tau.hpp"
#include "boxball/text_io.hpp"

namespace boxball {

namespace {

class Tally {
 public:
  explicit Tally(SuiteReport& report) : report_(report) {}

  template <typename Describe>
  void check(bool ok, Describe&& describe) {
    ++report_.cases;
    if (ok) return;
    if (report_.failures++ == 0) report_.first_failure = describe();
  }

 private:
  SuiteReport& report_;
};

int or_default(int value, int fallback) { return value > 0 ? value : fallback; }

Path path_from_mask(std::uint32_t mask, int length) {
  std::vector<BoxState> sites;
  sites.reserve(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) sites.push_back((mask >> i) & 1U ? BoxState::ball() : BoxState::vacuum());
  return Path(std::move(sites));
}

// Every path of length exactly `length`.
void for_each_path(int length, const std::function<void(const Path&)>& fn) {
  const std::uint32_t total = std::uint32_t{1} << length;
  for (std::uint32_t mask = 0; mask < total; ++mask) fn(path_from_mask(mask, length));
}

// Every path of length 0..max_len.
void for_each_path_up_to(int max_len, const std::function<void(const Path&)>& fn) {
  for (int length = 0; length <= max_len; ++length) for_each_path(length, fn);
}

std::vector<BoxState> box_states_up_to(int capacity) {
  std::vector<BoxState> out;
  for (int s = 0; s <= capacity; ++s) {
    for (int b = 0; b <= s; ++b) out.emplace_back(s - b, b);
  }
  return out;
}

std::vector<BbbsSite> sites_up_to(int bound) {
  std::vector<BbbsSite> out;
  for (int a = 0; a <= bound; ++a)
    for (int b = 0; b <= bound; ++b)
      for (int c = 0; c <= bound; ++c) out.emplace_back(a, b, c);
  return out;
}

std::string show(const Path& b) { return "'" + format_bbs_state(b) + "'"; }
std::string show(const BoxState& x) {
  return "(" + std::to_string(x.empty_slots()) + "," + std::to_string(x.balls()) + ")";
}
std::string show(const BbbsState& s) { return "[" + format_bbbs_state(s) + "]"; }

BoxState random_box_state(std::mt19937_64& rng, int max_capacity) {
  std::uniform_int_distribution<int> cap(0, max_capacity);
  const int s = cap(rng);
  std::uniform_int_distribution<int> balls(0, s);
  const int b = balls(rng);
  return {s - b, b};
}

void yang_baxter_suite(const SuiteOptions& opt, SuiteReport& r) {
  Tally tally(r);
  const auto states = box_states_up_to(4);
  for (const auto& x : states)
    for (const auto& y : states)
      for (const auto& z : states) {
        tally.check(yang_baxter_holds(x, y, z),
                    [&] { return "R braid fails on " + show(x) + show(y) + show(z); });
        for (int d1 = -2; d1 <= 2; ++d1)
          for (int d2 = -2; d2 <= 2; ++d2)
            for (int d3 = -2; d3 <= 2; ++d3) {
              tally.check(yang_baxter_holds(AffineElement{x, d1}, AffineElement{y, d2}, AffineElement{z, d3}),
                          [&] { return "affine R braid fails on " + show(x) + show(y) + show(z); });
            }
      }

  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> mode(-5, 5);
  for (int i = 0; i < 10000; ++i) {
    const auto x = random_box_state(rng, 8), y = random_box_state(rng, 8), z = random_box_state(rng, 8);
    tally.check(yang_baxter_holds(x, y, z), [&] { return "R braid fails on " + show(x) + show(y) + show(z); });
    const AffineElement ax{x, mode(rng)}, ay{y, mode(rng)}, az{z, mode(rng)};
    tally.check(yang_baxter_holds(ax, ay, az),
                [&] { return "affine R braid fails on " + show(x) + show(y) + show(z); });
  }
}

void commutativity_suite(const SuiteOptions& opt, SuiteReport& r) {
  Tally tally(r);
  for_each_path_up_to(or_default(opt.max_len, 12), [&](const Path& b) {
    std::vector<Path> once;
    std::vector<int> energy;
    for (int l = 1; l <= 6; ++l) {
      once.push_back(evolve_tl(b, l).output);
      energy.push_back(energy_el(b, l));
    }
    for (int l = 1; l <= 6; ++l) {
      for (int k = 1; k <= 6; ++k) {
        const Path lk = evolve_tl(once[k - 1], l).output;
        const Path kl = evolve_tl(once[l - 1], k).output;
        tally.check(same_state(lk, kl), [&] {
          return "T_" + std::to_string(l) + " T_" + std::to_string(k) + " != T_" + std::to_string(k) +
                 " T_" + std::to_string(l) + " on " + show(b);
        });
        tally.check(energy_el(once[k - 1], l) == energy[l - 1], [&] {
          return "E_" + std::to_string(l) + " not conserved by T_" + std::to_string(k) + " on " + show(b);
        });
      }
    }
  });
}

void bijection_suite(const SuiteOptions& opt, SuiteReport& r) {
  Tally tally(r);
  for_each_path(or_default(opt.max_len, 14), [&](const Path& b) {
    bool ok = false;
    try {
      ok = phi_inverse(phi(b)) == b;
    } catch (const NotInImageError&) {
    }
    tally.check(ok, [&] { return "phi_inverse(phi(b)) != b for " + show(b); });
  });
}

void tie_break_suite(const SuiteOptions& opt, SuiteReport& r) {
  Tally tally(r);
  for_each_path_up_to(or_default(opt.max_len, 12), [&](const Path& b) {
    tally.check(phi(b, TieBreak::kFirstCanonical) == phi(b, TieBreak::kLastCanonical),
                [&] { return "tie-break changes phi on " + show(b); });
  });
}

void linearization_suite(const SuiteOptions& opt, SuiteReport& r) {
  Tally tally(r);
  for_each_path_up_to(or_default(opt.max_len, 12), [&](const Path& b) {
    const auto rc = phi(b);
    for (int l = 1; l <= 6; ++l) {
      const auto evolved = phi(evolve_tl(b, l).output.trimmed());
      tally.check(same_strings(evolved, linearized_evolve(rc, CarrierCapacity(l), 1)),
                  [&] { return "phi(T_" + std::to_string(l) + " b) is not the shifted rigging for " + show(b); });
    }
  });
}

void energy_suite(const SuiteOptions& opt, SuiteReport& r) {
  Tally tally(r);
  for_each_path_up_to(or_default(opt.max_len, 12), [&](const Path& b) {
    const auto nu = phi(b).partition();
    for (int l = 0; l <= 6; ++l) {
      tally.check(energy_el(b, l) == q_ell(nu, l),
                  [&] { return "E_" + std::to_string(l) + " != Q_" + std::to_string(l) + " on " + show(b); });
    }
  });
}

void tau_oracle_suite(const SuiteOptions& opt, SuiteReport& r) {
  Tally tally(r);
  for_each_path_up_to(or_default(opt.max_len, 10), [&](const Path& b) {
    const TauContext ctx(phi(b));
    for (int rr = 0; rr <= 1; ++rr) {
      for (int k = 0; k <= static_cast<int>(b.size()); ++k) {
        tally.check(tau(ctx, rr, k) == tau_ballcount_oracle(b, rr, k), [&] {
          return "tau_" + std::to_string(rr) + "(" + std::to_string(k) + ") disagrees with ball counts on " +
                 show(b);
        });
      }
    }
  });
}

void tau_solution_suite(const SuiteOptions& opt, SuiteReport& r) {
  Tally tally(r);
  for_each_path_up_to(or_default(opt.max_len, 12), [&](const Path& b) {
    bool ok = false;
    try {
      ok = path_from_tau(TauContext(phi(b)), b.size()) == b;
    } catch (const DomainError&) {
    }
    tally.check(ok, [&] { return "tau formula does not reproduce " + show(b); });
  });
}

void ivp_suite(const SuiteOptions& opt, SuiteReport& r) {
  Tally tally(r);
  const std::vector<CarrierCapacity> carriers{CarrierCapacity(1), CarrierCapacity(2), CarrierCapacity(3),
                                              CarrierCapacity::infinite()};
  for_each_path_up_to(or_default(opt.max_len, 10), [&](const Path& b) {
    for (const auto& l : carriers) {
      Path iterated = b;
      for (int t = 0; t <= 4; ++t) {
        if (t > 0) iterated = evolve(iterated, l);
        tally.check(same_state(solve_ivp(b, t, l), iterated), [&] {
          return "solve_ivp(t=" + std::to_string(t) + ", l=" +
                 (l.is_infinite() ? std::string("inf") : std::to_string(l.value())) + ") wrong on " + show(b);
        });
      }
    }
  });
}

void whurl_suite(const SuiteOptions& opt, SuiteReport& r) {
  Tally tally(r);
  auto check_triple = [&](const BbbsSite& x, const BbbsSite& y, const BbbsSite& z) {
    auto r12 = [](std::array<BbbsSite, 3> t) {
      auto [p, q] = whurl(t[0], t[1]);
      return std::array<BbbsSite, 3>{p, q, t[2]};
    };
    auto r23 = [](std::array<BbbsSite, 3> t) {
      auto [p, q] = whurl(t[1], t[2]);
      return std::array<BbbsSite, 3>{t[0], p, q};
    };
    bool ok = false;
    try {
      const std::array<BbbsSite, 3> start{x, y, z};
      ok = r12(r23(r12(start))) == r23(r12(r23(start)));
    } catch (const DomainError&) {
    }
    tally.check(ok, [&] {
      return "whurl braid fails on " + format_bbbs_site(x) + format_bbbs_site(y) + format_bbbs_site(z);
    });
  };
  auto check_pair = [&](const BbbsSite& x, const BbbsSite& y) {
    bool ok = false;
    try {
      const auto [p, q] = whurl(x, y);
      ok = p.empty_places() + q.empty_places() == x.empty_places() + y.empty_places() &&
           p.baskets() + q.baskets() == x.baskets() + y.baskets() &&
           p.balls() + q.balls() == x.balls() + y.balls();
    } catch (const DomainError&) {
    }
    tally.check(ok, [&] {
      return "whurl leaves the cone or breaks coordinate sums on " + format_bbbs_site(x) + format_bbbs_site(y);
    });
  };

  const auto sites = sites_up_to(3);
  for (const auto& x : sites) {
    for (const auto& y : sites) {
      check_pair(x, y);
      for (const auto& z : sites) check_triple(x, y, z);
    }
  }
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> coord(0, 6);
  auto draw = [&] {
    const int a = coord(rng), b = coord(rng), c = coord(rng);
    return BbbsSite(a, b, c);
  };
  for (int i = 0; i < 10000; ++i) {
    const auto x = draw(), y = draw(), z = draw();
    check_pair(x, y);
    check_pair(y, z);
    check_triple(x, y, z);
  }
}

void bbbs_commutativity_suite(const SuiteOptions& opt, SuiteReport& r) {
  Tally tally(r);
  std::mt19937_64 rng(opt.seed);
  const int max_sites = or_default(opt.max_len, 10);
  for (int i = 0; i < 300; ++i) {
    const auto s = random_bbbs_state(rng, max_sites);
    for (int l = 1; l <= 5; ++l) {
      for (int k = l + 1; k <= 5; ++k) {
        tally.check(same_state(bbbs_evolve_tl(bbbs_evolve_tl(s, k), l), bbbs_evolve_tl(bbbs_evolve_tl(s, l), k)),
                    [&] {
                      return "BBBS T_" + std::to_string(l) + " and T_" + std::to_string(k) + " do not commute on " +
                             show(s);
                    });
      }
    }
    const int content = total_content(s);
    for (int l = std::max(content, 1); l <= content + 2; ++l) {
      tally.check(same_state(bbbs_evolve_tl(s, l), bbbs_evolve_tinf(s)), [&] {
        return "BBBS T_" + std::to_string(l) + " differs from the combinatorial T_inf on " + show(s);
      });
    }
  }
}

void bbbs_reduction_suite(const SuiteOptions& opt, SuiteReport& r) {
  Tally tally(r);
  for (const auto& x : box_states_up_to(6)) {
    for (const auto& y : box_states_up_to(6)) {
      const auto [p, q] = combinatorial_r(x, y);
      const auto [wp, wq] = whurl(BbbsSite(x.empty_slots(), 0, x.balls()), BbbsSite(y.empty_slots(), 0, y.balls()));
      tally.check(wp == BbbsSite(p.empty_slots(), 0, p.balls()) && wq == BbbsSite(q.empty_slots(), 0, q.balls()),
                  [&] { return "basket-free whurl differs from R on " + show(x) + show(y); });
    }
  }

  std::mt19937_64 rng(opt.seed);
  const int max_len = or_default(opt.max_len, 16);
  std::uniform_int_distribution<int> length(0, max_len);
  std::bernoulli_distribution coin(0.4);
  for (int i = 0; i < 1000; ++i) {
    std::vector<BoxState> sites;
    BbbsState state;
    const int n = length(rng);
    for (int j = 0; j < n; ++j) {
      const bool ball = coin(rng);
      sites.push_back(ball ? BoxState::ball() : BoxState::vacuum());
      state.push_back(ball ? BbbsSite::ball() : BbbsSite::vacuum());
    }
    const Path expected = evolve_tinf(Path(std::move(sites))).trimmed();
    BbbsState as_bbbs;
    for (const auto& site : expected.sites()) as_bbbs.push_back(site.balls() ? BbbsSite::ball() : BbbsSite::vacuum());
    tally.check(bbbs_evolve_tinf(state) == as_bbbs,
                [&] { return "BBBS T_inf differs from BBS T_inf on " + show(state); });
  }
}

void decomposition_suite(const SuiteOptions& opt, SuiteReport& r) {
  Tally tally(r);
  std::mt19937_64 rng(opt.seed);
  const int max_sites = or_default(opt.max_len, 10);
  for (int i = 0; i < 100; ++i) {
    BbbsState s = random_bbbs_state(rng, max_sites);
    const auto content = decompose(s);
    for (int t = 1; t <= 20; ++t) {
      s = bbbs_evolve_tinf(s);
      tally.check(decompose(s) == content, [&] {
        return "soliton content changes after " + std::to_string(t) + " steps at " + show(s);
      });
    }
  }
}

void phase_shift_suite(const SuiteOptions&, SuiteReport& r) {
  Tally tally(r);
  for (int k = 1; k <= 3; ++k) {
    for (int l = k + 1; l <= 5; ++l) {
      const int shift = phase_shift(l, SolitonDescriptor::fermion(k));
      tally.check(shift == -2 * k, [&] {
        return "F_" + std::to_string(k) + " under F_" + std::to_string(l) + " shifted " + std::to_string(shift);
      });
    }
  }
  const std::vector<std::vector<int>> targets{{1}, {2}, {3}, {1, 2}, {2, 1}, {3, 1, 1}};
  for (const auto& amps : targets) {
    for (int l = 2; l <= 5; ++l) {
      const int shift = phase_shift(l, SolitonDescriptor::bosons(amps));
      tally.check(shift == -1, [&] {
        return "basket soliton under F_" + std::to_string(l) + " shifted " + std::to_string(shift);
      });
    }
  }
}

using SuiteFn = void (*)(const SuiteOptions&, SuiteReport&);

const std::map<std::string, SuiteFn, std::less<>>& registry() {
  static const std::map<std::string, SuiteFn, std::less<>> suites{
      {"yang-baxter", yang_baxter_suite},
      {"commutativity", commutativity_suite},
      {"bijection", bijection_suite},
      {"tie-break", tie_break_suite},
      {"linearization", linearization_suite},
      {"energy", energy_suite},
      {"tau-oracle", tau_oracle_suite},
      {"tau-solution", tau_solution_suite},
      {"ivp", ivp_suite},
      {"whurl", whurl_suite},
      {"bbbs-commutativity", bbbs_commutativity_suite},
      {"bbbs-reduction", bbbs_reduction_suite},
      {"decomposition", decomposition_suite},
      {"phase-shift", phase_shift_suite},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteReport run_suite(std::string_view name, const SuiteOptions& options) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
  SuiteReport report;
  report.name = it->first;
  try {
    it->second(options, report);
  } catch (const std::exception& e) {
    ++report.failures;
    if (report.first_failure.empty()) report.first_failure = std::string("aborted: ") + e.what();
  }
  return report;
}

BbbsState random_bbbs_state(std::mt19937_64& rng, int max_sites, int max_baskets, int max_balls) {
  std::uniform_int_distribution<int> length(1, max_sites);
  std::uniform_int_distribution<int> baskets(0, max_baskets);
  BbbsState s;
  int balls_left = max_balls;
  const int n = length(rng);
  for (int j = 0; j < n; ++j) {
    const int b = baskets(rng);
    std::uniform_int_distribution<int> balls(0, 1 + b);
    const int c = std::min(balls(rng), balls_left);
    balls_left -= c;
    s.emplace_back(1 + b - c, b, c);
  }
  return trimmed(std::move(s));
}

}  // namespace boxball
