// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "boxball/bbbs.hpp"
#include "boxball/evolution.hpp"
#include "boxball/rigged_config.hpp"
#include "boxball/tau.hpp"
#include "boxball/text_io.hpp"
#include "boxball/verify.hpp"

using namespace boxball;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double limit_ms;  // 0: no runtime bound
  std::function<Outcome()> body;
};

Outcome from_suites(std::initializer_list<const char*> names) {
  Outcome out{true, {}};
  for (const char* name : names) {
    const SuiteReport r = run_suite(name);
    out.ok = out.ok && r.passed();
    if (!out.detail.empty()) out.detail += "; ";
    out.detail += r.name + " " + std::to_string(r.cases) + " cases, " + std::to_string(r.failures) + " failures";
    if (!r.first_failure.empty()) out.detail += " (" + r.first_failure + ")";
  }
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

std::string show(const RiggedConfiguration& rc) { return format_rigged_configuration(rc); }

Outcome bbs_trace() {
  const std::vector<std::vector<int>> expected{{4, 5, 6, 9}, {7, 8, 10, 11}, {9, 12, 13, 14}, {10, 15, 16, 17}};
  Path b = parse_bbs_state("111....1").padded(17);
  Outcome out{true, {}};
  for (const auto& want : expected) {
    b = evolve_tinf(b);
    const auto got = b.ball_positions();
    out.ok = out.ok && got == want && b.size() == 17;
    out.detail += join(got);
  }
  return out;
}

Outcome vacancy_value() {
  const std::vector<int> nu{4, 3, 1};
  const int p = vacancy(nu, 16, 2);
  return {p == 6, "P_2(16,(4,3,1)) = " + std::to_string(p)};
}

Outcome phi_golden() {
  const auto rei1 = phi(Path::from_balls({1, 2, 3, 8}, 17));
  const auto rei2 = phi(Path::from_balls({7, 8, 10, 11}, 17));
  const bool ok1 = rei1.strings() == std::vector<RcString>{{3, -3}, {1, 4}};
  const bool ok2 = rei2.strings() == std::vector<RcString>{{3, 3}, {1, 6}};
  return {ok1 && ok2, "rei1 " + show(rei1) + ", rei2 " + show(rei2)};
}

Outcome tau_values() {
  const TauContext ctx(phi(Path::from_balls({1, 2, 3, 8}, 17)));
  const auto t0 = tau(ctx, 0, 8), t1 = tau(ctx, 1, 8);
  return {t0 == 9 && t1 == 5, "tau_0(8) = " + std::to_string(t0) + ", tau_1(8) = " + std::to_string(t1)};
}

Outcome collision_trace() {
  const std::vector<std::string> rows{
      "F F V U2",
      "V V F V (1,2,2)",
      "V V V F B1 (0,1,2)",
      "V V V V F B2 F F",
      "V V V V V F B2 V F F",
  };
  BbbsState s = parse_bbbs_state(rows[0]);
  Outcome out{true, {}};
  for (std::size_t i = 1; i < rows.size(); ++i) {
    s = bbbs_evolve_tinf(s);
    const bool row_ok = s == parse_bbbs_state(rows[i]);
    out.ok = out.ok && row_ok;
    if (!row_ok) out.detail += "row " + std::to_string(i + 1) + " got [" + format_bbbs_state(s) + "] ";
  }
  if (out.ok) out.detail = "rows 2-5 exact";
  return out;
}

Outcome phase_shifts() {
  Outcome out{true, {}};
  const std::pair<int, int> fermions[] = {{1, 2}, {1, 3}, {2, 3}};
  for (const auto& [k, l] : fermions) {
    const int s = phase_shift(l, SolitonDescriptor::fermion(k));
    out.ok = out.ok && s == -2 * k;
    out.detail += "F" + std::to_string(k) + "|F" + std::to_string(l) + "=" + std::to_string(s) + " ";
  }
  const std::vector<std::vector<int>> bosons{{1}, {2}, {1, 2}};
  for (const auto& amps : bosons) {
    const int s = phase_shift(3, SolitonDescriptor::bosons(amps));
    out.ok = out.ok && s == -1;
    std::string name;
    for (int i : amps) name += "B" + std::to_string(i);
    out.detail += name + "|F3=" + std::to_string(s) + " ";
  }
  return out;
}

Outcome decomposition() {
  const auto content = decompose(parse_bbbs_state("F F V U2"));
  const bool example_ok = content.fermionic == std::vector<int>{2, 1} && content.bosonic == std::vector<int>{2};
  Outcome suite = from_suites({"decomposition"});
  return {example_ok && suite.ok,
          "F F V U2: fermionic " + join(content.fermionic) + " bosonic " + join(content.bosonic) + "; " + suite.detail};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "T_inf trace of 111....1 padded to 17", 1.0, bbs_trace},
      {2, "vacancy P_2(16,(4,3,1)) = 6", 0, vacancy_value},
      {3, "rigged configurations of rei1 and rei2", 0, phi_golden},
      {4, "Phi^-1 o Phi = id on all length-14 paths", 10'000, [] { return from_suites({"bijection"}); }},
      {5, "Yang-Baxter for R and affine R", 0, [] { return from_suites({"yang-baxter"}); }},
      {6, "T_l T_k = T_k T_l and E_l conservation", 60'000, [] { return from_suites({"commutativity"}); }},
      {7, "rigging linearization under T_l", 0, [] { return from_suites({"linearization"}); }},
      {8, "E_l = Q_l", 0, [] { return from_suites({"energy"}); }},
      {9, "tau_0(8) = 9, tau_1(8) = 5 on rei1", 0, tau_values},
      {10, "tau solution formula and ball-count oracle", 120'000,
       [] { return from_suites({"tau-solution", "tau-oracle"}); }},
      {11, "solve_ivp equals iterated evolution", 0, [] { return from_suites({"ivp"}); }},
      {12, "whurl Yang-Baxter and coordinate sums", 0, [] { return from_suites({"whurl"}); }},
      {13, "four-step BBBS collision with composite sites", 0, collision_trace},
      {14, "basket-free BBBS reduces to BBS", 0, [] { return from_suites({"bbbs-reduction"}); }},
      {15, "phase shifts", 0, phase_shifts},
      {16, "soliton decomposition", 0, decomposition},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    try {
      outcome = c.body();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_ms == 0 || ms < c.limit_ms;
    const bool pass = outcome.ok && in_time;
    failed += pass ? 0 : 1;
    std::string timing = std::to_string(ms) + " ms";
    if (c.limit_ms > 0) timing += " (limit " + std::to_string(static_cast<long>(c.limit_ms)) + " ms)";
    std::printf("%s criterion %2d: %s [%s] %s\n", pass ? "PASS" : "FAIL", c.id, c.title, timing.c_str(),
                outcome.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
