#include "boxball/cli.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <set>
#include <stdexcept>

#include "boxball/bbbs.hpp"
#include "boxball/errors.hpp"
#include "boxball/rigged_config.hpp"
#include "boxball/tau.hpp"
#include "boxball/text_io.hpp"
#include "boxball/verify.hpp"
#include "json.hpp"

namespace boxball::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require_bbs(const CommandConfig& config, std::string_view what) {
  if (config.system != System::kBbs) throw UsageError(std::string(what) + " needs --system bbs");
}

// Evolved states are shown at least as wide as the input, so a trace lines up
// and chaining single steps through text gives the same rows.
std::string show_width(const Path& b, std::size_t width) { return format_bbs_state(b.trimmed().padded(width)); }

std::string show_width(const BbbsState& s, std::size_t width) {
  BbbsState out = trimmed(s);
  if (out.size() < width) out.resize(width, BbbsSite::vacuum());
  return format_bbbs_state(out);
}

void emit_trace(const CommandConfig& config, const std::vector<std::string>& rows, std::ostream& out) {
  if (config.format == OutputFormat::kStructured) {
    out << json{{"system", config.system == System::kBbs ? "bbs" : "bbbs"}, {"trace", rows}}.dump() << '\n';
  } else {
    for (const auto& row : rows) out << row << '\n';
  }
}

int do_evolve(const CommandConfig& config, std::string_view input, std::ostream& out) {
  std::vector<std::string> rows;
  if (config.system == System::kBbs) {
    Path state = parse_bbs_state(input);
    const std::size_t width = state.size();
    rows.push_back(show_width(state, width));
    for (int t = 0; t < config.steps; ++t) {
      state = evolve(state, config.l).trimmed();
      rows.push_back(show_width(state, width));
    }
  } else {
    BbbsState state = parse_bbbs_state(input);
    const std::size_t width = state.size();
    rows.push_back(show_width(state, width));
    for (int t = 0; t < config.steps; ++t) {
      state = config.l.is_infinite() ? bbbs_evolve_tinf(state) : bbbs_evolve_tl(state, config.l.value());
      rows.push_back(show_width(state, width));
    }
  }
  emit_trace(config, rows, out);
  return 0;
}

int do_rc_map(const CommandConfig& config, std::string_view input, std::ostream& out) {
  require_bbs(config, "rc-map");
  Path path = parse_bbs_state(input);
  if (config.pad) {
    if (*config.pad < path.trimmed().size()) {
      throw UsageError("--pad " + std::to_string(*config.pad) + " is shorter than the state");
    }
    path = path.trimmed().padded(*config.pad);
  }
  const auto rc = phi(path);
  out << (config.format == OutputFormat::kStructured ? format_rigged_configuration_json(rc)
                                                     : format_rigged_configuration(rc))
      << '\n';
  return 0;
}

int do_rc_invert(const CommandConfig& config, std::string_view input, std::ostream& out) {
  require_bbs(config, "rc-invert");
  auto parsed = parse_rigged_configuration(input);
  const auto length = parsed.path_length ? parsed.path_length : config.pad;
  if (!length) throw UsageError("rc-invert needs a path length: an L= token or --pad");
  const Path path = phi_inverse(RiggedConfiguration(std::move(parsed.strings), *length));
  if (config.format == OutputFormat::kStructured) {
    out << json{{"system", "bbs"}, {"state", format_bbs_state(path)}}.dump() << '\n';
  } else {
    out << format_bbs_state(path) << '\n';
  }
  return 0;
}

int do_solve(const CommandConfig& config, std::string_view input, std::ostream& out) {
  require_bbs(config, "solve");
  const Path start = parse_bbs_state(input);
  const Path result = solve_ivp(start, config.steps, config.l);
  const std::string row = show_width(result, start.size());
  if (config.format == OutputFormat::kStructured) {
    out << json{{"system", "bbs"}, {"steps", config.steps}, {"state", row}}.dump() << '\n';
  } else {
    out << row << '\n';
  }
  return 0;
}

std::string join(const std::vector<int>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? " " : "") + std::to_string(values[i]);
  return s;
}

int do_analyze(const CommandConfig& config, std::string_view input, std::ostream& out) {
  BbbsState state;
  if (config.system == System::kBbs) {
    for (const auto& site : parse_bbs_state(input).sites()) {
      state.push_back(site.balls() ? BbbsSite::ball() : BbbsSite::vacuum());
    }
  } else {
    state = parse_bbbs_state(input);
  }
  const SolitonContent content = decompose(state);

  struct Shift {
    std::string target;
    int probe;
    int shift;
  };
  std::vector<Shift> shifts;
  if (config.phase_shifts) {
    int fastest = 1;
    for (int k : content.fermionic) fastest = std::max(fastest, k);
    const int probe = fastest + 1;
    for (int k : std::set<int>(content.fermionic.begin(), content.fermionic.end())) {
      shifts.push_back({"F" + std::to_string(k), probe, phase_shift(probe, SolitonDescriptor::fermion(k))});
    }
    for (int i : std::set<int>(content.bosonic.begin(), content.bosonic.end())) {
      const std::vector<int> amp{i};
      shifts.push_back({"B" + std::to_string(i), probe, phase_shift(probe, SolitonDescriptor::bosons(amp))});
    }
  }

  if (config.format == OutputFormat::kStructured) {
    json j{{"fermionic", content.fermionic}, {"bosonic", content.bosonic}};
    if (config.phase_shifts) {
      json table = json::array();
      for (const auto& s : shifts) table.push_back({{"target", s.target}, {"probe", s.probe}, {"shift", s.shift}});
      j["phase_shifts"] = table;
    }
    out << j.dump() << '\n';
  } else {
    out << "fermionic: " << join(content.fermionic) << '\n';
    out << "bosonic: " << join(content.bosonic) << '\n';
    for (const auto& s : shifts) {
      out << "phase shift " << s.target << " by F" << s.probe << ": " << s.shift << '\n';
    }
  }
  return 0;
}

int do_verify(const CommandConfig& config, std::ostream& out) {
  std::vector<std::string> names;
  if (config.suite == "all") {
    names = suite_names();
  } else {
    names.push_back(config.suite);
  }
  SuiteOptions options;
  options.max_len = config.max_len;
  options.seed = config.seed;

  bool all_passed = true;
  json reports = json::array();
  for (const auto& name : names) {
    const SuiteReport r = run_suite(name, options);
    all_passed = all_passed && r.passed();
    if (config.format == OutputFormat::kStructured) {
      reports.push_back({{"suite", r.name}, {"cases", r.cases}, {"failures", r.failures},
                         {"passed", r.passed()}, {"first_failure", r.first_failure}});
    } else {
      out << (r.passed() ? "PASS " : "FAIL ") << r.name << ": " << r.cases << " cases, " << r.failures
          << " failures\n";
      if (!r.first_failure.empty()) out << "  first failure: " << r.first_failure << '\n';
    }
  }
  if (config.format == OutputFormat::kStructured) out << reports.dump() << '\n';
  return all_passed ? 0 : 1;
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  if (name == "evolve") return Command::kEvolve;
  if (name == "rc-map") return Command::kRcMap;
  if (name == "rc-invert") return Command::kRcInvert;
  if (name == "solve") return Command::kSolve;
  if (name == "analyze") return Command::kAnalyze;
  if (name == "verify") return Command::kVerify;
  return std::nullopt;
}

CarrierCapacity parse_carrier(std::string_view text) {
  if (text == "inf") return CarrierCapacity::infinite();
  int l = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), l);
  if (ec != std::errc() || ptr != text.data() + text.size() || l < 1) {
    throw std::invalid_argument("--l expects a positive integer or 'inf', got '" + std::string(text) + "'");
  }
  return CarrierCapacity(l);
}

int run(const CommandConfig& config, std::string_view input, std::ostream& out, std::ostream& err) {
  try {
    if (config.steps < 0) throw UsageError("--steps must be >= 0");
    switch (config.command) {
      case Command::kEvolve: return do_evolve(config, input, out);
      case Command::kRcMap: return do_rc_map(config, input, out);
      case Command::kRcInvert: return do_rc_invert(config, input, out);
      case Command::kSolve: return do_solve(config, input, out);
      case Command::kAnalyze: return do_analyze(config, input, out);
      case Command::kVerify: return do_verify(config, out);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
  } catch (const NotInImageError& e) {
    err << "not in image: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return 2;
}

}  // namespace boxball::cli
