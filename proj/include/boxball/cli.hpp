#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "boxball/evolution.hpp"

namespace boxball::cli {

enum class Command { kEvolve, kRcMap, kRcInvert, kSolve, kAnalyze, kVerify };
enum class System { kBbs, kBbbs };
enum class OutputFormat { kText, kStructured };

struct CommandConfig {
  Command command = Command::kEvolve;
  System system = System::kBbs;
  CarrierCapacity l = CarrierCapacity::infinite();
  int steps = 1;
  std::string suite = "all";
  int max_len = 0;
  std::uint64_t seed = 20121212;
  /// Path length for rc-map / rc-invert.
  std::optional<std::size_t> pad;
  OutputFormat format = OutputFormat::kText;
  /// analyze: also measure each soliton's phase shift under a faster probe.
  bool phase_shifts = false;
};

std::optional<Command> parse_command(std::string_view name);
/// "inf" or a positive integer; throws std::invalid_argument otherwise.
CarrierCapacity parse_carrier(std::string_view text);

/// Executes one command on `input`. Returns the process exit status:
/// 0 on success, 1 when a verify suite fails, 2 on bad input or a domain error.
int run(const CommandConfig& config, std::string_view input, std::ostream& out, std::ostream& err);

}  // namespace boxball::cli
