// boxball: command-line workbench for box-ball and box-basket-ball systems.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "boxball/cli.hpp"

int main(int argc, char** argv) {
  using namespace boxball::cli;

  CLI::App app{"Box-ball systems: evolution, rigged configurations, tau functions, solitons"};
  app.require_subcommand(1);

  std::string system = "bbs";
  std::string carrier = "inf";
  std::string format = "text";
  std::string input_file;
  CommandConfig config;
  std::size_t pad = 0;

  const std::pair<const char*, const char*> commands[] = {
      {"evolve", "Print one state per time step"},
      {"rc-map", "Rigged configuration of a box-ball state"},
      {"rc-invert", "Box-ball state of a rigged configuration"},
      {"solve", "Evolve through the tau-function solution"},
      {"analyze", "Soliton content (and phase shifts)"},
      {"verify", "Run verification suites"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--system", system, "bbs or bbbs")->check(CLI::IsMember({"bbs", "bbbs"}));
    sub->add_option("--l", carrier, "Carrier capacity: positive integer or inf");
    sub->add_option("--steps", config.steps, "Time steps")->check(CLI::NonNegativeNumber);
    sub->add_option("--suite", config.suite, "Verification suite name or 'all'");
    sub->add_option("--max-len", config.max_len, "Largest path length for verify suites");
    sub->add_option("--seed", config.seed, "Seed for randomized suites");
    sub->add_option("--pad", pad, "Path length for rc-map / rc-invert");
    sub->add_option("--format", format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
    sub->add_option("--input", input_file, "Read the state from a file instead of stdin");
    sub->add_flag("--phase-shifts", config.phase_shifts, "analyze: measure phase shifts");
  }

  CLI11_PARSE(app, argc, argv);

  const auto* chosen = app.get_subcommands().front();
  config.command = *parse_command(chosen->get_name());
  config.system = system == "bbbs" ? System::kBbbs : System::kBbs;
  config.format = format == "structured" ? OutputFormat::kStructured : OutputFormat::kText;
  if (chosen->count("--pad")) config.pad = pad;
  try {
    config.l = parse_carrier(carrier);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  std::string input;
  if (config.command != Command::kVerify) {
    if (!input_file.empty()) {
      std::ifstream in(input_file);
      if (!in) {
        std::cerr << "error: cannot open " << input_file << '\n';
        return 2;
      }
      input.assign(std::istreambuf_iterator<char>(in), {});
    } else {
      input.assign(std::istreambuf_iterator<char>(std::cin), {});
    }
  }
  return run(config, input, std::cout, std::cerr);
}
