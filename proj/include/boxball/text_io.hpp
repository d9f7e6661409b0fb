#pragma once

// Text grammars for states and rigged configurations.
//
//   box-ball state     one line over {'.', '1'}; whitespace ignored.
//   BBBS state         whitespace-separated tokens V, F, B<i>, U<i>, (a,b,c).
//   rigged config      "L=<n> (len,rig) (len,rig) ..." (the L= token optional).
//   structured config  {"L": n, "strings": [[len, rig], ...]}

#include <optional>
#include <string>
#include <string_view>

#include "boxball/bbbs.hpp"
#include "boxball/crystal.hpp"
#include "boxball/rigged_config.hpp"

namespace boxball {

/// Throws ParseError with the 1-based character position.
Path parse_bbs_state(std::string_view text);
std::string format_bbs_state(const Path& b);

/// Throws ParseError with the 1-based token index.
BbbsState parse_bbbs_state(std::string_view text);
/// Named tokens where a site matches V/F/B_i/U_i, else "(a,b,c)".
std::string format_bbbs_site(const BbbsSite& site);
std::string format_bbbs_state(const BbbsState& s);

struct ParsedRiggedConfiguration {
  std::vector<RcString> strings;
  std::optional<std::size_t> path_length;
};

/// Accepts the text form or the structured (JSON) form.
/// Throws ParseError with the 1-based token index (text) or 0 (JSON).
ParsedRiggedConfiguration parse_rigged_configuration(std::string_view text);
std::string format_rigged_configuration(const RiggedConfiguration& rc);
std::string format_rigged_configuration_json(const RiggedConfiguration& rc);

}  // namespace boxball
