#include "boxball/text_io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

#include "boxball/errors.hpp"
#include "json.hpp"

namespace boxball {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::vector<std::string_view> tokenize(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    const std::size_t start = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    if (i > start) tokens.push_back(text.substr(start, i - start));
  }
  return tokens;
}

// Whole-token signed decimal.
std::optional<int> to_int(std::string_view s) {
  if (s.empty()) return std::nullopt;
  if (s.front() == '+') s.remove_prefix(1);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

// "(x,y,...)" with exactly `arity` integers.
std::optional<std::vector<int>> parse_tuple(std::string_view token, std::size_t arity) {
  if (token.size() < 2 || token.front() != '(' || token.back() != ')') return std::nullopt;
  token = token.substr(1, token.size() - 2);
  std::vector<int> values;
  for (;;) {
    const auto comma = token.find(',');
    const auto v = to_int(token.substr(0, comma));
    if (!v) return std::nullopt;
    values.push_back(*v);
    if (comma == std::string_view::npos) break;
    token.remove_prefix(comma + 1);
  }
  if (values.size() != arity) return std::nullopt;
  return values;
}

}  // namespace

Path parse_bbs_state(std::string_view text) {
  std::vector<BoxState> sites;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '.') {
      sites.push_back(BoxState::vacuum());
    } else if (c == '1') {
      sites.push_back(BoxState::ball());
    } else if (!is_space(c)) {
      throw ParseError(std::string("unexpected character '") + c + "' in box-ball state", i + 1);
    }
  }
  return Path(std::move(sites));
}

std::string format_bbs_state(const Path& b) {
  std::string out;
  out.reserve(b.size());
  for (const auto& site : b.sites()) out.push_back(site.balls() ? '1' : '.');
  return out;
}

BbbsState parse_bbbs_state(std::string_view text) {
  BbbsState state;
  const auto tokens = tokenize(text);
  for (std::size_t t = 0; t < tokens.size(); ++t) {
    const std::string_view tok = tokens[t];
    const std::size_t index = t + 1;
    if (tok == "V") {
      state.push_back(BbbsSite::vacuum());
    } else if (tok == "F") {
      state.push_back(BbbsSite::ball());
    } else if ((tok.front() == 'B' || tok.front() == 'U') && tok.size() > 1) {
      const auto i = to_int(tok.substr(1));
      if (!i || *i < 1 || !std::isdigit(static_cast<unsigned char>(tok[1]))) {
        throw ParseError("malformed token '" + std::string(tok) + "'", index);
      }
      state.push_back(tok.front() == 'B' ? BbbsSite::empty_baskets(*i) : BbbsSite::loaded_box(*i));
    } else if (const auto triple = parse_tuple(tok, 3)) {
      const auto& v = *triple;
      if (v[0] < 0 || v[1] < 0 || v[2] < 0) {
        throw ParseError("negative component in '" + std::string(tok) + "'", index);
      }
      state.emplace_back(v[0], v[1], v[2]);
    } else {
      throw ParseError("malformed token '" + std::string(tok) + "'", index);
    }
  }
  return state;
}

std::string format_bbbs_site(const BbbsSite& site) {
  if (site.is_vacuum()) return "V";
  if (site.is_ball()) return "F";
  if (const auto i = site.as_empty_baskets()) return "B" + std::to_string(*i);
  if (const auto i = site.as_loaded_box()) return "U" + std::to_string(*i);
  return "(" + std::to_string(site.empty_places()) + "," + std::to_string(site.baskets()) + "," +
         std::to_string(site.balls()) + ")";
}

std::string format_bbbs_state(const BbbsState& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out.push_back(' ');
    out += format_bbbs_site(s[i]);
  }
  return out;
}

ParsedRiggedConfiguration parse_rigged_configuration(std::string_view text) {
  ParsedRiggedConfiguration out;

  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    try {
      const auto j = nlohmann::json::parse(text);
      if (j.contains("L")) out.path_length = j.at("L").get<std::size_t>();
      for (const auto& s : j.at("strings")) {
        if (!s.is_array() || s.size() != 2) throw ParseError("string entry must be [length, rigging]", 0);
        out.strings.push_back({s[0].get<int>(), s[1].get<int>()});
      }
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("structured rigged configuration: ") + e.what(), 0);
    }
  } else {
    const auto tokens = tokenize(text);
    for (std::size_t t = 0; t < tokens.size(); ++t) {
      const std::string_view tok = tokens[t];
      if (t == 0 && tok.starts_with("L=")) {
        const auto l = to_int(tok.substr(2));
        if (!l || *l < 0) throw ParseError("malformed path length '" + std::string(tok) + "'", t + 1);
        out.path_length = static_cast<std::size_t>(*l);
        continue;
      }
      const auto pair = parse_tuple(tok, 2);
      if (!pair) throw ParseError("malformed string '" + std::string(tok) + "'", t + 1);
      out.strings.push_back({(*pair)[0], (*pair)[1]});
    }
  }
  for (std::size_t i = 0; i < out.strings.size(); ++i) {
    if (out.strings[i].length < 1) throw ParseError("string length must be >= 1", i + 1);
  }
  return out;
}

std::string format_rigged_configuration(const RiggedConfiguration& rc) {
  std::ostringstream os;
  os << "L=" << rc.path_length();
  for (const auto& s : rc.strings()) os << " (" << s.length << ',' << s.rigging << ')';
  return os.str();
}

std::string format_rigged_configuration_json(const RiggedConfiguration& rc) {
  nlohmann::json strings = nlohmann::json::array();
  for (const auto& s : rc.strings()) strings.push_back({s.length, s.rigging});
  return nlohmann::json{{"L", rc.path_length()}, {"strings", strings}}.dump();
}

}  // namespace boxball
