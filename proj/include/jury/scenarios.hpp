#pragma once

// Plain-text dynamics configs and the named scenario presets.
//
// One `key = value` per line, `#` starts a comment. Keys: n, initial (comma
// separated), kappa, multiplier, window, t_end, step. Leaving out `window`
// selects the global-mean model.

#include <array>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>

#include "jury/dynamics.hpp"
#include "jury/text.hpp"

namespace jury {

inline DynamicsConfig parse_dynamics_config(std::istream& in) {
  DynamicsConfig cfg;
  bool have_n = false;
  bool have_initial = false;
  bool have_t_end = false;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos)
      throw domain_error("config line " + std::to_string(line_no) + ": expected key = value");
    const std::string key = trim(std::string_view(body).substr(0, eq));
    const std::string value = trim(std::string_view(body).substr(eq + 1));
    if (key == "n") {
      const double v = detail::parse_double(value, "n");
      detail::require(v >= 1 && v == static_cast<int>(v), "n must be a positive integer");
      cfg.n = static_cast<int>(v);
      have_n = true;
    } else if (key == "initial") {
      cfg.initial = parse_double_list(value, "initial");
      have_initial = true;
    } else if (key == "kappa") {
      cfg.leader_gain = detail::parse_double(value, key);
    } else if (key == "multiplier") {
      cfg.leader_multiplier = detail::parse_double(value, key);
    } else if (key == "window") {
      cfg.window = detail::parse_double(value, key);
    } else if (key == "t_end") {
      cfg.t_end = detail::parse_double(value, key);
      have_t_end = true;
    } else if (key == "step") {
      cfg.step = detail::parse_double(value, key);
    } else {
      throw domain_error("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  if (!have_initial) throw domain_error("config lacks 'initial'");
  if (!have_n) cfg.n = static_cast<int>(cfg.initial.size());
  if (!have_t_end) throw domain_error("config lacks 't_end'");
  cfg.validate();
  return cfg;
}

inline DynamicsConfig parse_dynamics_config(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dynamics_config(in);
}

struct ScenarioPreset {
  std::string_view name;
  std::string_view config;
};

// Hand-calibrated so that the three windowed runs land in the three
// qualitatively different long-run states: consensus at 1, voters 3 and 4
// stuck low after voter 3 starts 0.02 lower, and voters 2 to 4 stuck just
// above 1/2 when the leader learns twice as fast.
inline constexpr std::array<ScenarioPreset, 4> kScenarioPresets{{
    {"drift3",
     "n = 3\n"
     "initial = 0.55, 0.75, 0.45\n"
     "kappa = 0.1\n"
     "t_end = 100\n"
     "step = 0.01\n"},
    {"window4-consensus",
     "n = 4\n"
     "initial = 0.62, 0.63, 0.49, 0.35\n"
     "kappa = 0.1\n"
     "window = 0.15\n"
     "t_end = 150\n"
     "step = 0.01\n"},
    {"window4-lowstart",
     "n = 4\n"
     "initial = 0.62, 0.63, 0.47, 0.35\n"
     "kappa = 0.1\n"
     "window = 0.15\n"
     "t_end = 150\n"
     "step = 0.01\n"},
    {"window4-fastleader",
     "n = 4\n"
     "initial = 0.62, 0.63, 0.49, 0.35\n"
     "kappa = 0.1\n"
     "multiplier = 2\n"
     "window = 0.15\n"
     "t_end = 150\n"
     "step = 0.01\n"},
}};

inline DynamicsConfig scenario_preset(std::string_view name) {
  for (const auto& preset : kScenarioPresets)
    if (preset.name == name) return parse_dynamics_config(preset.config);
  throw domain_error("unknown scenario '" + std::string(name) + "'");
}

}  // namespace jury
