#pragma once

#include <string>

#include "blotto/model.hpp"
#include "blotto/simulate.hpp"

namespace blotto {

// GameSpec wire format: {"n", "m", "adjacency" (n rows of m 0/1 ints),
// "weights" (m numbers), "r", "v"}. Parsing rejects non-finite or
// non-positive weights, r outside [0,1), negative v, and malformed shapes.
std::string write_game_spec(const GameSpec& spec, int indent = 2);
GameSpec parse_game_spec(const std::string& text);
GameSpec load_game_spec(const std::string& path);
void save_game_spec(const GameSpec& spec, const std::string& path);

// Profile wire format: {"players": [{"abstain": a, "hunt": {"<field>": p}}]}
// with 1-based field labels.
std::string write_profile(const StrategyProfile& profile, int indent = 2);
StrategyProfile parse_profile(const std::string& text);
StrategyProfile load_profile(const std::string& path);
void save_profile(const StrategyProfile& profile, const std::string& path);

std::string write_sim_report(const sim::SimReport& report, int indent = 2);

std::string write_certification(const sim::CertificationReport& report, int indent = 2);

}  // namespace blotto
