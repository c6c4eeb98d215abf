#pragma once

#include <string>

#include "coopint/intgame.hpp"

namespace coopint {

// GameFile JSON: {"players": n, "coalitions": {"1": [lo, hi], ...}} with
// canonical comma-separated 1-based keys, every nonempty coalition
// present exactly once and the empty coalition absent. Endpoints are
// numbers or "p/q" strings; decimals convert exactly.
IntervalGame parse_game_text(const std::string& text);
IntervalGame parse_game_file(const std::string& path);

// Canonical serialization: sorted keys, endpoints as "p/q" strings.
std::string serialize_game(const IntervalGame& w);
void write_game_file(const IntervalGame& w, const std::string& path);

} // namespace coopint
