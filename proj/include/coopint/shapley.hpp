#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "coopint/intgame.hpp"
#include "coopint/interval.hpp"
#include "coopint/tugame.hpp"

namespace coopint {

// Interval Shapley value extension: the Moore-subtraction analogue of
// the classical marginal-contribution formula.
IntervalVector interval_shapley(const IntervalGame& w);

// Classical game of interval midpoints.
TuGame midpoint_game(const IntervalGame& w);

// Efficiency-corrected Shapley-like value: intervals centered at the
// midpoint-game Shapley value, with the grand coalition's width split in
// proportion to the widths of the interval Shapley components. Returns
// the interval Shapley value unchanged when that already sums to w(N).
IntervalVector improved_shapley(const IntervalGame& w);

// Checks that each endpoint of the interval Shapley value is attained by
// the matching extremal selection and that sampled selections stay
// inside it.
bool shapley_selection_range_check(const IntervalGame& w, int samples,
                                   std::uint64_t seed = 20240901);

struct PlayerRoles {
    std::vector<int> null_players;            // 0-based
    std::vector<int> total_null_players;      // 0-based
    std::vector<std::pair<int, int>> symmetric_pairs; // i < j, 0-based
};

PlayerRoles player_roles(const IntervalGame& w);

using ValueFunction = std::function<IntervalVector(const IntervalGame&)>;

struct AxiomOutcome {
    bool pass = true;
    // Index into the audited games (or pairs, for additivity) plus the
    // offending player(s) where applicable.
    std::optional<int> witness_index;
    std::optional<int> witness_player;
};

struct ValueAuditReport {
    AxiomOutcome indifference_efficiency; // IEFF
    AxiomOutcome efficiency;              // EFF
    AxiomOutcome indifference_null;       // INP
    AxiomOutcome total_null;              // TNP
    AxiomOutcome symmetry;                // SYM
    AxiomOutcome additivity;              // ADD
    // Observed symmetric radius per audited game; set only for games
    // that have at least one null player.
    std::vector<std::optional<Rational>> null_radius;
};

ValueAuditReport audit_value_function(
    const ValueFunction& f, const std::vector<IntervalGame>& games,
    const std::vector<std::pair<IntervalGame, IntervalGame>>& pairs);

} // namespace coopint
