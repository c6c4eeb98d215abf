#pragma once

#include <cstdint>
#include <random>

#include "coopint/intgame.hpp"
#include "coopint/tugame.hpp"

namespace coopint {

using Rng = std::mt19937_64;

// Small exact rational in [-limit, limit] with denominator 1..4.
Rational random_rational(Rng& rng, int limit = 8);

// Nonnegative variant in [0, limit].
Rational random_nonneg_rational(Rng& rng, int limit = 8);

TuGame random_tugame(Rng& rng, int n, int limit = 8);

// Random convex game via nonnegative Harsanyi dividends on coalitions of
// size two and above.
TuGame random_supermodular_game(Rng& rng, int n, int limit = 4);

// Unrestricted interval game with widths up to max_width.
IntervalGame random_interval_game(Rng& rng, int n, int max_width = 4);

// Interval game whose non-degenerate coalitions are limited in number;
// keeps corner-selection oracles affordable at n = 4.
IntervalGame random_sparse_interval_game(Rng& rng, int n,
                                         int max_nondegenerate);

// Selection convex interval game with every nonempty coalition
// non-degenerate: a strictly supermodular skeleton plus widths small
// enough to preserve the pairwise condition.
IntervalGame random_secig_game(Rng& rng, int n);

// Convex interval game (border and length games convex) with every
// nonempty coalition non-degenerate.
IntervalGame random_cig_game(Rng& rng, int n);

// Extends a random game on n players by one null player (index n).
IntervalGame random_game_with_null_player(Rng& rng, int n);

// Payoff vector with entries near the game's scale, biased so that
// membership tests exercise both outcomes.
PayoffVector random_payoff_vector(Rng& rng, const IntervalGame& w);

} // namespace coopint
