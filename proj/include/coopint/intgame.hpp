#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "coopint/coalition.hpp"
#include "coopint/interval.hpp"
#include "coopint/tugame.hpp"

namespace coopint {

// Interval-valued characteristic function with w(empty) = [0,0].
class IntervalGame {
public:
    explicit IntervalGame(int n);
    IntervalGame(int n, std::vector<Interval> values);

    int players() const { return n_; }
    Coalition grand() const { return Coalition::full(n_); }

    const Interval& value(Coalition s) const { return values_[s.bits()]; }
    void set_value(Coalition s, Interval v);

    friend bool operator==(const IntervalGame& a, const IntervalGame& b) {
        return a.n_ == b.n_ && a.values_ == b.values_;
    }

private:
    int n_;
    std::vector<Interval> values_;
};

// Pointwise interval addition; player counts must match.
IntervalGame operator+(const IntervalGame& a, const IntervalGame& b);

// Classical game embedded as point intervals.
IntervalGame embed(const TuGame& v);

// (lower border game, upper border game).
std::pair<TuGame, TuGame> border_games(const IntervalGame& w);

TuGame length_game(const IntervalGame& w);

bool is_degenerate(const IntervalGame& w);

// v(S) in w(S) for every coalition.
bool is_selection(const TuGame& v, const IntervalGame& w);

inline constexpr int kMaxCornerCoalitions = 20;

// Visits every selection that takes an endpoint of w(S) at each S,
// exactly once, in a deterministic order. The corner budget counts
// non-degenerate coalitions.
void for_each_corner_selection(const IntervalGame& w,
                               const std::function<void(const TuGame&)>& fn);

std::vector<TuGame> corner_selections(const IntervalGame& w);

enum class Direction { Min, Max };

// The selection whose Shapley value attains the requested endpoint of
// the interval Shapley value for player i.
TuGame extremal_selection(const IntervalGame& w, int player, Direction dir);

enum class ConvexityVariant { Pairs, Union, Singleton };

// The three equivalent closed-form tests for selection convexity.
bool selection_convex_condition(const IntervalGame& w, ConvexityVariant variant);

struct ClassReport {
    struct Flag {
        bool holds = true;
        std::optional<PairWitness> witness; // for pair-based violations
    };

    Flag degenerate;
    Flag size_monotonic;
    Flag supermodular_interval;
    Flag convex_interval;
    Flag selection_monotonic;
    Flag selection_convex;
    Flag selection_superadditive;
    Flag superadditive_interval;
    Flag strongly_balanced;
    Flag nonempty_selection_core;
};

ClassReport classify(const IntervalGame& w);

// The decisive selections for strong balancedness (worst) and selection
// core nonemptiness (best).
TuGame worst_selection(const IntervalGame& w);
TuGame best_selection(const IntervalGame& w);

// w(S) = [1/|S|, 1/|S|] for nonempty proper S, w(N) = [n, n+b].
IntervalGame gen_wa_game(int n, const Rational& b);

} // namespace coopint
