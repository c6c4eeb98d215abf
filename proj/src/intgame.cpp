#include "coopint/intgame.hpp"

namespace coopint {

namespace {

void check_players(int n) {
    if (n < 1 || n > kMaxPlayers)
        throw InvalidParameter("player count must be in 1.." +
                               std::to_string(kMaxPlayers));
}

} // namespace

IntervalGame::IntervalGame(int n) : n_(n) {
    check_players(n);
    values_.assign(std::size_t(1) << n, Interval());
}

IntervalGame::IntervalGame(int n, std::vector<Interval> values)
    : n_(n), values_(std::move(values)) {
    check_players(n);
    if (values_.size() != (std::size_t(1) << n))
        throw InvalidParameter("characteristic function has wrong size");
    if (values_[0] != Interval())
        throw InvalidParameter("w(empty) must be [0,0]");
}

void IntervalGame::set_value(Coalition s, Interval v) {
    if (s.is_empty() && v != Interval())
        throw InvalidParameter("w(empty) must be [0,0]");
    values_[s.bits()] = std::move(v);
}

IntervalGame operator+(const IntervalGame& a, const IntervalGame& b) {
    if (a.players() != b.players())
        throw PlayerCountMismatch("game addition needs identical player sets");
    IntervalGame out(a.players());
    const std::uint32_t full = a.grand().bits();
    for (std::uint32_t s = 1; s <= full; ++s) {
        Coalition c(s);
        out.set_value(c, a.value(c) + b.value(c));
    }
    return out;
}

IntervalGame embed(const TuGame& v) {
    IntervalGame out(v.players());
    const std::uint32_t full = v.grand().bits();
    for (std::uint32_t s = 1; s <= full; ++s) {
        Coalition c(s);
        out.set_value(c, Interval::point(v.value(c)));
    }
    return out;
}

std::pair<TuGame, TuGame> border_games(const IntervalGame& w) {
    TuGame lower(w.players()), upper(w.players());
    const std::uint32_t full = w.grand().bits();
    for (std::uint32_t s = 1; s <= full; ++s) {
        Coalition c(s);
        lower.set_value(c, w.value(c).lower());
        upper.set_value(c, w.value(c).upper());
    }
    return {std::move(lower), std::move(upper)};
}

TuGame length_game(const IntervalGame& w) {
    TuGame out(w.players());
    const std::uint32_t full = w.grand().bits();
    for (std::uint32_t s = 1; s <= full; ++s) {
        Coalition c(s);
        out.set_value(c, length(w.value(c)));
    }
    return out;
}

bool is_degenerate(const IntervalGame& w) {
    const std::uint32_t full = w.grand().bits();
    for (std::uint32_t s = 1; s <= full; ++s)
        if (!w.value(Coalition(s)).is_point()) return false;
    return true;
}

bool is_selection(const TuGame& v, const IntervalGame& w) {
    if (v.players() != w.players())
        throw PlayerCountMismatch("selection check needs identical player sets");
    const std::uint32_t full = w.grand().bits();
    for (std::uint32_t s = 1; s <= full; ++s) {
        Coalition c(s);
        if (!contains(w.value(c), v.value(c))) return false;
    }
    return true;
}

void for_each_corner_selection(const IntervalGame& w,
                               const std::function<void(const TuGame&)>& fn) {
    std::vector<Coalition> free_coalitions;
    const std::uint32_t full = w.grand().bits();
    for (std::uint32_t s = 1; s <= full; ++s) {
        Coalition c(s);
        if (!w.value(c).is_point()) free_coalitions.push_back(c);
    }
    if (static_cast<int>(free_coalitions.size()) > kMaxCornerCoalitions)
        throw BudgetExceeded("too many non-degenerate coalitions");

    TuGame v = border_games(w).first;
    const std::uint32_t count = 1u << free_coalitions.size();
    for (std::uint32_t pick = 0; pick < count; ++pick) {
        for (std::size_t k = 0; k < free_coalitions.size(); ++k) {
            const Interval& iv = w.value(free_coalitions[k]);
            v.set_value(free_coalitions[k],
                        ((pick >> k) & 1u) ? iv.upper() : iv.lower());
        }
        fn(v);
    }
}

std::vector<TuGame> corner_selections(const IntervalGame& w) {
    std::vector<TuGame> out;
    for_each_corner_selection(w, [&](const TuGame& v) { out.push_back(v); });
    return out;
}

TuGame extremal_selection(const IntervalGame& w, int player, Direction dir) {
    TuGame v(w.players());
    const std::uint32_t full = w.grand().bits();
    for (std::uint32_t s = 1; s <= full; ++s) {
        Coalition c(s);
        const bool has_player = c.contains(player);
        const bool take_lower = (dir == Direction::Min) == has_player;
        v.set_value(c, take_lower ? w.value(c).lower() : w.value(c).upper());
    }
    return v;
}

namespace {

std::optional<PairWitness> pairs_condition_violation(const IntervalGame& w) {
    const std::uint32_t full = w.grand().bits();
    for (std::uint32_t s = 1; s <= full; ++s) {
        for (std::uint32_t t = s + 1; t <= full; ++t) {
            if ((s & t) == s || (s & t) == t) continue; // comparable
            Coalition cs(s), ct(t);
            if (w.value(cs).upper() + w.value(ct).upper() >
                w.value(cs | ct).lower() + w.value(cs & ct).lower())
                return PairWitness{cs, ct};
        }
    }
    return std::nullopt;
}

bool union_condition(const IntervalGame& w, bool singletons_only) {
    const std::uint32_t full = w.grand().bits();
    for (std::uint32_t u = 1; u <= full; ++u) {
        Coalition cu(u);
        if (singletons_only && cu.size() != 1) continue;
        const std::uint32_t rest = full & ~u;
        // U1 strictly inside U2, both within N \ U.
        for (std::uint32_t u2 = rest;; u2 = (u2 - 1) & rest) {
            if (u2 == 0) break; // no proper subset exists
            Coalition c2(u2);
            for (std::uint32_t u1 = (u2 - 1) & u2;; u1 = (u1 - 1) & u2) {
                Coalition c1(u1);
                if (w.value(c1 | cu).upper() - w.value(c1).lower() >
                    w.value(c2 | cu).lower() - w.value(c2).upper())
                    return false;
                if (u1 == 0) break;
            }
        }
    }
    return true;
}

} // namespace

bool selection_convex_condition(const IntervalGame& w, ConvexityVariant variant) {
    switch (variant) {
        case ConvexityVariant::Pairs:
            return !pairs_condition_violation(w);
        case ConvexityVariant::Union:
            return union_condition(w, false);
        case ConvexityVariant::Singleton:
            return union_condition(w, true);
    }
    return false;
}

TuGame worst_selection(const IntervalGame& w) {
    TuGame v = border_games(w).second;
    v.set_value(w.grand(), w.value(w.grand()).lower());
    return v;
}

TuGame best_selection(const IntervalGame& w) {
    TuGame v = border_games(w).first;
    v.set_value(w.grand(), w.value(w.grand()).upper());
    return v;
}

ClassReport classify(const IntervalGame& w) {
    ClassReport report;
    const auto [lower, upper] = border_games(w);
    const TuGame len = length_game(w);
    const std::uint32_t full = w.grand().bits();

    for (std::uint32_t s = 1; s <= full; ++s) {
        Coalition c(s);
        if (!w.value(c).is_point()) {
            report.degenerate = {false, PairWitness{c, c}};
            break;
        }
    }
    if (auto viol = monotonicity_violation(len))
        report.size_monotonic = {false, viol};

    auto border_check = [&](auto probe) -> ClassReport::Flag {
        if (auto viol = probe(lower)) return {false, viol};
        if (auto viol = probe(upper)) return {false, viol};
        return {};
    };
    report.supermodular_interval =
        border_check([](const TuGame& g) { return supermodularity_violation(g); });
    report.convex_interval = report.supermodular_interval;
    if (report.convex_interval.holds) {
        if (auto viol = supermodularity_violation(len))
            report.convex_interval = {false, viol};
    }
    report.superadditive_interval =
        border_check([](const TuGame& g) { return superadditivity_violation(g); });

    if (auto viol = pairs_condition_violation(w))
        report.selection_convex = {false, viol};

    // All selections monotonic iff upper(T) <= lower(S) whenever T
    // strictly below S (including T empty, forcing lower(S) >= 0).
    for (std::uint32_t s = 1; s <= full && report.selection_monotonic.holds;
         ++s) {
        Coalition cs(s);
        for (std::uint32_t t = 0; t < s; ++t) {
            if ((t & ~s) != 0) continue;
            Coalition ct(t);
            if (w.value(ct).upper() > w.value(cs).lower()) {
                report.selection_monotonic = {false, PairWitness{cs, ct}};
                break;
            }
        }
    }

    for (std::uint32_t s = 1; s <= full && report.selection_superadditive.holds;
         ++s) {
        for (std::uint32_t t = s + 1; t <= full; ++t) {
            if ((s & t) != 0) continue;
            Coalition cs(s), ct(t);
            if (w.value(cs).upper() + w.value(ct).upper() >
                w.value(cs | ct).lower()) {
                report.selection_superadditive = {false, PairWitness{cs, ct}};
                break;
            }
        }
    }

    if (core_is_empty(worst_selection(w))) report.strongly_balanced = {false, {}};
    if (core_is_empty(best_selection(w)))
        report.nonempty_selection_core = {false, {}};
    return report;
}

IntervalGame gen_wa_game(int n, const Rational& b) {
    if (b <= 0) throw InvalidParameter("w_A requires b > 0");
    IntervalGame w(n);
    const std::uint32_t full = w.grand().bits();
    for (std::uint32_t s = 1; s < full; ++s) {
        Coalition c(s);
        Rational v(1, c.size());
        v.canonicalize();
        w.set_value(c, Interval::point(v));
    }
    w.set_value(w.grand(), Interval(Rational(n), Rational(n) + b));
    return w;
}

} // namespace coopint
