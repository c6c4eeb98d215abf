#include "coopint/shapley.hpp"

#include <random>

namespace coopint {

IntervalVector interval_shapley(const IntervalGame& w) {
    const int n = w.players();
    IntervalVector phi(n);
    const std::uint32_t full = w.grand().bits();
    for (int i = 0; i < n; ++i) {
        Interval acc;
        for (std::uint32_t s = 0; s <= full; ++s) {
            if ((s >> i) & 1u) continue;
            Coalition cs(s);
            acc = acc + shapley_weight(cs.size(), n) *
                            moore_sub(w.value(cs.with(i)), w.value(cs));
        }
        phi[i] = acc;
    }
    return phi;
}

TuGame midpoint_game(const IntervalGame& w) {
    TuGame out(w.players());
    const std::uint32_t full = w.grand().bits();
    for (std::uint32_t s = 1; s <= full; ++s) {
        Coalition c(s);
        out.set_value(c, midpoint(w.value(c)));
    }
    return out;
}

IntervalVector improved_shapley(const IntervalGame& w) {
    IntervalVector phi = interval_shapley(w);
    const Interval grand = w.value(w.grand());
    if (sum(phi) == grand) return phi;

    Rational total_length(0);
    for (const Interval& x : phi) total_length += length(x);
    if (total_length == 0) return phi;

    const PayoffVector centers = shapley(midpoint_game(w));
    const Rational half_width = length(grand) / 2;
    IntervalVector out(phi.size());
    for (std::size_t i = 0; i < phi.size(); ++i) {
        const Rational radius = length(phi[i]) / total_length * half_width;
        out[i] = Interval(centers(static_cast<int>(i)) - radius,
                          centers(static_cast<int>(i)) + radius);
    }
    return out;
}

bool shapley_selection_range_check(const IntervalGame& w, int samples,
                                   std::uint64_t seed) {
    const int n = w.players();
    const IntervalVector phi = interval_shapley(w);

    for (int i = 0; i < n; ++i) {
        const PayoffVector at_min =
            shapley(extremal_selection(w, i, Direction::Min));
        const PayoffVector at_max =
            shapley(extremal_selection(w, i, Direction::Max));
        if (at_min(i) != phi[i].lower()) return false;
        if (at_max(i) != phi[i].upper()) return false;
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> step(0, 16);
    const std::uint32_t full = w.grand().bits();
    TuGame v(n);
    for (int k = 0; k < samples; ++k) {
        for (std::uint32_t s = 1; s <= full; ++s) {
            Coalition c(s);
            const Interval& iv = w.value(c);
            Rational t(step(rng), 16);
            t.canonicalize();
            v.set_value(c, iv.lower() + t * length(iv));
        }
        const PayoffVector sampled = shapley(v);
        for (int i = 0; i < n; ++i)
            if (!contains(phi[i], sampled(i))) return false;
    }
    return true;
}

PlayerRoles player_roles(const IntervalGame& w) {
    PlayerRoles roles;
    const int n = w.players();
    const std::uint32_t full = w.grand().bits();

    for (int i = 0; i < n; ++i) {
        bool null_player = true;
        bool total_null = true;
        for (std::uint32_t s = 0; s <= full && (null_player || total_null);
             ++s) {
            if ((s >> i) & 1u) continue;
            Coalition cs(s);
            const Interval& without = w.value(cs);
            const Interval& with = w.value(cs.with(i));
            if (without != with) null_player = false;
            if (moore_sub(without, with) != Interval()) total_null = false;
        }
        if (null_player) roles.null_players.push_back(i);
        if (total_null) roles.total_null_players.push_back(i);
    }

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            bool symmetric = true;
            for (std::uint32_t s = 0; s <= full; ++s) {
                if (((s >> i) & 1u) || ((s >> j) & 1u)) continue;
                Coalition cs(s);
                if (w.value(cs.with(i)) != w.value(cs.with(j))) {
                    symmetric = false;
                    break;
                }
            }
            if (symmetric) roles.symmetric_pairs.emplace_back(i, j);
        }
    }
    return roles;
}

ValueAuditReport audit_value_function(
    const ValueFunction& f, const std::vector<IntervalGame>& games,
    const std::vector<std::pair<IntervalGame, IntervalGame>>& pairs) {
    ValueAuditReport report;
    report.null_radius.resize(games.size());

    for (std::size_t g = 0; g < games.size(); ++g) {
        if (!games.empty() && games[g].players() != games.front().players())
            throw PlayerCountMismatch("audited games must share player count");
        const IntervalGame& w = games[g];
        const IntervalVector values = f(w);
        const Interval total = sum(values);

        if (report.indifference_efficiency.pass &&
            !indifferent(total, w.value(w.grand())))
            report.indifference_efficiency = {false, static_cast<int>(g), {}};
        if (report.efficiency.pass && total != w.value(w.grand()))
            report.efficiency = {false, static_cast<int>(g), {}};

        const PlayerRoles roles = player_roles(w);
        std::optional<Rational> radius;
        for (int i : roles.null_players) {
            const Interval& x = values[i];
            if (!radius) radius = x.upper();
            if (x.lower() != -*radius || x.upper() != *radius) {
                if (report.indifference_null.pass)
                    report.indifference_null = {false, static_cast<int>(g), i};
                radius.reset();
                break;
            }
        }
        report.null_radius[g] = radius;

        for (int i : roles.total_null_players) {
            if (values[i] != Interval()) {
                if (report.total_null.pass)
                    report.total_null = {false, static_cast<int>(g), i};
                break;
            }
        }
        for (auto [i, j] : roles.symmetric_pairs) {
            if (values[i] != values[j]) {
                if (report.symmetry.pass)
                    report.symmetry = {false, static_cast<int>(g), i};
                break;
            }
        }
    }

    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const auto& [a, b] = pairs[p];
        const IntervalVector lhs = f(a + b);
        const IntervalVector va = f(a), vb = f(b);
        for (std::size_t i = 0; i < lhs.size(); ++i) {
            if (lhs[i] != va[i] + vb[i]) {
                if (report.additivity.pass)
                    report.additivity = {false, static_cast<int>(p),
                                         static_cast<int>(i)};
                break;
            }
        }
    }
    return report;
}

} // namespace coopint
