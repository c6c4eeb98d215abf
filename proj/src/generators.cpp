#include "coopint/generators.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace coopint {

Rational random_rational(Rng& rng, int limit) {
    std::uniform_int_distribution<int> num(-limit, limit);
    std::uniform_int_distribution<int> den(1, 4);
    return rat(num(rng), den(rng));
}

Rational random_nonneg_rational(Rng& rng, int limit) {
    std::uniform_int_distribution<int> num(0, limit);
    std::uniform_int_distribution<int> den(1, 4);
    return rat(num(rng), den(rng));
}

TuGame random_tugame(Rng& rng, int n, int limit) {
    TuGame v(n);
    const std::uint32_t full = v.grand().bits();
    for (std::uint32_t s = 1; s <= full; ++s)
        v.set_value(Coalition(s), random_rational(rng, limit));
    return v;
}

TuGame random_supermodular_game(Rng& rng, int n, int limit) {
    TuGame v(n);
    const std::uint32_t full = v.grand().bits();
    std::vector<Rational> dividends(std::size_t(1) << n, Rational(0));
    for (std::uint32_t t = 1; t <= full; ++t) {
        dividends[t] = Coalition(t).size() >= 2
                           ? random_nonneg_rational(rng, limit)
                           : random_rational(rng, limit);
    }
    for (std::uint32_t s = 1; s <= full; ++s) {
        Rational acc(0);
        for (std::uint32_t t = s;; t = (t - 1) & s) {
            if (t != 0) acc += dividends[t];
            if (t == 0) break;
        }
        v.set_value(Coalition(s), acc);
    }
    return v;
}

IntervalGame random_interval_game(Rng& rng, int n, int max_width) {
    IntervalGame w(n);
    const std::uint32_t full = w.grand().bits();
    for (std::uint32_t s = 1; s <= full; ++s) {
        const Rational lo = random_rational(rng);
        w.set_value(Coalition(s),
                    Interval(lo, lo + random_nonneg_rational(rng, max_width)));
    }
    return w;
}

IntervalGame random_sparse_interval_game(Rng& rng, int n,
                                         int max_nondegenerate) {
    IntervalGame w(n);
    const std::uint32_t full = w.grand().bits();
    std::vector<std::uint32_t> masks;
    for (std::uint32_t s = 1; s <= full; ++s) {
        w.set_value(Coalition(s), Interval::point(random_rational(rng)));
        masks.push_back(s);
    }
    std::shuffle(masks.begin(), masks.end(), rng);
    const int widen =
        std::min<int>(max_nondegenerate, static_cast<int>(masks.size()));
    for (int k = 0; k < widen; ++k) {
        Coalition c(masks[k]);
        const Rational lo = w.value(c).lower();
        Rational width = random_nonneg_rational(rng, 4);
        if (width == 0) width = 1;
        w.set_value(c, Interval(lo, lo + width));
    }
    return w;
}

namespace {

// Skeleton c*|S|^2 + additive part: strictly supermodular with slack at
// least 2c on every incomparable pair.
IntervalGame supermodular_skeleton_game(Rng& rng, int n, const Rational& c,
                                        bool convex_length) {
    std::vector<Rational> additive(n);
    for (Rational& a : additive) a = random_rational(rng, 4);

    IntervalGame w(n);
    const std::uint32_t full = (1u << n) - 1u;
    std::uniform_int_distribution<int> wnum(1, 4);
    for (std::uint32_t s = 1; s <= full; ++s) {
        Coalition cs(s);
        Rational lo = c * cs.size() * cs.size();
        for (int i : cs.members()) lo += additive[i];
        Rational width;
        if (convex_length) {
            // Width delta*|S|^2 keeps the length game convex.
            width = c / 4 * cs.size() * cs.size();
        } else {
            // Any width up to c/2 preserves the pairwise condition.
            width = c * wnum(rng) / 8;
        }
        w.set_value(cs, Interval(lo, lo + width));
    }
    return w;
}

} // namespace

IntervalGame random_secig_game(Rng& rng, int n) {
    std::uniform_int_distribution<int> cnum(1, 3);
    return supermodular_skeleton_game(rng, n, Rational(cnum(rng)), false);
}

IntervalGame random_cig_game(Rng& rng, int n) {
    std::uniform_int_distribution<int> cnum(1, 3);
    return supermodular_skeleton_game(rng, n, Rational(cnum(rng)), true);
}

IntervalGame random_game_with_null_player(Rng& rng, int n) {
    IntervalGame base = random_interval_game(rng, n);
    IntervalGame w(n + 1);
    const std::uint32_t full = base.grand().bits();
    for (std::uint32_t s = 1; s <= full; ++s) {
        Coalition c(s);
        w.set_value(c, base.value(c));
        w.set_value(c.with(n), base.value(c));
    }
    w.set_value(Coalition::single(n), Interval());
    return w;
}

PayoffVector random_payoff_vector(Rng& rng, const IntervalGame& w) {
    const int n = w.players();
    PayoffVector x(n);
    const Rational grand_mid = midpoint(w.value(w.grand()));
    for (int i = 0; i < n; ++i)
        x(i) = grand_mid / n + random_rational(rng, 3);
    return x;
}

} // namespace coopint
