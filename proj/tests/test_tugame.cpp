#include <doctest.h>

#include "coopint/generators.hpp"
#include "coopint/oracle.hpp"
#include "coopint/shapley.hpp"
#include "coopint/tugame.hpp"

#include "helpers.hpp"

using namespace coopint;
using testutil::R;
using testutil::make_tu;
using testutil::same_vec;
using testutil::vec;

namespace {

TuGame majority3() {
    return make_tu(3, {"0", "0", "1", "0", "1", "1", "1"});
}

} // namespace

TEST_CASE("monotonicity") {
    TuGame card(3);
    for (std::uint32_t s = 1; s < 8; ++s)
        card.set_value(Coalition(s), Rational(Coalition(s).size()));
    CHECK(is_monotonic(card));

    CHECK_FALSE(is_monotonic(make_tu(2, {"1", "0", "0"})));
    const auto witness = monotonicity_violation(make_tu(2, {"1", "0", "0"}));
    REQUIRE(witness);
    CHECK(witness->t == Coalition::single(0));
    CHECK(witness->s == Coalition::full(2));

    CHECK(is_monotonic(border_games(testutil::ex3()).second));
}

TEST_CASE("supermodularity") {
    const TuGame add = additive_game({R("2"), R("-1"), R("1/2")});
    CHECK(is_supermodular(add));

    TuGame sq(3);
    for (std::uint32_t s = 1; s < 8; ++s) {
        const int k = Coalition(s).size();
        sq.set_value(Coalition(s), Rational(k * k));
    }
    CHECK(is_supermodular(sq));

    CHECK_FALSE(is_supermodular(make_tu(2, {"1", "1", "1"})));
}

TEST_CASE("shapley examples") {
    CHECK(same_vec(shapley(make_tu(2, {"0", "0", "1"})), vec({"1/2", "1/2"})));

    const TuGame add = additive_game({R("2"), R("-1"), R("1/2")});
    CHECK(same_vec(shapley(add), vec({"2", "-1", "1/2"})));

    CHECK(same_vec(shapley(midpoint_game(testutil::ex3())),
                   vec({"7/4", "2", "11/4"})));
}

TEST_CASE("shapley weights") {
    CHECK(shapley_weight(0, 3) == R("1/3"));
    CHECK(shapley_weight(1, 3) == R("1/6"));
    CHECK(shapley_weight(2, 3) == R("1/3"));
}

TEST_CASE("core membership and excess") {
    const TuGame add = additive_game({R("1"), R("2")});
    CHECK(core_membership(vec({"1", "2"}), add));

    const TuGame unanimity = make_tu(2, {"0", "0", "1"});
    CHECK(core_membership(vec({"1/2", "1/2"}), unanimity));
    CHECK_FALSE(core_membership(vec({"2", "-1"}), unanimity));

    CHECK(excess(vec({"1", "1"}), Coalition::single(0),
                 make_tu(2, {"0", "0", "2"})) == R("1"));
    CHECK(excess(vec({"2", "2"}), Coalition::full(2),
                 make_tu(2, {"0", "0", "6"})) == R("-2"));
}

TEST_CASE("core emptiness") {
    CHECK(core_is_empty(majority3()));
    CHECK_FALSE(core_is_empty(additive_game({R("1"), R("2"), R("3")})));

    Rng rng(3);
    for (int k = 0; k < 40; ++k) {
        const TuGame v = random_supermodular_game(rng, 2 + int(rng() % 3));
        CHECK_FALSE(core_is_empty(v));
    }
}

TEST_CASE("core vertices") {
    const auto single = core_vertices(additive_game({R("1"), R("-2")}));
    REQUIRE(single.size() == 1);
    CHECK(same_vec(single[0], vec({"1", "-2"})));

    const auto unit = core_vertices(make_tu(2, {"0", "0", "1"}));
    REQUIRE(unit.size() == 2);
    CHECK(same_vec(unit[0], vec({"0", "1"})));
    CHECK(same_vec(unit[1], vec({"1", "0"})));

    const auto six = core_vertices(make_tu(2, {"0", "0", "6"}));
    REQUIRE(six.size() == 2);
    CHECK(same_vec(six[0], vec({"0", "6"})));
    CHECK(same_vec(six[1], vec({"6", "0"})));

    CHECK_THROWS_AS(core_vertices(majority3()), EmptyPolytope);

    Rng rng(5);
    for (int k = 0; k < 20; ++k) {
        const TuGame v = random_supermodular_game(rng, 3);
        for (const auto& x : core_vertices(v)) CHECK(core_membership(x, v));
    }
}

TEST_CASE("game addition requires matching player counts") {
    CHECK_THROWS_AS(make_tu(2, {"0", "0", "1"}) + TuGame(3),
                    PlayerCountMismatch);
}

TEST_CASE("shapley axioms on random games") {
    Rng rng(17);
    for (int k = 0; k < 60; ++k) {
        const int n = 2 + int(rng() % 3);
        const TuGame v = random_tugame(rng, n);
        const PayoffVector phi = shapley(v);

        Rational total = 0;
        for (int i = 0; i < n; ++i) total += phi(i);
        CHECK(total == v.value(v.grand())); // efficiency

        const TuGame u = random_tugame(rng, n);
        CHECK(same_vec(shapley(u + v), shapley(u) + shapley(v))); // additivity
    }

    // dummy structure: a player with zero marginal contributions gets zero
    TuGame v = random_tugame(rng, 2);
    TuGame ext(3);
    for (std::uint32_t s = 1; s < 8; ++s)
        ext.set_value(Coalition(s), v.value(Coalition(s & 3u)));
    CHECK(shapley(ext)(2) == 0);
}

TEST_CASE("shapley matches permutation oracle") {
    Rng rng(23);
    for (int k = 0; k < 40; ++k) {
        const int n = 2 + int(rng() % 4);
        const TuGame v = random_tugame(rng, n);
        CHECK(same_vec(shapley(v), oracle::shapley_by_permutations(v)));
    }
}
