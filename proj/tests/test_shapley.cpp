#include <doctest.h>

#include "coopint/generators.hpp"
#include "coopint/shapley.hpp"

#include "helpers.hpp"

using namespace coopint;
using testutil::I;
using testutil::R;
using testutil::ex3;
using testutil::make_game;
using testutil::make_tu;
using testutil::same_vec;
using testutil::vec;

TEST_CASE("interval Shapley value on the reference game") {
    const IntervalVector phi = interval_shapley(ex3());
    REQUIRE(phi.size() == 3);
    CHECK(phi[0] == I("11/12", "31/12"));
    CHECK(phi[1] == I("7/6", "17/6"));
    CHECK(phi[2] == I("23/12", "43/12"));
    CHECK(sum(phi) == I("4", "9"));
}

TEST_CASE("interval Shapley value degenerates to the classical value") {
    const TuGame v = make_tu(3, {"1", "0", "4", "2", "3", "5", "9"});
    const IntervalVector phi = interval_shapley(embed(v));
    const PayoffVector classical = shapley(v);
    for (int i = 0; i < 3; ++i)
        CHECK(phi[i] == Interval::point(classical(i)));
}

TEST_CASE("interval Shapley value on a symmetric 2-player game") {
    const IntervalVector phi = interval_shapley(
        make_game(2, {I("0", "0"), I("0", "0"), I("2", "4")}));
    CHECK(phi[0] == I("1", "2"));
    CHECK(phi[1] == I("1", "2"));
}

TEST_CASE("midpoint game") {
    CHECK(midpoint_game(ex3()) ==
          make_tu(3, {"1", "1", "5/2", "3/2", "7/2", "4", "13/2"}));
    const TuGame v = make_tu(2, {"1", "2", "3"});
    CHECK(midpoint_game(embed(v)) == v);
    CHECK(midpoint_game(gen_wa_game(2, R("1"))) == make_tu(2, {"1", "1", "5/2"}));
}

TEST_CASE("improved Shapley-like value") {
    const IntervalVector iphi = improved_shapley(ex3());
    CHECK(iphi[0] == I("19/12", "23/12"));
    CHECK(iphi[1] == I("11/6", "13/6"));
    CHECK(iphi[2] == I("31/12", "35/12"));
    CHECK(sum(iphi) == I("6", "7"));

    // 11/12 is the lower endpoint of the interval Shapley component but
    // lies outside the improved value's component
    CHECK(interval_shapley(ex3())[0].lower() == R("11/12"));
    CHECK_FALSE(contains(iphi[0], R("11/12")));

    const IntervalGame deg = embed(make_tu(2, {"1", "2", "4"}));
    CHECK(improved_shapley(deg) == interval_shapley(deg));

    const IntervalVector sym = improved_shapley(
        make_game(2, {I("0", "0"), I("0", "0"), I("2", "4")}));
    CHECK(sym[0] == I("1", "2"));
    CHECK(sym[1] == I("1", "2"));
}

TEST_CASE("improved value is efficient on random non-degenerate games") {
    Rng rng(53);
    for (int k = 0; k < 60; ++k) {
        const int n = 2 + int(rng() % 3);
        const IntervalGame w = random_interval_game(rng, n, 3);
        if (is_degenerate(w)) continue;
        CHECK(sum(improved_shapley(w)) == w.value(w.grand()));
    }
}

TEST_CASE("selection range check") {
    CHECK(shapley_selection_range_check(ex3(), 100));
    CHECK(shapley_selection_range_check(embed(make_tu(2, {"1", "2", "3"})), 10));

    Rng rng(59);
    for (int k = 0; k < 30; ++k)
        CHECK(shapley_selection_range_check(random_interval_game(rng, 3, 3), 20,
                                            rng()));
}

TEST_CASE("player roles") {
    const IntervalGame null_game =
        make_game(2, {I("1", "2"), I("0", "0"), I("1", "2")});
    const PlayerRoles r1 = player_roles(null_game);
    REQUIRE(r1.null_players == std::vector<int>{1});
    CHECK(r1.total_null_players.empty());

    const IntervalGame total =
        make_game(2, {I("1", "1"), I("0", "0"), I("1", "1")});
    const PlayerRoles r2 = player_roles(total);
    CHECK(r2.null_players == std::vector<int>{1});
    CHECK(r2.total_null_players == std::vector<int>{1});

    const IntervalGame sym =
        make_game(2, {I("0", "0"), I("0", "0"), I("2", "4")});
    const PlayerRoles r3 = player_roles(sym);
    REQUIRE(r3.symmetric_pairs.size() == 1);
    CHECK(r3.symmetric_pairs[0] == std::pair<int, int>(0, 1));
}

TEST_CASE("null players receive symmetric intervals") {
    // t = sum over S not containing the null player of weight(S)*|w|(S)
    const IntervalGame null_game =
        make_game(2, {I("1", "2"), I("0", "0"), I("1", "2")});
    CHECK(interval_shapley(null_game)[1] == I("-1/2", "1/2"));

    Rng rng(61);
    for (int k = 0; k < 25; ++k) {
        const int n = 2 + int(rng() % 2);
        const IntervalGame w = random_game_with_null_player(rng, n);
        Rational t = 0;
        for (std::uint32_t s = 0; s < (1u << n); ++s)
            t += shapley_weight(Coalition(s).size(), n + 1) *
                 length(w.value(Coalition(s)));
        CHECK(interval_shapley(w)[n] == Interval(-t, t));
    }
}

TEST_CASE("interval Shapley component lengths") {
    Rng rng(67);
    for (int k = 0; k < 25; ++k) {
        const int n = 2 + int(rng() % 3);
        const IntervalGame w = random_interval_game(rng, n, 3);
        const IntervalVector phi = interval_shapley(w);
        for (int i = 0; i < n; ++i) {
            Rational expect = 0;
            for (std::uint32_t s = 0; s < (1u << n); ++s) {
                if (Coalition(s).contains(i)) continue;
                expect += shapley_weight(Coalition(s).size(), n) *
                          (length(w.value(Coalition(s).with(i))) +
                           length(w.value(Coalition(s))));
            }
            CHECK(length(phi[i]) == expect);
        }
    }
}

TEST_CASE("axiom audits on the reference games") {
    auto phi = [](const IntervalGame& g) { return interval_shapley(g); };
    auto iphi = [](const IntervalGame& g) { return improved_shapley(g); };

    const std::vector<IntervalGame> games = {ex3()};
    const std::vector<std::pair<IntervalGame, IntervalGame>> pairs = {};

    const ValueAuditReport a = audit_value_function(phi, games, pairs);
    CHECK(a.indifference_efficiency.pass);
    CHECK_FALSE(a.efficiency.pass);
    CHECK(a.efficiency.witness_index == 0);
    CHECK(a.total_null.pass);
    CHECK(a.symmetry.pass);

    const ValueAuditReport b = audit_value_function(iphi, games, pairs);
    CHECK(b.efficiency.pass);

    // null-but-not-total-null game: observed radius t = 1/2
    const std::vector<IntervalGame> null_games = {
        testutil::make_game(2, {I("1", "2"), I("0", "0"), I("1", "2")})};
    const ValueAuditReport c = audit_value_function(phi, null_games, {});
    CHECK(c.indifference_null.pass);
    CHECK(c.total_null.pass);
    REQUIRE(c.null_radius.size() == 1);
    REQUIRE(c.null_radius[0]);
    CHECK(*c.null_radius[0] == R("1/2"));
}

TEST_CASE("interval Shapley axioms on random games") {
    auto phi = [](const IntervalGame& g) { return interval_shapley(g); };
    Rng rng(71);
    std::vector<IntervalGame> games;
    std::vector<std::pair<IntervalGame, IntervalGame>> pairs;
    for (int k = 0; k < 40; ++k)
        games.push_back(random_interval_game(rng, 3, 3));
    for (int k = 0; k < 20; ++k)
        pairs.emplace_back(random_interval_game(rng, 3, 3),
                           random_interval_game(rng, 3, 3));

    const ValueAuditReport report = audit_value_function(phi, games, pairs);
    CHECK(report.indifference_efficiency.pass);
    CHECK(report.total_null.pass);
    CHECK(report.symmetry.pass);
    CHECK(report.additivity.pass);
}
