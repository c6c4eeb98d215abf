#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "coopint/generators.hpp"
#include "coopint/intgame.hpp"
#include "coopint/io.hpp"
#include "coopint/oracle.hpp"
#include "coopint/shapley.hpp"
#include "coopint/solution.hpp"
#include "coopint/tugame.hpp"

namespace {

using coopint::Rational;
using json = nlohmann::json;

json rational_json(const Rational& r) {
    return coopint::to_fraction_string(r);
}

json interval_json(const coopint::Interval& x) {
    return json::array({rational_json(x.lower()), rational_json(x.upper())});
}

json vector_json(const coopint::PayoffVector& x) {
    json out = json::array();
    for (Eigen::Index i = 0; i < x.size(); ++i) out.push_back(rational_json(x(i)));
    return out;
}

json interval_vector_json(const coopint::IntervalVector& iv) {
    json out = json::array();
    for (const auto& x : iv) out.push_back(interval_json(x));
    return out;
}

coopint::PayoffVector parse_point(const std::string& text, int n) {
    std::vector<Rational> entries;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string::npos) end = text.size();
        entries.push_back(coopint::parse_rational(text.substr(pos, end - pos)));
        pos = end + 1;
        if (end == text.size()) break;
    }
    if (static_cast<int>(entries.size()) != n)
        throw coopint::GameFileError("--point needs exactly " +
                                     std::to_string(n) + " entries");
    coopint::PayoffVector x(n);
    for (int i = 0; i < n; ++i) x(i) = entries[i];
    return x;
}

json flag_json(const coopint::ClassReport::Flag& flag) { return flag.holds; }

json classify_json(const coopint::ClassReport& report) {
    json doc;
    json witnesses = json::object();
    auto emit = [&](const char* name, const coopint::ClassReport::Flag& flag) {
        doc[name] = flag_json(flag);
        if (!flag.holds && flag.witness) {
            witnesses[name] = {
                {"s", coopint::coalition_key(flag.witness->s)},
                {"t", coopint::coalition_key(flag.witness->t)}};
        }
    };
    emit("degenerate", report.degenerate);
    emit("size_monotonic", report.size_monotonic);
    emit("supermodular_interval", report.supermodular_interval);
    emit("convex_interval", report.convex_interval);
    emit("selection_monotonic", report.selection_monotonic);
    emit("selection_convex", report.selection_convex);
    emit("selection_superadditive", report.selection_superadditive);
    emit("superadditive_interval", report.superadditive_interval);
    emit("strongly_balanced", report.strongly_balanced);
    emit("nonempty_selection_core", report.nonempty_selection_core);
    doc["witnesses"] = std::move(witnesses);
    return doc;
}

json coincidence_json(const coopint::CoincidenceVerdict& verdict) {
    using Verdict = coopint::CoincidenceVerdict;
    json doc;
    switch (verdict.outcome) {
        case Verdict::Outcome::Coincident: doc["outcome"] = "Coincident"; break;
        case Verdict::Outcome::NotCoincident:
            doc["outcome"] = "NotCoincident";
            break;
        case Verdict::Outcome::Unknown: doc["outcome"] = "Unknown"; break;
    }
    switch (verdict.reason) {
        case Verdict::Reason::EmptySC: doc["reason"] = "EmptySC"; break;
        case Verdict::Reason::Degenerate: doc["reason"] = "Degenerate"; break;
        case Verdict::Reason::VertexInclusion:
            doc["reason"] = "VertexInclusion";
            break;
        case Verdict::Reason::Budget: doc["reason"] = "Budget"; break;
    }
    if (verdict.witness) doc["witness"] = vector_json(*verdict.witness);
    if (verdict.outcome == Verdict::Outcome::Unknown &&
        verdict.noncoincidence_test)
        doc["noncoincidence_test"] = *verdict.noncoincidence_test;
    if (verdict.conflict) {
        doc["conflict"] = true;
        doc["noncoincidence_test"] = *verdict.noncoincidence_test;
    }
    return doc;
}

json axiom_json(const coopint::AxiomOutcome& outcome) {
    if (outcome.pass) return "pass";
    json doc;
    doc["result"] = "fail";
    if (outcome.witness_index) doc["witness_index"] = *outcome.witness_index;
    if (outcome.witness_player)
        doc["witness_player"] = *outcome.witness_player + 1;
    return doc;
}

json audit_report_json(const coopint::ValueAuditReport& report) {
    json doc;
    doc["ADD"] = axiom_json(report.additivity);
    doc["EFF"] = axiom_json(report.efficiency);
    doc["IEFF"] = axiom_json(report.indifference_efficiency);
    doc["INP"] = axiom_json(report.indifference_null);
    doc["SYM"] = axiom_json(report.symmetry);
    doc["TNP"] = axiom_json(report.total_null);
    json radii = json::array();
    for (const auto& r : report.null_radius)
        radii.push_back(r ? rational_json(*r) : json(nullptr));
    doc["null_radius"] = std::move(radii);
    return doc;
}

int dispatch(const std::string& command, const std::string& game_path,
             const std::string& point_text, const std::string& vertex_set,
             std::uint64_t seed, int wa_players, const std::string& wa_bound,
             const std::string& out_path) {
    json doc;

    if (command == "gen-wa") {
        const Rational b = coopint::parse_rational(wa_bound);
        const coopint::IntervalGame w = coopint::gen_wa_game(wa_players, b);
        coopint::write_game_file(w, out_path);
        doc["out"] = out_path;
        doc["players"] = wa_players;
        std::cout << doc.dump() << "\n";
        return 0;
    }

    const coopint::IntervalGame w = coopint::parse_game_file(game_path);

    if (command == "classify") {
        doc = classify_json(coopint::classify(w));
    } else if (command == "shapley") {
        doc = interval_vector_json(coopint::interval_shapley(w));
    } else if (command == "improved-shapley") {
        doc = interval_vector_json(coopint::improved_shapley(w));
    } else if (command == "core") {
        const coopint::PayoffVector x = parse_point(point_text, w.players());
        auto [in_gen, certificate] = coopint::gen_membership(x, w);
        doc["selection_imputation"] =
            coopint::selection_imputation_membership(x, w);
        doc["selection_core"] = coopint::selection_core_membership(x, w);
        doc["gen_interval_core"] = in_gen;
        if (certificate) {
            doc["certificate"] = {{"l", vector_json(certificate->l)},
                                  {"u", vector_json(certificate->u)}};
        }
    } else if (command == "coincide") {
        doc = coincidence_json(coopint::decide_core_coincidence(w));
    } else if (command == "vertices") {
        if (vertex_set != "sc")
            throw coopint::InvalidParameter("--set must be \"sc\"");
        doc = json::array();
        for (const auto& v : coopint::selection_core_vertices(w))
            doc.push_back(vector_json(v));
    } else if (command == "audit") {
        coopint::Rng rng(seed);
        std::vector<coopint::IntervalGame> games = {w};
        for (int k = 0; k < 16; ++k)
            games.push_back(coopint::random_interval_game(rng, w.players()));
        std::vector<std::pair<coopint::IntervalGame, coopint::IntervalGame>>
            pairs;
        for (int k = 0; k < 8; ++k)
            pairs.emplace_back(coopint::random_interval_game(rng, w.players()),
                               coopint::random_interval_game(rng, w.players()));

        const coopint::PlayerRoles roles = coopint::player_roles(w);
        json roles_doc;
        json nulls = json::array(), totals = json::array(),
             symmetric = json::array();
        for (int i : roles.null_players) nulls.push_back(i + 1);
        for (int i : roles.total_null_players) totals.push_back(i + 1);
        for (auto [i, j] : roles.symmetric_pairs)
            symmetric.push_back(json::array({i + 1, j + 1}));
        roles_doc["null_players"] = std::move(nulls);
        roles_doc["symmetric_pairs"] = std::move(symmetric);
        roles_doc["total_null_players"] = std::move(totals);
        doc["roles"] = std::move(roles_doc);

        auto phi = [](const coopint::IntervalGame& g) {
            return coopint::interval_shapley(g);
        };
        auto improved = [](const coopint::IntervalGame& g) {
            return coopint::improved_shapley(g);
        };
        doc["interval_shapley"] =
            audit_report_json(coopint::audit_value_function(phi, games, pairs));
        doc["improved_shapley"] = audit_report_json(
            coopint::audit_value_function(improved, games, pairs));
        doc["selection_range_check"] =
            coopint::shapley_selection_range_check(w, 50, seed);
        doc["seed"] = seed;
    } else {
        throw coopint::InvalidParameter("unknown command: " + command);
    }

    std::cout << doc.dump() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cooperative interval game analyzer"};
    app.require_subcommand(1);

    std::string game_path, point_text, out_path, wa_bound = "1";
    std::string vertex_set = "sc";
    std::uint64_t seed = 20240901;
    int wa_players = 3;

    auto add_game_arg = [&](CLI::App* cmd) {
        cmd->add_option("game", game_path, "game file (JSON)")->required();
    };

    add_game_arg(app.add_subcommand("classify", "game-class report"));
    add_game_arg(app.add_subcommand("shapley", "interval Shapley value"));
    add_game_arg(
        app.add_subcommand("improved-shapley", "improved Shapley-like value"));

    auto* core = app.add_subcommand("core", "membership tests for a point");
    add_game_arg(core);
    core->add_option("--point", point_text, "comma-separated rationals")
        ->required();

    add_game_arg(app.add_subcommand("coincide", "core-coincidence verdict"));

    auto* vertices_cmd =
        app.add_subcommand("vertices", "selection-core vertex list");
    add_game_arg(vertices_cmd);
    vertices_cmd->add_option("--set", vertex_set, "polytope to enumerate (sc)");

    auto* audit = app.add_subcommand("audit", "player roles and axiom audit");
    add_game_arg(audit);
    audit->add_option("--seed", seed, "seed for randomized sub-checks");

    auto* gen_wa = app.add_subcommand("gen-wa", "write a w_A family game");
    gen_wa->add_option("--n", wa_players, "player count")->required();
    gen_wa->add_option("--b", wa_bound, "grand-coalition slack (rational > 0)")
        ->required();
    gen_wa->add_option("--out", out_path, "output game file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        return dispatch(app.get_subcommands().front()->get_name(), game_path,
                        point_text, vertex_set, seed, wa_players, wa_bound,
                        out_path);
    } catch (const coopint::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
