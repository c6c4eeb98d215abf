#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <sys/wait.h>

#include "coopint/io.hpp"

#include "helpers.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

std::string cli_path() {
    const char* p = std::getenv("COOPINT_CLI");
    REQUIRE_MESSAGE(p != nullptr, "COOPINT_CLI must point at the binary");
    return p;
}

RunResult run(const std::string& args) {
    const std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string write_temp(const std::string& name, const std::string& text) {
    const std::string path = "/tmp/coopint_cli_test_" + name;
    std::ofstream(path) << text;
    return path;
}

std::string ex3_path() {
    return write_temp("ex3.json", coopint::serialize_game(testutil::ex3()));
}

std::string ref2_path() {
    using testutil::I;
    return write_temp("ref2.json",
                      coopint::serialize_game(testutil::make_game(
                          2, {I("0", "1"), I("0", "1"), I("4", "6")})));
}

} // namespace

TEST_CASE("shapley command emits the documented JSON") {
    const RunResult r = run("shapley " + ex3_path());
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "[[\"11/12\",\"31/12\"],[\"7/6\",\"17/6\"],[\"23/12\",\"43/12\"]]\n");
}

TEST_CASE("improved-shapley command") {
    const RunResult r = run("improved-shapley " + ex3_path());
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "[[\"19/12\",\"23/12\"],[\"11/6\",\"13/6\"],[\"31/12\",\"35/12\"]]\n");
}

TEST_CASE("coincide command") {
    const RunResult nc = run("coincide " + ref2_path());
    CHECK(nc.exit_code == 0);
    CHECK(nc.out == "{\"outcome\":\"NotCoincident\",\"reason\":"
                    "\"VertexInclusion\",\"witness\":[\"6/1\",\"0/1\"]}\n");

    const std::string deg = write_temp(
        "deg.json", coopint::serialize_game(
                        coopint::embed(testutil::make_tu(2, {"0", "0", "1"}))));
    const RunResult d = run("coincide " + deg);
    CHECK(d.exit_code == 0);
    CHECK(d.out == "{\"outcome\":\"Coincident\",\"reason\":\"Degenerate\"}\n");
}

TEST_CASE("vertices command") {
    const RunResult r = run("vertices " + ref2_path() + " --set sc");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "[[\"0/1\",\"4/1\"],[\"0/1\",\"6/1\"],[\"4/1\",\"0/1\"],"
                   "[\"6/1\",\"0/1\"]]\n");
}

TEST_CASE("core command") {
    const RunResult r = run("core " + ref2_path() + " --point 6,0");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"gen_interval_core\":false") != std::string::npos);
    CHECK(r.out.find("\"selection_core\":true") != std::string::npos);
}

TEST_CASE("gen-wa writes a parseable game") {
    const std::string out = "/tmp/coopint_cli_test_wa.json";
    const RunResult r = run("gen-wa --n 3 --b 1/2 --out " + out);
    CHECK(r.exit_code == 0);
    CHECK(coopint::parse_game_file(out) ==
          coopint::gen_wa_game(3, testutil::R("1/2")));
}

TEST_CASE("outputs are byte-stable") {
    const std::string path = ex3_path();
    for (const char* cmd : {"classify ", "shapley ", "coincide ", "audit "}) {
        const RunResult a = run(cmd + path);
        const RunResult b = run(cmd + path);
        CHECK(a.exit_code == 0);
        CHECK(a.out == b.out);
        CHECK_FALSE(a.out.empty());
    }
}

TEST_CASE("input errors exit with code 1") {
    CHECK(run("shapley /nonexistent/game.json").exit_code == 1);
    const std::string bad =
        write_temp("bad.json", "{\"players\": 2, \"coalitions\": {}}");
    CHECK(run("shapley " + bad).exit_code == 1);
}
