#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "tamedeg/cli.hpp"
#include "tamedeg/serialize.hpp"
#include "tamedeg/tame.hpp"

using namespace tamedeg;

namespace {

CommandResult run(std::initializer_list<std::string> args) { return run_cli(std::vector<std::string>(args)); }

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

std::string temp_file(const std::string& name)
{
    return (std::filesystem::temp_directory_path() / ("tamedeg_test_" + name)).string();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("exit code matrix")
{
    const std::vector<std::pair<std::vector<std::string>, int>> matrix{
        {{"decide", "5", "7", "24"}, 0},
        {{"decide", "5", "7", "23"}, 1},
        {{"decide", "3", "5", "7"}, 1},
        {{"decide", "4", "6", "9"}, 2},
        {{"decide", "5", "7"}, 2},
        {{"witness", "3", "5", "8"}, 0},
        {{"witness", "3", "5", "7"}, 1},
        {{"witness", "5", "3", "8"}, 2},
        {{"frobenius", "5", "7"}, 0},
        {{"frobenius", "4", "6"}, 2},
        {{"gaps", "4", "6"}, 2},
        {{"gaps", "5", "11", "--min", "11"}, 0},
        {{"member", "24", "5", "7"}, 0},
        {{"member", "23", "5", "7"}, 1},
        {{"table", "--pair", "5,7", "--paper-diff"}, 0},
        {{"table", "--pair", "3,7", "--paper-diff"}, 2},
        {{"table", "--three", "9"}, 2},
        {{"verify", "--random", "3", "--seed", "5"}, 0},
        {{"verify", "--random", "3"}, 2},
        {{"verify", "/nonexistent/word.json"}, 2},
        {{"reduce", "/nonexistent/map.json", "--target", "3"}, 2},
        {{"nosuchcommand"}, 2},
        {{}, 2},
    };
    for (const auto& [args, code] : matrix) {
        CAPTURE(args);
        CHECK(run_cli(args).exit_code == code);
    }
}

TEST_CASE("decide")
{
    const auto m = run({"decide", "5", "7", "24"});
    CHECK(contains(m.out, "member: 24 = 2*5 + 2*7"));
    CHECK(contains(m.out, "inverse verified"));

    const auto s = run({"decide", "24", "7", "5"});
    CHECK(contains(s.out, "input (24,7,5) sorted to (5,7,24)"));

    const auto nm = run({"decide", "5", "7", "23", "--json"});
    const Json j = Json::parse(nm.out);
    CHECK(j["verdict"] == "nonmember");
    CHECK(j["trace"]["valid"] == true);
    CHECK(j["sorted"] == Json::array({5, 7, 23}));

    const auto o = run({"decide", "4", "6", "9"});
    CHECK(contains(o.out, "out of scope"));
}

TEST_CASE("witness, verify and reduce through files")
{
    const auto path = temp_file("w358.json");
    const auto w = run({"witness", "3", "5", "8", "--out", path});
    REQUIRE(w.exit_code == 0);
    CHECK(contains(w.out, "mdeg = (3,5,8), inverse verified"));

    const auto v = run({"verify", path});
    CHECK(v.exit_code == 0);
    CHECK(contains(v.out, "pass, mdeg (3,5,8)"));

    const auto r = run({"reduce", path, "--target", "3", "--budget", "8"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "g = u*v"));

    const auto id = temp_file("identity.json");
    std::ofstream(id) << to_json(TameWord(3)).dump();
    const auto none = run({"reduce", id, "--target", "3", "--budget", "1"});
    CHECK(none.exit_code == 1);
    CHECK(contains(none.out, "none within budget"));

    const auto bad = temp_file("bad.json");
    std::ofstream(bad) << "{\"n\": 3, \"factors\": [{\"type\": \"elementary\"}]}";
    CHECK(run({"verify", bad}).exit_code == 2);
    std::ofstream(bad) << "not json";
    CHECK(run({"verify", bad}).exit_code == 2);

    const auto one = run({"witness", "1", "1", "1"});
    CHECK(one.exit_code == 0);
    CHECK(contains(one.out, "mdeg = (1,1,1)"));
}

TEST_CASE("semigroup commands")
{
    CHECK(run({"frobenius", "5", "7"}).out == "23\n");
    CHECK(run({"frobenius", "7", "11"}).out == "59\n");
    CHECK(run({"gaps", "5", "11", "--min", "11"}).out == "12,13,14,17,18,19,23,24,28,29,34,39\n");
    CHECK(run({"member", "24", "5", "7"}).out == "24 = 2*5 + 2*7\n");
    CHECK(Json::parse(run({"--json", "frobenius", "5", "7"}).out)["frobenius"] == 23);
}

TEST_CASE("table diffs")
{
    CHECK(contains(run({"table", "--pair", "5,11", "--paper-diff"}).out, "match: exact"));
    CHECK(contains(run({"table", "--pair", "5,13", "--paper-diff"}).out, "match: exact"));

    const auto d57 = run({"table", "--pair", "5,7", "--paper-diff"}).out;
    CHECK(contains(d57, "discrepancy: paper lists 21; 21 = 3*7 is representable"));
    CHECK(std::count(d57.begin(), d57.end(), '\n') == 4);

    const auto d711 = run({"table", "--pair", "7,11", "--paper-diff", "--json"});
    const Json j = Json::parse(d711.out);
    CHECK(j["derived"].size() == 21);
    REQUIRE(j["discrepancies"].size() == 1);
    CHECK(j["discrepancies"][0]["kind"] == "duplicate");
    CHECK(j["discrepancies"][0]["value"] == 45);

    CHECK(contains(run({"table", "--three", "13", "--paper-diff"}).out, "match: exact"));
}

TEST_CASE("table output is deterministic")
{
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"table", "--pair", "7,11", "--paper-diff"}, {"table", "--pair", "17,23", "--json"}, {"table", "--three", "101"}}) {
        const auto first = run_cli(args).out;
        for (int i = 0; i < 3; ++i) CHECK(run_cli(args).out == first);
    }
}

}
