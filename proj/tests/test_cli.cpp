#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "qsat/cli.hpp"

using namespace qsat;
using json = nlohmann::json;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
    return std::string("cli_test_") + name;
}

}  // namespace

// ----- construct / verify round trip -----

TEST_CASE("construct exports a file the verifier accepts bit-for-bit") {
    auto file = temp_path("star.txt");
    auto built = run({"construct", "--tree", "star:3", "--n", "3", "--method", "star",
                      "--verify", "--out", file});
    REQUIRE(built.code == 0);
    auto report = json::parse(built.out);
    CHECK(report["schema"] == 1);
    CHECK(report["method"] == "star");
    CHECK(report["edges"] == 6);
    CHECK(report["verified"] == true);

    auto checked = run({"verify", "--graph", file, "--tree", "star:3"});
    CHECK(checked.code == 0);
    auto sat = json::parse(checked.out);
    CHECK(sat["saturated"] == true);
    CHECK(sat["edges"] == 6);
    // the verify artifact equals the verification block embedded by construct
    CHECK(sat == report["verification"]);
    std::remove(file.c_str());
}

TEST_CASE("construct picks the first applicable method on auto") {
    auto r = run({"construct", "--tree", "star:3", "--n", "3"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["method"] == "subcube");
}

TEST_CASE("construct reports without a graph exit 1") {
    // every multistar with an interior deficit stays open
    auto r = run({"construct", "--tree", "cat:3,2,3", "--n", "7", "--method", "multistar"});
    CHECK(r.code == 1);
    auto report = json::parse(r.out);
    CHECK(report["status"] == "open");
}

TEST_CASE("construct rejects methods foreign to the family") {
    auto r = run({"construct", "--tree", "star:3", "--n", "3", "--method", "vgs"});
    CHECK(r.code == 2);
}

TEST_CASE("verify flags unsaturated graphs with exit 1") {
    auto file = temp_path("empty.txt");
    std::ofstream(file) << "dim=2\n";
    auto r = run({"verify", "--graph", file, "--tree", "path:2"});
    CHECK(r.code == 1);
    auto sat = json::parse(r.out);
    CHECK(sat["free"] == true);
    CHECK(sat["saturated"] == false);
    CHECK(sat["failing_edges"].size() == 4);
    std::remove(file.c_str());
}

// ----- satnum -----

TEST_CASE("satnum emits the full interval") {
    auto r = run({"satnum", "--tree", "path:5", "--n", "3"});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["schema"] == 1);
    CHECK(j["lower"] == "12/5");
    CHECK(j["upper"] == 6);
    CHECK(j["upper_method"] == "path");
    CHECK(j["exact"] == 6);
}

// ----- codes -----

TEST_CASE("codes emits codewords and the domination report") {
    auto r = run({"codes", "--kind", "hamming", "--n", "7"});
    REQUIRE(r.code == 0);
    auto json_at = r.out.find('{');
    REQUIRE(json_at != std::string::npos);
    int lines = 0;
    for (std::size_t i = 0; i < json_at; ++i) lines += r.out[i] == '\n';
    CHECK(lines == 16);
    auto j = json::parse(r.out.substr(json_at));
    CHECK(j["members"] == 16);
    CHECK(j["perfect"] == true);
    CHECK(j["components_ok"] == true);

    auto w = run({"codes", "--kind", "weichsel", "--n", "5", "--s", "2"});
    CHECK(w.code == 0);
    CHECK(json::parse(w.out.substr(w.out.find('{')))["component_count"] == 2);

    auto bad = run({"codes", "--kind", "hamming", "--n", "6"});
    CHECK(bad.code == 2);
}

// ----- pj -----

TEST_CASE("pj reports the exhaustive value") {
    auto r = run({"pj", "--j", "2", "--k", "4"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["value"] == 7);
}

TEST_CASE("pj --conjecture reproduces the known disagreement") {
    auto r = run({"pj", "--j", "3", "--k", "3", "--conjecture"});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["predicted"] == 1);
    CHECK(j["actual"] == 2);
    CHECK(j["agrees"] == false);
}

// ----- table -----

TEST_CASE("table renders text and json") {
    auto text = run({"table", "--family", "stars", "--n", "4", "--range", "2:4"});
    REQUIRE(text.code == 0);
    CHECK(text.out.find("star:3") != std::string::npos);
    CHECK(text.out.find("32/3") != std::string::npos);

    auto machine =
        run({"table", "--family", "stars", "--n", "4", "--range", "2:4", "--format", "json"});
    REQUIRE(machine.code == 0);
    auto j = json::parse(machine.out);
    REQUIRE(j["rows"].size() == 3);
    CHECK(j["rows"][1]["upper"] == 12);

    auto cats = run({"table", "--family", "caterpillars", "--n", "7", "--degrees", "3,2;3,3",
                     "--format", "json"});
    REQUIRE(cats.code == 0);
    auto cj = json::parse(cats.out);
    REQUIRE(cj["rows"].size() == 2);
    CHECK(cj["rows"][0]["tree"] == "cat:3,2");
    CHECK(cj["rows"][0]["upper"] == 112);
}

// ----- exit codes and determinism -----

TEST_CASE("argument errors exit 2, help exits 0") {
    CHECK(run({"satnum", "--tree", "path:5"}).code == 2);  // missing --n
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({}).code == 2);  // a subcommand is required
    CHECK(run({"satnum", "--tree", "nosuch:1", "--n", "3"}).code == 2);
}

TEST_CASE("search budgets surface as exit 1") {
    auto r = run({"pj", "--j", "5", "--k", "5"});
    CHECK(r.code == 1);
    CHECK(r.err.find("budget") != std::string::npos);
}

TEST_CASE("fixed arguments give byte-identical output") {
    for (auto args : {std::vector<std::string>{"satnum", "--tree", "star:3", "--n", "4"},
                      {"table", "--family", "paths", "--n", "3", "--range", "2:5"},
                      {"construct", "--tree", "path:6", "--n", "4", "--method", "path"},
                      {"codes", "--kind", "weichsel", "--n", "4", "--s", "2"}}) {
        auto a = run(args);
        auto b = run(args);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
        CHECK(a.err == b.err);
    }
}
