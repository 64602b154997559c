#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "ricci/cli.hpp"

using namespace ricci;

namespace {

struct CliRun {
    int code = -1;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    CliRun r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

nlohmann::json parse(const std::string& text) { return nlohmann::json::parse(text); }

}  // namespace

TEST_CASE("sharp verdict over a family expression") {
    const CliRun r = run({"sharp", "--family", "AT:1,3,3,1", "--json"});
    CHECK(r.code == 0);
    const auto j = parse(r.out);
    CHECK(j["schema"] == "ricci-sharp/1");
    CHECK(j["command"] == "sharp");
    CHECK(j["is_sharp"] == true);
    CHECK(j["min_curvature"] == "2/3");
    CHECK(j["bound"] == "2/3");
    CHECK(j["diameter"] == 3);
}

TEST_CASE("a negative verdict still exits zero") {
    const CliRun r = run({"sharp", "--family", "K:4", "--json"});
    CHECK(r.code == 0);
    CHECK(parse(r.out)["is_sharp"] == false);
}

TEST_CASE("curvature values for the smallest interesting family") {
    const CliRun r = run({"curvature", "--family", "G:1,2", "--json"});
    CHECK(r.code == 0);
    const auto j = parse(r.out);
    CHECK(j["min_kappa_lly"] == "1");
    bool saw_dominating_edge = false;
    for (const auto& e : j["edges"]) {
        if (e["edge"] == nlohmann::json::array({2, 3})) {
            CHECK(e["kappa_lly"] == "4/3");
            saw_dominating_edge = true;
        } else {
            CHECK(e["kappa_lly"] == "1");
        }
    }
    CHECK(saw_dominating_edge);
}

TEST_CASE("identical invocations produce byte-identical output") {
    const std::vector<std::string> args = {"curvature", "--family", "Q:3", "--json"};
    CHECK(run(args).out == run(args).out);
    // The worker count must not influence the bytes either.
    std::vector<std::string> jobs1 = args, jobs4 = args;
    jobs1.insert(jobs1.end(), {"--jobs", "1"});
    jobs4.insert(jobs4.end(), {"--jobs", "4"});
    CHECK(run(jobs1).out == run(jobs4).out);
}

TEST_CASE("explain attaches verified transport data") {
    const CliRun r = run({"curvature", "--family", "K:3", "--json", "--explain"});
    CHECK(r.code == 0);
    const auto j = parse(r.out);
    for (const auto& e : j["edges"]) {
        CHECK(e.contains("transport"));
        CHECK(e["transport"]["value"] == "0");
        CHECK(!e["transport"]["plan"].empty());
        CHECK(!e["transport"]["certificate"].empty());
    }
}

TEST_CASE("decimal flag adds labeled approximations") {
    const CliRun r = run({"sharp", "--family", "Q:3", "--json", "--decimal"});
    const auto j = parse(r.out);
    CHECK(j["min_curvature"]["value"] == "2/3");
    CHECK(j["min_curvature"]["approximate"].is_number_float());
}

TEST_CASE("dump-graph round-trips through the edge-list format") {
    const auto path =
        std::filesystem::temp_directory_path() / "ricci_cli_roundtrip_test.txt";
    const CliRun dump =
        run({"curvature", "--family", "G:2,2", "--json", "--dump-graph", path.string()});
    CHECK(dump.code == 0);
    const CliRun reread = run({"curvature", "--graph", path.string(), "--json"});
    CHECK(reread.code == 0);
    CHECK(dump.out == reread.out);
    std::filesystem::remove(path);
}

TEST_CASE("scan results are machine-readable") {
    const CliRun r = run({"scan", "--diameter", "3", "--json"});
    CHECK(r.code == 0);
    const auto j = parse(r.out);
    CHECK(j["command"] == "scan");
    REQUIRE(j["results"].size() == 1);
    CHECK(j["results"][0]["outcome"] == "finite-list");
    CHECK(j["results"][0]["solutions"] == nlohmann::json::array({"AT(1,3,3,1)"}));
    CHECK(j["results"][0]["region"].size() == 3);

    const CliRun even = run({"scan", "--even", "--from", "8", "--to", "12", "--json"});
    const auto je = parse(even.out);
    REQUIRE(je["results"].size() == 3);
    for (const auto& res : je["results"]) {
        CHECK(res["outcome"] == "empty");
        CHECK(res["admissible_t"] == "empty");
        CHECK(!res["trace"].empty());
    }

    const CliRun fam = run({"scan", "--diameter", "4", "--json", "--max-b", "3"});
    const auto jf = parse(fam.out);
    CHECK(jf["results"][0]["outcome"] == "family");
    CHECK(jf["results"][0]["members_preview"] ==
          nlohmann::json::array({"AT(1,1,3,1,1)", "AT(1,2,4,2,1)", "AT(1,3,5,3,1)"}));
}

TEST_CASE("verify-lemmas and cross-validate succeed") {
    CHECK(run({"verify-lemmas", "--max-b", "3", "--json"}).code == 0);
    const CliRun r = run({"cross-validate", "--max-levels", "3", "--max-size", "3", "--json"});
    CHECK(r.code == 0);
    const auto j = parse(r.out);
    CHECK(j["all_agree"] == true);
    CHECK(j["sequences_checked"] == 12);
}

TEST_CASE("classification over four vertices") {
    const CliRun r = run({"classify", "--n", "4", "--json"});
    CHECK(r.code == 0);
    const auto j = parse(r.out);
    CHECK(j["sharp_count"] == 9);
    CHECK(j["mismatch_masks"].empty());
}

TEST_CASE("malformed invocations exit with code two") {
    CHECK(run({"sharp"}).code == 2);  // no graph source
    CHECK(run({"sharp", "--family", "K:3", "--graph", "x.txt"}).code == 2);
    CHECK(run({"sharp", "--family", "K:nope"}).code == 2);
    CHECK(run({"curvature", "--graph", "/nonexistent/file.txt"}).code == 2);
    CHECK(run({"scan", "--diameter", "7"}).code == 2);
    CHECK(run({"scan"}).code == 2);  // neither --even nor --diameter
    CHECK(run({"scan", "--even", "--diameter", "4"}).code == 2);
    CHECK(run({"classify"}).code == 2);  // --n is required
    CHECK(run({"classify", "--n", "9"}).code == 2);
    CHECK(run({"no-such-command"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"sharp", "--family", "K:3", "--bogus-flag"}).code == 2);
}

TEST_CASE("help exits zero") {
    const CliRun r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("curvature") != std::string::npos);
}

TEST_CASE("human-readable output mentions the verdict") {
    const CliRun r = run({"sharp", "--family", "Q:3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("sharp: yes") != std::string::npos);
    CHECK(r.out.find("2/3") != std::string::npos);
}
