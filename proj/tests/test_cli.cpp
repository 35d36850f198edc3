#include "ingham/catalog.hpp"
#include "ingham/commands.hpp"
#include "ingham/reproduce.hpp"

#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace ingham;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    args.insert(args.begin(), "ingham");
    std::vector<const char*> argv;
    for (const std::string& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("catalog subcommands") {
    const Run list = cli({"catalog", "list"});
    CHECK(list.code == kExitOk);
    CHECK(list.out.find("truncated_trihexagonal") != std::string::npos);
    const Run json = cli({"catalog", "list", "--json"});
    CHECK(nlohmann::json::parse(json.out).size() == catalog_names().size());
    CHECK(cli({"catalog", "show", "honeycomb"}).out.find("minimality certificate: holds") != std::string::npos);
    const Run missing = cli({"catalog", "show", "nosuch"});
    CHECK(missing.code == kExitUsage);
    CHECK(missing.err.rfind("error: ", 0) == 0);
}

TEST_CASE("constants") {
    const Run r = cli({"constants", "-t", "honeycomb", "--config", "0,0;1,0"});
    REQUIRE(r.code == kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("a2") == true);
    CHECK(j.at("kappa1").get<double>() == doctest::Approx(1.0));
    CHECK(j.at("kappa2").get<double>() == doctest::Approx(3.0));
    CHECK(cli({"constants", "-t", "honeycomb", "--config", "0,0"}).code == kExitUsage);
    CHECK(cli({"constants", "-t", "honeycomb", "--config", "0,0;zz"}).code == kExitUsage);
    CHECK(cli({"constants", "-t", "two_square", "--r", "2", "--R", "2"}).code == kExitUsage);
    const Run two = cli({"constants", "-t", "two_square", "--r", "1", "--R", "2"});
    CHECK(two.code == kExitOk);
    CHECK(cli({"constants"}).code == kExitUsage);
    CHECK(cli({"bogus"}).code == kExitUsage);
}

TEST_CASE("spec file input") {
    const auto path = std::filesystem::temp_directory_path() / "ingham_cli_spec.json";
    {
        std::ofstream(path) << R"({"name":"custom","d":1,
            "l_star":[[{"a":"1","b":"0"},{"a":"0","b":"0"}],[{"a":"0","b":"0"},{"a":"1","b":"0"}]],
            "us":[[{"a":"0","b":"0"},{"a":"0","b":"0"}],[{"a":"1/2","b":"0"},{"a":"1/2","b":"0"}]]})";
    }
    const Run r = cli({"constants", "--spec-file", path.string(), "--config", "0,0;1,0"});
    CHECK(r.code == kExitOk);
    CHECK(nlohmann::json::parse(r.out).at("tiling") == "custom");
    std::filesystem::remove(path);
    CHECK(cli({"constants", "--spec-file", path.string()}).code == kExitUsage);
}

TEST_CASE("tolerance from the environment") {
    ::setenv("INGHAM_TOL", "0.5", 1);
    const Run r = cli({"constants", "-t", "honeycomb", "--config", "0,0;1,0"});
    CHECK(nlohmann::json::parse(r.out).at("a2") == false);
    ::setenv("INGHAM_TOL", "abc", 1);
    CHECK(cli({"constants", "-t", "honeycomb"}).code == kExitUsage);
    ::unsetenv("INGHAM_TOL");
}

TEST_CASE("survey and verify") {
    const Run s = cli({"survey", "-t", "snub_square", "--connected-only"});
    REQUIRE(s.code == kExitOk);
    CHECK(nlohmann::json::parse(s.out).at("total") == 19);
    CHECK(cli({"survey", "-t", "honeycomb", "--grid", "9"}).code == kExitUsage);
    CHECK(cli({"verify", "-t", "honeycomb", "-k", "1"}).code == kExitOk);
    CHECK(cli({"verify", "-t", "honeycomb", "-k", "1", "--hole", "100,100,101,101"}).code == kExitUsage);
}

TEST_CASE("export") {
    const Run empty = cli({"export", "-t", "honeycomb", "--what", "points", "--bbox", "5,5,5,5"});
    CHECK(empty.code == kExitOk);
    CHECK(empty.out == "j,m1,m2,x,y\n");
    const Run pts = cli({"export", "-t", "square", "--what", "points", "--bbox", "0,0,1,1"});
    CHECK(std::count(pts.out.begin(), pts.out.end(), '\n') == 5);
    const Run dom = cli({"export", "-t", "honeycomb", "--what", "domain"});
    CHECK(dom.out.rfind("cell_index,vertex_index,x,y\n", 0) == 0);
    CHECK(cli({"export", "-t", "honeycomb", "--what", "volume"}).code == kExitUsage);
}

TEST_CASE("a corrupted expected value is reported as a failure") {
    std::vector<CatalogEntry> catalog = {get("elongated_triangular")};
    ReproductionOptions options;
    const ReproductionReport clean = run_reproduction(catalog, options);
    CHECK(clean.failed == 0);
    CHECK(clean.ok());

    auto& records = catalog.front().expected;
    std::size_t corrupted = records.size();
    for (std::size_t i = 0; i < records.size(); ++i)
        if (records[i].quantity == "pair") {
            records[i].values[1] += 0.5;
            corrupted = i;
            break;
        }
    REQUIRE(corrupted < records.size());
    const ReproductionReport bad = run_reproduction(catalog, options);
    CHECK(bad.failed == 1);
    CHECK_FALSE(bad.ok());
    CHECK(bad.entries[corrupted].status == EntryStatus::Fail);
    const auto j = report_to_json(bad);
    CHECK(j.at("summary").at("ok") == false);
    CHECK(j.at("entries").at(corrupted).at("status") == "fail");
}
