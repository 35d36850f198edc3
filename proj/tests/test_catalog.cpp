#include "ingham/catalog.hpp"
#include "ingham/error.hpp"
#include "ingham/spec_io.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>

using namespace ingham;

TEST_CASE("every catalog entry is a valid minimal lattice") {
    const std::map<std::string, std::size_t> translates = {
        {"square", 1},          {"triangular", 1},        {"honeycomb", 2},           {"two_square", 4},
        {"trihexagonal", 3},    {"snub_square", 4},       {"truncated_square", 4},    {"snub_hexagonal", 6},
        {"rhombitrihexagonal", 6}, {"truncated_hexagonal", 6}, {"truncated_trihexagonal", 12},
        {"elongated_triangular", 2}};
    for (const std::string& name : catalog_names()) {
        CAPTURE(name);
        const CatalogEntry e = get(name);
        CHECK_NOTHROW(validate_spec(e.spec));
        CHECK(e.spec.m() == translates.at(name));
        CHECK_FALSE(e.default_configs.empty());
        for (const NamedConfig& c : e.default_configs) CHECK(c.config.m() == e.spec.m());
        // The line criterion is only sufficient; a negative answer is informational.
        if (!e.minimality_witnesses.empty()) CHECK_NOTHROW((void)minimality_certificate(e.spec, e.minimality_witnesses));
        if (name == "honeycomb") CHECK(minimality_certificate(e.spec, e.minimality_witnesses));
    }
}

TEST_CASE("parametric two-square names") {
    CHECK(get("two_square").spec.m() == 4);
    CHECK_NOTHROW(get("two_square_r1_R4"));
    CHECK_NOTHROW(get("two_square_r1/2_R5/2"));
    try {
        (void)get("dodecagonal");
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnknownTiling);
    }
}

TEST_CASE("expected records are well formed") {
    std::size_t total = 0;
    for (const CatalogEntry& e : reproduction_catalog()) {
        for (const ExpectedRecord& r : e.expected) {
            CAPTURE(r.label);
            ++total;
            CHECK_FALSE(r.values.empty());
            CHECK(r.tolerance >= 0);
            CHECK_FALSE(r.source.empty());
            if (r.quantity == "pair" || r.quantity == "a2" || r.quantity == "area") CHECK(r.config.has_value());
            if (r.config) CHECK(r.config->m() == e.spec.m());
            const auto j = record_to_json(r);
            CHECK(j.at("label") == r.label);
            CHECK(j.contains("known_discrepancy") == r.known_discrepancy.has_value());
        }
    }
    CHECK(total > 40);
    CHECK_FALSE(expected_results("honeycomb").empty());
}

TEST_CASE("spec JSON round trip") {
    for (const std::string& name : catalog_names()) {
        const LatticeSpec spec = get(name).spec;
        const auto j = spec_to_json(spec);
        CHECK(spec_to_json(spec_from_json(nlohmann::json::parse(j.dump()))).dump() == j.dump());
    }
    const auto path = std::filesystem::temp_directory_path() / "ingham_spec_roundtrip.json";
    {
        std::ofstream(path) << spec_to_json(get("honeycomb").spec).dump(2);
    }
    CHECK(load_spec_file(path.string()).m() == 2);
    std::filesystem::remove(path);
}

TEST_CASE("malformed spec JSON") {
    auto code = [](const std::string& text) -> std::optional<ErrorCode> {
        try {
            (void)spec_from_json(nlohmann::json::parse(text));
        } catch (const Error& e) {
            return e.code();
        }
        return std::nullopt;
    };
    CHECK(code(R"({"name":"x"})") == ErrorCode::ParseError);
    CHECK(code(R"({"name":"x","d":1,"l_star":[[{"a":"1","b":"0"},{"a":"0","b":"0"}],[{"a":"0","b":"0"},{"a":"1","b":"0"}]],"us":[[{"a":"1/x","b":"0"},{"a":"0","b":"0"}]]})") ==
          ErrorCode::ParseError);
    CHECK(code(R"({"name":"x","d":1,"l_star":[[{"a":"1","b":"0"},{"a":"2","b":"0"}],[{"a":"1","b":"0"},{"a":"2","b":"0"}]],"us":[[{"a":"0","b":"0"},{"a":"0","b":"0"}]]})") ==
          ErrorCode::SingularL);
    CHECK_THROWS_AS(load_spec_file("/nonexistent/spec.json"), Error);
}
