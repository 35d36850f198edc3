#include "ingham/spec_io.hpp"

#include "ingham/error.hpp"

#include <fstream>

namespace ingham {

namespace {

nlohmann::ordered_json number_to_json(const QuadNumber& q) {
    return {{"a", q.rational_part().str()}, {"b", q.radical_coeff().str()}};
}

[[noreturn]] void schema_error(const std::string& what) { throw Error(ErrorCode::ParseError, "tiling JSON: " + what); }

Rational rational_field(const nlohmann::json& j, const char* key) {
    if (!j.contains(key)) return Rational(0);
    const nlohmann::json& v = j.at(key);
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    schema_error(std::string("field '") + key + "' must be a string \"p/q\"");
}

QuadNumber number_from_json(const nlohmann::json& j, int d) {
    if (!j.is_object()) schema_error("expected {\"a\": ..., \"b\": ...}");
    return QuadNumber(rational_field(j, "a"), rational_field(j, "b"), d);
}

QVec2 vector_from_json(const nlohmann::json& j, int d) {
    if (!j.is_array() || j.size() != 2) schema_error("expected a 2-vector");
    return QVec2{number_from_json(j[0], d), number_from_json(j[1], d)};
}

}  // namespace

nlohmann::ordered_json spec_to_json(const LatticeSpec& spec) {
    nlohmann::ordered_json j;
    j["name"] = spec.name;
    j["d"] = spec.field();
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : spec.l_star) rows.push_back({number_to_json(row[0]), number_to_json(row[1])});
    j["l_star"] = rows;
    nlohmann::ordered_json us = nlohmann::ordered_json::array();
    for (const QVec2& u : spec.us) us.push_back({number_to_json(u[0]), number_to_json(u[1])});
    j["us"] = us;
    if (spec.scale != 1.0) j["scale"] = spec.scale;
    return j;
}

LatticeSpec spec_from_json(const nlohmann::json& j) {
    if (!j.is_object()) schema_error("top level must be an object");
    for (const char* key : {"name", "l_star", "us"})
        if (!j.contains(key)) schema_error(std::string("missing field '") + key + "'");
    LatticeSpec spec;
    try {
        spec.name = j.at("name").get<std::string>();
        const int d = j.value("d", 1);
        if (d < 1) schema_error("d must be a positive squarefree integer");
        const nlohmann::json& rows = j.at("l_star");
        if (!rows.is_array() || rows.size() != 2) schema_error("l_star must be 2x2");
        spec.l_star = QMat2{vector_from_json(rows[0], d), vector_from_json(rows[1], d)};
        const nlohmann::json& us = j.at("us");
        if (!us.is_array() || us.empty()) schema_error("us must be a non-empty list");
        for (const nlohmann::json& u : us) spec.us.push_back(vector_from_json(u, d));
        spec.scale = j.value("scale", 1.0);
    } catch (const nlohmann::json::exception& e) {
        schema_error(e.what());
    }
    validate_spec(spec);
    return spec;
}

LatticeSpec load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::ParseError, "'" + path + "': " + e.what());
    }
    return spec_from_json(j);
}

}  // namespace ingham
