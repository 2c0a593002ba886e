#include "semifree/catalog.hpp"
#include "semifree/data_format.hpp"

#include <doctest.h>

#include <set>

using namespace semifree;

namespace {

std::string error_of(const std::string& text) {
    try {
        parse_data(text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

const char* kPoint = R"({"name": "p", "dimension": 8, "b2": 1, "components": [
  {"type": "point", "weights": [1, 1, 1, 1], "normal": {"kind": "point"}},
  {"type": "cp3", "weights": [-1, 0, 0, 0], "normal": {"kind": "sixdim", "c1": 1}}
]})";

}  // namespace

TEST_CASE("catalog round trip") {
    for (const auto& e : catalog()) {
        CAPTURE(e.name);
        const std::string text = emit_data(e.data);
        const auto back = parse_data(text);
        CHECK(back == e.data);
        CHECK(back.name == e.name);
        CHECK(emit_data(back) == text);
    }
}

TEST_CASE("shipped example files") {
    std::set<std::string> kinds;
    for (const auto& e : catalog()) {
        CAPTURE(e.name);
        const auto d = load_data(std::string(SEMIFREE_SOURCE_DIR) + "/docs/examples/" + e.name + ".json");
        CHECK(d == e.data);
        for (const auto& c : d.components) kinds.insert(normal_kind(c.normal));
    }
    CHECK(kinds == std::set<std::string>{"point", "surface", "fourdim_extremal", "fourdim_split", "sixdim"});
}

TEST_CASE("parsing") {
    const auto d = parse_data(kPoint);
    CHECK(d.name == "p");
    REQUIRE(d.components.size() == 2);
    CHECK(d.components[1].type == ComponentType::CP3);
    CHECK(std::get<SixDim>(d.components[1].normal).m == 1);
    // weights are stored sorted
    const auto u = parse_data(R"({"dimension": 8, "b2": 1, "components": [
      {"type": "point", "weights": [1, -1, 1, -1], "normal": {"kind": "point"}}]})");
    CHECK(u.components[0].weights == WeightSignature{-1, -1, 1, 1});
}

TEST_CASE("syntax errors report line and column") {
    const std::string truncated = std::string(kPoint).substr(0, 120);
    const auto e = error_of(truncated);
    CHECK(e.find("line") != std::string::npos);
    CHECK(e.find("column") != std::string::npos);
    CHECK(error_of("{\"dimension\": 8,\n  \"b2\": 1,\n  oops}").find("line 3") != std::string::npos);
}

TEST_CASE("schema errors report the field") {
    auto replaced = [](const std::string& from, const std::string& to) {
        std::string s = kPoint;
        s.replace(s.find(from), from.size(), to);
        return error_of(s);
    };
    CHECK(replaced("[1, 1, 1, 1]", "[1, 1, 1]").find("components[0].weights") != std::string::npos);
    CHECK(replaced("\"c1\": 1", "\"c1\": 1.5").find("components[1].normal.c1") != std::string::npos);
    CHECK(replaced("\"sixdim\"", "\"sevendim\"").find("components[1].normal.kind") != std::string::npos);
    CHECK(replaced("\"cp3\"", "\"cp4\"").find("components[1].type") != std::string::npos);
    CHECK(replaced("\"dimension\": 8", "\"dimension\": 6").find("dimension") != std::string::npos);
    CHECK(replaced("\"b2\": 1", "\"b2\": 2").find("b2") != std::string::npos);
    CHECK(replaced("\"kind\": \"point\"", "\"kind\": \"point\", \"extra\": 1").find("unknown key \"extra\"") !=
          std::string::npos);
    CHECK(replaced("\"weights\": [1, 1, 1, 1], ", "").find("missing key \"weights\"") != std::string::npos);
    CHECK(error_of("[]").find("<root>") != std::string::npos);
    CHECK_THROWS_AS(load_data("/nonexistent/file.json"), ParseError);
}

TEST_CASE("surface and split fields") {
    const auto w = parse_data(emit_data(find_catalog("wexample")->data));
    const auto& s = std::get<SurfaceNormal>(w.components[1].normal);
    CHECK(s.summands[0].degree == 3);
    CHECK(s.summands[0].weight == -1);
    const auto q = parse_data(emit_data(find_catalog("quadricone")->data));
    const auto& sp = std::get<FourDimSplit>(q.components[1].normal);
    CHECK(sp.negative == std::array<std::int64_t, 2>{1, 1});
}

TEST_CASE("Fano tables") {
    const auto t = default_fano_table();
    const auto text = emit_fano_table(t);
    CHECK(parse_fano_table(text) == t);
    CHECK(table_hash(t) == table_hash(parse_fano_table(text)));
    CHECK(table_hash(t).size() == 16);
    auto other = t;
    other[6].b4 = 8;
    CHECK(table_hash(other) != table_hash(t));
    CHECK_THROWS_AS(parse_fano_table(R"({"families": [{"name": "P4"}]})"), ParseError);
    CHECK_THROWS_AS(parse_fano_table(R"({"families": [{"name": "P4", "iota": 5, "b4": 1, "c1_fourth": 625,
        "finite_automorphisms": 1}]})"),
                    ParseError);
}
