#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mptg/errors.hpp"
#include "mptg/families.hpp"
#include "mptg/json_io.hpp"
#include "mptg/rational.hpp"
#include "mptg/render.hpp"

using namespace mptg;

namespace {

int count_occurrences(const std::string& hay, const std::string& needle) {
    int c = 0;
    for (auto pos = hay.find(needle); pos != std::string::npos;
         pos = hay.find(needle, pos + needle.size()))
        ++c;
    return c;
}

// x1/x2 attribute values of every interval bar, parsed back to rationals
std::vector<std::pair<Rat, Rat>> interval_extents(const std::string& svg) {
    std::vector<std::pair<Rat, Rat>> out;
    std::istringstream in(svg);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find("class=\"interval\"") == std::string::npos) continue;
        auto grab = [&](const char* key) {
            const auto pos = line.find(key);
            REQUIRE(pos != std::string::npos);
            const auto start = pos + std::strlen(key);
            const auto end = line.find('"', start);
            REQUIRE(end != std::string::npos);
            return parse_rational(line.substr(start, end - start));
        };
        out.emplace_back(grab("x1=\""), grab("x2=\""));
    }
    return out;
}

}  // namespace

TEST_CASE("json round trip preserves both representation kinds") {
    const auto& ip = std::get<IntervalPointRep>(fixture("figure5").rep);
    AnyRep back = parse_representation(to_json(ip));
    REQUIRE(std::holds_alternative<IntervalPointRep>(back));
    CHECK(std::get<IntervalPointRep>(back) == ip);

    const auto& tol = std::get<ToleranceRep>(fixture("c5_proper_maxtol").rep);
    back = parse_representation(to_json(tol));
    REQUIRE(std::holds_alternative<ToleranceRep>(back));
    CHECK(std::get<ToleranceRep>(back) == tol);

    IntervalPointRep empty;
    back = parse_representation(to_json(empty));
    REQUIRE(std::holds_alternative<IntervalPointRep>(back));
    CHECK(std::get<IntervalPointRep>(back).size() == 0);
}

TEST_CASE("json output is frozen") {
    IntervalPointRep rep;
    rep.vertices = {{0, 1, Rat(1, 2)}};
    CHECK(to_json(rep) ==
          "{\n"
          "  \"vertices\": [\n"
          "    {\n"
          "      \"id\": 1,\n"
          "      \"a\": \"0\",\n"
          "      \"b\": \"1\",\n"
          "      \"p\": \"1/2\"\n"
          "    }\n"
          "  ]\n"
          "}\n");

    ToleranceRep tol;
    tol.vertices = {{-2, 2, 1}};
    CHECK(to_json(tol) ==
          "{\n"
          "  \"vertices\": [\n"
          "    {\n"
          "      \"id\": 1,\n"
          "      \"a\": \"-2\",\n"
          "      \"b\": \"2\",\n"
          "      \"t\": \"1\"\n"
          "    }\n"
          "  ]\n"
          "}\n");
}

TEST_CASE("parser accepts shuffled ids and mixed rational spellings") {
    const std::string text = R"({"vertices": [
        {"id": 2, "a": "7.1", "b": 8, "p": "7.5"},
        {"id": 1, "a": "-0.25", "b": "3/4", "p": 0}
    ]})";
    AnyRep any = parse_representation(text);
    REQUIRE(std::holds_alternative<IntervalPointRep>(any));
    const auto& rep = std::get<IntervalPointRep>(any);
    REQUIRE(rep.size() == 2);
    CHECK(rep.vertices[0] == RepVertex{Rat(-1, 4), Rat(3, 4), Rat(0)});
    CHECK(rep.vertices[1] == RepVertex{Rat(71, 10), Rat(8), Rat(15, 2)});
}

TEST_CASE("parser dispatches on the t key") {
    const std::string text = R"({"vertices": [
        {"id": 1, "a": "0", "b": "4", "t": "1/3"}
    ]})";
    AnyRep any = parse_representation(text);
    REQUIRE(std::holds_alternative<ToleranceRep>(any));
    CHECK(std::get<ToleranceRep>(any).vertices[0] == TolVertex{Rat(0), Rat(4), Rat(1, 3)});
}

TEST_CASE("parser rejects malformed documents") {
    CHECK_THROWS_AS(parse_representation("not json"), ParseError);
    CHECK_THROWS_AS(parse_representation("[]"), ParseError);
    CHECK_THROWS_AS(parse_representation("{}"), ParseError);
    CHECK_THROWS_AS(parse_representation(R"({"vertices": 5})"), ParseError);

    // entry problems
    CHECK_THROWS_AS(parse_representation(R"({"vertices": [ {"a":"0","b":"1","p":"0"} ]})"),
                    ParseError);
    CHECK_THROWS_AS(
        parse_representation(R"({"vertices": [ {"id":"1","a":"0","b":"1","p":"0"} ]})"),
        ParseError);
    CHECK_THROWS_AS(
        parse_representation(R"({"vertices": [ {"id":0,"a":"0","b":"1","p":"0"} ]})"),
        ParseError);
    CHECK_THROWS_AS(
        parse_representation(R"({"vertices": [ {"id":2,"a":"0","b":"1","p":"0"} ]})"),
        ParseError);
    CHECK_THROWS_AS(parse_representation(R"({"vertices": [
        {"id":1,"a":"0","b":"1","p":"0"},
        {"id":1,"a":"0","b":"1","p":"0"}
    ]})"),
                    ParseError);

    // field problems
    CHECK_THROWS_AS(parse_representation(R"({"vertices": [ {"id":1,"b":"1","p":"0"} ]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_representation(R"({"vertices": [ {"id":1,"a":"0","b":"1"} ]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_representation(R"({"vertices": [
        {"id":1,"a":"0","b":"1","p":"0"},
        {"id":2,"a":"0","b":"1","t":"1"}
    ]})"),
                    ParseError);
    CHECK_THROWS_AS(
        parse_representation(R"({"vertices": [ {"id":1,"a":"1/0","b":"1","p":"0"} ]})"),
        ParseError);
    CHECK_THROWS_AS(
        parse_representation(R"({"vertices": [ {"id":1,"a":"abc","b":"1","p":"0"} ]})"),
        ParseError);
    CHECK_THROWS_AS(
        parse_representation(R"({"vertices": [ {"id":1,"a":3.5,"b":"7","p":"4"} ]})"),
        ParseError);
}

TEST_CASE("parser enforces value-level validity after loading") {
    CHECK_THROWS_AS(
        parse_representation(R"({"vertices": [ {"id":1,"a":"0","b":"1","p":"2"} ]})"),
        ContractError);
    CHECK_THROWS_AS(
        parse_representation(R"({"vertices": [ {"id":1,"a":"1","b":"1","t":"1"} ]})"),
        ContractError);
    CHECK_THROWS_AS(
        parse_representation(R"({"vertices": [ {"id":1,"a":"0","b":"1","t":"0"} ]})"),
        ContractError);
}

TEST_CASE("interval-point svg has one labeled row per vertex") {
    const std::string svg = render_svg(figure5_expected().integer_rep);
    CHECK(svg.rfind("<svg xmlns=\"http://www.w3.org/2000/svg\"", 0) == 0);
    CHECK(svg.substr(svg.size() - 7) == "</svg>\n");
    CHECK(svg.find("width=\"1090\"") != std::string::npos);
    CHECK(svg.find("height=\"222\"") != std::string::npos);  // 40 + 26 * 7
    CHECK(count_occurrences(svg, "<circle") == 7);
    CHECK(count_occurrences(svg, "class=\"interval\"") == 7);
    CHECK(count_occurrences(svg, "class=\"tick\"") == 14);
    for (int v = 1; v <= 7; ++v)
        CHECK(svg.find(">v" + std::to_string(v) + "</text>") != std::string::npos);
    CHECK(svg.find("class=\"tolerance\"") == std::string::npos);
}

TEST_CASE("tolerance svg draws underbars instead of dots") {
    const std::string svg = render_svg(std::get<ToleranceRep>(fixture("g1_maxtol").rep));
    CHECK(count_occurrences(svg, "class=\"tolerance\"") == 7);
    CHECK(svg.find("<circle") == std::string::npos);
    CHECK(count_occurrences(svg, "class=\"interval\"") == 7);
}

TEST_CASE("equal interval lengths render as equal pixel extents") {
    const Graph& g = fixture("figure5").graph;
    AugmentedMatrix m(g, figure5_expected().sigma);
    CanonicalSequence seq = canonical_sequence(m, precedes(m));
    IntervalPointRep unit = realize_unit(seq, Rat(1));

    const auto extents = interval_extents(render_svg(unit));
    REQUIRE(extents.size() == 7);
    const Rat width = extents[0].second - extents[0].first;
    CHECK(width > 0);
    for (const auto& [x1, x2] : extents) CHECK(x2 - x1 == width);
}

TEST_CASE("rendered coordinates stay on the milli grid") {
    IntervalPointRep rep;
    rep.vertices = {{0, 3, 1}, {0, 1, Rat(1, 3)}};
    const std::string svg = render_svg(rep);
    // b = 1 of vertex 2 lands at 70 + 1000/3 px, rounded to 403.333
    CHECK(svg.find("x2=\"403.333\"") != std::string::npos);
    for (const auto& [x1, x2] : interval_extents(svg)) {
        // parse_rational round trip proves the strings are plain decimals;
        // the milli grid bounds the denominator by 1000
        CHECK(boost::multiprecision::denominator(x1) <= 1000);
        CHECK(boost::multiprecision::denominator(x2) <= 1000);
    }
}

TEST_CASE("rendering is deterministic") {
    const std::string a = render_svg(figure5_expected().integer_rep);
    const std::string b = render_svg(figure5_expected().integer_rep);
    CHECK(a == b);
    const auto& tol = std::get<ToleranceRep>(fixture("g1_maxtol").rep);
    CHECK(render_svg(tol) == render_svg(tol));
}

TEST_CASE("degenerate spans render without dividing by zero") {
    IntervalPointRep dot;
    dot.vertices = {{5, 5, 5}};
    const std::string svg = render_svg(dot);
    CHECK(svg.find("height=\"66\"") != std::string::npos);  // 40 + 26 * 1
    CHECK(svg.find("<circle cx=\"70\"") != std::string::npos);

    IntervalPointRep empty;
    const std::string blank = render_svg(empty);
    CHECK(blank.rfind("<svg", 0) == 0);
    CHECK(blank.find("</svg>") != std::string::npos);
    CHECK(blank.find("<line") == std::string::npos);
}
