#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "json.hpp"

#include <sstream>
#include <string>
#include <vector>

using namespace test_support;

namespace {

run_config make_rc(int r, int d, int g, int cap, measure_kind m, output_format f) {
    run_config rc;
    rc.rank = r;
    rc.depth = d;
    rc.genus = g;
    rc.cap = cap;
    rc.measure = m;
    rc.format = f;
    return rc;
}

} // namespace

TEST_CASE("coefficient table rows") {
    SECTION("universal values down the diagonal") {
        const auto rows =
            compute_rows(make_rc(1, 1, 0, 2, measure_kind::universal, output_format::text));
        REQUIRE(rows.size() == 3);
        REQUIRE(rows[0].n == std::vector<int>{0});
        REQUIRE(rows[0].value == "1");
        REQUIRE(rows[1].value == "s1");
        REQUIRE(rows[2].value == "s2");
    }
    SECTION("euler values at rank two") {
        const auto rows =
            compute_rows(make_rc(2, 1, 0, 1, measure_kind::euler, output_format::text));
        REQUIRE(rows.size() == 2);
        REQUIRE(rows[0].value == "1");
        REQUIRE(rows[1].value == "4");
    }
    SECTION("cap zero leaves only the constant row") {
        const auto rows =
            compute_rows(make_rc(3, 2, 1, 0, measure_kind::hodge_deligne, output_format::text));
        REQUIRE(rows.size() == 1);
        REQUIRE((rows[0].n == std::vector<int>{0, 0}));
        REQUIRE(rows[0].value == "1");
    }
}

TEST_CASE("text rendering") {
    const auto rc = make_rc(1, 1, 0, 1, measure_kind::universal, output_format::text);
    std::ostringstream os;
    REQUIRE(run_compute(rc, os) == 0);
    REQUIRE(os.str() == "r=1 d=1 genus=0 cap=1 measure=universal\n"
                        "(0) 1\n"
                        "(1) s1\n");
}

TEST_CASE("json rendering") {
    const auto rc = make_rc(2, 1, 0, 2, measure_kind::universal, output_format::json);
    std::ostringstream os;
    REQUIRE(run_compute(rc, os) == 0);
    REQUIRE(os.str().back() == '\n');

    const auto j = nlohmann::ordered_json::parse(os.str());
    std::vector<std::string> keys;
    for (const auto& item : j.items()) keys.push_back(item.key());
    REQUIRE(keys == std::vector<std::string>{"r", "d", "genus", "measure", "cap", "coefficients"});
    REQUIRE(j["r"] == 2);
    REQUIRE(j["d"] == 1);
    REQUIRE(j["genus"] == 0);
    REQUIRE(j["measure"] == "universal");
    REQUIRE(j["cap"] == 2);
    REQUIRE(j["coefficients"].size() == 3);
    REQUIRE(j["coefficients"][1]["n"] == nlohmann::ordered_json::array({1}));
    REQUIRE(j["coefficients"][1]["value"] == "s1 + L*s1");
    REQUIRE(j["coefficients"][2]["value"] == "s2 + L^2*s2 + L*s1^2");
}

TEST_CASE("csv rendering") {
    const auto rc = make_rc(1, 2, 0, 1, measure_kind::euler, output_format::csv);
    std::ostringstream os;
    REQUIRE(run_compute(rc, os) == 0);
    std::istringstream is(os.str());
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(is, line)) lines.push_back(line);
    REQUIRE(lines.size() == 4);
    REQUIRE(lines[0] == "n1,n2,value");
    REQUIRE(lines[1] == "0,0,1");
    REQUIRE(lines[2] == "0,1,2");
    REQUIRE(lines[3] == "1,1,2");
}

TEST_CASE("rendering is deterministic") {
    const auto rc = make_rc(2, 2, 1, 2, measure_kind::hodge_deligne, output_format::json);
    std::ostringstream a, b;
    run_compute(rc, a);
    run_compute(rc, b);
    REQUIRE(a.str() == b.str());
}

TEST_CASE("verification report") {
    const auto rc = make_rc(2, 2, 1, 2, measure_kind::universal, output_format::text);
    std::ostringstream os;
    REQUIRE(run_verify(rc, os) == 0);
    REQUIRE(os.str() == "[PASS] strata-sum\n"
                        "[PASS] exponential\n"
                        "[PASS] measures\n"
                        "[PASS] depth-one\n");

    std::ostringstream es;
    REQUIRE(run_exp_check(rc, es) == 0);
    REQUIRE(es.str() == "[PASS] exponential\n");
}

TEST_CASE("euler table rendering") {
    SECTION("text with fixed-point counts at genus zero") {
        const auto rc = make_rc(2, 1, 0, 2, measure_kind::universal, output_format::text);
        std::ostringstream os;
        REQUIRE(run_euler_table(rc, os) == 0);
        REQUIRE(os.str() == "r=2 d=1 genus=0 cap=2 measure=euler\n"
                            "(0) closed=1 measure=1 count=1 ok\n"
                            "(1) closed=4 measure=4 count=4 ok\n"
                            "(2) closed=10 measure=10 count=10 ok\n");
    }
    SECTION("positive genus drops the count column") {
        const auto rc = make_rc(2, 1, 1, 1, measure_kind::universal, output_format::text);
        std::ostringstream os;
        REQUIRE(run_euler_table(rc, os) == 0);
        REQUIRE(os.str() == "r=2 d=1 genus=1 cap=1 measure=euler\n"
                            "(0) closed=1 measure=1 ok\n"
                            "(1) closed=0 measure=0 ok\n");
    }
    SECTION("json carries all three routes") {
        const auto rc = make_rc(2, 1, 0, 2, measure_kind::universal, output_format::json);
        std::ostringstream os;
        REQUIRE(run_euler_table(rc, os) == 0);
        const auto j = nlohmann::ordered_json::parse(os.str());
        REQUIRE(j["measure"] == "euler");
        REQUIRE(j["all_consistent"] == true);
        REQUIRE(j["rows"].size() == 3);
        REQUIRE(j["rows"][2]["closed_form"] == "10");
        REQUIRE(j["rows"][2]["measure_path"] == "10");
        REQUIRE(j["rows"][2]["combinatorial"] == "10");
        REQUIRE(j["rows"][2]["consistent"] == true);
    }
    SECTION("csv layout") {
        const auto rc = make_rc(2, 1, 0, 1, measure_kind::universal, output_format::csv);
        std::ostringstream os;
        REQUIRE(run_euler_table(rc, os) == 0);
        std::istringstream is(os.str());
        std::string line;
        std::vector<std::string> lines;
        while (std::getline(is, line)) lines.push_back(line);
        REQUIRE(lines.size() == 3);
        REQUIRE(lines[0] == "n1,closed_form,measure_path,combinatorial,consistent");
        REQUIRE(lines[1] == "0,1,1,1,true");
        REQUIRE(lines[2] == "1,4,4,4,true");
    }
}

TEST_CASE("format selection plumbing") {
    REQUIRE(parse_format("text") == output_format::text);
    REQUIRE(parse_format("json") == output_format::json);
    REQUIRE(parse_format("csv") == output_format::csv);
    REQUIRE_FALSE(parse_format("yaml").has_value());
    for (auto f : {output_format::text, output_format::json, output_format::csv})
        REQUIRE(parse_format(format_name(f)) == f);
}
