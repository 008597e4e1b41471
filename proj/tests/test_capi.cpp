// Copyright 2026 The plabic authors
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "plabic.h"

#include <cstring>
#include <string>

namespace {
struct Str {
    char* p = nullptr;
    ~Str() { plabic_string_free(p); }
    std::string view() const { return p ? p : ""; }
};
struct Net {
    plabic_network* p = nullptr;
    ~Net() { plabic_network_free(p); }
};
} // namespace

TEST_CASE("builtin networks round trip through JSON") {
    Net net;
    REQUIRE(plabic_network_builtin("gr24_s34", "1,1,1", &net.p) == PLABIC_OK);
    Str js;
    REQUIRE(plabic_network_to_json(net.p, &js.p) == PLABIC_OK);
    Net again;
    REQUIRE(plabic_network_parse(js.p, &again.p) == PLABIC_OK);
    Str js2;
    REQUIRE(plabic_network_to_json(again.p, &js2.p) == PLABIC_OK);
    CHECK(js.view() == js2.view());
}

TEST_CASE("validation report and error codes") {
    Net net;
    CHECK(plabic_network_builtin("nope", nullptr, &net.p) == PLABIC_ERR_ARG);
    CHECK(std::string(plabic_last_error()).find("unknown builtin") != std::string::npos);
    CHECK(plabic_network_parse("{ not json", &net.p) == PLABIC_ERR_PARSE);
    REQUIRE(plabic_network_builtin("gr13_tp", nullptr, &net.p) == PLABIC_OK);
    Str rep;
    REQUIRE(plabic_validate(net.p, &rep.p) == PLABIC_OK);
    CHECK(rep.view().find("\"ok\": true") != std::string::npos);
}

TEST_CASE("measurement matches the worked matrix") {
    Net net;
    REQUIRE(plabic_network_builtin("gr24_s34", "1,1,1", &net.p) == PLABIC_OK);
    Str js;
    REQUIRE(plabic_measure(net.p, nullptr, &js.p) == PLABIC_OK);
    auto s = js.view();
    CHECK(s.find("\"3,4\": \"0\"") != std::string::npos);
    CHECK(s.find("\"1,2\": \"1\"") != std::string::npos);
}

TEST_CASE("divisor endpoint emits exact coordinates") {
    Net net;
    REQUIRE(plabic_network_builtin("gr13_tp", "1,2", &net.p) == PLABIC_OK);
    Str js;
    REQUIRE(plabic_divisor(net.p, "0,1,2", nullptr, "auto", &js.p) == PLABIC_OK);
    auto s = js.view();
    CHECK(s.find("\"6/5\"") != std::string::npos);
    CHECK(s.find("\"one_point_per_finite_oval\": true") != std::string::npos);
}

TEST_CASE("soliton endpoint produces a grid") {
    Net net;
    REQUIRE(plabic_network_builtin("gr24_s34", nullptr, &net.p) == PLABIC_OK);
    Str js;
    REQUIRE(plabic_soliton(net.p, "-2,-1,1,2", "0,0", -2, 2, 11, &js.p) == PLABIC_OK);
    CHECK(js.view().find("sato_roots_at_zero") != std::string::npos);
    CHECK(plabic_soliton(net.p, "-2,-1,1,2", nullptr, 2, -2, 11, &js.p) == PLABIC_ERR_ARG);
}

TEST_CASE("moves through the C surface") {
    Net net;
    REQUIRE(plabic_network_builtin("gr24_tp", nullptr, &net.p) == PLABIC_OK);
    Net moved;
    Str delta;
    REQUIRE(plabic_move(net.p, "M1", "Wa,Ba,Wb,Bb", nullptr, nullptr, &moved.p, &delta.p) ==
            PLABIC_OK);
    CHECK(delta.view().find("\"measurement_invariant\": true") != std::string::npos);
    Net bad;
    CHECK(plabic_move(net.p, "M1", "Wa,Ba", nullptr, nullptr, &bad.p, nullptr) == PLABIC_ERR_ARG);
}

TEST_CASE("le diagram construction") {
    Net net;
    const char* diagram = R"({"k":2,"n":4,"pivots":[1,2],
        "boxes":[{"row":1,"col":3,"weight":"1"},{"row":2,"col":3,"weight":"1"},
                 {"row":2,"col":4,"weight":"1"}]})";
    REQUIRE(plabic_build_le(diagram, &net.p) == PLABIC_OK);
    Str js;
    REQUIRE(plabic_measure(net.p, nullptr, &js.p) == PLABIC_OK);
    CHECK(js.view().find("\"3,4\": \"0\"") != std::string::npos);
    // Empty row rejected.
    Net bad;
    const char* reducible = R"({"k":2,"n":4,"pivots":[1,2],
        "boxes":[{"row":2,"col":3,"weight":"1"},{"row":2,"col":4,"weight":"1"}]})";
    CHECK(plabic_build_le(reducible, &bad.p) == PLABIC_ERR_INVALID);
}

TEST_CASE("verify endpoint") {
    Net net;
    REQUIRE(plabic_network_builtin("gr13_tp", nullptr, &net.p) == PLABIC_OK);
    Str rep;
    CHECK(plabic_verify(net.p, 7, &rep.p) == PLABIC_OK);
    CHECK(rep.view().find("\"pass\": true") != std::string::npos);
}
