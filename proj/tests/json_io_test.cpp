#include <doctest.h>

#include <cstdlib>

#include "splitline/json_io.hpp"

using namespace splitline;
namespace io = splitline::jsonio;

TEST_CASE("parse_matrix") {
    const C2Matrix m = io::parse_matrix("[[[0,0],[1,0]],[[1,0],[0,0]]]");
    CHECK(m.m11 == Complex{});
    CHECK(m.m12 == Complex{1.0});
    CHECK(m.m21 == Complex{1.0});
    CHECK(m.m22 == Complex{});

    CHECK_THROWS_AS(io::parse_matrix("not json"), io::ParseError);
    CHECK_THROWS_AS(io::parse_matrix("[[[0,0],[1,0]]]"), io::ParseError);
    CHECK_THROWS_AS(io::parse_matrix("[[[0,0],[1,0]],[[1,0],[0,\"x\"]]]"), io::ParseError);
    CHECK_THROWS_AS(io::parse_matrix("[[[0,0],[1,0]],[[1,0],[0,0,0]]]"), io::ParseError);
}

TEST_CASE("parse_alpha") {
    const AlphaVector a = io::parse_alpha("[[1,0],[0,-1.5],[0,0],[1,0]]");
    CHECK(a.alpha1 == Complex{1.0});
    CHECK(a.alpha2 == Complex{0.0, -1.5});
    CHECK(a.alpha4 == Complex{1.0});

    CHECK_THROWS_AS(io::parse_alpha("[[1,0],[0,0],[0,0]]"), io::ParseError);
    CHECK_THROWS_AS(io::parse_alpha("{\"alpha1\": [1,0]}"), io::ParseError);
}

TEST_CASE("parse_rho") {
    const RhoPair rho = io::parse_rho("[1.5, \"inf\"]");
    CHECK(rho.rho_plus.value() == 1.5);
    CHECK(rho.rho_minus.is_infinite());

    CHECK_THROWS_AS(io::parse_rho("[1.5, \"infinity\"]"), io::ParseError);
    CHECK_THROWS_AS(io::parse_rho("[1.5]"), io::ParseError);
    CHECK_THROWS_AS(io::parse_rho("[1.5, null]"), io::ParseError);
}

TEST_CASE("parse_extension") {
    const Extension a = io::parse_extension("{\"alpha\": [[1,0],[0,0],[0,0],[1,0]]}");
    REQUIRE(std::holds_alternative<AlphaVector>(a));
    CHECK(std::get<AlphaVector>(a).alpha1 == Complex{1.0});

    const Extension r = io::parse_extension("{\"rho\": [\"inf\", -2]}");
    REQUIRE(std::holds_alternative<RhoPair>(r));
    CHECK(std::get<RhoPair>(r).rho_minus.value() == -2.0);

    CHECK_THROWS_AS(io::parse_extension("{}"), io::ParseError);
    CHECK_THROWS_AS(io::parse_extension("{\"beta\": []}"), io::ParseError);
    CHECK_THROWS_AS(
        io::parse_extension("{\"alpha\": [[1,0],[0,0],[0,0],[1,0]], \"rho\": [1, 1]}"),
        io::ParseError);
    CHECK_THROWS_AS(io::parse_extension("[1, 2]"), io::ParseError);
}

TEST_CASE("format_double round-trips every value") {
    for (double v : {0.1, 1.0 / 3.0, -2.5e17, 1e-300, 0.0, 12345.678901234567}) {
        const std::string s = io::format_double(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
    }
}

TEST_CASE("emitters") {
    CHECK(io::json_complex({1.5, -2.0}) == "[1.5, -2]");
    CHECK(io::json_extended(ExtendedReal::infinity()) == "\"inf\"");
    CHECK(io::json_extended(ExtendedReal{3.25}) == "3.25");

    const C2Matrix m{Complex{0.0, 1.0}, Complex{-1.0}, Complex{0.5, 0.5}, Complex{}};
    const C2Matrix back = io::parse_matrix(io::json_matrix(m));
    CHECK(back.m11 == m.m11);
    CHECK(back.m12 == m.m12);
    CHECK(back.m21 == m.m21);
    CHECK(back.m22 == m.m22);
}
