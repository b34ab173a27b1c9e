#include "fieldsym/cli/config.hpp"

#include <doctest.h>

using namespace fieldsym::cli;

TEST_CASE("toml subset") {
    const auto j = parse_toml(R"(# leading comment
title = "radial"   # trailing comment
[ode]
C = "-3/4"
D = 2
[grid]
x_min = 1e-3
x_max = 80.0
points = 8_000
[trajectory]
q0 = [1.0, 0.0,
      0.0]
flag = true
lit = 'a\b'
[a.b]
c = { d = 1, e = "x" }
inf = -inf
)");
    CHECK(j["title"] == "radial");
    CHECK(j["ode"]["C"] == "-3/4");
    CHECK(j["ode"]["D"] == 2);
    CHECK(j["grid"]["x_min"] == doctest::Approx(1e-3));
    CHECK(j["grid"]["points"] == 8000);
    CHECK(j["trajectory"]["q0"].size() == 3);
    CHECK(j["trajectory"]["flag"] == true);
    CHECK(j["trajectory"]["lit"] == "a\\b");
    CHECK(j["a"]["b"]["c"]["e"] == "x");
    CHECK(std::isinf(j["a"]["b"]["inf"].get<double>()));
    // File order is preserved.
    CHECK(j.begin().key() == "title");
}

TEST_CASE("toml errors name the line") {
    try {
        parse_toml("a = 1\nb = = 2\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.key() == "line 2");
    }
    CHECK_THROWS_AS(parse_toml("a = 1\na = 2\n"), ConfigError);
    CHECK_THROWS_AS(parse_toml("[t]\nx = \"open\n"), ConfigError);
    CHECK_THROWS_AS(parse_toml("x = [1, 2\n"), ConfigError);
    CHECK_THROWS_AS(parse_toml("x = 0x1F\n"), ConfigError);
}

TEST_CASE("typed access") {
    const auto j = parse_toml("[ode]\nC = \"-3/4\"\nD = 2\nbad = 0.5\n[numeric]\ncount = 3\n");
    const ConfigView c(j);
    CHECK(c.rational("ode.C") == mpq_class(-3, 4));
    CHECK(c.rational("ode.D") == mpq_class(2));
    CHECK_FALSE(c.rational("ode.E_hat").has_value());
    CHECK(c.integer("numeric.count", 1) == 3);
    CHECK(c.real("numeric.tolerance", 1e-3) == 1e-3);
    try {
        (void)c.rational("ode.bad");
        FAIL("floats are not exact");
    } catch (const ConfigError& e) {
        CHECK(e.key() == "ode.bad");
    }
    CHECK_THROWS_AS(c.boolean("ode.D", false), ConfigError);
    try {
        c.only_keys("ode", {"C", "D"});
        FAIL("unknown key");
    } catch (const ConfigError& e) {
        CHECK(e.key() == "ode.bad");
    }
}

TEST_CASE("set_path builds intermediate tables") {
    Json j = Json::object();
    set_path(j, "grid.points", 100);
    set_path(j, "grid.x_min", 0.5);
    CHECK(j.dump() == R"({"grid":{"points":100,"x_min":0.5}})");
}
