#include "fieldsym/classical/lorentz.hpp"

#include <doctest.h>

using namespace fieldsym;
using namespace fieldsym::classical;

namespace {

MultiExpr ex(const char* text) { return MultiExpr::parse(table(), text); }

VectorField field3(const char* xi, const char* e1, const char* e2, const char* e3) {
    return field(coordinates(3), {ex(xi), ex(e1), ex(e2), ex(e3)});
}

bool all_zero(const std::vector<MultiExpr>& r) {
    for (const auto& e : r)
        if (!e.is_zero()) return false;
    return true;
}

}  // namespace

TEST_CASE("lorentz right-hand sides") {
    const auto w = lorentz_rhs(FieldCase{FieldKind::inverse_square, -1});
    CHECK(w[0] == ex("(- (/ (* Bcal qd2) (^ q1 2)))"));
    CHECK(w[1] == ex("(/ (* Bcal qd1) (^ q1 2))"));
    CHECK(w[2].is_zero());
    for (const auto& e : lorentz_rhs(FieldCase{FieldKind::zero_field})) CHECK(e.is_zero());
    const auto l = lorentz_rhs(FieldCase{FieldKind::linear});
    CHECK(l[0] == ex("(- (* qd2 q3) (* qd3 q2))"));
    CHECK(l[1] == ex("(- (* qd3 q1) (* qd1 q3))"));
    CHECK(l[2] == ex("(- (* qd1 q2) (* qd2 q1))"));
}

TEST_CASE("inverse-square: single generators") {
    const auto w = lorentz_rhs(FieldCase{});
    CHECK(all_zero(classical_condition(field3("1", "0", "0", "0"), w)));
    CHECK(all_zero(classical_condition(field3("0", "0", "0", "q3"), w)));
    // Oracle (tests/oracle/derive.py): d/dq1 leaves (2 Bcal qd2/q1^3, -2 Bcal qd1/q1^3, 0).
    const auto r = classical_condition(field3("0", "1", "0", "0"), w);
    CHECK(r[0] == ex("(/ (* 2 Bcal qd2) (^ q1 3))"));
    CHECK(r[1] == ex("(/ (* -2 Bcal qd1) (^ q1 3))"));
    CHECK(r[2].is_zero());
    CHECK_FALSE(all_zero(classical_condition(field3("t", "0", "0", "0"), w)));
}

TEST_CASE("classical condition is linear in the field") {
    const auto w = lorentz_rhs(FieldCase{FieldKind::linear});
    const auto X = field3("(* t q1)", "(^ q2 2)", "t", "(* q1 q3)");
    const auto Y = field3("(^ t 2)", "q3", "(* t q1)", "1");
    const auto rx = classical_condition(X, w), ry = classical_condition(Y, w), rs = classical_condition(X + Y, w);
    for (std::size_t a = 0; a < 3; ++a) CHECK(rs[a] == rx[a] + ry[a]);
}

TEST_CASE("zero field: projective generator per coordinate") {
    for (const char* q : {"q1", "q2", "q3"}) {
        const auto X = projective_field(q);
        CHECK(classical_condition(X, {ex("0")}).front().is_zero());
    }
}

TEST_CASE("all three cases verify") {
    for (auto k : {FieldKind::zero_field, FieldKind::inverse_square, FieldKind::linear}) {
        const auto rep = verify_case(k);
        CHECK_MESSAGE(rep.passed(), to_string(k));
        for (const auto& g : rep.printed) CHECK_MESSAGE(g.vanishes(), g.name << " " << g.variant);
        for (const auto& g : rep.controls) CHECK_MESSAGE(!g.vanishes(), g.name);
    }
    CHECK(printed_generators(FieldKind::linear).size() == 5);
    CHECK(printed_generators(FieldKind::inverse_square).size() == 4);
}

TEST_CASE("inverse-square generators for both field signs") {
    for (int sign : {-1, 1}) {
        const auto w = lorentz_rhs(FieldCase{FieldKind::inverse_square, sign});
        for (const auto& g : printed_generators(FieldKind::inverse_square))
            CHECK(all_zero(classical_condition(g.field, w)));
    }
}

TEST_CASE("inverse-square algebra is solvable") {
    const auto s = structure_analysis(printed_generators(FieldKind::inverse_square));
    CHECK(s.derived_dimensions == std::vector<std::size_t>{4, 1, 0});
    CHECK(s.solvable);
    CHECK_FALSE(s.abelian());
}

TEST_CASE("abelian pair") {
    const auto s = structure_analysis({{"T", field3("1", "0", "0", "0")}, {"Y", field3("0", "0", "1", "0")}});
    CHECK(s.abelian());
    CHECK(s.solvable);
}

TEST_CASE("sl2-like set is closed but not solvable") {
    const auto s = structure_analysis({{"P", field3("0", "1", "0", "0")},
                                       {"D", field3("0", "q1", "0", "0")},
                                       {"K", field3("0", "(^ q1 2)", "0", "0")}});
    CHECK(s.derived_dimensions == std::vector<std::size_t>{3, 3});
    CHECK_FALSE(s.solvable);
}

TEST_CASE("leaving the span throws") {
    CHECK_THROWS_AS(structure_analysis({{"P", field3("0", "1", "0", "0")}, {"K", field3("0", "(^ q1 2)", "0", "0")}}),
                    NotClosed);
    CHECK_THROWS(structure_analysis({{"P", field3("0", "1", "0", "0")}, {"P2", field3("0", "2", "0", "0")}}));
}

TEST_CASE("velocity dependent fields are rejected") {
    CHECK_THROWS_AS(validate(field3("qd1", "0", "0", "0")), InvalidField);
    CHECK_NOTHROW(validate(field3("t", "q1", "0", "0")));
}

TEST_CASE("field kind names") {
    CHECK(parse_field_kind("inverse-square") == FieldKind::inverse_square);
    CHECK(to_string(FieldKind::zero_field) == "zero");
    CHECK_THROWS(parse_field_kind("quadratic"));
}
