#include "fieldsym/exact/errors.hpp"
#include "fieldsym/exact/laurent_poly.hpp"
#include "fieldsym/exact/linear_system.hpp"
#include "fieldsym/exact/multi_expr.hpp"
#include "fieldsym/exact/quad_surd.hpp"
#include "fieldsym/exact/vector_field.hpp"
#include "fieldsym/lie/point_symmetry.hpp"

#include <doctest.h>

#include <random>

using namespace fieldsym::exact;

namespace {

TablePtr small_table() {
    auto t = SymbolTable::create();
    t->declare("x", SymbolKind::coordinate);
    t->declare("y", SymbolKind::coordinate);
    t->declare("a", SymbolKind::parameter);
    t->declare("b", SymbolKind::parameter);
    t->declare("g0", SymbolKind::parameter);
    t->declare("g1", SymbolKind::parameter);
    t->declare("g2", SymbolKind::parameter);
    return t;
}

MultiExpr ex(const TablePtr& t, const char* text) { return MultiExpr::parse(t, text); }

GaussRational random_gauss(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-40, 40), den(1, 17);
    return {mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng))};
}

}  // namespace

TEST_CASE("gauss rational canonical form") {
    GaussRational v(mpq_class(6, 8), mpq_class(-3, 9));
    CHECK(v.re() == mpq_class(3, 4));
    CHECK(v.im() == mpq_class(-1, 3));
    CHECK(v.re().get_den() > 0);
    CHECK(GaussRational::parse("-6/4").to_string() == "-3/2");
    CHECK(GaussRational::parse("1/2i") == GaussRational(mpq_class(0), mpq_class(1, 2)));
    CHECK(GaussRational::imaginary_unit() * GaussRational::imaginary_unit() == GaussRational(-1));
    CHECK_THROWS_AS(GaussRational(1) / GaussRational(0), DivisionByZero);
}

TEST_CASE("gauss rational field axioms on random operands") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_gauss(rng), b = random_gauss(rng), c = random_gauss(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        if (!a.is_zero()) CHECK(a * (GaussRational(1) / a) == GaussRational(1));
        CHECK(a - a == GaussRational(0));
    }
}

TEST_CASE("exact square roots") {
    CHECK(rational_sqrt(mpq_class(9, 16)) == mpq_class(3, 4));
    CHECK_FALSE(rational_sqrt(mpq_class(2)).has_value());
    CHECK(GaussRational(-4).sqrt_exact() == GaussRational(mpq_class(0), mpq_class(2)));
    CHECK_THROWS(parse_rational("0.5"));
}

TEST_CASE("quadratic surds") {
    const QuadSurd r2 = QuadSurd::root(2);
    CHECK(r2 * r2 == QuadSurd(2));
    CHECK(QuadSurd::root(mpq_class(9, 4)).is_rational());
    CHECK((QuadSurd(1) - r2).sign() == -1);
    CHECK((QuadSurd(3) + r2).to_string() == "3 + 1*sqrt(2)");
    CHECK(QuadSurd(mpq_class(-4, 25)).to_double() == -0.16);
    CHECK(QuadSurd(mpq_class(-4, 9)).to_double() == -4.0 / 9.0);
    CHECK((QuadSurd(3) + QuadSurd(2) * r2).sqrt_in_field() == QuadSurd(1) + r2);
    CHECK_THROWS_AS(QuadSurd(1) / (r2 * r2 - QuadSurd(2)), DivisionByZero);
}

TEST_CASE("laurent polynomials") {
    LaurentPoly p("s");
    p.add_term(-2, 3);
    p.add_term(1, GaussRational::ratio(1, 2));
    p.add_term(1, GaussRational::ratio(-1, 2));
    CHECK(p.terms().size() == 1);  // cancelled coefficient is dropped
    CHECK(p.derivative() == LaurentPoly::monomial("s", -3, -6));
    CHECK(p.shifted(2) == LaurentPoly::monomial("s", 0, 3));
    CHECK((p * p).coefficient(-4) == GaussRational(9));
    CHECK_THROWS(LaurentPoly::monomial("s", 1) + LaurentPoly::monomial("x", 1));
}

TEST_CASE("differentiate: power rule on monomials") {
    const auto t = small_table();
    const auto x = MultiExpr::symbol(t, "x");
    for (int k = -8; k <= 8; ++k) {
        CHECK(differentiate(x.pow(k), "x") == GaussRational(k) * x.pow(k - 1));
    }
    CHECK(differentiate(ex(t, "(/ 1 x)"), "x") == ex(t, "(- (/ 1 (^ x 2)))"));
    CHECK(differentiate(ex(t, "a"), "x").is_zero());
    CHECK_THROWS_AS(differentiate(x, "nope"), UnknownVariable);
}

TEST_CASE("differentiate: quotient rule") {
    const auto t = small_table();
    const auto e = ex(t, "(/ x (+ x y))");
    CHECK(differentiate(e, "x") == ex(t, "(/ y (^ (+ x y) 2))"));
}

TEST_CASE("differentiate: solution symbol rule reduces second derivatives") {
    const fieldsym::lie::Context ctx;
    const auto u = ctx.sym("u");
    const auto alpha = ctx.sym("alpha");
    const auto second = differentiate(differentiate(u * alpha, "x"), "x");
    CHECK(second == -(u * ctx.F() * alpha));
}

TEST_CASE("collect powers partitions the expression") {
    const auto t = small_table();
    const auto e = ex(t, "(+ (* a (^ y 3)) (* b y) (/ 1 x))");
    const auto parts = collect_powers(e, "y");
    CHECK(parts.size() == 3);
    CHECK(parts.at(3) == ex(t, "a"));
    CHECK(parts.at(1) == ex(t, "b"));
    auto sum = MultiExpr(t, GaussRational(0));
    const auto y = MultiExpr::symbol(t, "y");
    for (const auto& [k, c] : parts) sum += c * y.pow(k);
    CHECK(sum == e);
    CHECK_THROWS_AS(collect_powers(ex(t, "(/ 1 (+ x y))"), "y"), NotPolynomialIn);
}

TEST_CASE("s-expression round trip") {
    const auto t = small_table();
    for (const char* text : {"(+ (/ x 2) a)", "(* -3/4 (^ x -2))", "(/ (+ a b) (- x y))", "(- a)", "(* (* 1/2 i) x)"}) {
        const auto e = ex(t, text);
        CHECK(ex(t, e.to_sexpr().c_str()) == e);
    }
    CHECK_THROWS_AS(ex(t, "(+ x"), ParseError);
    CHECK_THROWS_AS(ex(t, "(+ x zz)"), UnknownVariable);
}

TEST_CASE("eliminate: trivial system") {
    const auto t = small_table();
    ParamLinearSystem sys{t, {"g0"}, {}, {ex(t, "g0")}};
    const auto desc = eliminate(sys);
    REQUIRE(desc.branches.size() == 1);
    CHECK(desc.branches[0].is_trivial());
    CHECK(desc.branches[0].closed_form.at("g0").is_zero());
    CHECK(desc.branches[0].parameter_values.empty());
}

TEST_CASE("eliminate: vanishing pivot becomes a parameter condition") {
    const auto t = small_table();
    // (a + 2) g0 = 0 and g0 - b g1 = 0: g1 free only on the branch a = -2.
    ParamLinearSystem sys{t, {"g0", "g1"}, {"a", "b"}, {ex(t, "(* (+ a 2) g0)"), ex(t, "(- g0 (* b g1))")}};
    const auto desc = eliminate(sys);
    bool found = false;
    for (const auto& br : desc.branches) {
        // b = 0 is a second nontrivial branch (g0 = 0, g1 free).
        if (br.is_trivial() || br.parameter_values.size() != 1 || br.parameter_values[0].parameter != "a") continue;
        CHECK(br.parameter_values[0].value == ex(t, "-2"));
        CHECK(br.closed_form.at("g0") == ex(t, "(* b g1)"));
        found = true;
    }
    CHECK(found);
}

TEST_CASE("eliminate: known solution satisfies every branch description") {
    const auto t = small_table();
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> d(-9, 9);
    for (int trial = 0; trial < 10; ++trial) {
        const GaussRational p(mpq_class(d(rng), 7)), q(mpq_class(d(rng), 5));
        // Known solution g0 = p g2, g1 = q g2 with a fixed; equations built around it.
        const auto g0 = ex(t, "g0"), g1 = ex(t, "g1"), g2 = ex(t, "g2"), a = ex(t, "a");
        ParamLinearSystem sys{t, {"g0", "g1", "g2"}, {"a"},
                              {g0 - p * g2 + a * (g1 - q * g2), (g1 - q * g2) * GaussRational(3)}};
        const auto desc = eliminate(sys);
        REQUIRE_FALSE(desc.branches.empty());
        for (const auto& br : desc.branches) {
            std::map<std::string, MultiExpr> known{{"g0", p * g2}, {"g1", q * g2}};
            for (const auto& [u, v] : br.closed_form) CHECK(substitute(v, known) == substitute(MultiExpr::symbol(t, u), known));
        }
    }
}

TEST_CASE("eliminate: inconsistent and nonlinear systems") {
    const auto t = small_table();
    ParamLinearSystem bad{t, {"g0"}, {}, {ex(t, "(+ g0 1)"), ex(t, "g0")}};
    CHECK_THROWS_AS(eliminate(bad), InconsistentSystem);
    ParamLinearSystem nonlinear{t, {"g0", "g1"}, {}, {ex(t, "(* g0 g1)")}};
    CHECK_THROWS_AS(eliminate(nonlinear), NotLinear);
}

TEST_CASE("vector field brackets") {
    const auto t = small_table();
    const std::vector<std::string> c{"x", "y"};
    const auto dx = VectorField::basis(t, c, "x");
    const auto xdx = VectorField(c, {ex(t, "x"), ex(t, "0")});
    CHECK(bracket(dx, xdx) == dx);
    CHECK(bracket(xdx, xdx).is_zero());
    CHECK(span_coefficients({dx, xdx}, dx * ex(t, "3")) == std::vector<GaussRational>{3, 0});
    CHECK_FALSE(span_coefficients({dx}, xdx).has_value());
}

TEST_CASE("bracket antisymmetry and Jacobi on random polynomial fields") {
    const auto t = small_table();
    const std::vector<std::string> c{"x", "y"};
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> coef(-3, 3), pw(0, 2);
    auto random_poly = [&] {
        MultiExpr e(t, GaussRational(0));
        const auto x = MultiExpr::symbol(t, "x"), y = MultiExpr::symbol(t, "y");
        for (int k = 0; k < 3; ++k) e += GaussRational(coef(rng)) * x.pow(pw(rng)) * y.pow(pw(rng));
        return e;
    };
    for (int trial = 0; trial < 10; ++trial) {
        const VectorField X(c, {random_poly(), random_poly()});
        const VectorField Y(c, {random_poly(), random_poly()});
        const VectorField Z(c, {random_poly(), random_poly()});
        CHECK(bracket(X, Y) == VectorField::zero(t, c) - bracket(Y, X));
        CHECK((bracket(X, bracket(Y, Z)) + bracket(Y, bracket(Z, X)) + bracket(Z, bracket(X, Y))).is_zero());
    }
}
