#include "fieldsym/su11/spectrum.hpp"

#include <doctest.h>

#include <random>

using namespace fieldsym;
using namespace fieldsym::su11;
using exact::QuadSurd;

namespace {

mpq_class q(long n, long d = 1) { return {n, d}; }

}  // namespace

TEST_CASE("build_radial from rational parameters") {
    const auto t = physics_table();
    const auto o = build_radial(PhysicalParams::rational(t, q(1), q(1), q(1, 2), q(-1), q(0)));
    CHECK(o.C.constant_value() == GaussRational(-1));
    CHECK(o.D.constant_value() == GaussRational(2));

    const auto free = build_radial(PhysicalParams::rational(t, q(1), q(1), q(0), q(3), q(2)));
    CHECK(free.C.is_zero());
    CHECK(free.D.is_zero());
}

TEST_CASE("build_radial with an irrational field strength") {
    // omega_B = sqrt(3)/4 enters only through omega_B^2 = 3/16.
    const auto t = physics_table(q(3, 16));
    auto p = PhysicalParams::symbolic(t);
    p.m = MultiExpr(t, GaussRational(1));
    p.hbar = MultiExpr(t, GaussRational(1));
    CHECK(build_radial(p).C.constant_value() == GaussRational::ratio(-3, 4));
}

TEST_CASE("physical parameters are validated") {
    const auto t = physics_table();
    CHECK_THROWS(build_radial(PhysicalParams::rational(t, q(0), q(1), q(1), q(1), q(0))));
    CHECK_THROWS(build_radial(PhysicalParams::rational(t, q(1), q(-1), q(1), q(1), q(0))));
}

TEST_CASE("oscillator form") {
    const auto zero = ODESpec::rational(q(0), q(0));
    auto z = zero;
    z.E_hat = MultiExpr(z.C.table(), GaussRational(0));
    const auto f0 = to_oscillator_form(z);
    CHECK(f0.a.constant_value() == GaussRational::ratio(-3, 4));
    CHECK(f0.b.is_zero());
    CHECK(f0.c.is_zero());

    const auto o = ODESpec::rational(q(-3, 4), q(2));
    const auto f = to_oscillator_form(o);
    CHECK(f.a.constant_value() == GaussRational::ratio(-15, 4));
    CHECK(f.b == GaussRational(4) * o.E_hat);
    CHECK(f.c.constant_value() == GaussRational(8));
}

TEST_CASE("oscillator form agrees with the substitution route") {
    const auto t = physics_table();
    const auto p = PhysicalParams::symbolic(t);
    const auto o = build_radial(p);
    const auto direct = to_oscillator_form(o);
    const auto subst = oscillator_form_by_substitution(o);
    CHECK(direct.a == subst.a);
    CHECK(direct.b == subst.b);
    CHECK(direct.c == subst.c);
}

TEST_CASE("generator actions on monomials") {
    // Oracle values: tests/oracle/derive.py.
    CHECK(apply_generator(Generator::gamma2, GaussRational(0), LaurentPoly::monomial("s", 0)) ==
          LaurentPoly::monomial("s", 0, GaussRational(mpq_class(0), q(-1, 4))));
    LaurentPoly g3;
    g3.add_term(0, 2);
    g3.add_term(4, GaussRational::ratio(-1, 16));
    CHECK(apply_generator(Generator::gamma3, GaussRational(0), LaurentPoly::monomial("s", 2)) == g3);
    LaurentPoly g1;
    g1.add_term(1, GaussRational::ratio(13, 2));
    g1.add_term(5, GaussRational::ratio(1, 16));
    CHECK(apply_generator(Generator::gamma1, GaussRational::ratio(1, 2), LaurentPoly::monomial("s", 3)) == g1);
    for (int k = -4; k <= 4; ++k) {
        const GaussRational al = GaussRational::ratio(5, 7);
        LaurentPoly expect;
        expect.add_term(k - 2, GaussRational(k * (k - 1)) + al);
        expect.add_term(k + 2, GaussRational::ratio(1, 16));
        CHECK(apply_generator(Generator::gamma1, al, LaurentPoly::monomial("s", k)) == expect);
    }
}

TEST_CASE("commutators hold for random alpha") {
    std::mt19937 rng(20240601);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
    for (int trial = 0; trial < 5; ++trial) {
        const GaussRational al(q(num(rng), den(rng)));
        const auto rep = check_commutators(al, -6, 6);
        CHECK(rep.residuals.size() == 13);
        for (const auto& r : rep.residuals) {
            CHECK(r.r12.is_zero());
            CHECK(r.r23.is_zero());
            CHECK(r.r31.is_zero());
        }
    }
    CHECK_NOTHROW(check_commutators(GaussRational(0), 0, 0));
}

TEST_CASE("perturbed realization violates the algebra") {
    Realization r{GaussRational::ratio(5, 7)};
    r.gamma1_quadratic = GaussRational(0);
    CHECK_THROWS_AS(check_commutators(r, -6, 6), CommutatorViolation);
}

TEST_CASE("casimir scalar") {
    // Oracle values: tests/oracle/derive.py gives -3/16 - alpha/4.
    CHECK(casimir_scalar(GaussRational(0)) == GaussRational::ratio(-3, 16));
    CHECK(casimir_scalar(GaussRational::ratio(3, 16)) == GaussRational::ratio(-15, 64));
    CHECK(casimir_scalar(GaussRational::ratio(5, 7)) == GaussRational::ratio(-41, 112));
    Realization r{GaussRational(1)};
    r.gamma3_quadratic = GaussRational::ratio(-1, 8);
    CHECK_THROWS_AS(casimir_scalar(r), NotScalar);
}

TEST_CASE("decomposition of the oscillator operator") {
    for (int k = -5; k <= 5; ++k)
        CHECK(decomposition_residual(GaussRational::ratio(-15, 4), GaussRational::ratio(-16, 9), GaussRational(8), k).is_zero());
}

TEST_CASE("tilt parameter") {
    const auto t0 = tilt_parameter(q(0));
    CHECK(t0.tanh_theta == -1);
    CHECK_FALSE(t0.real_tilt);
    const auto t1 = tilt_parameter(q(-1, 16));
    CHECK(t1.tanh_theta == 0);
    CHECK(t1.real_tilt);
    CHECK_THROWS_AS(tilt_parameter(q(1, 16)), DenominatorZero);
    CHECK(tilt_parameter(q(-1)).real_tilt);
}

TEST_CASE("spectrum: positive branch at C = -3/4, D = 2") {
    const auto o = ODESpec::rational(q(-3, 4), q(2));
    const auto r = spectrum(o, 4, Branch::positive_root);
    REQUIRE(r.entries.size() == 5);
    for (const auto& e : r.entries) {
        CHECK(e.E_hat == QuadSurd(mpq_class(-4, (2 * e.n + 3) * (2 * e.n + 3))));
        CHECK(eigenvalue_condition_residual(o, e).is_zero());
    }
    for (std::size_t i = 1; i < r.entries.size(); ++i)
        CHECK((r.entries[i].E_hat - r.entries[i - 1].E_hat).sign() > 0);
    CHECK(r.root == QuadSurd(2));
}

TEST_CASE("spectrum: negative branch") {
    const auto o = ODESpec::rational(q(-3, 4), q(2));
    const auto r = spectrum(o, 3, Branch::negative_root);
    // 2n + 1 - 2 <= 0 at n = 0.
    CHECK(r.omitted == std::vector<int>{0});
    REQUIRE(r.entries.front().n == 1);
    CHECK(r.entries.front().E_hat == QuadSurd(-4));
    for (const auto& e : r.entries) CHECK(eigenvalue_condition_residual(o, e).is_zero());
}

TEST_CASE("spectrum: irrational root kept as a surd") {
    const auto o = ODESpec::rational(q(-1), q(1));
    const auto r = spectrum(o, 1, Branch::positive_root);
    CHECK_FALSE(r.root.is_rational());
    const auto& e0 = r.entries.front().E_hat;
    CHECK_FALSE(e0.is_rational());
    const double root5 = std::sqrt(5.0);
    CHECK(e0.to_double() == doctest::Approx(-1.0 / ((1 + root5) * (1 + root5))).epsilon(1e-15));
    CHECK(eigenvalue_condition_residual(o, r.entries.front()).is_zero());
}

TEST_CASE("spectrum: hydrogen-like and degenerate inputs") {
    const auto h = spectrum(ODESpec::rational(q(0), q(2)), 0, Branch::positive_root);
    CHECK(h.entries.front().E_hat == QuadSurd(-1));
    CHECK_THROWS_AS(spectrum(ODESpec::rational(q(-3, 4), q(0)), 3, Branch::positive_root), NoDiscreteSpectrum);
    CHECK_THROWS_AS(spectrum(ODESpec::rational(q(-3, 4), q(-2)), 3, Branch::positive_root), NoDiscreteSpectrum);
    CHECK_THROWS(spectrum(ODESpec::rational(q(-3, 4), q(2)), -1, Branch::positive_root));
}

TEST_CASE("kratzer example is a radial equation instance") {
    const auto k = ODESpec::kratzer(q(2), q(3));
    CHECK(k.C.constant_value() == GaussRational(9));
    CHECK(k.D.constant_value() == GaussRational(-6));
}

TEST_CASE("physical energy") {
    const auto t = physics_table();
    const auto p = PhysicalParams::rational(t, q(1), q(1), q(1, 2), q(0), q(0));
    CHECK(physical_energy(p, MultiExpr(t, GaussRational::ratio(-4, 9))).constant_value() == GaussRational::ratio(-2, 9));
    const auto s = PhysicalParams::symbolic(t);
    CHECK(physical_energy(s, -(s.k_y.pow(2) + s.k_z.pow(2))).is_zero());
    // Round trip through the E_hat definition.
    const auto o = build_radial(s);
    CHECK(physical_energy(s, *o.E_hat_definition) == MultiExpr::symbol(t, "E"));
}

TEST_CASE("symbolic spectrum matches the closed physical formula") {
    const auto t = physics_table();
    const auto p = PhysicalParams::symbolic(t);
    const auto sym = spectrum_symbolic(build_radial(p), Branch::positive_root);
    const auto& T = sym.table;
    const auto ex = MultiExpr::parse(
        T, "(/ (* -16 (^ m 2) (^ omega_B 2) (^ k_y 2)) (* (^ hbar 2) (^ (+ (* 2 n) 1 sqrt_disc) 2)))");
    CHECK(sym.E_hat == ex);
    CHECK(sym.radicand == MultiExpr::parse(T, "(+ 1 (/ (* 16 (^ m 2) (^ omega_B 2)) (^ hbar 2)))"));
}
