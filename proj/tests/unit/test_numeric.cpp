#include "fieldsym/numeric/numeric_lab.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

using namespace fieldsym;
using namespace fieldsym::numeric;

TEST_CASE("grid validation") {
    CHECK_THROWS(GridSpec{1.0, 0.5, 1000}.validate());
    CHECK_THROWS(GridSpec{0.0, 10.0, 1000}.validate());
    CHECK_THROWS(GridSpec{1e-3, 10.0, 50}.validate());
    CHECK(GridSpec{}.refined().points == 16001);
    CHECK(GridSpec{}.refined().spacing() == doctest::Approx(GridSpec{}.spacing() / 2));
}

TEST_CASE("particle in a box") {
    // -u'' = E u on [0, pi]: E_k = (k + 1)^2, second-order accurate.
    const auto ev = tridiagonal_eigenvalues({0.0, 0.0}, {1e-12, M_PI, 2000}, 3);
    for (int k = 0; k < 3; ++k) CHECK(ev[k] == doctest::Approx((k + 1) * (k + 1)).epsilon(1e-5));
}

TEST_CASE("fd spectrum at C = -3/4, D = 2") {
    const auto s = fd_spectrum({-0.75, 2.0}, GridSpec{}, 3);
    REQUIRE(s.eigenvalues.size() == 3);
    for (int n = 0; n < 3; ++n) {
        const double exact = -4.0 / ((2 * n + 3) * (2 * n + 3));
        CHECK(std::abs(s.eigenvalues[n] / exact - 1) < 1e-3);
    }
}

TEST_CASE("fd spectrum hydrogen-like case") {
    // u ~ x at the origin, so the Dirichlet cut at x_min raises E_0 by about 4 x_min.
    const auto coarse_cut = fd_spectrum({0.0, 2.0}, GridSpec{}, 1);
    CHECK(coarse_cut.eigenvalues[0] + 1.0 == doctest::Approx(4e-3).epsilon(0.05));
    const auto s = fd_spectrum({0.0, 2.0}, {1e-5, 60.0, 20000}, 1);
    CHECK(std::abs(s.eigenvalues[0] + 1.0) < 1e-4);
}

TEST_CASE("no bound state without attraction") {
    CHECK_THROWS_AS(fd_spectrum({-0.75, 0.0}, GridSpec{}, 2), NoBoundState);
}

TEST_CASE("coarse grid is detected") {
    CHECK_THROWS_AS(fd_spectrum({-0.75, 2.0}, {1e-3, 80.0, 120}, 2, 1e-6), GridTooCoarse);
}

TEST_CASE("bound state count stays below the continuum") {
    const auto s = fd_spectrum({-0.75, 2.0}, GridSpec{}, 6);
    for (double e : s.eigenvalues) CHECK(e < 0);
}

TEST_CASE("rk4 free motion is a straight line") {
    const NumericField f{classical::FieldKind::zero_field, 1.0, -1};
    TrajectoryState s0;
    s0.v = {0.1, -0.2, 0.3};
    const auto tr = integrate_trajectory(f, s0, {1e-2, 1000, 1e-6, 0});
    const auto& end = tr.samples.back();
    CHECK(end.q[0] == doctest::Approx(1.0 + 0.1 * 10.0));
    CHECK(end.q[1] == doctest::Approx(-2.0));
    CHECK(tr.report.speed2.max_relative < 1e-14);
    CHECK(tr.report.p_y->max_relative < 1e-14);
}

TEST_CASE("speed is conserved in every field") {
    TrajectoryState s0;
    s0.v = {0.1, 0.2, 0.3};
    for (auto k : {classical::FieldKind::zero_field, classical::FieldKind::inverse_square, classical::FieldKind::linear}) {
        const auto tr = integrate_trajectory({k, 1.0, -1}, s0, {1e-3, 20000, 1e-6, 0});
        CHECK(tr.report.speed2.max_relative < 1e-10);
    }
}

TEST_CASE("inverse-square conservation and fourth order") {
    const NumericField f{classical::FieldKind::inverse_square, 100.0, -1};
    TrajectoryState s0;
    s0.v = {0.1, 0.2, 0.3};
    const auto a = integrate_trajectory(f, s0, {2e-4, 50000, 1e-6, 0}).report;
    const auto b = integrate_trajectory(f, s0, {1e-4, 100000, 1e-6, 0}).report;
    CHECK(a.vz.max_relative == 0.0);
    CHECK(b.p_y->max_relative < 1e-12);
    const double order = std::log2(a.speed2.max_relative / b.speed2.max_relative);
    CHECK(order > 3.5);
    CHECK(b.p_y->initial == doctest::Approx(0.2 + 100.0));
}

TEST_CASE("p_y is absent for the linear field") {
    TrajectoryState s0;
    s0.v = {0.1, 0.2, 0.3};
    CHECK_FALSE(NumericField{classical::FieldKind::linear}.p_y(s0).has_value());
}

TEST_CASE("singularity guard") {
    TrajectoryState s0;
    s0.q = {0.05, 0.0, 0.0};
    s0.v = {-1.0, 0.0, 0.0};
    CHECK_THROWS_AS(integrate_trajectory({classical::FieldKind::inverse_square, 0.0, -1}, s0, {1e-3, 1000, 1e-2, 0}),
                    SingularityApproach);
}

TEST_CASE("csv and svg writers") {
    TrajectoryState s0;
    s0.v = {0.1, 0.2, 0.0};
    const auto tr = integrate_trajectory({classical::FieldKind::inverse_square, 1.0, -1}, s0, {1e-2, 100, 1e-6, 10});
    CHECK(tr.samples.size() == 11);
    std::ostringstream csv, svg;
    write_csv(csv, tr.samples);
    const std::string text = csv.str();
    CHECK(text.rfind("t,q1,q2,q3,qd1,qd2,qd3\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 12);
    write_svg(svg, tr.samples);
    CHECK(svg.str().find("<polyline") != std::string::npos);
    CHECK(svg.str().find("</svg>") != std::string::npos);
}
