#include "fieldsym/numeric/numeric_lab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace fieldsym::numeric {

void GridSpec::validate() const {
    if (!(x_min > 0.0)) throw Error("grid.x_min must be positive");
    if (!(x_max > x_min)) throw Error("grid.x_max must exceed grid.x_min");
    if (points < 100) throw Error("grid.points must be at least 100");
}

namespace {

struct Tridiagonal {
    std::vector<double> diag;
    double off = 0.0;  // constant off-diagonal

    /// Number of eigenvalues strictly below lambda (Sturm count via the LDL^T pivots).
    std::size_t count_below(double lambda) const {
        std::size_t n = 0;
        double d = 1.0;
        const double off2 = off * off;
        for (std::size_t i = 0; i < diag.size(); ++i) {
            d = diag[i] - lambda - (i == 0 ? 0.0 : off2 / d);
            if (d == 0.0) d = -std::numeric_limits<double>::epsilon() * (std::abs(diag[i]) + std::abs(lambda) + 1.0);
            if (d < 0.0) ++n;
        }
        return n;
    }
};

Tridiagonal discretize(const RadialODE& ode, const GridSpec& g) {
    g.validate();
    const double h = g.spacing();
    Tridiagonal m;
    m.off = -1.0 / (h * h);
    m.diag.resize(g.points);
    for (std::size_t i = 0; i < g.points; ++i) {
        const double x = g.x_min + static_cast<double>(i + 1) * h;
        m.diag[i] = 2.0 / (h * h) - ode.C / (x * x) - ode.D / x;
    }
    return m;
}

}  // namespace

std::vector<double> tridiagonal_eigenvalues(const RadialODE& ode, const GridSpec& grid, std::size_t count) {
    const Tridiagonal m = discretize(ode, grid);
    count = std::min(count, m.diag.size());
    // Gershgorin bounds.
    const double r = 2.0 * std::abs(m.off);
    const double lo0 = *std::min_element(m.diag.begin(), m.diag.end()) - r;
    const double hi0 = *std::max_element(m.diag.begin(), m.diag.end()) + r;
    std::vector<double> out;
    for (std::size_t k = 0; k < count; ++k) {
        double lo = lo0, hi = hi0;
        for (int it = 0; it < 200 && hi - lo > 4 * std::numeric_limits<double>::epsilon() * std::max(std::abs(lo), std::abs(hi)); ++it) {
            const double mid = 0.5 * (lo + hi);
            if (m.count_below(mid) > k) hi = mid;
            else lo = mid;
        }
        out.push_back(0.5 * (lo + hi));
    }
    return out;
}

FdSpectrum fd_spectrum(const RadialODE& ode, const GridSpec& grid, std::size_t count, double tolerance) {
    if (!(tolerance > 0.0)) throw Error("tolerance must be positive");
    FdSpectrum out;
    for (double e : tridiagonal_eigenvalues(ode, grid, count))
        if (e < 0.0) out.eigenvalues.push_back(e);
    if (out.eigenvalues.empty()) throw NoBoundState("no negative eigenvalue on the grid (D = " + std::to_string(ode.D) + ")");
    out.refined = tridiagonal_eigenvalues(ode, grid.refined(), out.eigenvalues.size());
    for (std::size_t k = 0; k < out.eigenvalues.size(); ++k) {
        const double shift = std::abs(out.refined[k] - out.eigenvalues[k]) / std::abs(out.refined[k]);
        out.relative_shift.push_back(shift);
        if (shift > 10.0 * tolerance)
            throw GridTooCoarse("eigenvalue " + std::to_string(k) + " moves by " + std::to_string(shift) +
                                " (relative) under grid refinement");
    }
    return out;
}

ConvergenceStudy convergence_study(const RadialODE& ode, GridSpec grid, std::size_t index, double exact, int levels) {
    if (levels < 2) throw Error("a convergence study needs at least two levels");
    ConvergenceStudy s;
    for (int l = 0; l < levels; ++l) {
        const auto ev = tridiagonal_eigenvalues(ode, grid, index + 1);
        if (ev.size() <= index) throw NoBoundState("grid has fewer than " + std::to_string(index + 1) + " eigenvalues");
        s.spacings.push_back(grid.spacing());
        s.errors.push_back(std::abs(ev[index] - exact));
        grid = grid.refined();
    }
    for (std::size_t k = 0; k + 1 < s.errors.size(); ++k) s.orders.push_back(std::log2(s.errors[k] / s.errors[k + 1]));
    return s;
}

}  // namespace fieldsym::numeric
