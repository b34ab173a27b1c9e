#pragma once

#include "fieldsym/classical/lorentz.hpp"
#include "fieldsym/exact/errors.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <ostream>
#include <vector>

namespace fieldsym::numeric {

class GridTooCoarse : public Error {
public:
    using Error::Error;
};
class NoBoundState : public Error {
public:
    using Error::Error;
};
class SingularityApproach : public Error {
public:
    using Error::Error;
};

/// Uniform grid on [x_min, x_max]; `points` interior nodes carry the unknowns, the endpoints
/// carry the Dirichlet condition.
struct GridSpec {
    double x_min = 1e-3;
    double x_max = 80.0;
    std::size_t points = 8000;
    void validate() const;
    double spacing() const { return (x_max - x_min) / static_cast<double>(points + 1); }
    /// Same interval with half the spacing.
    GridSpec refined() const { return {x_min, x_max, 2 * points + 1}; }
};

/// -u'' - (C/x^2 + D/x) u = E u.
struct RadialODE {
    double C = 0.0;
    double D = 0.0;
};

/// Lowest `count` eigenvalues of the 3-point discretization, ascending.
std::vector<double> tridiagonal_eigenvalues(const RadialODE& ode, const GridSpec& grid, std::size_t count);

struct FdSpectrum {
    std::vector<double> eigenvalues;   ///< bound states only, ascending
    std::vector<double> refined;       ///< same states on the half-step grid
    std::vector<double> relative_shift;
};

/// Bound-state eigenvalues with a half-step consistency check. Throws NoBoundState when the lowest
/// eigenvalue is nonnegative and GridTooCoarse when a relative shift exceeds 10 * tolerance.
FdSpectrum fd_spectrum(const RadialODE& ode, const GridSpec& grid, std::size_t count, double tolerance = 1e-3);

struct ConvergenceStudy {
    std::vector<double> spacings;
    std::vector<double> errors;   ///< |E_h - exact| per level
    std::vector<double> orders;   ///< log2(err_k / err_{k+1})
};

/// Error of eigenvalue `index` against `exact` on `levels` successively halved grids.
ConvergenceStudy convergence_study(const RadialODE& ode, GridSpec grid, std::size_t index, double exact, int levels = 3);

struct TrajectoryState {
    double t = 0.0;
    std::array<double, 3> q{1.0, 0.0, 0.0};
    std::array<double, 3> v{0.0, 0.0, 0.0};
};

struct NumericField {
    classical::FieldKind kind = classical::FieldKind::inverse_square;
    double Bcal = 1.0;
    int sign = -1;
    std::array<double, 3> B(const std::array<double, 3>& q) const;
    /// Canonical momentum conjugate to y when the field is y-independent.
    std::optional<double> p_y(const TrajectoryState& s) const;
};

struct Drift {
    double initial = 0.0;
    double max_relative = 0.0;   ///< max |f - f0| / |f0|, absolute when f0 = 0
};

struct ConservationReport {
    Drift vz;
    Drift speed2;
    std::optional<Drift> p_y;
    std::size_t steps = 0;
    double dt = 0.0;
};

struct TrajectoryOptions {
    double dt = 1e-4;
    std::size_t steps = 1000000;
    double guard = 1e-6;             ///< abort when |q1| falls below this
    std::size_t sample_every = 0;    ///< 0 keeps only the endpoints
};

struct Trajectory {
    std::vector<TrajectoryState> samples;
    ConservationReport report;
};

TrajectoryState rk4_step(const NumericField& f, const TrajectoryState& s, double dt);
Trajectory integrate_trajectory(const NumericField& f, const TrajectoryState& s0, const TrajectoryOptions& opt);

/// Columns t,q1,q2,q3,qd1,qd2,qd3.
void write_csv(std::ostream& os, const std::vector<TrajectoryState>& samples);
/// (q1, q2) projection as a single polyline with axes.
void write_svg(std::ostream& os, const std::vector<TrajectoryState>& samples, int width = 480, int height = 480);

}  // namespace fieldsym::numeric
