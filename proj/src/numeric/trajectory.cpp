#include "fieldsym/numeric/numeric_lab.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <string>

namespace fieldsym::numeric {

using classical::FieldKind;
using Vec3 = std::array<double, 3>;

Vec3 NumericField::B(const Vec3& q) const {
    switch (kind) {
        case FieldKind::zero_field: return {0.0, 0.0, 0.0};
        case FieldKind::inverse_square: return {0.0, 0.0, sign * Bcal / (q[0] * q[0])};
        case FieldKind::linear: return q;
    }
    return {0.0, 0.0, 0.0};
}

std::optional<double> NumericField::p_y(const TrajectoryState& s) const {
    switch (kind) {
        case FieldKind::zero_field: return s.v[1];
        // A_y = -sign * Bcal / x gives curl A = B.
        case FieldKind::inverse_square: return s.v[1] - sign * Bcal / s.q[0];
        case FieldKind::linear: return std::nullopt;
    }
    return std::nullopt;
}

namespace {

struct Deriv {
    Vec3 dq, dv;
};

Deriv rhs(const NumericField& f, const Vec3& q, const Vec3& v) {
    const Vec3 b = f.B(q);
    return {v, {v[1] * b[2] - v[2] * b[1], v[2] * b[0] - v[0] * b[2], v[0] * b[1] - v[1] * b[0]}};
}

Vec3 axpy(const Vec3& x, double a, const Vec3& y) { return {x[0] + a * y[0], x[1] + a * y[1], x[2] + a * y[2]}; }

double speed2(const TrajectoryState& s) { return s.v[0] * s.v[0] + s.v[1] * s.v[1] + s.v[2] * s.v[2]; }

void track(Drift& d, double value) {
    const double scale = std::abs(d.initial) > 0.0 ? std::abs(d.initial) : 1.0;
    d.max_relative = std::max(d.max_relative, std::abs(value - d.initial) / scale);
}

}  // namespace

TrajectoryState rk4_step(const NumericField& f, const TrajectoryState& s, double dt) {
    const Deriv k1 = rhs(f, s.q, s.v);
    const Deriv k2 = rhs(f, axpy(s.q, dt / 2, k1.dq), axpy(s.v, dt / 2, k1.dv));
    const Deriv k3 = rhs(f, axpy(s.q, dt / 2, k2.dq), axpy(s.v, dt / 2, k2.dv));
    const Deriv k4 = rhs(f, axpy(s.q, dt, k3.dq), axpy(s.v, dt, k3.dv));
    TrajectoryState out;
    out.t = s.t + dt;
    for (int i = 0; i < 3; ++i) {
        out.q[i] = s.q[i] + dt / 6 * (k1.dq[i] + 2 * k2.dq[i] + 2 * k3.dq[i] + k4.dq[i]);
        out.v[i] = s.v[i] + dt / 6 * (k1.dv[i] + 2 * k2.dv[i] + 2 * k3.dv[i] + k4.dv[i]);
    }
    return out;
}

Trajectory integrate_trajectory(const NumericField& f, const TrajectoryState& s0, const TrajectoryOptions& opt) {
    if (!(opt.dt > 0.0)) throw Error("trajectory.dt must be positive");
    if (opt.steps == 0) throw Error("trajectory.steps must be positive");
    const bool singular = f.kind == FieldKind::inverse_square;
    if (singular && std::abs(s0.q[0]) < opt.guard) throw SingularityApproach("initial q1 lies inside the guard band");

    Trajectory tr;
    tr.report.dt = opt.dt;
    tr.report.vz.initial = s0.v[2];
    tr.report.speed2.initial = speed2(s0);
    if (auto p = f.p_y(s0)) tr.report.p_y = Drift{*p, 0.0};
    tr.samples.push_back(s0);

    TrajectoryState s = s0;
    for (std::size_t n = 1; n <= opt.steps; ++n) {
        s = rk4_step(f, s, opt.dt);
        for (double c : {s.q[0], s.q[1], s.q[2], s.v[0], s.v[1], s.v[2]})
            if (!std::isfinite(c)) throw SingularityApproach("state left the finite range at t = " + std::to_string(s.t));
        if (singular && std::abs(s.q[0]) < opt.guard)
            throw SingularityApproach("|q1| fell below " + std::to_string(opt.guard) + " at t = " + std::to_string(s.t));
        track(tr.report.vz, s.v[2]);
        track(tr.report.speed2, speed2(s));
        if (tr.report.p_y) track(*tr.report.p_y, *f.p_y(s));
        if ((opt.sample_every != 0 && n % opt.sample_every == 0) || n == opt.steps) tr.samples.push_back(s);
        tr.report.steps = n;
    }
    return tr;
}

void write_csv(std::ostream& os, const std::vector<TrajectoryState>& samples) {
    const auto old = os.precision(std::numeric_limits<double>::max_digits10);
    os << "t,q1,q2,q3,qd1,qd2,qd3\n";
    for (const auto& s : samples)
        os << s.t << ',' << s.q[0] << ',' << s.q[1] << ',' << s.q[2] << ',' << s.v[0] << ',' << s.v[1] << ',' << s.v[2] << '\n';
    os.precision(old);
}

void write_svg(std::ostream& os, const std::vector<TrajectoryState>& samples, int width, int height) {
    double x0 = 0.0, x1 = 0.0, y0 = 0.0, y1 = 0.0;
    if (!samples.empty()) {
        x0 = x1 = samples.front().q[0];
        y0 = y1 = samples.front().q[1];
    }
    for (const auto& s : samples) {
        x0 = std::min(x0, s.q[0]);
        x1 = std::max(x1, s.q[0]);
        y0 = std::min(y0, s.q[1]);
        y1 = std::max(y1, s.q[1]);
    }
    // Keep the origin in view so the axes are meaningful.
    x0 = std::min(x0, 0.0);
    y0 = std::min(y0, 0.0);
    x1 = std::max(x1, 0.0);
    y1 = std::max(y1, 0.0);
    const double span = std::max({x1 - x0, y1 - y0, 1e-12});
    const double margin = 20.0;
    const double scale = (std::min(width, height) - 2 * margin) / span;
    auto px = [&](double x) { return margin + (x - x0) * scale; };
    auto py = [&](double y) { return height - margin - (y - y0) * scale; };

    os << std::setprecision(6);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
    os << "<line x1=\"" << px(x0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(x0 + span) << "\" y2=\"" << py(0)
       << "\" stroke=\"gray\"/>\n";
    os << "<line x1=\"" << px(0) << "\" y1=\"" << py(y0) << "\" x2=\"" << px(0) << "\" y2=\"" << py(y0 + span)
       << "\" stroke=\"gray\"/>\n";
    os << "<text x=\"" << width - margin << "\" y=\"" << py(0) - 4 << "\" font-size=\"12\">q1</text>\n";
    os << "<text x=\"" << px(0) + 4 << "\" y=\"" << margin << "\" font-size=\"12\">q2</text>\n";
    os << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"";
    for (std::size_t i = 0; i < samples.size(); ++i) os << (i ? " " : "") << px(samples[i].q[0]) << ',' << py(samples[i].q[1]);
    os << "\"/>\n</svg>\n";
}

}  // namespace fieldsym::numeric
