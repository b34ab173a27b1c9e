#include "fieldsym/cli/acceptance.hpp"
#include "fieldsym/cli/cli.hpp"

#include "fieldsym/classical/lorentz.hpp"
#include "fieldsym/exact/multi_expr.hpp"
#include "fieldsym/lie/point_symmetry.hpp"
#include "fieldsym/numeric/numeric_lab.hpp"
#include "fieldsym/su11/spectrum.hpp"

#include <cmath>
#include <fstream>

namespace fieldsym::cli {

using exact::GaussRational;
using exact::MultiExpr;
using exact::QuadSurd;
using exact::rational_string;

namespace {

Json header(const std::string& command, const Json& config) {
    Json doc = Json::object();
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = command;
    doc["config"] = config;
    return doc;
}

int positive_int(const ConfigView& c, const std::string& key, long fallback, long max) {
    const long v = c.integer(key, fallback);
    if (v < 0 || v > max) throw ConfigError(key, "must lie in [0, " + std::to_string(max) + "]");
    return static_cast<int>(v);
}

std::vector<su11::Branch> branches(const ConfigView& c) {
    const std::string b = c.string("spectrum.branch", "both");
    if (b == "positive") return {su11::Branch::positive_root};
    if (b == "negative") return {su11::Branch::negative_root};
    if (b == "both") return {su11::Branch::positive_root, su11::Branch::negative_root};
    throw ConfigError("spectrum.branch", "expected positive, negative or both");
}

std::string surd(const QuadSurd& q) { return q.to_string(); }

// ---------------------------------------------------------------- spectrum

CommandOutcome spectrum_command(const Json& cfg) {
    const ConfigView c(cfg);
    c.only_keys("", {"ode", "physical", "spectrum"});
    c.only_keys("ode", {"C", "D"});
    c.only_keys("physical", {"m", "hbar", "omega_B", "k_y", "k_z", "symbolic"});
    c.only_keys("spectrum", {"n_max", "branch"});
    const int n_max = positive_int(c, "spectrum.n_max", 4, 10000);
    const auto wanted = branches(c);
    CommandOutcome out{header("spectrum", cfg)};
    Json& doc = out.document;

    if (c.boolean("physical.symbolic", false)) {
        const auto t = su11::physics_table();
        const auto o = su11::build_radial(su11::PhysicalParams::symbolic(t));
        doc["C"] = o.C.to_string();
        doc["D"] = o.D.to_string();
        doc["E_hat_definition"] = o.E_hat_definition->to_string();
        Json sym = Json::object();
        for (auto b : wanted) {
            const auto S = su11::spectrum_symbolic(o, b);
            sym[su11::to_string(b)] = {{"E_hat", S.E_hat.to_string()}, {"sqrt_disc_squared", S.radicand.to_string()}};
        }
        doc["symbolic"] = sym;
        return out;
    }

    const bool physical = c.has("physical");
    if (physical && c.has("ode")) throw ConfigError("physical", "give either [ode] or [physical], not both");
    std::optional<su11::ODESpec> radial;
    std::optional<su11::PhysicalParams> P;
    std::string d_key = "ode.D";
    if (physical) {
        auto need = [&](const char* k) {
            auto v = c.rational(std::string("physical.") + k);
            if (!v) throw ConfigError(std::string("physical.") + k, "missing");
            return *v;
        };
        const auto t = su11::physics_table();
        const mpq_class m = need("m"), hbar = need("hbar"), w = need("omega_B"), ky = need("k_y");
        if (sgn(m) <= 0) throw ConfigError("physical.m", "must be positive");
        if (sgn(hbar) <= 0) throw ConfigError("physical.hbar", "must be positive");
        P = su11::PhysicalParams::rational(t, m, hbar, w, ky, c.rational("physical.k_z", 0));
        radial = su11::build_radial(*P);
        d_key = "physical.k_y";
        doc["C"] = radial->C.to_string();
        doc["D"] = radial->D.to_string();
    } else {
        auto C = c.rational("ode.C");
        auto D = c.rational("ode.D");
        if (!C) throw ConfigError("ode.C", "missing");
        if (!D) throw ConfigError("ode.D", "missing");
        radial = su11::ODESpec::rational(*C, *D);
        doc["C"] = rational_string(*C);
        doc["D"] = rational_string(*D);
    }

    const su11::ODESpec& o = *radial;
    Json results = Json::object();
    bool any = false;
    for (auto b : wanted) {
        Json br = Json::object();
        try {
            const auto sp = su11::spectrum(o, n_max, b);
            any = true;
            br["sqrt_1_minus_4C"] = surd(sp.root);
            Json ex = Json::array();
            for (const auto& e : sp.existence_condition) ex.push_back({{"condition", e.name}, {"holds", e.passed}, {"detail", e.detail}});
            br["existence_condition"] = ex;
            Json rows = Json::array();
            for (const auto& e : sp.entries) {
                const QuadSurd residual = su11::eigenvalue_condition_residual(o, e);
                Json row = {{"n", e.n}, {"E_hat", surd(e.E_hat)}, {"E_hat_decimal", e.E_hat.to_double()},
                            {"condition_residual", surd(residual)}};
                if (!residual.is_zero()) out.exit_code = ExitCode::verification_failure;
                if (P && e.E_hat.is_rational()) {
                    const MultiExpr E = su11::physical_energy(*P, MultiExpr(P->m.table(), GaussRational(e.E_hat.rational_part())));
                    row["energy"] = E.to_string();
                }
                rows.push_back(row);
            }
            br["entries"] = rows;
            br["omitted"] = sp.omitted;
        } catch (const su11::NoDiscreteSpectrum& e) {
            if (std::string(e.what()).rfind("sign constraints", 0) != 0) throw ConfigError(d_key, e.what());
            br["entries"] = Json::array();
            br["note"] = e.what();
        } catch (const su11::DenominatorZero& e) {
            throw ConfigError(physical ? "physical.omega_B" : "ode.C", e.what());
        } catch (const Error& e) {
            if (std::string(e.what()).find("1 - 4C") != std::string::npos) throw ConfigError(physical ? "physical" : "ode.C", e.what());
            throw;
        }
        results[su11::to_string(b)] = br;
    }
    doc["branches"] = results;
    if (!any) throw ConfigError("spectrum.branch", "no branch admits a level with n <= " + std::to_string(n_max));
    return out;
}

// ---------------------------------------------------------------- symmetry-ode

Json family_json(const lie::Context& ctx, const lie::SymmetryFamily& f, bool emit, int& exit_code) {
    Json j = Json::object();
    Json cons = Json::object();
    for (const auto& [k, v] : f.constraints) cons[k] = v.to_string();
    j["constraints"] = cons;
    j["free"] = f.branch.free_unknowns;
    Json rel = Json::object();
    for (const auto& name : f.coefficients) {
        auto it = f.branch.closed_form.find(name);
        if (it != f.branch.closed_form.end()) rel[name] = it->second.to_string();
    }
    j["coefficients"] = rel;
    Json nz = Json::array();
    for (const auto& e : f.branch.nonzero_conditions) nz.push_back(e.to_string());
    j["nonzero_conditions"] = nz;
    j["beta"] = f.beta.to_string();
    j["back_substitution"] = f.back_substitution.to_string();
    j["link_consistent"] = f.link_consistent;

    const auto X = lie::build_vector_field(ctx, f, {true, true, true, "alpha"});
    const MultiExpr residual = lie::verify_point_symmetry(ctx, X, f.constraints);
    j["symmetry_residual"] = residual.to_string();
    if (!residual.is_zero() || !f.back_substitution.is_zero()) exit_code = ExitCode::verification_failure;

    Json checks = Json::array();
    for (const auto& pc : lie::compare_printed(f, lie::printed_relations(ctx, f.N), lie::printed_parameters(ctx, f.N))) {
        Json row = {{"printed", pc.printed}, {"holds", pc.holds}};
        if (!pc.holds) {
            row["residual"] = pc.residual;
            row["verified"] = pc.verified;
        }
        checks.push_back(row);
    }
    j["printed_checks"] = checks;
    if (emit) j["vector_field"] = {{"display", X.to_string()}, {"sexpr", X.to_sexpr()}};
    return j;
}

Json closure_json(const lie::Context& ctx, const lie::SymmetryFamily& f) {
    Json out = Json::array();
    for (bool kappa : {false, true}) {
        const auto cert = lie::closure_certificate(ctx, f, kappa);
        Json brackets = Json::array();
        for (const auto& b : cert.brackets)
            brackets.push_back({{"bracket", "[" + b.left + ", " + b.right + "]"},
                                {"xi", b.value.component("x").to_string()},
                                {"eta", b.value.component("u").to_string()},
                                {"outside_keys", b.outside_keys},
                                {"coefficient_solves_radial_equation", b.coefficient_solves_equation}});
        out.push_back({{"include_kappa", kappa}, {"family_keys", cert.family_keys}, {"non_closure", cert.non_closure},
                       {"brackets", brackets}});
    }
    return out;
}

CommandOutcome symmetry_ode_command(const Json& cfg) {
    const ConfigView c(cfg);
    c.only_keys("", {"ode", "symmetry"});
    c.only_keys("ode", {"C", "D", "E_hat"});
    c.only_keys("symmetry", {"ansatz", "emit_vectorfield", "closure"});
    const int N = positive_int(c, "symmetry.ansatz", 1, 9);
    const bool emit = c.boolean("symmetry.emit_vectorfield", false);
    const lie::RadialCase rc{c.rational("ode.C"), c.rational("ode.D"), c.rational("ode.E_hat")};
    const lie::Context ctx(rc);

    CommandOutcome out{header("symmetry-ode", cfg)};
    Json& doc = out.document;
    const auto red = lie::ansatz_reduce(ctx);
    doc["equation"] = "u'' + (" + ctx.F().to_string() + ")*u = 0";
    doc["reduction"] = {{"beta_equation", red.beta_equation.to_string() + " = 0"},
                        {"gamma", red.gamma_value.to_string()},
                        {"delta_equation", red.delta_equation.to_string() + " = 0"}};
    const auto names = lie::ansatz_coefficients(N);
    std::string ansatz;
    for (int k = 0; k <= N; ++k) ansatz += (k ? " + " : "") + names[static_cast<std::size_t>(k)] + (k ? "*x^-" + std::to_string(k) : "");
    doc["ansatz"] = "beta = " + ansatz;

    std::vector<lie::SymmetryFamily> fams;
    try {
        fams = lie::solve_beta_ansatz(ctx, N);
    } catch (const lie::OnlyTrivial& e) {
        doc["families"] = Json::array();
        doc["note"] = e.what();
        return out;
    }
    Json list = Json::array();
    for (const auto& f : fams) list.push_back(family_json(ctx, f, emit, out.exit_code));
    doc["families"] = list;

    const std::vector<std::pair<std::string, lie::PointVectorField>> printed =
        N == 1 ? std::vector<std::pair<std::string, lie::PointVectorField>>{{"printed field", lie::printed_field_n1(ctx)}}
        : N == 2 ? std::vector<std::pair<std::string, lie::PointVectorField>>{{"printed field", lie::printed_field_n2(ctx)}}
                 : std::vector<std::pair<std::string, lie::PointVectorField>>{};
    if (!printed.empty()) {
        Json pf = Json::array();
        for (const auto& [label, X] : printed) {
            std::string residual;
            try {
                residual = lie::verify_point_symmetry(ctx, X, fams.front().constraints).to_string();
            } catch (const exact::DivisionByZero&) {
                residual = "undefined (division by zero)";
            }
            pf.push_back({{"label", label}, {"field", X.to_string()}, {"residual", residual}, {"holds", residual == "0"}});
        }
        doc["printed_fields"] = pf;
    }
    if (c.boolean("symmetry.closure", N == 1)) {
        doc["closure"] = closure_json(ctx, fams.front());
        doc["closure_note"] =
            "non-closure is relative to the family signature; each outside coefficient that solves the radial equation "
            "lies in the full point symmetry algebra of the linear equation";
    }
    return out;
}

// ---------------------------------------------------------------- symmetry-classical

Json check_json(const classical::GeneratorCheck& g) {
    Json res = Json::array();
    for (const auto& r : g.residuals) res.push_back(r.to_string());
    return {{"generator", g.name}, {"variant", g.variant}, {"field", g.field.to_string()}, {"residuals", res},
            {"vanishes", g.vanishes()}, {"expected_symmetry", g.expected}};
}

CommandOutcome symmetry_classical_command(const Json& cfg) {
    const ConfigView c(cfg);
    c.only_keys("", {"classical"});
    c.only_keys("classical", {"case"});
    const auto case_name = c.string("classical.case");
    if (!case_name) throw ConfigError("classical.case", "missing (zero, inverse-square or linear)");
    classical::FieldKind kind;
    try {
        kind = classical::parse_field_kind(*case_name);
    } catch (const Error& e) {
        throw ConfigError("classical.case", e.what());
    }
    CommandOutcome out{header("symmetry-classical", cfg)};
    Json& doc = out.document;
    const auto rep = classical::verify_case(kind);
    Json omega = Json::array();
    for (int sign : kind == classical::FieldKind::inverse_square ? std::vector<int>{-1, 1} : std::vector<int>{-1}) {
        Json w = Json::array();
        for (const auto& e : classical::lorentz_rhs(classical::FieldCase{kind, sign})) w.push_back(e.to_string());
        omega.push_back({{"B_sign", sign}, {"omega", w}});
    }
    doc["case"] = classical::to_string(kind);
    doc["omega"] = omega;
    for (const auto& [key, group] : {std::pair{"printed", &rep.printed}, {"controls", &rep.controls}, {"additional", &rep.additional}}) {
        Json rows = Json::array();
        for (const auto& g : *group) rows.push_back(check_json(g));
        doc[key] = rows;
    }
    if (rep.structure) {
        const auto& s = *rep.structure;
        Json br = Json::array();
        for (std::size_t i = 0; i < s.names.size(); ++i)
            for (std::size_t j = i + 1; j < s.names.size(); ++j) {
                Json coeffs = Json::object();
                for (std::size_t k = 0; k < s.names.size(); ++k)
                    if (!s.constants[i][j][k].is_zero()) coeffs[s.names[k]] = s.constants[i][j][k].to_string();
                br.push_back({{"left", s.names[i]}, {"right", s.names[j]}, {"bracket", coeffs}});
            }
        doc["structure"] = {{"generators", s.names}, {"brackets", br}, {"derived_dimensions", s.derived_dimensions},
                            {"abelian", s.abelian()}, {"solvable", s.solvable}};
    }
    doc["passed"] = rep.passed();
    if (!rep.passed()) out.exit_code = ExitCode::verification_failure;
    return out;
}

// ---------------------------------------------------------------- verify-numeric

numeric::GridSpec grid_from(const ConfigView& c) {
    numeric::GridSpec g;
    g.x_min = c.real("grid.x_min", g.x_min);
    g.x_max = c.real("grid.x_max", g.x_max);
    const long p = c.integer("grid.points", static_cast<long>(g.points));
    if (p < 100) throw ConfigError("grid.points", "must be at least 100");
    g.points = static_cast<std::size_t>(p);
    if (!(g.x_min > 0.0)) throw ConfigError("grid.x_min", "must be positive");
    if (!(g.x_max > g.x_min)) throw ConfigError("grid.x_max", "must exceed grid.x_min");
    return g;
}

CommandOutcome verify_numeric_command(const Json& cfg) {
    const ConfigView c(cfg);
    c.only_keys("", {"ode", "grid", "numeric"});
    c.only_keys("ode", {"C", "D"});
    c.only_keys("grid", {"x_min", "x_max", "points"});
    c.only_keys("numeric", {"count", "tolerance", "levels", "order_min", "order_max"});
    const mpq_class C = c.rational("ode.C", mpq_class(-3, 4));
    const mpq_class D = c.rational("ode.D", 2);
    const auto grid = grid_from(c);
    const int count = positive_int(c, "numeric.count", 3, 1000);
    if (count == 0) throw ConfigError("numeric.count", "must be positive");
    const double tol = c.real("numeric.tolerance", 1e-3);
    if (!(tol > 0.0)) throw ConfigError("numeric.tolerance", "must be positive");
    const int levels = positive_int(c, "numeric.levels", 4, 8);
    if (levels < 3) throw ConfigError("numeric.levels", "needs at least 3 grid levels");
    const double omin = c.real("numeric.order_min", 1.8);
    const double omax = c.real("numeric.order_max", 2.2);

    CommandOutcome out{header("verify-numeric", cfg)};
    Json& doc = out.document;
    doc["C"] = rational_string(C);
    doc["D"] = rational_string(D);
    doc["tolerance"] = tol;
    doc["caveat"] = "negative-branch levels belong to the solution excluded by the Dirichlet condition at x_min and are not expected here";

    const numeric::RadialODE ode{C.get_d(), D.get_d()};
    std::optional<su11::SpectrumResult> exact;
    try {
        exact = su11::spectrum(su11::ODESpec::rational(C, D), count - 1, su11::Branch::positive_root);
    } catch (const su11::NoDiscreteSpectrum& e) {
        doc["exact_note"] = e.what();
    } catch (const Error& e) {
        throw ConfigError("ode.C", e.what());
    }
    numeric::FdSpectrum fd;
    try {
        fd = numeric::fd_spectrum(ode, grid, static_cast<std::size_t>(count), tol);
    } catch (const numeric::NoBoundState& e) {
        doc["rows"] = Json::array();
        doc["fd_note"] = e.what();
        // Consistent only when the exact side agrees that nothing is bound.
        if (exact) out.exit_code = ExitCode::verification_failure;
        return out;
    } catch (const numeric::GridTooCoarse& e) {
        doc["fd_note"] = e.what();
        out.exit_code = ExitCode::verification_failure;
        return out;
    }

    Json rows = Json::array();
    for (std::size_t n = 0; n < fd.eigenvalues.size(); ++n) {
        Json row = {{"n", n}, {"fd", fd.eigenvalues[n]}, {"half_step_shift", fd.relative_shift[n]}};
        if (exact && n < exact->entries.size()) {
            const double ex = exact->entries[n].E_hat.to_double();
            const double rel = std::abs(fd.eigenvalues[n] - ex) / std::abs(ex);
            row["exact"] = exact->entries[n].E_hat.to_string();
            row["exact_decimal"] = ex;
            row["relative_error"] = rel;
            row["within_tolerance"] = rel <= tol;
            if (rel > tol) out.exit_code = ExitCode::verification_failure;
        } else {
            row["exact"] = nullptr;
        }
        rows.push_back(row);
    }
    doc["rows"] = rows;

    // Successive differences cancel the grid-independent truncation error at x_min.
    std::vector<double> e;
    std::vector<double> h;
    numeric::GridSpec g = grid;
    for (int l = 0; l < levels; ++l) {
        e.push_back(numeric::tridiagonal_eigenvalues(ode, g, 1).front());
        h.push_back(g.spacing());
        g = g.refined();
    }
    Json orders = Json::array();
    bool order_ok = true;
    for (std::size_t l = 0; l + 2 < e.size(); ++l) {
        const double o = std::log2((e[l] - e[l + 1]) / (e[l + 1] - e[l + 2]));
        orders.push_back(o);
        order_ok = order_ok && o >= omin && o <= omax;
    }
    doc["convergence"] = {{"eigenvalue_index", 0}, {"spacings", h}, {"eigenvalues", e}, {"orders", orders},
                          {"order_range", {omin, omax}}, {"within_range", order_ok}};
    if (!order_ok) out.exit_code = ExitCode::verification_failure;
    return out;
}

// ---------------------------------------------------------------- trajectory

Json drift_json(const numeric::Drift& d, std::optional<double> tol) {
    Json j = {{"initial", d.initial}, {"max_relative_drift", d.max_relative}};
    if (tol) {
        j["tolerance"] = *tol;
        j["ok"] = d.max_relative <= *tol;
    }
    return j;
}

CommandOutcome trajectory_command(const Json& cfg) {
    const ConfigView c(cfg);
    c.only_keys("", {"trajectory", "output"});
    c.only_keys("trajectory", {"case", "Bcal", "sign", "q0", "v0", "dt", "steps", "sample_every", "guard", "drift_tolerance"});
    c.only_keys("output", {"csv", "svg"});
    numeric::NumericField f;
    try {
        f.kind = classical::parse_field_kind(c.string("trajectory.case", "inverse-square"));
    } catch (const Error& e) {
        throw ConfigError("trajectory.case", e.what());
    }
    f.Bcal = c.real("trajectory.Bcal", 1.0);
    const long sign = c.integer("trajectory.sign", -1);
    if (sign != 1 && sign != -1) throw ConfigError("trajectory.sign", "must be 1 or -1");
    f.sign = static_cast<int>(sign);
    numeric::TrajectoryState s0;
    const auto q0 = c.reals("trajectory.q0", {1.0, 0.0, 0.0});
    const auto v0 = c.reals("trajectory.v0", {0.1, 0.2, 0.3});
    if (q0.size() != 3) throw ConfigError("trajectory.q0", "needs three entries");
    if (v0.size() != 3) throw ConfigError("trajectory.v0", "needs three entries");
    std::copy(q0.begin(), q0.end(), s0.q.begin());
    std::copy(v0.begin(), v0.end(), s0.v.begin());
    numeric::TrajectoryOptions opt;
    opt.dt = c.real("trajectory.dt", 1e-4);
    if (!(opt.dt > 0.0)) throw ConfigError("trajectory.dt", "must be positive");
    const long steps = c.integer("trajectory.steps", 100000);
    if (steps <= 0) throw ConfigError("trajectory.steps", "must be positive");
    opt.steps = static_cast<std::size_t>(steps);
    const long every = c.integer("trajectory.sample_every", 0);
    if (every < 0) throw ConfigError("trajectory.sample_every", "must be nonnegative");
    opt.sample_every = every == 0 ? std::max<std::size_t>(1, opt.steps / 1000) : static_cast<std::size_t>(every);
    opt.guard = c.real("trajectory.guard", 1e-6);
    const double tol = c.real("trajectory.drift_tolerance", 1e-8);
    if (f.kind == classical::FieldKind::inverse_square && std::abs(s0.q[0]) < opt.guard)
        throw ConfigError("trajectory.q0", "q1 lies inside the singularity guard");

    CommandOutcome out{header("trajectory", cfg)};
    Json& doc = out.document;
    numeric::Trajectory tr;
    try {
        tr = numeric::integrate_trajectory(f, s0, opt);
    } catch (const numeric::SingularityApproach& e) {
        doc["error"] = e.what();
        out.exit_code = ExitCode::verification_failure;
        return out;
    }
    const auto& r = tr.report;
    // q3 is cyclic with zero force only when B has no x or y component.
    const bool vz_conserved = f.kind != classical::FieldKind::linear;
    Json cons = Json::object();
    cons["qd3"] = drift_json(r.vz, vz_conserved ? std::optional<double>(tol) : std::nullopt);
    cons["speed2"] = drift_json(r.speed2, tol);
    if (r.p_y) cons["p_y"] = drift_json(*r.p_y, tol);
    doc["steps"] = r.steps;
    doc["dt"] = r.dt;
    doc["final_state"] = {{"t", tr.samples.back().t}, {"q", tr.samples.back().q}, {"qd", tr.samples.back().v}};
    doc["conservation"] = cons;
    bool ok = r.speed2.max_relative <= tol && (!vz_conserved || r.vz.max_relative <= tol) && (!r.p_y || r.p_y->max_relative <= tol);
    doc["passed"] = ok;
    if (!ok) out.exit_code = ExitCode::verification_failure;

    Json files = Json::object();
    if (auto csv = c.string("output.csv")) {
        std::ofstream os(*csv);
        if (!os) throw ConfigError("output.csv", "cannot write '" + *csv + "'");
        numeric::write_csv(os, tr.samples);
        files["csv"] = *csv;
    }
    if (auto svg = c.string("output.svg")) {
        std::ofstream os(*svg);
        if (!os) throw ConfigError("output.svg", "cannot write '" + *svg + "'");
        numeric::write_svg(os, tr.samples);
        files["svg"] = *svg;
    }
    doc["files"] = files;
    doc["samples"] = tr.samples.size();
    return out;
}

// ---------------------------------------------------------------- report

CommandOutcome report_command(const Json& cfg) {
    const ConfigView c(cfg);
    c.only_keys("", {"report"});
    c.only_keys("report", {"seed", "trajectory_Bcal", "timings"});
    AcceptanceOptions opt;
    const long seed = c.integer("report.seed", opt.seed);
    if (seed < 0) throw ConfigError("report.seed", "must be nonnegative");
    opt.seed = static_cast<std::uint32_t>(seed);
    opt.trajectory_Bcal = c.real("report.trajectory_Bcal", opt.trajectory_Bcal);
    const bool timings = c.boolean("report.timings", false);

    CommandOutcome out{header("report", cfg)};
    Json list = Json::array();
    bool all = true;
    for (const auto& r : run_acceptance(opt)) {
        Json j = to_json(r);
        if (!timings) j.erase("seconds");
        list.push_back(j);
        all = all && r.passed;
    }
    out.document["criteria"] = list;
    out.document["passed"] = all;
    if (!all) out.exit_code = ExitCode::verification_failure;
    return out;
}

}  // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names{"spectrum", "symmetry-ode", "symmetry-classical",
                                                "verify-numeric", "trajectory", "report"};
    return names;
}

CommandOutcome execute(const std::string& command, const Json& config) {
    if (!config.is_object()) throw ConfigError("config", "expected a table");
    if (command == "spectrum") return spectrum_command(config);
    if (command == "symmetry-ode") return symmetry_ode_command(config);
    if (command == "symmetry-classical") return symmetry_classical_command(config);
    if (command == "verify-numeric") return verify_numeric_command(config);
    if (command == "trajectory") return trajectory_command(config);
    if (command == "report") return report_command(config);
    throw ConfigError("command", "unknown command '" + command + "'");
}

}  // namespace fieldsym::cli
