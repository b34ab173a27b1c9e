#include "fieldsym/cli/cli.hpp"

#include <CLI11.hpp>

#include <deque>
#include <fstream>

namespace fieldsym::cli {

namespace {

enum class Kind { text, rational, integer, real, boolean };

/// A command-line flag that overrides one dotted config key.
struct Override {
    std::string path;
    Kind kind;
    std::string value;
    bool flag = false;
    CLI::Option* option = nullptr;
};

Json convert(const Override& o) {
    try {
        switch (o.kind) {
            case Kind::text:
            case Kind::rational: return o.value;  // rationals stay strings so they parse exactly
            case Kind::integer: {
                std::size_t used = 0;
                const long long v = std::stoll(o.value, &used);
                if (used != o.value.size()) break;
                return v;
            }
            case Kind::real: {
                std::size_t used = 0;
                const double v = std::stod(o.value, &used);
                if (used != o.value.size()) break;
                return v;
            }
            case Kind::boolean: return o.flag;
        }
    } catch (const std::exception&) {
    }
    throw ConfigError(o.path, "cannot read '" + o.value + "'");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact symmetry analysis of a charged particle in a magnetic field"};
    app.name("fieldsym");
    app.require_subcommand(1);

    std::string config_path;
    std::string output_path;
    std::deque<Override> overrides;
    std::map<std::string, CLI::App*> subs;

    auto sub = [&](const std::string& name, const std::string& help) {
        CLI::App* s = app.add_subcommand(name, help);
        s->add_option("-c,--config", config_path, "TOML configuration file");
        s->add_option("-o,--output", output_path, "write the JSON document here instead of stdout");
        subs[name] = s;
        return s;
    };
    auto opt = [&](CLI::App* s, const std::string& flag, const std::string& path, Kind kind, const std::string& help) {
        overrides.push_back({path, kind, "", false, nullptr});
        Override& o = overrides.back();
        o.option = kind == Kind::boolean ? s->add_flag(flag, o.flag, help) : s->add_option(flag, o.value, help);
    };

    CLI::App* sp = sub("spectrum", "exact bound-state spectrum of the radial equation");
    opt(sp, "--C", "ode.C", Kind::rational, "coefficient of 1/x^2 (p/q)");
    opt(sp, "--D", "ode.D", Kind::rational, "coefficient of 1/x (p/q)");
    opt(sp, "--n-max", "spectrum.n_max", Kind::integer, "highest level");
    opt(sp, "--branch", "spectrum.branch", Kind::text, "positive, negative or both");
    opt(sp, "--m", "physical.m", Kind::rational, "mass");
    opt(sp, "--hbar", "physical.hbar", Kind::rational, "reduced Planck constant");
    opt(sp, "--omega-B", "physical.omega_B", Kind::rational, "field frequency");
    opt(sp, "--k-y", "physical.k_y", Kind::rational, "wave number along y");
    opt(sp, "--k-z", "physical.k_z", Kind::rational, "wave number along z");
    opt(sp, "--symbolic", "physical.symbolic", Kind::boolean, "closed form in m, hbar, omega_B, k_y");

    CLI::App* so = sub("symmetry-ode", "point symmetries of the radial equation under the Laurent ansatz");
    opt(so, "--ansatz", "symmetry.ansatz", Kind::integer, "highest inverse power N in beta");
    opt(so, "--emit-vectorfield", "symmetry.emit_vectorfield", Kind::boolean, "include the vector fields");
    opt(so, "--closure", "symmetry.closure", Kind::boolean, "include the closure certificate");
    opt(so, "--C", "ode.C", Kind::rational, "fix C (p/q)");
    opt(so, "--D", "ode.D", Kind::rational, "fix D (p/q)");
    opt(so, "--E-hat", "ode.E_hat", Kind::rational, "fix E_hat (p/q)");

    CLI::App* sc = sub("symmetry-classical", "verify the classical generator sets");
    opt(sc, "--case", "classical.case", Kind::text, "zero, inverse-square or linear");

    CLI::App* vn = sub("verify-numeric", "finite-difference cross-check of the spectrum");
    opt(vn, "--C", "ode.C", Kind::rational, "coefficient of 1/x^2 (p/q)");
    opt(vn, "--D", "ode.D", Kind::rational, "coefficient of 1/x (p/q)");
    opt(vn, "--x-min", "grid.x_min", Kind::real, "left end of the grid");
    opt(vn, "--x-max", "grid.x_max", Kind::real, "right end of the grid");
    opt(vn, "--points", "grid.points", Kind::integer, "interior grid points");
    opt(vn, "--count", "numeric.count", Kind::integer, "number of levels");
    opt(vn, "--tolerance", "numeric.tolerance", Kind::real, "relative tolerance");

    CLI::App* tj = sub("trajectory", "RK4 trajectory with conservation report");
    opt(tj, "--case", "trajectory.case", Kind::text, "zero, inverse-square or linear");
    opt(tj, "--Bcal", "trajectory.Bcal", Kind::real, "field strength");
    opt(tj, "--dt", "trajectory.dt", Kind::real, "time step");
    opt(tj, "--steps", "trajectory.steps", Kind::integer, "number of steps");
    opt(tj, "--sample-every", "trajectory.sample_every", Kind::integer, "keep every k-th state");
    opt(tj, "--drift-tolerance", "trajectory.drift_tolerance", Kind::real, "largest accepted relative drift");
    opt(tj, "--csv", "output.csv", Kind::text, "CSV path for sampled states");
    opt(tj, "--svg", "output.svg", Kind::text, "SVG path for the (q1, q2) projection");

    CLI::App* rp = sub("report", "run every acceptance check and emit one document");
    opt(rp, "--seed", "report.seed", Kind::integer, "seed for the random alpha draw");
    opt(rp, "--timings", "report.timings", Kind::boolean, "include per-check runtimes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ExitCode::ok : ExitCode::config_error;
    }

    std::string command;
    for (const auto& [name, s] : subs)
        if (s->parsed()) command = name;

    try {
        Json config = config_path.empty() ? Json::object() : load_toml_file(config_path);
        for (const auto& o : overrides)
            if (o.option->count() > 0) set_path(config, o.path, convert(o));
        CommandOutcome result = execute(command, config);
        const std::string text = result.document.dump(2) + "\n";
        if (output_path.empty()) {
            out << text;
        } else {
            std::ofstream os(output_path);
            if (!os) throw ConfigError("output", "cannot write '" + output_path + "'");
            os << text;
        }
        if (result.exit_code == ExitCode::verification_failure) err << "fieldsym: verification failed\n";
        return result.exit_code;
    } catch (const ConfigError& e) {
        err << "fieldsym: config error: " << e.what() << "\n";
        return ExitCode::config_error;
    } catch (const std::exception& e) {
        err << "fieldsym: " << e.what() << "\n";
        return ExitCode::verification_failure;
    }
}

}  // namespace fieldsym::cli
