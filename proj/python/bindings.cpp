// Thin binding layer: documents cross the boundary as JSON text, parsed on the Python side.
#include "fieldsym/cli/acceptance.hpp"
#include "fieldsym/cli/cli.hpp"
#include "fieldsym/cli/config.hpp"
#include "fieldsym/numeric/numeric_lab.hpp"
#include "fieldsym/su11/spectrum.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace fieldsym;

PYBIND11_MODULE(_fieldsym, m) {
    m.doc() = "Exact symmetry and spectrum computations for the radial magnetic-field problem";

    auto base = py::register_exception<Error>(m, "FieldsymError", PyExc_RuntimeError);
    py::register_exception<cli::ConfigError>(m, "ConfigError", base.ptr());

    m.attr("SCHEMA_VERSION") = cli::kSchemaVersion;
    m.def("command_names", &cli::command_names);

    m.def(
        "execute_json",
        [](const std::string& command, const std::string& config) {
            const auto cfg = cli::Json::parse(config);
            cli::CommandOutcome out;
            {
                py::gil_scoped_release release;
                out = cli::execute(command, cfg);
            }
            return py::make_tuple(out.document.dump(2), out.exit_code);
        },
        py::arg("command"), py::arg("config") = "{}",
        "Runs one command; returns (JSON document, exit code).");

    m.def(
        "parse_toml", [](const std::string& text) { return cli::parse_toml(text).dump(); }, py::arg("text"),
        "Parses the supported TOML subset into JSON text.");

    m.def(
        "acceptance_json",
        [](std::uint32_t seed) {
            cli::AcceptanceOptions opt;
            opt.seed = seed;
            cli::Json rows = cli::Json::array();
            {
                py::gil_scoped_release release;
                for (const auto& r : cli::run_acceptance(opt)) rows.push_back(cli::to_json(r));
            }
            return rows.dump();
        },
        py::arg("seed") = cli::AcceptanceOptions{}.seed);

    m.def(
        "casimir",
        [](const std::string& alpha) {
            return su11::casimir_scalar(exact::GaussRational::parse(alpha)).to_string();
        },
        py::arg("alpha"), "Casimir scalar of the realization, as \"p/q\".");

    m.def(
        "fd_spectrum",
        [](double C, double D, std::size_t count, double x_min, double x_max, std::size_t points, double tolerance) {
            py::gil_scoped_release release;
            return numeric::fd_spectrum({C, D}, {x_min, x_max, points}, count, tolerance).eigenvalues;
        },
        py::arg("C"), py::arg("D"), py::arg("count") = 3, py::arg("x_min") = 1e-3, py::arg("x_max") = 80.0,
        py::arg("points") = 8000, py::arg("tolerance") = 1e-3);
}
