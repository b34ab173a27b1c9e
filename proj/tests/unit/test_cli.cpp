#include "fieldsym/cli/cli.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace fieldsym::cli;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

struct Run {
    int code;
    std::string out, err;
};

Run cli(std::vector<std::string> args) {
    args.insert(args.begin(), "fieldsym");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

bool updating() { return std::getenv("FIELDSYM_UPDATE_GOLDEN") != nullptr; }

void check_golden(const fs::path& expected, const std::string& actual) {
    if (updating()) {
        std::ofstream(expected, std::ios::binary) << actual;
        return;
    }
    REQUIRE_MESSAGE(fs::exists(expected), expected.string());
    CHECK_MESSAGE(slurp(expected) == actual, "golden mismatch: " << expected.string());
}

}  // namespace

// Each <command>.<case>.toml in the golden directory is run as `fieldsym <command> -c <file>` and
// its stdout compared byte for byte with <command>.<case>.json.
TEST_CASE("golden documents") {
    const fs::path dir = FIELDSYM_GOLDEN_DIR;
    int seen = 0;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.path().extension() != ".toml") continue;
        const std::string stem = entry.path().stem().string();
        const std::string command = stem.substr(0, stem.find('.'));
        CAPTURE(stem);
        const auto r = cli({command, "-c", entry.path().string()});
        CHECK(r.code == 0);
        check_golden(dir / (stem + ".json"), r.out);
        ++seen;
    }
    CHECK(seen >= 8);
}

TEST_CASE("golden trajectory csv") {
    const fs::path dir = FIELDSYM_GOLDEN_DIR;
    const fs::path csv = fs::temp_directory_path() / "fieldsym_golden_trajectory.csv";
    const auto r = cli({"trajectory", "--Bcal", "1", "--dt", "0.01", "--steps", "20", "--csv", csv.string(),
                        "--case", "inverse-square"});
    CHECK(r.code == 0);
    check_golden(dir / "trajectory.csv", slurp(csv));
    fs::remove(csv);
}

TEST_CASE("output is byte-identical across runs") {
    const auto a = cli({"symmetry-ode", "--ansatz", "2", "--emit-vectorfield"});
    const auto b = cli({"symmetry-ode", "--ansatz", "2", "--emit-vectorfield"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("documents are self-describing") {
    for (const auto& name : command_names()) {
        if (name == "report" || name == "trajectory") continue;
        Json cfg = Json::object();
        if (name == "spectrum") cfg = {{"ode", {{"C", "-3/4"}, {"D", 2}}}};
        if (name == "symmetry-classical") cfg = {{"classical", {{"case", "linear"}}}};
        const auto o = execute(name, cfg);
        CAPTURE(name);
        auto it = o.document.begin();
        CHECK(it.key() == "schema_version");
        CHECK(o.document["schema_version"] == kSchemaVersion);
        CHECK(o.document["command"] == name);
        CHECK(o.document["config"] == cfg);
    }
}

TEST_CASE("spectrum from flags") {
    const auto r = cli({"spectrum", "--C=-3/4", "--D=2", "--n-max=4", "--branch=positive"});
    REQUIRE(r.code == 0);
    const auto j = Json::parse(r.out);
    const auto& entries = j["branches"]["positive_root"]["entries"];
    REQUIRE(entries.size() == 5);
    CHECK(entries[0]["E_hat"] == "-4/9");
    CHECK(entries[4]["E_hat"] == "-4/121");
}

TEST_CASE("symmetry-ode ansatz 2 reports the constraints") {
    const auto j = Json::parse(cli({"symmetry-ode", "--ansatz", "2"}).out);
    const auto& f = j["families"][0];
    CHECK(f["constraints"]["C"] == "-2");
    CHECK(f["constraints"]["E_hat"] == "-1/4*D^2");
}

TEST_CASE("config errors exit 1 and name the key") {
    auto r = cli({"spectrum", "--C=-3/4"});
    CHECK(r.code == 1);
    CHECK(r.err.find("ode.D") != std::string::npos);
    r = cli({"spectrum", "--C=0.75", "--D=2"});
    CHECK(r.code == 1);
    CHECK(r.err.find("ode.C") != std::string::npos);
    r = cli({"symmetry-classical", "--case", "quadratic"});
    CHECK(r.code == 1);
    CHECK(r.err.find("classical.case") != std::string::npos);
    r = cli({"verify-numeric", "--points", "10"});
    CHECK(r.code == 1);
    CHECK(r.err.find("grid.points") != std::string::npos);
    r = cli({"spectrum", "-c", "/nonexistent/config.toml"});
    CHECK(r.code == 1);
    r = cli({"nonsense"});
    CHECK(r.code == 1);
}

TEST_CASE("unknown config keys are rejected") {
    CHECK_THROWS_AS(execute("spectrum", {{"ode", {{"C", "-3/4"}, {"D", 2}, {"Dee", 1}}}}), ConfigError);
    CHECK_THROWS_AS(execute("symmetry-classical", {{"clasical", {{"case", "zero"}}}}), ConfigError);
}

TEST_CASE("verification failures exit 2") {
    // A drift tolerance no integrator meets.
    const auto o = execute("trajectory", {{"trajectory", {{"Bcal", 100}, {"steps", 2000}, {"drift_tolerance", 1e-300}}}});
    CHECK(o.exit_code == ExitCode::verification_failure);
    CHECK(o.document["passed"] == false);
}
