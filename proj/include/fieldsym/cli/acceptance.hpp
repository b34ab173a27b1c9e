#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace fieldsym::cli {

using Json = nlohmann::ordered_json;

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string summary;   ///< one line, shown after PASS/FAIL
    Json details;
    double seconds = 0.0;
    double budget_seconds = 0.0;  ///< 0 when no runtime bound applies
};

struct AcceptanceOptions {
    std::uint32_t seed = 20240601;   ///< drives the random alpha draw
    /// Field strength for the trajectory check. Large enough that RK4 truncation, not roundoff,
    /// dominates the speed drift at dt = 1e-4.
    double trajectory_Bcal = 100.0;
    /// Drifts below this are treated as roundoff when measuring the dt-halving ratio.
    double roundoff_floor = 1e-11;
    /// Minimum dt-halving ratio accepted as fourth order (2^3.5).
    double min_halving_ratio = 11.3;
};

CriterionResult criterion_spectrum_formula();
CriterionResult criterion_commutators(const AcceptanceOptions& opt = {});
CriterionResult criterion_beta_equation();
CriterionResult criterion_families();
CriterionResult criterion_branch_link();
CriterionResult criterion_classical();
CriterionResult criterion_non_closure();
CriterionResult criterion_fd_spectrum();
CriterionResult criterion_trajectory(const AcceptanceOptions& opt = {});

/// All nine criteria in order.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt = {});

Json to_json(const CriterionResult& r);

}  // namespace fieldsym::cli
