// Runs the nine acceptance criteria and prints one line per criterion. Exit 0 iff all pass.
#include "fieldsym/cli/acceptance.hpp"

#include <cstdio>

int main() {
    using namespace fieldsym::cli;
    bool all = true;
    for (const auto& r : run_acceptance()) {
        const bool in_budget = r.budget_seconds <= 0.0 || r.seconds < r.budget_seconds;
        const bool ok = r.passed && in_budget;
        all = all && ok;
        std::printf("criterion %d: %s  %s  [%s; %.3f s", r.id, ok ? "PASS" : "FAIL", r.title.c_str(), r.summary.c_str(),
                    r.seconds);
        if (r.budget_seconds > 0.0) std::printf(" of %.0f s", r.budget_seconds);
        std::printf("]\n");
    }
    return all ? 0 : 1;
}
