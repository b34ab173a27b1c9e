#pragma once

#include "fieldsym/cli/config.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace fieldsym::cli {

inline constexpr const char* kSchemaVersion = "1";

enum ExitCode : int { ok = 0, config_error = 1, verification_failure = 2 };

struct CommandOutcome {
    Json document;
    int exit_code = ExitCode::ok;
};

/// Commands accepted by execute() and the executable.
const std::vector<std::string>& command_names();

/// Runs one command on a parsed configuration. Throws ConfigError on bad input; verification
/// failures are reported through exit_code with the document still filled in.
CommandOutcome execute(const std::string& command, const Json& config);

/// Entry point of the executable; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fieldsym::cli
