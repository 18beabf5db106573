#pragma once

#include "dirackit/tools/scene.hpp"

#include <string>

namespace dirackit::tools {

enum ExitCode : int { Pass = 0, Negative = 1, InputError = 2 };

struct CommandResult {
    Json report;
    int exit_code = ExitCode::Pass;
    /// Plot data; empty when the command has none.
    std::string csv;
};

/// Scene text in, report out. Input errors become exit code 2 with a diagnostic report.
CommandResult run_validate(const std::string& scene_text, const LoadOptions& options);
CommandResult run_reduce(const std::string& scene_text, const LoadOptions& options);
CommandResult run_obstruct(const std::string& scene_text, const LoadOptions& options);
CommandResult run_area(const std::string& scene_text, const LoadOptions& options);

/// Canonical serialization: sorted keys, two-space indent, trailing newline.
std::string dump_report(const Json& report);

} // namespace dirackit::tools
