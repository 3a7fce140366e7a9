// Part of the nplc project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "json_io.hpp"

#include <string>

namespace nplc {

inline constexpr const char* kToolName = "nplc";
inline constexpr const char* kToolVersion = "0.1.0";

/// status 0: success / all checks passed
/// status 1: a mathematical verification failed (never silently swallowed)
/// status 2: input or contract error
struct CommandResult {
    int status = 0;
    Json report;
};

CommandResult run_newton(const Json& config);
CommandResult run_resolve(const Json& config);
CommandResult run_check(const Json& config);
CommandResult run_extend(const Json& config);

/// Dispatch by command name ("newton", "resolve", "check", "extend").
CommandResult run_command(const std::string& name, const Json& config);

}  // namespace nplc
