/*
 * Copyright (c) 2026, The hbeq authors
 *
 * SPDX-License-Identifier: MIT
 */
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hbeq::cli {

/// Process exit codes.
enum ExitCode : int {
    kEquivalent    = 0, ///< verdict "equivalent", or a non-check command succeeded
    kNotEquivalent = 1, ///< verdict "not equivalent" with a validated counterexample
    kNoVerdict     = 2, ///< usage, input or internal error
};

/// Runs the command line `args` (args[0] is the program name) and returns
/// the exit code. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hbeq::cli
