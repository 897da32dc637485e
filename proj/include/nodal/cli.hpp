#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nodal::cli {

// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kUsageError = 2;

/*
 * Runs one subcommand. `args` excludes the program name. Payloads go to
 * `out` (JSON by default, CSV for scan commands with --format csv). Usage
 * problems print the help text to `err` and return kUsageError; library
 * errors print {"error": {...}} to `out` and return kDomainError.
 *
 * Subcommands: feasible, region, components, glue, check-sufficiency, dims,
 * mk-test.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace nodal::cli
