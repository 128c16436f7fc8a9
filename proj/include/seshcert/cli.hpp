#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "seshcert/report.hpp"

namespace seshcert {

/// Exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parses `args` (without the program name). Throws UsageError.
RunConfig parse_args(const std::vector<std::string>& args);

/// Executes a parsed config, writing artifacts to `out` (or config.output_path)
/// and diagnostics to `err`. Returns the exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run, mapping usage and argument errors to kExitUsage.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace seshcert
