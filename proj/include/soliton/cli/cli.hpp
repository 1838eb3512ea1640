#ifndef SOLITON_CLI_CLI_HPP
#define SOLITON_CLI_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace soliton::cli {

struct RunOptions {
    /// Runs every pipeline-backed command on a deliberately broken Laplacian.
    bool corrupt_laplacian = false;
    /// Replaces SOLITON_REPORT_FORMAT when set ("text" or "json").
    std::optional<std::string> report_format;
};

/// Exit codes of `run`.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitMismatch = 2;

/// Parses `args` (without the program name), runs the command and writes the
/// report to `out`. Diagnostics for malformed invocations go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const RunOptions& opts = {});

} // namespace soliton::cli

#endif
