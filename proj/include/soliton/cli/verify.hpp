#ifndef SOLITON_CLI_VERIFY_HPP
#define SOLITON_CLI_VERIFY_HPP

#include "soliton/varengine/obstruction.hpp"

#include <string>
#include <vector>

namespace soliton::cli {

enum class CheckStatus { Pass, Fail, Skipped };

std::string to_string(CheckStatus s);

struct CheckResult {
    int id = 0;
    std::string name;
    CheckStatus status = CheckStatus::Fail;
    std::vector<std::string> details;
};

struct VerifyOptions {
    bool skip_oracle = false;
    /// Fault injection for tests: perturbs one entry of the total Laplacian matrix.
    bool corrupt_laplacian = false;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    varengine::ObstructionReport obstruction_b2;
    bool any_failed() const;
};

/// Matrices with one deliberately wrong entry.
varengine::LaplacianMatrices corrupted_laplacian_matrices();

/// Runs the ten acceptance checks in order. Checks 9 and 10 need the
/// polynomial oracle and are skipped with `skip_oracle`.
VerifyReport verify_all(const VerifyOptions& opts = {});

} // namespace soliton::cli

#endif
