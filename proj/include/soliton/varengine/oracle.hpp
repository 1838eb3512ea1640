#ifndef SOLITON_VARENGINE_ORACLE_HPP
#define SOLITON_VARENGINE_ORACLE_HPP

#include "soliton/spherepoly/sphere_poly.hpp"
#include "soliton/varengine/obstruction.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace soliton::varengine {

/// Concrete realization of an ansatz function on (S^2)^B for factor index b,
/// with the dimension fixed to `n`.
spherepoly::SpherePoly instantiate(const AnsatzFn& f, const spherepoly::KernelVector& kv, int b, const Rat& n);

struct OracleCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct OracleReport {
    std::vector<Rat> alpha;
    Rat n;
    bool degenerate = false;
    std::string notice;
    std::vector<OracleCheck> checks;
    /// Facts the oracle measured that are not pass/fail checks.
    std::vector<std::string> observations;

    bool all_passed() const;
    std::size_t failed() const;
};

/// Random non-zero pair of small rationals, reproducible from `seed`.
std::vector<Rat> random_alphas(std::uint64_t seed);

/// Instantiates the pipeline on two 2-spheres with n = 4 and checks matrices,
/// moments, defining equations, integrals and gauge invariance as exact
/// polynomial identities. Throws ConfigError unless two alphas are given.
OracleReport oracle_check(const std::vector<Rat>& alphas, const Pipeline& p = Pipeline::run());

} // namespace soliton::varengine

#endif
