#ifndef SOLITON_VARENGINE_OBSTRUCTION_HPP
#define SOLITON_VARENGINE_OBSTRUCTION_HPP

#include "soliton/exactnum/poly.hpp"
#include "soliton/varengine/integrals.hpp"

#include <optional>
#include <string>
#include <vector>

namespace soliton::varengine {

/// Every stage of the computation, derived from the defining equations only.
struct Pipeline {
    LaplacianMatrices matrices;
    Solution f_ss;
    UTilde u;
    Solution h_b;
    SigmaQuad conformal;
    SigmaQuad tt;
    SigmaQuad third;
    /// third + 6 (conformal + tt)
    SigmaQuad total;

    static Pipeline run(const LaplacianMatrices& lm = laplacian_matrices());
};

/// Sum over the B sphere factors of a factor-indexed ansatz function, as a
/// global function (v^2, S_v, sigma_2).
AnsatzFn sum_over_factors(const AnsatzFn& f, int B);

struct Discrepancy {
    std::string quantity;
    RatFunc reference;
    RatFunc pipeline;
};

/// A named exact value reported inside a finding.
struct NamedValue {
    std::string name;
    RatFunc value;
};

/// One adjudication item: exact values plus a statement whose truth the
/// engine computed (`holds`).
struct Finding {
    std::string topic;
    std::string statement;
    bool holds = false;
    std::vector<NamedValue> values;
};

struct Verdicts {
    /// At n = 4, Q4 t + Q2 < 0 over the admissible range t = sigma_4/sigma_2^2 in [1/B, 1].
    bool n4_sum_negative = false;
    /// The numerator of Q4 + Q2 (sigma_4 = sigma_2^2) has no integer roots.
    bool b1_numerator_integer_root_free = false;
};

struct ObstructionReport {
    int B = 2;
    RatFunc Q4; ///< reference form
    RatFunc Q2; ///< reference form
    RatFunc pipeline_Q4;
    RatFunc pipeline_Q2;
    Verdicts verdicts;          ///< from pipeline values
    Verdicts reference_verdicts; ///< from the reference forms, for comparison
    /// Largest value of pipeline Q4 t + Q2 at n = 4 over t in [1/B, 1].
    Rat pipeline_worst_at_4;
    exactnum::Poly pipeline_b1_numerator;
    std::vector<exactnum::Integer> pipeline_b1_roots;
    std::vector<exactnum::Integer> reference_b1_roots;
    std::vector<Discrepancy> discrepancies;
    std::vector<Finding> findings;

    /// Whether the obstruction is certified for this B from pipeline values.
    bool certified() const;
    const Finding* finding(const std::string& topic) const;
};

/// Throws DomainError unless B is 1 or 2.
ObstructionReport obstruction(int B, const Pipeline& p = Pipeline::run());

/// Quantity-by-quantity comparison of pipeline and reference forms.
std::vector<Discrepancy> compare_with_reference(const Pipeline& p);

} // namespace soliton::varengine

#endif
