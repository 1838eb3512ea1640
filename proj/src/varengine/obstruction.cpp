#include "soliton/varengine/obstruction.hpp"

#include "soliton/errors.hpp"
#include "soliton/exactnum/roots.hpp"
#include "soliton/varengine/reference_forms.hpp"

#include <algorithm>

namespace soliton::varengine {

namespace ref = reference_forms;

namespace {

const Rat kFour(4);

void compare(std::vector<Discrepancy>& out, const std::string& name, const RatFunc& reference,
             const RatFunc& pipeline) {
    if (!(reference == pipeline)) out.push_back({name, reference, pipeline});
}

void compare(std::vector<Discrepancy>& out, const std::string& name, const AnsatzFn& reference,
             const AnsatzFn& pipeline, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i)
        compare(out, name + "[" + basis_names()[i] + "]", reference[i], pipeline[i]);
}

void compare(std::vector<Discrepancy>& out, const std::string& name, const SigmaQuad& reference,
             const SigmaQuad& pipeline) {
    compare(out, name + ".sigma2^2", reference.c22, pipeline.c22);
    compare(out, name + ".sigma4", reference.c4, pipeline.c4);
}

Rat worst_at_4(const RatFunc& q4, const RatFunc& q2, int B) {
    const Rat a = q4.eval(kFour);
    const Rat b = q2.eval(kFour);
    const Rat lo = a * Rat(1, B) + b;
    const Rat hi = a + b;
    return std::max(lo, hi);
}

std::vector<exactnum::Integer> b1_roots(const RatFunc& sum) { return exactnum::integer_roots(sum.num()); }

std::vector<Finding> adjudicate(const Pipeline& p, int B) {
    std::vector<Finding> out;
    const SigmaQuad rc = ref::cross_conformal();
    const SigmaQuad rt = ref::cross_tt();
    const SigmaQuad rh = ref::third_variation();
    const RatFunc six(6);

    // The third-variation sigma_4 coefficient forced by the reference total Q4.
    const RatFunc implied_third4 = ref::Q4() - six * (rc.c4 + rt.c4);
    {
        Finding f;
        f.topic = "sigma4.third_variation";
        const bool match_implied = p.third.c4 == implied_third4;
        const bool match_printed = p.third.c4 == rh.c4;
        f.holds = match_implied && !match_printed;
        f.statement = std::string("pipeline third-variation sigma_4 coefficient ") +
                      (match_implied ? "equals" : "differs from") +
                      " the value implied by the reference Q4 and " +
                      (match_printed ? "equals" : "differs from") +
                      " the reference third-variation coefficient";
        f.values = {{"reference.third_variation.sigma4", rh.c4},
                    {"implied_by_reference_Q4", implied_third4},
                    {"pipeline.third_variation.sigma4", p.third.c4},
                    {"reference_minus_implied", rh.c4 - implied_third4},
                    {"reference.third_variation.sigma4@4", RatFunc(rh.c4.eval(kFour))},
                    {"implied_by_reference_Q4@4", RatFunc(implied_third4.eval(kFour))},
                    {"pipeline.third_variation.sigma4@4", RatFunc(p.third.c4.eval(kFour))}};
        out.push_back(std::move(f));
    }
    {
        Finding f;
        f.topic = "sigma4.Q4";
        const RatFunc assembled = rh.c4 + six * (rc.c4 + rt.c4);
        const bool pipe_matches_ref = p.total.c4 == ref::Q4();
        const bool pipe_assembled = p.total.c4 == assembled;
        const bool refs_agree = assembled == ref::Q4();
        f.holds = !refs_agree;
        f.statement = std::string("reference Q4 ") + (refs_agree ? "agrees" : "disagrees") +
                      " with the sum of the reference sigma_4 components; pipeline Q4 " +
                      (pipe_matches_ref ? "matches" : "does not match") + " reference Q4 and " +
                      (pipe_assembled ? "matches" : "does not match") + " the assembled components";
        f.values = {{"reference.Q4", ref::Q4()},
                    {"assembled_reference_components", assembled},
                    {"pipeline.Q4", p.total.c4},
                    {"reference.Q4@4", RatFunc(ref::Q4().eval(kFour))},
                    {"assembled_reference_components@4", RatFunc(assembled.eval(kFour))},
                    {"pipeline.Q4@4", RatFunc(p.total.c4.eval(kFour))}};
        out.push_back(std::move(f));
    }
    {
        Finding f;
        f.topic = "sigma4.tt_source";
        const RatFunc pipe_without_tt = p.third.c4 + six * (p.conformal.c4 + rt.c4);
        f.holds = p.conformal.c4 == rc.c4 && pipe_without_tt == ref::Q4();
        f.statement = std::string("with the reference tt sigma_4 coefficient substituted, the pipeline Q4 ") +
                      (pipe_without_tt == ref::Q4() ? "reproduces" : "does not reproduce") +
                      " the reference Q4; the remaining Q4 gap is carried by cross_tt";
        f.values = {{"pipeline.cross_tt.sigma4", p.tt.c4},
                    {"reference.cross_tt.sigma4", rt.c4},
                    {"pipeline_with_reference_tt.Q4", pipe_without_tt}};
        out.push_back(std::move(f));
    }
    {
        Finding f;
        f.topic = "sigma2.assembly";
        const RatFunc assembled = rh.c22 + six * (rc.c22 + rt.c22);
        f.holds = assembled == ref::Q2();
        f.statement = std::string("reference sigma_2^2 components (corrected tt cubic) ") +
                      (f.holds ? "sum to" : "do not sum to") + " the reference Q2";
        f.values = {{"assembled_reference_components", assembled},
                    {"reference.Q2", ref::Q2()},
                    {"assembled_reference_components@4", RatFunc(assembled.eval(kFour))},
                    {"pipeline.Q2", p.total.c22},
                    {"pipeline.Q2@4", RatFunc(p.total.c22.eval(kFour))}};
        out.push_back(std::move(f));
    }
    {
        Finding f;
        f.topic = "closed_form.values_at_4";
        const Rat q4 = ref::Q4().eval(kFour);
        const Rat q2 = ref::Q2().eval(kFour);
        f.holds = q4 == ref::Q4_at_4() && q2 == ref::Q2_at_4() && q4 + q2 == ref::sum_at_4();
        f.statement = std::string("reference Q4 and Q2 forms ") + (f.holds ? "reproduce" : "do not reproduce") +
                      " the stated n = 4 values and their sum";
        f.values = {{"reference.Q4@4", RatFunc(q4)},
                    {"reference.Q2@4", RatFunc(q2)},
                    {"reference.sum@4", RatFunc(q4 + q2)},
                    {"stated.sum@4", RatFunc(ref::sum_at_4())}};
        out.push_back(std::move(f));
    }
    {
        Finding f;
        f.topic = "h_b.defining_equation";
        const AnsatzFn residual = apply(p.h_b.op, ref::h_b()) - p.h_b.rhs;
        f.holds = residual.is_zero();
        f.statement = std::string("the reference h_b vector ") + (f.holds ? "satisfies" : "does not satisfy") +
                      " its defining equation; pipeline h_b " +
                      (verify_back_substitution(p.h_b.value, p.h_b.op, p.h_b.rhs) ? "satisfies" : "does not satisfy") +
                      " it";
        for (std::size_t i = 0; i < kAnsatzDim; ++i)
            if (!residual[i].is_zero()) f.values.push_back({"reference_residual[" + basis_names()[i] + "]", residual[i]});
        out.push_back(std::move(f));
    }
    {
        Finding f;
        f.topic = "h_b.trace";
        const AnsatzFn pipe = sum_over_factors(p.h_b.value, 2);
        const AnsatzFn refr = sum_over_factors(ref::h_b(), 2);
        const auto pv = pipe.eval(kFour);
        const auto rv = refr.eval(kFour);
        const bool pipe_zero = pv[V2].is_zero() && pv[SV].is_zero() && pv[SIGMA2].is_zero();
        const bool ref_zero = rv[V2].is_zero() && rv[SV].is_zero() && rv[SIGMA2].is_zero();
        f.holds = pipe_zero;
        f.statement = std::string("on two 2-spheres (n = 4) the trace sum_b h_b of the pipeline solution ") +
                      (pipe_zero ? "vanishes" : "does not vanish") + "; for the reference vector it " +
                      (ref_zero ? "vanishes" : "does not vanish");
        for (std::size_t i = 0; i < 3; ++i) {
            f.values.push_back({"pipeline.trace@4[" + basis_names()[i] + "]", RatFunc(pv[i])});
            f.values.push_back({"reference.trace@4[" + basis_names()[i] + "]", RatFunc(rv[i])});
        }
        out.push_back(std::move(f));
    }
    {
        Finding f;
        f.topic = "verdict.range";
        f.holds = true;
        f.statement = "the n = 4 verdict checks Q4 t + Q2 at both ends of t = sigma_4/sigma_2^2 in [1/B, 1], B = " +
                      std::to_string(B);
        out.push_back(std::move(f));
    }
    return out;
}

} // namespace

Pipeline Pipeline::run(const LaplacianMatrices& lm) {
    Pipeline p;
    p.matrices = lm;
    p.f_ss = solve_f_ss(lm);
    p.u = solve_u_tilde(lm);
    p.h_b = solve_h_b(lm);
    p.conformal = cross_conformal(p.u.u, p.u.u_tilde.value);
    p.tt = cross_tt(p.h_b.value);
    p.third = third_variation(p.f_ss.value);
    p.total = p.third + RatFunc(6) * (p.conformal + p.tt);
    return p;
}

AnsatzFn sum_over_factors(const AnsatzFn& f, int B) {
    AnsatzFn r;
    r[V2] = RatFunc(B) * f[V2] + f[VVB];
    r[SV] = RatFunc(B) * f[SV] + f[VB2];
    r[SIGMA2] = RatFunc(B) * f[SIGMA2] + f[ALPHAB2];
    return r;
}

std::vector<Discrepancy> compare_with_reference(const Pipeline& p) {
    std::vector<Discrepancy> out;
    compare(out, "f_ss", ref::f_ss(), p.f_ss.value, kAnsatzDim);
    compare(out, "u_tilde", ref::u_tilde(), p.u.u_tilde.value, kAnsatzDim);
    compare(out, "u", ref::u(), p.u.u, kAnsatzDim);
    compare(out, "h_b", ref::h_b(), p.h_b.value, kAnsatzDim);
    compare(out, "cross_conformal", ref::cross_conformal(), p.conformal);
    compare(out, "cross_tt", ref::cross_tt(), p.tt);
    compare(out, "third_variation", ref::third_variation(), p.third);
    compare(out, "Q4", ref::Q4(), p.total.c4);
    compare(out, "Q2", ref::Q2(), p.total.c22);
    return out;
}

bool ObstructionReport::certified() const {
    return B == 1 ? verdicts.b1_numerator_integer_root_free : verdicts.n4_sum_negative;
}

const Finding* ObstructionReport::finding(const std::string& topic) const {
    for (const auto& f : findings)
        if (f.topic == topic) return &f;
    return nullptr;
}

ObstructionReport obstruction(int B, const Pipeline& p) {
    if (B != 1 && B != 2) throw DomainError("the number of 2-sphere factors must be 1 or 2");
    ObstructionReport r;
    r.B = B;
    r.Q4 = ref::Q4();
    r.Q2 = ref::Q2();
    r.pipeline_Q4 = p.total.c4;
    r.pipeline_Q2 = p.total.c22;

    r.pipeline_worst_at_4 = worst_at_4(r.pipeline_Q4, r.pipeline_Q2, B);
    r.verdicts.n4_sum_negative = r.pipeline_worst_at_4.sign() < 0;
    const RatFunc pipe_sum = r.pipeline_Q4 + r.pipeline_Q2;
    r.pipeline_b1_numerator = pipe_sum.num();
    r.pipeline_b1_roots = b1_roots(pipe_sum);
    r.verdicts.b1_numerator_integer_root_free = r.pipeline_b1_roots.empty();

    r.reference_verdicts.n4_sum_negative = worst_at_4(r.Q4, r.Q2, B).sign() < 0;
    r.reference_b1_roots = exactnum::integer_roots(ref::b1_numerator());
    r.reference_verdicts.b1_numerator_integer_root_free = r.reference_b1_roots.empty();

    r.discrepancies = compare_with_reference(p);
    r.findings = adjudicate(p, B);
    return r;
}

} // namespace soliton::varengine
