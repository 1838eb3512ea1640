#include "soliton/cli/verify.hpp"

#include "soliton/exactnum/parse.hpp"
#include "soliton/exactnum/roots.hpp"
#include "soliton/spectra/spectra.hpp"
#include "soliton/spherepoly/random.hpp"
#include "soliton/varengine/oracle.hpp"
#include "soliton/varengine/reference_forms.hpp"

#include <random>

namespace soliton::cli {

using exactnum::operator""_qn;
using exactnum::Rat;
using exactnum::RatFunc;
namespace ve = varengine;
namespace ref = varengine::reference_forms;

namespace {

class Check {
public:
    Check(int id, std::string name) : r_{id, std::move(name), CheckStatus::Pass, {}} {}

    void expect(bool ok, const std::string& what) {
        r_.details.push_back(std::string(ok ? "ok: " : "FAIL: ") + what);
        if (!ok) r_.status = CheckStatus::Fail;
    }
    template <typename T>
    void same(const T& got, const T& want, const std::string& what) {
        expect(got == want, what);
    }
    void note(const std::string& s) { r_.details.push_back(s); }
    CheckResult done() { return std::move(r_); }

private:
    CheckResult r_;
};

bool prefix_equal(const ve::AnsatzFn& a, const ve::AnsatzFn& b, std::size_t k) {
    for (std::size_t i = 0; i < k; ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

CheckResult check_f_ss(const ve::Pipeline& p) {
    Check c(1, "f_ss solution and residual");
    c.expect(prefix_equal(p.f_ss.value, ref::f_ss(), ve::kAnsatzDim), "f_ss equals the closed form in Q(n)");
    c.expect(ve::verify_back_substitution(p.f_ss.value, p.f_ss.op, p.f_ss.rhs), "(1+M) f_ss - rhs = 0");
    return c.done();
}

CheckResult check_u(const ve::Pipeline& p) {
    Check c(2, "u_tilde and u solutions and residual");
    c.expect(prefix_equal(p.u.u_tilde.value, ref::u_tilde(), ve::kAnsatzDim), "u_tilde equals the closed form");
    c.expect(prefix_equal(p.u.u, ref::u(), ve::kAnsatzDim), "u equals the closed form");
    c.expect(ve::verify_back_substitution(p.u.u_tilde.value, p.u.u_tilde.op, p.u.u_tilde.rhs),
             "(n+(n-1)M)(2+M) u_tilde - rhs = 0");
    return c.done();
}

CheckResult check_h_b(const ve::Pipeline& p) {
    Check c(3, "h_b solution and residual");
    for (std::size_t i = 0; i < ve::kAnsatzDim; ++i)
        c.expect(p.h_b.value[i] == ref::h_b()[i],
                 "h_b[" + ve::basis_names()[i] + "]: pipeline " + p.h_b.value[i].str() + ", closed form " +
                     ref::h_b()[i].str());
    c.expect(ve::verify_back_substitution(p.h_b.value, p.h_b.op, p.h_b.rhs), "pipeline h_b residual is zero");
    c.expect(ve::verify_back_substitution(ref::h_b(), p.h_b.op, p.h_b.rhs), "closed-form h_b residual is zero");
    return c.done();
}

CheckResult check_tau() {
    Check c(4, "tau_ss coefficient");
    c.same(ve::tau_ss(), "(n-2)/(6n)"_qn, "tau_ss = (n-2)/(6n)");
    c.same(ve::tau_ss().eval(Rat(4)), Rat(1, 12), "tau_ss at n = 4 is 1/12");
    return c.done();
}

CheckResult check_sigma2(const ve::Pipeline& p) {
    Check c(5, "sigma_2^2 consistency suite");
    auto cmp = [&](const RatFunc& got, const RatFunc& want, const std::string& what) {
        c.expect(got == want, what + ": pipeline " + got.str() + ", closed form " + want.str());
    };
    cmp(p.conformal.c22, ref::cross_conformal().c22, "cross_conformal sigma_2^2");
    cmp(p.tt.c22, ref::cross_tt().c22, "cross_tt sigma_2^2");
    cmp(p.third.c22, ref::third_variation().c22, "third_variation sigma_2^2");
    cmp(p.total.c22, ref::Q2(), "assembled Q2");
    c.expect(p.total.c22.eval(Rat(4)) == Rat(-311, 126),
             "assembled Q2 at n = 4 is -311/126 (got " + p.total.c22.eval(Rat(4)).str() + ")");
    return c.done();
}

CheckResult check_verdicts(const ve::ObstructionReport& r2, const ve::ObstructionReport& r1) {
    Check c(6, "obstruction verdicts");
    c.expect(r2.verdicts.n4_sum_negative,
             "pipeline Q4 t + Q2 < 0 at n = 4 for t in [1/2, 1] (worst " + r2.pipeline_worst_at_4.str() + ")");
    const Rat ref_sum = ref::Q4().eval(Rat(4)) + ref::Q2().eval(Rat(4));
    c.expect(ref_sum == Rat(-619, 1050), "closed-form Q4 + Q2 at n = 4 is -619/1050 (got " + ref_sum.str() + ")");
    c.expect(r1.verdicts.b1_numerator_integer_root_free, "pipeline B = 1 numerator has no integer roots");
    c.expect(r1.reference_verdicts.b1_numerator_integer_root_free,
             "closed-form B = 1 numerator has no integer roots");
    return c.done();
}

CheckResult check_sigma4(const ve::ObstructionReport& r) {
    Check c(7, "sigma_4 adjudication ledger");
    const ve::Finding* third = r.finding("sigma4.third_variation");
    const ve::Finding* q4 = r.finding("sigma4.Q4");
    c.expect(third != nullptr && q4 != nullptr, "sigma_4 findings are present");
    if (!third || !q4) return c.done();
    auto value = [](const ve::Finding& f, const std::string& name) -> std::optional<RatFunc> {
        for (const auto& v : f.values)
            if (v.name == name) return v.value;
        return std::nullopt;
    };
    const auto implied = value(*third, "implied_by_reference_Q4@4");
    const auto printed = value(*third, "reference.third_variation.sigma4@4");
    const auto pipeline = value(*third, "pipeline.third_variation.sigma4@4");
    c.expect(implied && *implied == RatFunc(Rat(-1, 9)), "implied third-variation sigma_4 at n = 4 is -1/9");
    c.expect(printed && *printed == RatFunc(Rat(6164, 900)), "closed-form third-variation sigma_4 at n = 4 is 6164/900");
    c.expect(pipeline.has_value(), "pipeline third-variation sigma_4 is reported");
    c.note(third->statement);
    c.note(q4->statement);

    bool q4_listed = false;
    bool third_listed = false;
    for (const auto& d : r.discrepancies) {
        q4_listed = q4_listed || d.quantity == "Q4";
        third_listed = third_listed || d.quantity == "third_variation.sigma4";
    }
    c.expect(q4_listed == !(r.pipeline_Q4 == r.Q4), "Q4 appears in the discrepancy ledger iff it differs");
    c.expect(third_listed == !(pipeline && printed && *pipeline == *printed),
             "third_variation.sigma4 appears in the ledger iff it differs");
    return c.done();
}

CheckResult check_spectra() {
    namespace sp = spectra;
    Check c(8, "sphere spectra and kernel dimensions");
    auto values = [](sp::Family f, long kmax) {
        std::vector<Rat> v;
        for (long k = sp::family_floor(f); k <= kmax; ++k) v.push_back(sp::sphere_eigenvalue(f, k, 2));
        return v;
    };
    c.same(values(sp::Family::Lambda0, 2), std::vector<Rat>{0, 2, 6}, "lambda0 on S^2 starts 0, 2, 6");
    c.same(values(sp::Family::Lambda1, 2), std::vector<Rat>{2, 6}, "lambda1 on S^2 starts 2, 6");
    c.same(values(sp::Family::Lambda2, 2), std::vector<Rat>{8}, "lambda2 on S^2 starts 8");
    c.same(sp::sphere_eigenvalue_symbolic(sp::Family::Lambda2, 2), "4n/(n-1)"_qn, "lambda2 at k = 2 is 4n/(n-1)");

    auto descriptor = [](sp::ManifoldKind kind, long m, long n) {
        sp::ManifoldDescriptor d;
        d.kind = kind;
        d.m = m;
        d.n = n;
        return d;
    };
    const auto s2s2 = sp::kernel_dims(descriptor(sp::ManifoldKind::S2xS2, 2, 2));
    c.expect(s2s2.dim_conformal_kernel == 6 && s2s2.dim_tt_kernel == 0, "S^2 x S^2 kernel dims (6, 0)");
    sp::ManifoldDescriptor s2n = descriptor(sp::ManifoldKind::S2xN, 2, 2);
    s2n.asserted_dagger = true;
    const auto k2n = sp::kernel_dims(s2n);
    c.expect(k2n.dim_conformal_kernel == 3 && k2n.dim_tt_kernel == 0, "S^2 x N kernel dims (3, 0)");
    const auto s3s3 = sp::kernel_dims(descriptor(sp::ManifoldKind::SmxSn, 3, 3));
    c.expect(s3s3.dim_conformal_kernel == 0 && s3s3.dim_tt_kernel == 0, "S^3 x S^3 kernel dims (0, 0)");
    return c.done();
}

CheckResult check_oracle(const ve::Pipeline& p) {
    Check c(9, "polynomial oracle on two 2-spheres at n = 4");
    for (const auto& alpha : {std::vector<Rat>{1, 1}, std::vector<Rat>{2, 3}}) {
        const ve::OracleReport r = ve::oracle_check(alpha, p);
        const std::string tag = "alpha=(" + alpha[0].str() + "," + alpha[1].str() + ")";
        for (const auto& chk : r.checks)
            if (!chk.passed) c.expect(false, tag + " " + chk.name + (chk.detail.empty() ? "" : ": " + chk.detail));
        c.expect(r.all_passed(), tag + ": " + std::to_string(r.checks.size() - r.failed()) + "/" +
                                     std::to_string(r.checks.size()) + " exact identities hold");
    }
    return c.done();
}

CheckResult check_properties() {
    namespace sph = spherepoly;
    Check c(10, "sphere polynomial property suites");
    std::mt19937_64 rng(20240601);
    int bad_repr = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int factors = 1 + trial % 2;
        const sph::RawPoly p = sph::random_raw_poly(rng, factors, 4, 2);
        const sph::RawPoly q = sph::random_raw_poly(rng, factors, 3, 2);
        const sph::RawPoly other = sph::random_raw_poly(rng, factors, 3, 2);
        const int b = trial % factors;
        const sph::RawPoly shifted = p + sph::sphere_relation(factors, b) * q;
        bool ok = true;
        for (int f = 0; f < factors; ++f) ok = ok && sph::laplacian_factor(p, f) == sph::laplacian_factor(shifted, f);
        ok = ok && sph::grad_inner(p, other) == sph::grad_inner(shifted, other);
        ok = ok && sph::canonicalize(p) == sph::canonicalize(shifted);
        if (!ok) ++bad_repr;
    }
    c.expect(bad_repr == 0, "representative independence for 100 random q (" + std::to_string(bad_repr) + " failures)");

    int bad_id = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const sph::KernelVector kv{{sph::random_rat(rng), sph::random_rat(rng)}, {}};
        const sph::SpherePoly v = sph::instantiate_kernel(kv);
        sph::SpherePoly sv(2);
        for (int b = 0; b < 2; ++b) sv = sv + sph::kernel_component(kv, b) * sph::kernel_component(kv, b);
        const sph::SpherePoly s2 = sph::SpherePoly::constant(2, kv.sigma(2));
        const bool ok = sph::grad_inner(v, v) == s2 - sv &&
                        sph::laplacian(v * v) == Rat(2) * s2 - Rat(4) * (v * v) - Rat(2) * sv;
        if (!ok) ++bad_id;
    }
    c.expect(bad_id == 0, "|dv|^2 and Lap(v^2) identities for 20 random alpha (" + std::to_string(bad_id) + " failures)");
    return c.done();
}

CheckResult skipped(int id, const std::string& name) {
    return {id, name, CheckStatus::Skipped, {"skipped (--skip-oracle)"}};
}

} // namespace

std::string to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
    }
    return "?";
}

bool VerifyReport::any_failed() const {
    for (const auto& c : checks)
        if (c.status == CheckStatus::Fail) return true;
    return false;
}

ve::LaplacianMatrices corrupted_laplacian_matrices() {
    ve::LaplacianMatrices lm = ve::laplacian_matrices();
    lm.M(0, 0) = Rat(-5);
    return lm;
}

VerifyReport verify_all(const VerifyOptions& opts) {
    const ve::Pipeline p =
        ve::Pipeline::run(opts.corrupt_laplacian ? corrupted_laplacian_matrices() : ve::laplacian_matrices());
    VerifyReport r;
    r.obstruction_b2 = ve::obstruction(2, p);
    const ve::ObstructionReport b1 = ve::obstruction(1, p);
    r.checks.push_back(check_f_ss(p));
    r.checks.push_back(check_u(p));
    r.checks.push_back(check_h_b(p));
    r.checks.push_back(check_tau());
    r.checks.push_back(check_sigma2(p));
    r.checks.push_back(check_verdicts(r.obstruction_b2, b1));
    r.checks.push_back(check_sigma4(r.obstruction_b2));
    r.checks.push_back(check_spectra());
    if (opts.skip_oracle) {
        r.checks.push_back(skipped(9, "polynomial oracle on two 2-spheres at n = 4"));
        r.checks.push_back(skipped(10, "sphere polynomial property suites"));
    } else {
        r.checks.push_back(check_oracle(p));
        r.checks.push_back(check_properties());
    }
    return r;
}

} // namespace soliton::cli
