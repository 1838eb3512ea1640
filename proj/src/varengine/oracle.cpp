#include "soliton/varengine/oracle.hpp"

#include "soliton/errors.hpp"
#include "soliton/varengine/reference_forms.hpp"

#include <random>

namespace soliton::varengine {

using spherepoly::Axis;
using spherepoly::grad_inner;
using spherepoly::KernelVector;
using spherepoly::laplacian;
using spherepoly::laplacian_factor;
using spherepoly::mean_integral;
using spherepoly::SpherePoly;

namespace {

constexpr int kFactors = 2;

SpherePoly konst(const Rat& c) { return SpherePoly::constant(kFactors, c); }

SpherePoly basis_poly(std::size_t i, const KernelVector& kv, int b) {
    const SpherePoly v = instantiate_kernel(kv);
    const SpherePoly vb = kernel_component(kv, b);
    switch (i) {
    case V2: return v * v;
    case SV: {
        SpherePoly s(kFactors);
        for (int c = 0; c < kFactors; ++c) s = s + kernel_component(kv, c) * kernel_component(kv, c);
        return s;
    }
    case SIGMA2: return konst(kv.sigma(2));
    case VVB: return v * vb;
    case VB2: return vb * vb;
    case ALPHAB2: return konst(kv.alpha[static_cast<std::size_t>(b)] * kv.alpha[static_cast<std::size_t>(b)]);
    default: break;
    }
    throw std::out_of_range("ansatz basis index");
}

class Checker {
public:
    explicit Checker(OracleReport& r) : r_(r) {}
    void operator()(std::string name, bool ok, std::string detail = {}) {
        r_.checks.push_back({std::move(name), ok, std::move(detail)});
    }
    void equal(std::string name, const SpherePoly& lhs, const SpherePoly& rhs) {
        const bool ok = lhs == rhs;
        (*this)(std::move(name), ok, ok ? std::string() : "difference: " + (lhs - rhs).str());
    }
    void equal(std::string name, const Rat& lhs, const Rat& rhs) {
        const bool ok = lhs == rhs;
        (*this)(std::move(name), ok, "oracle " + lhs.str() + ", engine " + rhs.str());
    }

private:
    OracleReport& r_;
};

struct Gauge {
    std::string label;
    SpherePoly phi[kFactors];
};

std::vector<Gauge> gauges() {
    auto c = [](int b, Axis a) { return SpherePoly::coord(kFactors, b, a); };
    return {
        {"phi=(y1, z2)", {c(0, Axis::Y), c(1, Axis::Z)}},
        {"phi=(x1+x2, 3y1-z2)", {c(0, Axis::X) + c(1, Axis::X), Rat(3) * c(0, Axis::Y) - c(1, Axis::Z)}},
        {"phi=(2z2, -x1+5y2)", {Rat(2) * c(1, Axis::Z), Rat(-1) * c(0, Axis::X) + Rat(5) * c(1, Axis::Y)}},
    };
}

} // namespace

SpherePoly instantiate(const AnsatzFn& f, const KernelVector& kv, int b, const Rat& n) {
    SpherePoly r(kv.factors());
    for (std::size_t i = 0; i < kAnsatzDim; ++i) {
        if (f[i].is_zero()) continue;
        r = r + f[i].eval(n) * basis_poly(i, kv, b);
    }
    return r;
}

bool OracleReport::all_passed() const { return failed() == 0; }

std::size_t OracleReport::failed() const {
    std::size_t k = 0;
    for (const auto& c : checks)
        if (!c.passed) ++k;
    return k;
}

std::vector<Rat> random_alphas(std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    std::vector<Rat> a;
    do {
        a = {Rat(num(gen), den(gen)), Rat(num(gen), den(gen))};
    } while (a[0].is_zero() && a[1].is_zero());
    return a;
}

OracleReport oracle_check(const std::vector<Rat>& alphas, const Pipeline& p) {
    if (alphas.size() != kFactors)
        throw ConfigError("the oracle runs on two 2-spheres only; got " + std::to_string(alphas.size()) +
                          " alpha value(s)");
    OracleReport r;
    r.alpha = alphas;
    r.n = Rat(4);
    const Rat& n = r.n;
    Checker check(r);

    const KernelVector kv{alphas, {}};
    const SpherePoly v = instantiate_kernel(kv);
    const Rat s2 = kv.sigma(2);
    const Rat s4 = kv.sigma(4);
    if (kv.is_trivial()) {
        r.degenerate = true;
        r.notice = "degenerate input: alpha = (0, 0) gives v = 0, every integral is 0 and the checks are vacuous";
    }

    const FieldMatrix M = p.matrices.M.cast<RatFunc>();
    const FieldMatrix Mb = p.matrices.Mb.cast<RatFunc>();

    // Laplacian matrices against the polynomial Laplacians of each basis function.
    for (std::size_t j = 0; j < kAnsatzDim; ++j) {
        const AnsatzFn ej = AnsatzFn::basis(j);
        bool ok_total = true;
        bool ok_factor = true;
        for (int b = 0; b < kFactors; ++b) {
            const SpherePoly f = instantiate(ej, kv, b, n);
            ok_total = ok_total && laplacian(f) == instantiate(apply(M, ej), kv, b, n);
            ok_factor = ok_factor && laplacian_factor(f, b) == instantiate(apply(Mb, ej), kv, b, n);
        }
        check("matrix.M[" + basis_names()[j] + "]", ok_total);
        check("matrix.M_b[" + basis_names()[j] + "]", ok_factor);
    }

    // Moment tables.
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i; j < 3; ++j) {
            const Rat oracle = mean_integral(instantiate(AnsatzFn::basis(i), kv, 0, n) *
                                             instantiate(AnsatzFn::basis(j), kv, 0, n));
            const Rat engine =
                moment(AnsatzFn::basis(i), AnsatzFn::basis(j), MomentMode::Plain).value(n, s2, s4);
            check.equal("moment.plain[" + basis_names()[i] + "," + basis_names()[j] + "]", oracle, engine);
        }
    for (std::size_t j = 0; j < kAnsatzDim; ++j) {
        Rat oracle;
        for (int b = 0; b < kFactors; ++b)
            oracle += mean_integral(v * kernel_component(kv, b) * instantiate(AnsatzFn::basis(j), kv, b, n));
        const Rat engine =
            moment(AnsatzFn::basis(VVB), AnsatzFn::basis(j), MomentMode::SumBVvb).value(n, s2, s4);
        check.equal("moment.sum_b_vvb[" + basis_names()[j] + "]", oracle, engine);
    }

    // Closed-form spherical integrals.
    {
        const SpherePoly v1 = kernel_component(kv, 0);
        const SpherePoly v2 = kernel_component(kv, 1);
        const SpherePoly sv = basis_poly(SV, kv, 0);
        const Rat a1 = alphas[0] * alphas[0];
        const Rat a2 = alphas[1] * alphas[1];
        check.equal("integral.one", mean_integral(konst(1)), Rat(1));
        check.equal("integral.v_b^2", mean_integral(v1 * v1), a1 / Rat(3));
        check.equal("integral.v_b^4", mean_integral(v1 * v1 * v1 * v1), a1 * a1 / Rat(5));
        check.equal("integral.v_a^2*v_b^2", mean_integral(v1 * v1 * v2 * v2), a1 * a2 / Rat(9));
        check.equal("integral.v^2", mean_integral(v * v), s2 / Rat(3));
        check.equal("integral.S_v", mean_integral(sv), s2 / Rat(3));
        check.equal("integral.v^2*v_b^2", mean_integral(v * v * v1 * v1), s2 * a1 / Rat(9) + Rat(4, 45) * a1 * a1);
        check.equal("integral.v^4", mean_integral(v * v * v * v), s2 * s2 / Rat(3) - Rat(2, 15) * s4);
        check.equal("integral.S_v^2", mean_integral(sv * sv), s2 * s2 / Rat(9) + Rat(4, 45) * s4);
    }

    // Kernel identities.
    const SpherePoly dv2 = grad_inner(v, v);
    check.equal("identity.|dv|^2", dv2, konst(s2) - basis_poly(SV, kv, 0));
    check.equal("identity.Lap(v^2)", laplacian(v * v), konst(Rat(2) * s2) - Rat(4) * (v * v) - Rat(2) * basis_poly(SV, kv, 0));
    check.equal("identity.Lap(v)", laplacian(v), Rat(-2) * v);

    // Defining equations, with every right-hand side rebuilt from oracle operations.
    const Rat mean_v2 = mean_integral(v * v);
    const Rat tau = (n - Rat(2)) / (Rat(2) * n) * mean_v2;
    const SpherePoly F = instantiate(p.f_ss.value, kv, 0, n);
    const SpherePoly Ut = instantiate(p.u.u_tilde.value, kv, 0, n);
    const SpherePoly U = instantiate(p.u.u, kv, 0, n);
    {
        const SpherePoly rhs = n * (v * v) - (Rat(3) * n - Rat(2)) / Rat(4) * dv2 - konst(n * tau);
        check.equal("pde.f_ss", F + laplacian(F), rhs);
    }
    {
        const SpherePoly inner = Rat(2) * Ut + laplacian(Ut);
        const SpherePoly lhs = n * inner + (n - Rat(1)) * laplacian(inner);
        const SpherePoly rhs = konst(n * tau) + laplacian(F) - Rat(4) * (n - Rat(1)) * (v * v) +
                               (Rat(3) * n - Rat(2)) / Rat(2) * dv2;
        check.equal("pde.u_tilde", lhs, rhs);
        check.equal("pde.u", U, Ut + laplacian(Ut));
    }
    std::vector<SpherePoly> H;
    for (int b = 0; b < kFactors; ++b) {
        const SpherePoly vb = kernel_component(kv, b);
        const SpherePoly base = laplacian_factor(Ut, b) - Rat(2) * U;
        const SpherePoly rhs = Rat(2) * base + laplacian(base) + konst(Rat(2) * tau) + laplacian_factor(F, b) -
                               Rat(2) * (n - Rat(2)) * (v * vb) + (n - Rat(2)) / Rat(2) * grad_inner(vb, vb) -
                               Rat(4) * (v * v) + Rat(2) * dv2;
        const SpherePoly Hb = instantiate(p.h_b.value, kv, b, n);
        check.equal("pde.h_b[factor " + std::to_string(b + 1) + "]", Rat(2) * Hb + laplacian(Hb), rhs);
        const SpherePoly Rb = instantiate(reference_forms::h_b(), kv, b, n);
        r.observations.push_back("reference h_b on factor " + std::to_string(b + 1) + " " +
                                 (Rat(2) * Rb + laplacian(Rb) == rhs ? "satisfies" : "does not satisfy") +
                                 " the defining equation");
        H.push_back(Hb);
    }
    {
        SpherePoly tr = H[0] + H[1];
        r.observations.push_back("sum_b h_b of the pipeline solution: " + tr.str());
        r.observations.push_back("mean of u: " + mean_integral(U).str() + ", mean of u_tilde: " +
                                 mean_integral(Ut).str());
    }

    // Integrated quantities recomputed directly from polynomials.
    {
        const Rat n2_4 = n * n / Rat(4);
        const SpherePoly direct = n2_4 * (v * grad_inner(U, v)) - (n - Rat(1)) * (U * v * v) +
                                  (n - Rat(2)) / Rat(4) * (v * grad_inner(Ut, v)) +
                                  (n - Rat(1)) / Rat(2) * (v * v * laplacian(U));
        const SpherePoly r_st = Rat(1, 2) * (v * laplacian(Ut)) - (n - Rat(1)) / Rat(2) * (v * laplacian(U)) -
                                (n - Rat(2)) / Rat(4) * grad_inner(Ut, v) - n2_4 * grad_inner(U, v);
        const Rat oracle = mean_integral(direct) + mean_integral(v * r_st);
        check.equal("integral.cross_conformal", oracle, p.conformal.value(n, s2, s4));
    }
    auto tt_of = [&](const std::vector<SpherePoly>& hb) {
        Rat acc;
        for (int b = 0; b < kFactors; ++b)
            acc += mean_integral(v * kernel_component(kv, b) * hb[static_cast<std::size_t>(b)]);
        return -(n - Rat(2)) / Rat(4) * acc;
    };
    const Rat tt = tt_of(H);
    check.equal("integral.cross_tt", tt, p.tt.value(n, s2, s4));
    {
        const SpherePoly direct = Rat(6) * (n - Rat(1)) * (v * v * v * v) -
                                  (Rat(9) * n * n - Rat(18) * n - Rat(24)) / Rat(4) * (v * v * dv2) +
                                  Rat(3) * (n - Rat(2)) / Rat(4) * (v * grad_inner(v, F));
        const SpherePoly rhs_sss = Rat(-3) * (n - Rat(2)) * tau * v + Rat(3) * (v * laplacian(F)) -
                                   Rat(3) * (n - Rat(2)) / Rat(2) * grad_inner(v, F) -
                                   Rat(3) * (Rat(3) * n - Rat(2)) * (v * v * v) -
                                   (Rat(12) * n * n - Rat(75) * n + Rat(66)) / Rat(4) * (v * dv2);
        const Rat oracle = mean_integral(direct) + mean_integral(v * rhs_sss) +
                           Rat(3) * (n - Rat(2)) / Rat(2) * mean_v2 * mean_v2;
        check.equal("integral.third_variation", oracle, p.third.value(n, s2, s4));
    }

    // Gauge freedom in h_b.
    for (const auto& g : gauges()) {
        bool kernel = true;
        std::vector<SpherePoly> shifted_h = H;
        for (int b = 0; b < kFactors; ++b) {
            kernel = kernel && laplacian(g.phi[b]) == Rat(-2) * g.phi[b];
            shifted_h[static_cast<std::size_t>(b)] = H[static_cast<std::size_t>(b)] + g.phi[b];
        }
        const Rat shifted_tt = tt_of(shifted_h);
        check("gauge.cross_tt[" + g.label + "]", kernel && shifted_tt == tt,
              std::string(kernel ? "" : "gauge term not in ker(Lap+2); ") + "cross_tt " + shifted_tt.str() +
                  " vs " + tt.str());
    }
    return r;
}

} // namespace soliton::varengine
