#include "soliton/varengine/integrals.hpp"

#include "soliton/errors.hpp"

namespace soliton::varengine {

namespace {

const RatFunc n_sym = RatFunc::n();

SigmaQuad sq(Rat c22, Rat c4) { return {RatFunc(c22), RatFunc(c4)}; }

// Means of products of the global basis functions (v^2, S_v, sigma_2).
SigmaQuad global_table(std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    const SigmaQuad v4 = sq(Rat(1, 3), Rat(-2, 15));
    const SigmaQuad v2sv = sq(Rat(1, 9), Rat(4, 45));
    const SigmaQuad with_sigma2 = sq(Rat(1, 3), Rat(0));
    if (i == V2 && j == V2) return v4;
    if (i == V2 && j == SV) return v2sv;
    if (i == SV && j == SV) return v2sv;
    if (j == SIGMA2 && i != SIGMA2) return with_sigma2;
    return sq(Rat(1), Rat(0));
}

// sum_b mean(v v_b * q) for a basis function q.
SigmaQuad vvb_table(std::size_t j) {
    switch (j) {
    case V2:
    case SV:
    case SIGMA2: return global_table(V2, j); // sum_b v v_b = v^2
    case VVB: return global_table(V2, SV);   // v^2 * sum_b v_b^2
    case VB2: return sq(Rat(0), Rat(1, 5));  // odd cross terms drop, leaving sum_b v_b^4
    case ALPHAB2: return sq(Rat(0), Rat(1, 3));
    default: break;
    }
    throw UnsupportedDegree("basis index out of range");
}

AnsatzFn vec3(Rat a, Rat b, Rat c) {
    AnsatzFn f;
    f[V2] = RatFunc(a);
    f[SV] = RatFunc(b);
    f[SIGMA2] = RatFunc(c);
    return f;
}

} // namespace

SigmaQuad moment(const AnsatzFn& p, const AnsatzFn& q, MomentMode mode) {
    SigmaQuad r;
    if (mode == MomentMode::Plain) {
        if (!p.is_global() || !q.is_global())
            throw UnsupportedDegree("plain moments of factor-indexed functions are not tabulated");
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                if (p[i].is_zero() || q[j].is_zero()) continue;
                r += (p[i] * q[j]) * global_table(i, j);
            }
        return r;
    }
    for (std::size_t i = 0; i < kAnsatzDim; ++i)
        if (i != VVB && !p[i].is_zero())
            throw UnsupportedDegree("summed moments need the weight to be a multiple of v*v_b");
    for (std::size_t j = 0; j < kAnsatzDim; ++j) {
        if (q[j].is_zero()) continue;
        r += (p[VVB] * q[j]) * vvb_table(j);
    }
    return r;
}

IbpReduction ibp_reduce(IbpKind kind, const AnsatzFn& phi) {
    IbpReduction r;
    switch (kind) {
    case IbpKind::VLap:
        // Every ansatz function has even degree, so v * Lap(phi) is odd.
        r.vanishes = true;
        r.rule = "mean(v Lap phi) = 2 mean(v (1 + Lap) phi); odd integrand for ansatz phi";
        break;
    case IbpKind::V2Lap:
        r.weight = vec3(-4, -2, 2);
        r.rule = "mean(v^2 Lap phi) = mean(phi (2 sigma_2 - 4 v^2 - 2 S_v))";
        break;
    case IbpKind::VGrad:
        r.weight = vec3(2, 1, -1);
        r.rule = "mean(v <d phi, dv>) = mean(phi (2 v^2 - sigma_2 + S_v))";
        break;
    }
    if (r.vanishes) return r;
    if (!phi.is_global())
        throw UnsupportedDegree("integration by parts is tabulated for global ansatz functions only");
    return r;
}

SigmaQuad int_v2(const AnsatzFn& phi) { return moment(AnsatzFn::basis(V2), phi, MomentMode::Plain); }

SigmaQuad int_v2_lap(const AnsatzFn& phi) {
    return moment(phi, ibp_reduce(IbpKind::V2Lap, phi).weight, MomentMode::Plain);
}

SigmaQuad int_v_grad(const AnsatzFn& phi) {
    return moment(phi, ibp_reduce(IbpKind::VGrad, phi).weight, MomentMode::Plain);
}

SigmaQuad cross_conformal(const AnsatzFn& u, const AnsatzFn& u_tilde) {
    const RatFunc n2_4 = n_sym * n_sym / RatFunc(4);
    const RatFunc nm1 = n_sym - RatFunc(1);
    const RatFunc nm2_4 = (n_sym - RatFunc(2)) / RatFunc(4);

    SigmaQuad direct = n2_4 * int_v_grad(u);
    direct -= nm1 * int_v2(u);
    direct += nm2_4 * int_v_grad(u_tilde);
    direct += nm1 / RatFunc(2) * int_v2_lap(u);

    // mean(v * (Lap + 1) f_st), the right-hand side of the f_st equation multiplied by v.
    SigmaQuad f_st = RatFunc(Rat(1, 2)) * int_v2_lap(u_tilde);
    f_st -= nm1 / RatFunc(2) * int_v2_lap(u);
    f_st -= nm2_4 * int_v_grad(u_tilde);
    f_st -= n2_4 * int_v_grad(u);

    return direct + f_st;
}

SigmaQuad cross_tt(const AnsatzFn& h_b) {
    const RatFunc coeff = -(n_sym - RatFunc(2)) / RatFunc(4);
    return coeff * moment(AnsatzFn::basis(VVB), h_b, MomentMode::SumBVvb);
}

SigmaQuad third_variation(const AnsatzFn& f_ss) {
    const RatFunc nm2 = n_sym - RatFunc(2);
    const AnsatzFn v2 = AnsatzFn::basis(V2);
    AnsatzFn grad_v2;
    grad_v2[SIGMA2] = 1;
    grad_v2[SV] = -1;
    const SigmaQuad v4 = int_v2(v2);
    const SigmaQuad v2_dv2 = int_v2(grad_v2);

    SigmaQuad direct = RatFunc(6) * (n_sym - RatFunc(1)) * v4;
    direct -= (RatFunc(9) * n_sym * n_sym - RatFunc(18) * n_sym - RatFunc(24)) / RatFunc(4) * v2_dv2;
    direct += RatFunc(3) * nm2 / RatFunc(4) * int_v_grad(f_ss);

    // mean(v * (1 + Lap) f_sss) from the f_sss equation; tau_sss is constant and drops out.
    const RatFunc mv2 = RatFunc(mean_v_squared());
    SigmaQuad f_sss;
    f_sss.c22 = RatFunc(-3) * nm2 * tau_ss() * mv2;
    f_sss += RatFunc(3) * int_v2_lap(f_ss);
    f_sss -= RatFunc(3) * nm2 / RatFunc(2) * int_v_grad(f_ss);
    f_sss -= RatFunc(3) * (RatFunc(3) * n_sym - RatFunc(2)) * v4;
    f_sss -= (RatFunc(12) * n_sym * n_sym - RatFunc(75) * n_sym + RatFunc(66)) / RatFunc(4) * v2_dv2;

    SigmaQuad squared;
    squared.c22 = RatFunc(3) * nm2 / RatFunc(2) * mv2 * mv2;

    return direct + f_sss + squared;
}

} // namespace soliton::varengine
