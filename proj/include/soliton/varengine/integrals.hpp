#ifndef SOLITON_VARENGINE_INTEGRALS_HPP
#define SOLITON_VARENGINE_INTEGRALS_HPP

#include "soliton/varengine/ansatz.hpp"

#include <string>

namespace soliton::varengine {

/// c22 * sigma_2^2 + c4 * sigma_4.
struct SigmaQuad {
    RatFunc c22;
    RatFunc c4;

    SigmaQuad& operator+=(const SigmaQuad& o) { c22 += o.c22; c4 += o.c4; return *this; }
    SigmaQuad& operator-=(const SigmaQuad& o) { c22 -= o.c22; c4 -= o.c4; return *this; }
    SigmaQuad& operator*=(const RatFunc& s) { c22 *= s; c4 *= s; return *this; }
    friend SigmaQuad operator+(SigmaQuad a, const SigmaQuad& b) { return a += b; }
    friend SigmaQuad operator-(SigmaQuad a, const SigmaQuad& b) { return a -= b; }
    friend SigmaQuad operator*(const RatFunc& s, SigmaQuad a) { return a *= s; }
    friend bool operator==(const SigmaQuad& a, const SigmaQuad& b) { return a.c22 == b.c22 && a.c4 == b.c4; }

    /// Value for concrete n, sigma_2 and sigma_4.
    Rat value(const Rat& n, const Rat& sigma2, const Rat& sigma4) const {
        return c22.eval(n) * sigma2 * sigma2 + c4.eval(n) * sigma4;
    }
};

enum class MomentMode {
    Plain,   ///< mean of p*q, both global
    SumBVvb, ///< sum over b of the mean of p*q_b, where p is a multiple of v*v_b
};

/// Mean of the product of two ansatz functions in span{sigma_2^2, sigma_4}.
/// Throws UnsupportedDegree for combinations the table does not cover.
SigmaQuad moment(const AnsatzFn& p, const AnsatzFn& q, MomentMode mode);

enum class IbpKind {
    VLap,  ///< mean of v * Lap(phi)
    V2Lap, ///< mean of v^2 * Lap(phi)
    VGrad, ///< mean of v * <d phi, dv>
};

/// Integration-by-parts reduction of a term against an ansatz function phi:
/// the mean equals moment(phi, weight) unless `vanishes` is set.
struct IbpReduction {
    bool vanishes = false;
    AnsatzFn weight;
    std::string rule;
};

IbpReduction ibp_reduce(IbpKind kind, const AnsatzFn& phi);

/// Mean of v^2 * phi.
SigmaQuad int_v2(const AnsatzFn& phi);
/// Mean of v^2 * Lap(phi), via integration by parts.
SigmaQuad int_v2_lap(const AnsatzFn& phi);
/// Mean of v * <d phi, dv>, via integration by parts.
SigmaQuad int_v_grad(const AnsatzFn& phi);

/// <D^2 Phi(vg, ug), vg>; the f_st contribution enters through the identity
/// (1/2) mean(v Lap f) = mean(v (1 + Lap) f) with (1 + Lap) f_st from its defining equation.
SigmaQuad cross_conformal(const AnsatzFn& u, const AnsatzFn& u_tilde);

/// <D^2 Phi(vg, h), vg> = -(n-2)/4 * sum_b mean(v v_b h_b).
SigmaQuad cross_tt(const AnsatzFn& h_b);

/// <D^3 Phi(vg, vg, vg), vg>; f_sss is eliminated the same way as f_st and
/// its constant tau_sss term integrates to zero against v.
SigmaQuad third_variation(const AnsatzFn& f_ss);

} // namespace soliton::varengine

#endif
