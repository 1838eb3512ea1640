#ifndef SOLITON_VARENGINE_ANSATZ_HPP
#define SOLITON_VARENGINE_ANSATZ_HPP

#include "soliton/exactnum/matrix.hpp"
#include "soliton/exactnum/rat.hpp"
#include "soliton/exactnum/ratfunc.hpp"

#include <array>
#include <string>
#include <vector>

namespace soliton::varengine {

using exactnum::Rat;
using exactnum::RatFunc;
using RatMatrix = exactnum::Matrix<Rat>;
using FieldMatrix = exactnum::Matrix<RatFunc>;

/// Position of each basis function inside an ansatz vector. The last three
/// are understood for one fixed factor b.
enum Basis : std::size_t { V2 = 0, SV = 1, SIGMA2 = 2, VVB = 3, VB2 = 4, ALPHAB2 = 5 };

inline constexpr std::size_t kAnsatzDim = 6;
const std::array<std::string, kAnsatzDim>& basis_names();

/// A function A1 v^2 + A2 S_v + A3 sigma_2 + B1 v v_b + B2 v_b^2 + B3 alpha_b^2.
struct AnsatzFn {
    std::array<RatFunc, kAnsatzDim> c{};

    static AnsatzFn basis(std::size_t i);
    static AnsatzFn from(std::vector<RatFunc> v);

    RatFunc& operator[](std::size_t i) { return c[i]; }
    const RatFunc& operator[](std::size_t i) const { return c[i]; }

    std::vector<RatFunc> vec() const { return {c.begin(), c.end()}; }
    /// True when every b-indexed coefficient vanishes.
    bool is_global() const;
    bool is_zero() const;

    AnsatzFn& operator+=(const AnsatzFn& o);
    AnsatzFn& operator-=(const AnsatzFn& o);
    AnsatzFn& operator*=(const RatFunc& s);
    friend AnsatzFn operator+(AnsatzFn a, const AnsatzFn& b) { return a += b; }
    friend AnsatzFn operator-(AnsatzFn a, const AnsatzFn& b) { return a -= b; }
    friend AnsatzFn operator*(const RatFunc& s, AnsatzFn a) { return a *= s; }
    friend bool operator==(const AnsatzFn& a, const AnsatzFn& b) { return a.c == b.c; }

    /// Coefficient-wise value at a concrete dimension.
    std::array<Rat, kAnsatzDim> eval(const Rat& n) const;
};

AnsatzFn apply(const FieldMatrix& m, const AnsatzFn& f);

/// Total Laplacian M and single-factor Laplacian M_b acting on coefficient vectors.
struct LaplacianMatrices {
    RatMatrix M;
    RatMatrix Mb;
};

const LaplacianMatrices& laplacian_matrices();

/// The shifted operator alpha + beta*M over Q(n).
FieldMatrix shifted(const RatMatrix& m, const RatFunc& alpha, const RatFunc& beta);

/// Coefficient of sigma_2 in tau_ss.
RatFunc tau_ss();

/// Mean of v^2 is this multiple of sigma_2.
Rat mean_v_squared();

struct Solution {
    AnsatzFn value;
    FieldMatrix op;     ///< operator whose image must equal rhs
    AnsatzFn rhs;
};

/// (1 + M) f_ss = n v^2 - (3n-2)/4 |dv|^2 - n tau_ss.
Solution solve_f_ss(const LaplacianMatrices& lm = laplacian_matrices());

struct UTilde {
    Solution u_tilde; ///< (n + (n-1)M)(2 + M) u~ = M f_ss + trace terms, on the global block
    AnsatzFn u;       ///< (1 + M) u~
};
UTilde solve_u_tilde(const LaplacianMatrices& lm = laplacian_matrices());

/// Explicit part h~_b of the factor trace <h, g^b>, with the gauge term set to 0.
/// `op`/`rhs` describe (2 + M) h~_b = (2 + M)(M_b u~ - 2u) + M_b f_ss + r.
Solution solve_h_b(const LaplacianMatrices& lm = laplacian_matrices());

/// The pieces of the h_b right-hand side, exposed for the oracle.
AnsatzFn h_b_source(const LaplacianMatrices& lm = laplacian_matrices());

/// True iff op * solution - rhs is exactly the zero vector.
bool verify_back_substitution(const AnsatzFn& solution, const FieldMatrix& op, const AnsatzFn& rhs);

} // namespace soliton::varengine

#endif
