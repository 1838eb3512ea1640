#include "soliton/varengine/ansatz.hpp"

#include <stdexcept>

namespace soliton::varengine {

namespace {

const RatFunc n_sym = RatFunc::n();

// |dv|^2 = sigma_2 - S_v
AnsatzFn grad_v_squared() {
    AnsatzFn f;
    f[SIGMA2] = 1;
    f[SV] = -1;
    return f;
}

// |dv_b|^2 = alpha_b^2 - v_b^2
AnsatzFn grad_vb_squared() {
    AnsatzFn f;
    f[ALPHAB2] = 1;
    f[VB2] = -1;
    return f;
}

AnsatzFn e(std::size_t i) { return AnsatzFn::basis(i); }

} // namespace

const std::array<std::string, kAnsatzDim>& basis_names() {
    static const std::array<std::string, kAnsatzDim> names{"v^2", "S_v", "sigma_2", "v*v_b", "v_b^2", "alpha_b^2"};
    return names;
}

AnsatzFn AnsatzFn::basis(std::size_t i) {
    if (i >= kAnsatzDim) throw std::out_of_range("ansatz basis index");
    AnsatzFn f;
    f.c[i] = 1;
    return f;
}

AnsatzFn AnsatzFn::from(std::vector<RatFunc> v) {
    if (v.size() != kAnsatzDim) throw std::invalid_argument("an ansatz vector has six coefficients");
    AnsatzFn f;
    for (std::size_t i = 0; i < kAnsatzDim; ++i) f.c[i] = std::move(v[i]);
    return f;
}

bool AnsatzFn::is_global() const { return c[VVB].is_zero() && c[VB2].is_zero() && c[ALPHAB2].is_zero(); }

bool AnsatzFn::is_zero() const {
    for (const auto& x : c)
        if (!x.is_zero()) return false;
    return true;
}

AnsatzFn& AnsatzFn::operator+=(const AnsatzFn& o) {
    for (std::size_t i = 0; i < kAnsatzDim; ++i) c[i] += o.c[i];
    return *this;
}

AnsatzFn& AnsatzFn::operator-=(const AnsatzFn& o) {
    for (std::size_t i = 0; i < kAnsatzDim; ++i) c[i] -= o.c[i];
    return *this;
}

AnsatzFn& AnsatzFn::operator*=(const RatFunc& s) {
    for (auto& x : c) x *= s;
    return *this;
}

std::array<Rat, kAnsatzDim> AnsatzFn::eval(const Rat& n) const {
    std::array<Rat, kAnsatzDim> r;
    for (std::size_t i = 0; i < kAnsatzDim; ++i) r[i] = c[i].eval(n);
    return r;
}

AnsatzFn apply(const FieldMatrix& m, const AnsatzFn& f) { return AnsatzFn::from(m.apply(f.vec())); }

const LaplacianMatrices& laplacian_matrices() {
    // Column j holds the image of basis function j.
    static const LaplacianMatrices lm{
        RatMatrix{{-4, 0, 0, 0, 0, 0},
                  {-2, -6, 0, 0, 0, 0},
                  {2, 2, 0, 0, 0, 0},
                  {0, 0, 0, -4, 0, 0},
                  {0, 0, 0, -2, -6, 0},
                  {0, 0, 0, 2, 2, 0}},
        RatMatrix{{0, 0, 0, 0, 0, 0},
                  {0, 0, 0, 0, 0, 0},
                  {0, 0, 0, 0, 0, 0},
                  {-4, 0, 0, -2, 0, 0},
                  {-2, -6, 0, -4, -6, 0},
                  {2, 2, 0, 2, 2, 0}},
    };
    return lm;
}

FieldMatrix shifted(const RatMatrix& m, const RatFunc& alpha, const RatFunc& beta) {
    FieldMatrix r = m.cast<RatFunc>();
    r *= beta;
    for (std::size_t i = 0; i < r.rows(); ++i) r(i, i) += alpha;
    return r;
}

RatFunc tau_ss() { return (n_sym - RatFunc(2)) / (RatFunc(2) * n_sym) * RatFunc(mean_v_squared()); }

Rat mean_v_squared() { return Rat(1, 3); }

Solution solve_f_ss(const LaplacianMatrices& lm) {
    AnsatzFn rhs = n_sym * e(V2);
    rhs -= (RatFunc(3) * n_sym - RatFunc(2)) / RatFunc(4) * grad_v_squared();
    rhs -= n_sym * tau_ss() * e(SIGMA2);
    FieldMatrix op = shifted(lm.M, 1, 1);
    AnsatzFn value = AnsatzFn::from(exactnum::solve(op, rhs.vec()));
    return {value, op, rhs};
}

UTilde solve_u_tilde(const LaplacianMatrices& lm) {
    const AnsatzFn f_ss = solve_f_ss(lm).value;
    const FieldMatrix Mq = lm.M.cast<RatFunc>();
    AnsatzFn rhs = apply(Mq, f_ss);
    rhs += n_sym * tau_ss() * e(SIGMA2);
    rhs -= RatFunc(4) * (n_sym - RatFunc(1)) * e(V2);
    rhs += (RatFunc(3) * n_sym - RatFunc(2)) / RatFunc(2) * grad_v_squared();

    const FieldMatrix op = shifted(lm.M, n_sym, n_sym - RatFunc(1)).multiply(shifted(lm.M, 2, 1));
    const std::vector<bool> global_block{true, true, true, false, false, false};
    AnsatzFn ut = AnsatzFn::from(exactnum::solve_masked(op, rhs.vec(), global_block));
    AnsatzFn u = apply(shifted(lm.M, 1, 1), ut);
    return {{ut, op, rhs}, u};
}

AnsatzFn h_b_source(const LaplacianMatrices& lm) {
    const AnsatzFn f_ss = solve_f_ss(lm).value;
    AnsatzFn r = apply(lm.Mb.cast<RatFunc>(), f_ss);
    r += RatFunc(2) * tau_ss() * e(SIGMA2);
    r -= RatFunc(2) * (n_sym - RatFunc(2)) * e(VVB);
    r += (n_sym - RatFunc(2)) / RatFunc(2) * grad_vb_squared();
    r -= RatFunc(4) * e(V2);
    r += RatFunc(2) * grad_v_squared();
    return r;
}

Solution solve_h_b(const LaplacianMatrices& lm) {
    const UTilde ut = solve_u_tilde(lm);
    const AnsatzFn base = apply(lm.Mb.cast<RatFunc>(), ut.u_tilde.value) - RatFunc(2) * ut.u;
    const FieldMatrix op = shifted(lm.M, 2, 1);
    const AnsatzFn rhs = apply(op, base) + h_b_source(lm);
    AnsatzFn value = AnsatzFn::from(exactnum::solve(op, rhs.vec()));
    return {value, op, rhs};
}

bool verify_back_substitution(const AnsatzFn& solution, const FieldMatrix& op, const AnsatzFn& rhs) {
    return (apply(op, solution) - rhs).is_zero();
}

} // namespace soliton::varengine
