#ifndef SOLITON_SPHEREPOLY_SPHERE_POLY_HPP
#define SOLITON_SPHEREPOLY_SPHERE_POLY_HPP

#include "soliton/exactnum/rat.hpp"

#include <map>
#include <string>
#include <vector>

namespace soliton::spherepoly {

using exactnum::Rat;

enum class Axis { X = 0, Y = 1, Z = 2 };

/// Exponent vector over the 3B ambient coordinates; slot 3*b + axis.
using Exponents = std::vector<int>;

/// A polynomial in the ambient coordinates of (S^2)^B, not reduced modulo the
/// sphere relations. Any RawPoly represents a function on the product of spheres.
class RawPoly {
public:
    explicit RawPoly(int factors);

    static RawPoly constant(int factors, const Rat& c);
    static RawPoly coord(int factors, int b, Axis axis);

    int factors() const { return factors_; }
    const std::map<Exponents, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponents& e, const Rat& c);

    RawPoly operator-() const;
    RawPoly& operator+=(const RawPoly& o);
    RawPoly& operator-=(const RawPoly& o);
    RawPoly& operator*=(const Rat& s);
    friend RawPoly operator+(RawPoly a, const RawPoly& b) { return a += b; }
    friend RawPoly operator-(RawPoly a, const RawPoly& b) { return a -= b; }
    friend RawPoly operator*(const RawPoly& a, const RawPoly& b);
    friend RawPoly operator*(const Rat& s, RawPoly a) { return a *= s; }
    friend bool operator==(const RawPoly& a, const RawPoly& b) {
        return a.factors_ == b.factors_ && a.terms_ == b.terms_;
    }

    std::string str() const;

private:
    void check_same(const RawPoly& o) const;
    int factors_;
    std::map<Exponents, Rat> terms_;
};

/// Canonical representative of a polynomial function on (S^2)^B: every z_b
/// appears with exponent 0 or 1 (z_b^2 is rewritten as 1 - x_b^2 - y_b^2), and
/// no zero coefficients are stored. Two representatives of the same function
/// have identical canonical forms.
class SpherePoly {
public:
    explicit SpherePoly(int factors) : rep_(factors) {}
    SpherePoly(const RawPoly& raw); // NOLINT(google-explicit-constructor)

    static SpherePoly constant(int factors, const Rat& c) { return RawPoly::constant(factors, c); }
    static SpherePoly coord(int factors, int b, Axis axis) { return RawPoly::coord(factors, b, axis); }

    int factors() const { return rep_.factors(); }
    const RawPoly& rep() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }

    SpherePoly operator-() const { return SpherePoly(-rep_); }
    friend SpherePoly operator+(const SpherePoly& a, const SpherePoly& b) { return a.rep_ + b.rep_; }
    friend SpherePoly operator-(const SpherePoly& a, const SpherePoly& b) { return a.rep_ - b.rep_; }
    friend SpherePoly operator*(const SpherePoly& a, const SpherePoly& b) { return a.rep_ * b.rep_; }
    friend SpherePoly operator*(const Rat& s, const SpherePoly& a) { return s * a.rep_; }
    friend bool operator==(const SpherePoly& a, const SpherePoly& b) { return a.rep_ == b.rep_; }

    std::string str() const { return rep_.str(); }

private:
    struct Reduced {};
    SpherePoly(RawPoly raw, Reduced) : rep_(std::move(raw)) {}
    friend SpherePoly canonicalize(const RawPoly& p);

    RawPoly rep_;
};

/// Reduces a representative modulo x_b^2 + y_b^2 + z_b^2 = 1 for every factor.
SpherePoly canonicalize(const RawPoly& p);

/// Spherical Laplacian on factor b, computed per monomial as the ambient
/// Laplacian in (x_b, y_b, z_b) minus d(d+1) times the monomial, d being the
/// monomial's degree in that factor. Accepts any representative.
SpherePoly laplacian_factor(const RawPoly& p, int b);
/// Laplacian of the product metric: sum of the factor Laplacians.
SpherePoly laplacian(const RawPoly& p);
/// Pointwise <dp, dq> from tangential projections of the ambient gradients.
SpherePoly grad_inner(const RawPoly& p, const RawPoly& q);
/// Mean value over (S^2)^B, so the mean of 1 is 1.
Rat mean_integral(const RawPoly& p);

inline SpherePoly laplacian_factor(const SpherePoly& p, int b) { return laplacian_factor(p.rep(), b); }
inline SpherePoly laplacian(const SpherePoly& p) { return laplacian(p.rep()); }
inline SpherePoly grad_inner(const SpherePoly& p, const SpherePoly& q) { return grad_inner(p.rep(), q.rep()); }
inline Rat mean_integral(const SpherePoly& p) { return mean_integral(p.rep()); }

/// Kernel element v = sum_b alpha_b * (coordinate `axis_b` of factor b).
struct KernelVector {
    std::vector<Rat> alpha;
    std::vector<Axis> axis; ///< defaults to X for every factor when empty

    int factors() const { return static_cast<int>(alpha.size()); }
    Axis axis_of(int b) const { return axis.empty() ? Axis::X : axis.at(static_cast<std::size_t>(b)); }
    bool is_trivial() const;
    /// sum_b alpha_b^k
    Rat sigma(unsigned k) const;
};

SpherePoly instantiate_kernel(const KernelVector& kv);
/// The single-factor component v_b = alpha_b * theta^b.
SpherePoly kernel_component(const KernelVector& kv, int b);

} // namespace soliton::spherepoly

#endif
