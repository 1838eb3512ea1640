#ifndef SOLITON_EXACTNUM_POLY_HPP
#define SOLITON_EXACTNUM_POLY_HPP

#include "soliton/exactnum/rat.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace soliton::exactnum {

/// Univariate polynomial over Q in the dimension symbol n.
///
/// Coefficients are stored low-to-high; the representation is trimmed so the
/// leading coefficient is nonzero (the zero polynomial has no coefficients).
class Poly {
public:
    Poly() = default;
    Poly(const Rat& c); // NOLINT(google-explicit-constructor)
    Poly(long c) : Poly(Rat(c)) {} // NOLINT(google-explicit-constructor)
    Poly(int c) : Poly(Rat(c)) {} // NOLINT(google-explicit-constructor)
    explicit Poly(std::vector<Rat> coeffs_low_to_high);
    Poly(std::initializer_list<Rat> coeffs_low_to_high)
        : Poly(std::vector<Rat>(coeffs_low_to_high)) {}

    /// The indeterminate n.
    static Poly n();
    /// c * n^k
    static Poly monomial(const Rat& c, unsigned k);

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(unsigned k) const { return k < c_.size() ? c_[k] : Rat(); }
    Rat leading() const { return c_.empty() ? Rat() : c_.back(); }
    bool is_constant() const { return c_.size() <= 1; }

    Rat eval(const Rat& x) const;

    /// Positive integer multiplier making every coefficient integral (lcm of denominators).
    Integer denominator_lcm() const;
    /// gcd of the coefficients of an integral polynomial; 0 for the zero polynomial.
    Integer integer_content() const;
    /// Same polynomial scaled to integer coefficients with content 1 and positive lead.
    Poly primitive() const;
    Poly monic() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rat& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) { Poly r = a; r *= b; return r; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    /// Euclidean division over Q: a = q*b + r with deg r < deg b.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    /// Monic gcd; gcd(0,0) = 0.
    static Poly gcd(Poly a, Poly b);

    /// Human-readable form in the variable n, e.g. "3n^2 - 4n + 1".
    std::string str() const;

private:
    void trim();
    std::vector<Rat> c_;
};

inline bool is_zero(const Poly& p) { return p.is_zero(); }

} // namespace soliton::exactnum

#endif
