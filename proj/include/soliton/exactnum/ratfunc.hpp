#ifndef SOLITON_EXACTNUM_RATFUNC_HPP
#define SOLITON_EXACTNUM_RATFUNC_HPP

#include "soliton/exactnum/poly.hpp"

#include <ostream>
#include <string>

namespace soliton::exactnum {

/// Element of the rational function field Q(n).
///
/// Canonical form: num and den are coprime in Q[n], both have integer
/// coefficients whose joint content is 1, and den has a positive leading
/// coefficient. Equality is therefore structural.
class RatFunc {
public:
    RatFunc() : den_(1) {}
    RatFunc(const Rat& c) : num_(c), den_(1) { canonicalize(); } // NOLINT(google-explicit-constructor)
    RatFunc(long c) : RatFunc(Rat(c)) {} // NOLINT(google-explicit-constructor)
    RatFunc(int c) : RatFunc(Rat(c)) {} // NOLINT(google-explicit-constructor)
    RatFunc(const Poly& p) : num_(p), den_(1) { canonicalize(); } // NOLINT(google-explicit-constructor)
    RatFunc(Poly num, Poly den);

    static RatFunc n() { return RatFunc(Poly::n()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    /// Value at n = x; throws PoleAtPoint when den(x) = 0.
    Rat eval(const Rat& x) const;
    /// The constant value; throws DomainError when the element depends on n.
    Rat constant_value() const;

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);

    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// "(num)/(den)" style text in the variable n; constants print as "p/q".
    std::string str() const;

private:
    void canonicalize();
    Poly num_;
    Poly den_;
};

inline bool is_zero(const RatFunc& r) { return r.is_zero(); }
inline std::ostream& operator<<(std::ostream& os, const RatFunc& r) { return os << r.str(); }

} // namespace soliton::exactnum

#endif
