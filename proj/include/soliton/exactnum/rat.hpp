#ifndef SOLITON_EXACTNUM_RAT_HPP
#define SOLITON_EXACTNUM_RAT_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace soliton::exactnum {

using Integer = mpz_class;

/// Exact rational number in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class; every constructor canonicalizes,
/// so structural equality is numeric equality.
class Rat {
public:
    Rat() = default;
    Rat(long v) : q_(v) {} // NOLINT(google-explicit-constructor)
    Rat(int v) : q_(static_cast<long>(v)) {} // NOLINT(google-explicit-constructor)
    Rat(const Integer& v) : q_(v) {} // NOLINT(google-explicit-constructor)
    Rat(const Integer& num, const Integer& den);
    Rat(long num, long den) : Rat(Integer(num), Integer(den)) {}

    /// Parses "p", "-p" or "p/q" (leading '+' allowed, surrounding spaces ignored).
    static Rat parse(std::string_view text);

    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    /// "p" when the denominator is 1, otherwise "p/q".
    std::string str() const;

    Rat operator-() const { return Rat(mpq_class(-q_)); }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    Rat abs() const { return Rat(mpq_class(::abs(q_))); }
    Rat pow(unsigned e) const;

    const mpq_class& raw() const { return q_; }

private:
    explicit Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

inline bool is_zero(const Rat& r) { return r.is_zero(); }

} // namespace soliton::exactnum

#endif
