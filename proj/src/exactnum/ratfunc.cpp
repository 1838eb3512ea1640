#include "soliton/exactnum/ratfunc.hpp"

#include "soliton/errors.hpp"

namespace soliton::exactnum {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    canonicalize();
}

void RatFunc::canonicalize() {
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    const Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = Poly::divmod(num_, g).first;
        den_ = Poly::divmod(den_, g).first;
    }
    Integer l = num_.denominator_lcm();
    const Integer ld = den_.denominator_lcm();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), ld.get_mpz_t());
    num_ *= Rat(l);
    den_ *= Rat(l);
    Integer c = num_.integer_content();
    const Integer cd = den_.integer_content();
    mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), cd.get_mpz_t());
    Rat scale(Integer(1), c);
    if (den_.leading().sign() < 0) scale = -scale;
    num_ *= scale;
    den_ *= scale;
}

Rat RatFunc::eval(const Rat& x) const {
    const Rat d = den_.eval(x);
    if (d.is_zero()) throw PoleAtPoint("denominator " + den_.str() + " vanishes at n = " + x.str());
    return num_.eval(x) / d;
}

Rat RatFunc::constant_value() const {
    if (!is_constant()) throw DomainError("element depends on n: " + str());
    return num_.coeff(0) / den_.coeff(0);
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
    }
    canonicalize();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    canonicalize();
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
    if (o.is_zero()) throw DivisionByZero("division by the zero element of Q(n)");
    num_ *= o.den_;
    den_ *= o.num_;
    canonicalize();
    return *this;
}

std::string RatFunc::str() const {
    if (is_constant()) return constant_value().str();
    // Parenthesize unless the polynomial is a single term.
    auto wrap = [](const Poly& p) {
        int terms = 0;
        for (const auto& c : p.coeffs()) terms += c.is_zero() ? 0 : 1;
        return terms == 1 ? p.str() : "(" + p.str() + ")";
    };
    if (den_ == Poly(1)) return num_.str();
    return wrap(num_) + "/" + wrap(den_);
}

} // namespace soliton::exactnum
