#include "soliton/exactnum/poly.hpp"

#include "soliton/errors.hpp"

#include <sstream>

namespace soliton::exactnum {

Poly::Poly(const Rat& c) {
    if (!c.is_zero()) c_.push_back(c);
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::n() { return Poly{Rat(0), Rat(1)}; }

Poly Poly::monomial(const Rat& c, unsigned k) {
    std::vector<Rat> v(k + 1);
    v[k] = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rat Poly::eval(const Rat& x) const {
    Rat acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Integer Poly::denominator_lcm() const {
    Integer l = 1;
    for (const auto& c : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
    return l;
}

Integer Poly::integer_content() const {
    Integer g = 0;
    for (const auto& c : c_) {
        Integer num = c.numerator();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    }
    return g;
}

Poly Poly::primitive() const {
    if (is_zero()) return {};
    Poly r = *this;
    r *= Rat(denominator_lcm());
    const Integer g = r.integer_content();
    r *= Rat(Integer(1), g);
    if (r.leading().sign() < 0) r *= Rat(-1);
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) return {};
    Poly r = *this;
    r *= Rat(1) / leading();
    return r;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Rat> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    c_ = std::move(r);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rat& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    Poly q;
    Poly r = a;
    const Rat lead_inv = Rat(1) / b.leading();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const auto shift = static_cast<unsigned>(r.degree() - b.degree());
        Poly t = monomial(r.leading() * lead_inv, shift);
        q += t;
        r -= t * b;
    }
    return {q, r};
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rat& c = c_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        const Rat mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == Rat(1);
        if (k == 0) {
            os << mag;
        } else {
            if (!unit) {
                if (mag.is_integer()) os << mag;
                else os << "(" << mag << ")";
            }
            os << "n";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

} // namespace soliton::exactnum
