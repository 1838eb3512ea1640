#include "soliton/spherepoly/sphere_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace soliton::spherepoly {

namespace {

constexpr std::size_t slot(int b, Axis a) { return static_cast<std::size_t>(3 * b + static_cast<int>(a)); }

int factor_degree(const Exponents& e, int b) {
    return e[slot(b, Axis::X)] + e[slot(b, Axis::Y)] + e[slot(b, Axis::Z)];
}

// (2k-1)!! for k >= 0, with (-1)!! = 1.
exactnum::Integer odd_double_factorial(int m) {
    exactnum::Integer r = 1;
    for (int j = m; j > 1; j -= 2) r *= j;
    return r;
}

// Derivative of p with respect to ambient coordinate (b, axis).
RawPoly partial(const RawPoly& p, int b, Axis axis) {
    RawPoly r(p.factors());
    const std::size_t s = slot(b, axis);
    for (const auto& [e, c] : p.terms()) {
        if (e[s] == 0) continue;
        Exponents d = e;
        d[s] -= 1;
        r.add_term(d, c * Rat(e[s]));
    }
    return r;
}

// x_b . grad_b p, which by Euler's identity scales each monomial by its factor-b degree.
RawPoly radial(const RawPoly& p, int b) {
    RawPoly r(p.factors());
    for (const auto& [e, c] : p.terms()) {
        const int d = factor_degree(e, b);
        if (d) r.add_term(e, c * Rat(d));
    }
    return r;
}

} // namespace

RawPoly::RawPoly(int factors) : factors_(factors) {
    if (factors < 1) throw std::invalid_argument("a sphere product needs at least one factor");
}

RawPoly RawPoly::constant(int factors, const Rat& c) {
    RawPoly r(factors);
    r.add_term(Exponents(static_cast<std::size_t>(3 * factors), 0), c);
    return r;
}

RawPoly RawPoly::coord(int factors, int b, Axis axis) {
    if (b < 0 || b >= factors) throw std::out_of_range("factor index out of range");
    RawPoly r(factors);
    Exponents e(static_cast<std::size_t>(3 * factors), 0);
    e[slot(b, axis)] = 1;
    r.add_term(e, Rat(1));
    return r;
}

void RawPoly::add_term(const Exponents& e, const Rat& c) {
    if (e.size() != static_cast<std::size_t>(3 * factors_))
        throw std::invalid_argument("exponent vector has the wrong length");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void RawPoly::check_same(const RawPoly& o) const {
    if (factors_ != o.factors_) throw std::invalid_argument("polynomials live on different products");
}

RawPoly RawPoly::operator-() const {
    RawPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

RawPoly& RawPoly::operator+=(const RawPoly& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

RawPoly& RawPoly::operator-=(const RawPoly& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

RawPoly& RawPoly::operator*=(const Rat& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

RawPoly operator*(const RawPoly& a, const RawPoly& b) {
    a.check_same(b);
    RawPoly r(a.factors_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e = ea;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

std::string RawPoly::str() const {
    if (terms_.empty()) return "0";
    static const char* names[] = {"x", "y", "z"};
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        os << (first ? "" : " + ") << c;
        first = false;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            os << "*" << names[i % 3] << (i / 3 + 1);
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

SpherePoly::SpherePoly(const RawPoly& raw) : SpherePoly(canonicalize(raw)) {}

SpherePoly canonicalize(const RawPoly& p) {
    RawPoly out(p.factors());
    std::vector<std::pair<Exponents, Rat>> work(p.terms().begin(), p.terms().end());
    while (!work.empty()) {
        auto [e, c] = std::move(work.back());
        work.pop_back();
        int reducible = -1;
        for (int b = 0; b < p.factors(); ++b)
            if (e[slot(b, Axis::Z)] >= 2) {
                reducible = b;
                break;
            }
        if (reducible < 0) {
            out.add_term(e, c);
            continue;
        }
        // z^2 -> 1 - x^2 - y^2
        e[slot(reducible, Axis::Z)] -= 2;
        work.emplace_back(e, c);
        Exponents ex = e;
        ex[slot(reducible, Axis::X)] += 2;
        work.emplace_back(ex, -c);
        Exponents ey = e;
        ey[slot(reducible, Axis::Y)] += 2;
        work.emplace_back(ey, -c);
    }
    return SpherePoly(std::move(out), SpherePoly::Reduced{});
}

SpherePoly laplacian_factor(const RawPoly& p, int b) {
    if (b < 0 || b >= p.factors()) throw std::out_of_range("factor index out of range");
    RawPoly r(p.factors());
    for (const auto& [e, c] : p.terms()) {
        const int d = factor_degree(e, b);
        r.add_term(e, c * Rat(-d * (d + 1)));
        for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
            const int k = e[slot(b, a)];
            if (k < 2) continue;
            Exponents f = e;
            f[slot(b, a)] -= 2;
            r.add_term(f, c * Rat(k * (k - 1)));
        }
    }
    return canonicalize(r);
}

SpherePoly laplacian(const RawPoly& p) {
    SpherePoly r(p.factors());
    for (int b = 0; b < p.factors(); ++b) r = r + laplacian_factor(p, b);
    return r;
}

SpherePoly grad_inner(const RawPoly& p, const RawPoly& q) {
    if (p.factors() != q.factors()) throw std::invalid_argument("polynomials live on different products");
    RawPoly r(p.factors());
    for (int b = 0; b < p.factors(); ++b) {
        for (Axis a : {Axis::X, Axis::Y, Axis::Z}) r += partial(p, b, a) * partial(q, b, a);
        r -= radial(p, b) * radial(q, b);
    }
    return canonicalize(r);
}

Rat mean_integral(const RawPoly& p) {
    Rat total;
    for (const auto& [e, c] : p.terms()) {
        Rat m = c;
        for (int b = 0; b < p.factors() && !m.is_zero(); ++b) {
            const int ex = e[slot(b, Axis::X)];
            const int ey = e[slot(b, Axis::Y)];
            const int ez = e[slot(b, Axis::Z)];
            if ((ex | ey | ez) & 1) {
                m = Rat();
                break;
            }
            m *= Rat(odd_double_factorial(ex - 1) * odd_double_factorial(ey - 1) *
                         odd_double_factorial(ez - 1),
                     odd_double_factorial(ex + ey + ez + 1));
        }
        total += m;
    }
    return total;
}

bool KernelVector::is_trivial() const {
    for (const auto& a : alpha)
        if (!a.is_zero()) return false;
    return true;
}

Rat KernelVector::sigma(unsigned k) const {
    Rat s;
    for (const auto& a : alpha) s += a.pow(k);
    return s;
}

SpherePoly kernel_component(const KernelVector& kv, int b) {
    return kv.alpha.at(static_cast<std::size_t>(b)) * SpherePoly::coord(kv.factors(), b, kv.axis_of(b));
}

SpherePoly instantiate_kernel(const KernelVector& kv) {
    SpherePoly v(kv.factors());
    for (int b = 0; b < kv.factors(); ++b) v = v + kernel_component(kv, b);
    return v;
}

} // namespace soliton::spherepoly
