#include "soliton/exactnum/roots.hpp"

#include "soliton/errors.hpp"

#include <algorithm>

namespace soliton::exactnum {

namespace {

// Positive divisors of |m| (m != 0) by trial division.
std::vector<Integer> divisors(Integer m) {
    m = abs(m);
    std::vector<Integer> small;
    std::vector<Integer> large;
    for (Integer d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            small.push_back(d);
            if (d * d != m) large.push_back(m / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

} // namespace

std::vector<Integer> integer_roots(const Poly& p) {
    if (p.is_zero()) throw ZeroPolynomial("integer_roots of the zero polynomial");
    const Poly q = p.primitive();
    std::vector<Integer> roots;
    std::size_t low = 0;
    while (q.coeff(static_cast<unsigned>(low)).is_zero()) ++low;
    if (low > 0) roots.emplace_back(0);
    const Integer trailing = q.coeff(static_cast<unsigned>(low)).numerator();
    for (const Integer& d : divisors(trailing)) {
        for (const Integer& cand : {Integer(d), Integer(-d)}) {
            if (q.eval(Rat(cand)).is_zero()) roots.push_back(cand);
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace soliton::exactnum
