#include "soliton/spherepoly/random.hpp"

namespace soliton::spherepoly {

Rat random_rat(std::mt19937_64& rng, long bound, long max_den) {
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rat(num(rng), den(rng));
}

RawPoly random_raw_poly(std::mt19937_64& rng, int factors, int max_terms, int max_exp) {
    std::uniform_int_distribution<int> count(1, max_terms);
    std::uniform_int_distribution<int> ex(0, max_exp);
    RawPoly p(factors);
    const int terms = count(rng);
    for (int t = 0; t < terms; ++t) {
        Exponents e(static_cast<std::size_t>(3 * factors));
        for (auto& x : e) x = ex(rng);
        p.add_term(e, random_rat(rng));
    }
    return p;
}

RawPoly sphere_relation(int factors, int b) {
    RawPoly r = RawPoly::constant(factors, Rat(-1));
    for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
        const RawPoly c = RawPoly::coord(factors, b, a);
        r += c * c;
    }
    return r;
}

} // namespace soliton::spherepoly
