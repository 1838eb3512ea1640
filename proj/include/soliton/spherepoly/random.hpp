#ifndef SOLITON_SPHEREPOLY_RANDOM_HPP
#define SOLITON_SPHEREPOLY_RANDOM_HPP

#include "soliton/spherepoly/sphere_poly.hpp"

#include <random>

namespace soliton::spherepoly {

/// Random small rational in [-bound, bound] with denominator at most `max_den`.
Rat random_rat(std::mt19937_64& rng, long bound = 9, long max_den = 4);

/// Random raw polynomial: up to `max_terms` monomials, each ambient exponent at most `max_exp`.
RawPoly random_raw_poly(std::mt19937_64& rng, int factors, int max_terms = 5, int max_exp = 3);

/// x_b^2 + y_b^2 + z_b^2 - 1, which vanishes on the product of spheres.
RawPoly sphere_relation(int factors, int b);

} // namespace soliton::spherepoly

#endif
