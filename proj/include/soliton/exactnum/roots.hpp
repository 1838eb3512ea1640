#ifndef SOLITON_EXACTNUM_ROOTS_HPP
#define SOLITON_EXACTNUM_ROOTS_HPP

#include "soliton/exactnum/poly.hpp"

#include <vector>

namespace soliton::exactnum {

/// All integer roots of p, ascending, without repetition.
///
/// Candidates are the divisors (with sign) of the trailing nonzero coefficient
/// of the primitive integer form; each is confirmed by exact evaluation.
/// Throws ZeroPolynomial for p = 0.
std::vector<Integer> integer_roots(const Poly& p);

} // namespace soliton::exactnum

#endif
