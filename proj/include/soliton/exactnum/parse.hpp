#ifndef SOLITON_EXACTNUM_PARSE_HPP
#define SOLITON_EXACTNUM_PARSE_HPP

#include "soliton/exactnum/ratfunc.hpp"

#include <string_view>

namespace soliton::exactnum {

/// Parses an arithmetic expression in the symbol n into Q(n).
///
/// Accepts integers, `n`, `+ - * / ^`, parentheses and juxtaposition as
/// multiplication (`3n`, `2(n-2)(5n-6)`). Juxtaposition binds like `*`, left to
/// right, so `1/2n` is n/2. Exponents must be non-negative integers.
RatFunc parse_ratfunc(std::string_view text);

inline RatFunc operator""_qn(const char* s, std::size_t len) {
    return parse_ratfunc(std::string_view(s, len));
}

} // namespace soliton::exactnum

#endif
