#ifndef CBX_RAT_HPP
#define CBX_RAT_HPP

#include <boost/multiprecision/gmp.hpp>

namespace cbx {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline Int rat_num(const Rat& q) { return numerator(q); }
inline Int rat_den(const Rat& q) { return denominator(q); }

inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

// floor of a rational
inline Int rat_floor(const Rat& q)
{
    Int n = numerator(q), d = denominator(q);
    Int f = n / d;
    if (n < 0 && n % d != 0) --f;
    return f;
}

} // namespace cbx

#endif
